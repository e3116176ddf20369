#include "occert/multipoly.hpp"

#include <algorithm>

#include "occert/errors.hpp"

namespace occ {

MultiPoly MultiPoly::constant(const QSqrt2& c, VarSetPtr vars) {
  MultiPoly p(std::move(vars));
  if (!c.is_zero()) p.terms_[Monomial(p.vars_->size(), 0)] = c;
  return p;
}

MultiPoly MultiPoly::variable(const std::string& name, VarSetPtr vars) {
  int idx = vars->index_of(name);
  if (idx < 0) throw varset_mismatch("variable '" + name + "' not in variable set");
  MultiPoly p(std::move(vars));
  Monomial m(p.vars_->size(), 0);
  m[static_cast<std::size_t>(idx)] = 1;
  p.terms_[m] = QSqrt2(1);
  return p;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const Monomial& m = terms_.begin()->first;
  return std::all_of(m.begin(), m.end(), [](unsigned e) { return e == 0; });
}

QSqrt2 MultiPoly::leading_coeff() const {
  if (terms_.empty()) return QSqrt2(0);
  return terms_.rbegin()->second;
}

QSqrt2 MultiPoly::constant_term() const {
  Monomial zero(vars_->size(), 0);
  auto it = terms_.find(zero);
  return it == terms_.end() ? QSqrt2(0) : it->second;
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
  if (!(*vars_ == *o.vars_))
    throw varset_mismatch("polynomials over different variable sets");
}

void MultiPoly::add_term(const Monomial& m, const QSqrt2& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  check_compatible(o);
  MultiPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  check_compatible(o);
  MultiPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(vars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

MultiPoly MultiPoly::scaled(const QSqrt2& c) const {
  MultiPoly r(vars_);
  if (c.is_zero()) return r;
  for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  check_compatible(o);
  MultiPoly r(vars_);
  const std::size_t n = vars_->size();
  Monomial prod(n, 0);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      for (std::size_t i = 0; i < n; ++i) prod[i] = ma[i] + mb[i];
      r.add_term(prod, ca * cb);
    }
  }
  return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  return *vars_ == *o.vars_ && terms_ == o.terms_;
}

Monomial MultiPoly::common_monomial() const {
  if (terms_.empty()) return Monomial(vars_->size(), 0);
  Monomial m = terms_.begin()->first;
  for (const auto& [mono, c] : terms_)
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], mono[i]);
  return m;
}

BigRational MultiPoly::content() const {
  BigRational g = 0;
  for (const auto& [m, c] : terms_) {
    g = rat_gcd(g, c.rat);
    g = rat_gcd(g, c.irr);
  }
  return g;
}

MultiPoly MultiPoly::divided_by_monomial(const Monomial& m) const {
  MultiPoly r(vars_);
  for (const auto& [mono, c] : terms_) {
    Monomial q = mono;
    for (std::size_t i = 0; i < q.size(); ++i) {
      if (q[i] < m[i]) throw domain_error("monomial does not divide polynomial");
      q[i] -= m[i];
    }
    r.terms_.emplace(std::move(q), c);
  }
  return r;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  // Descending canonical order: highest monomial first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    bool has_vars = std::any_of(m.begin(), m.end(), [](unsigned e) { return e != 0; });
    std::string cs = c.to_string();
    std::string term;
    if (!has_vars) {
      term = cs;
    } else {
      if (c.is_one()) term = "";
      else if (c == QSqrt2(-1)) term = "-";
      else term = cs + "*";
      bool first_var = true;
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!first_var) term += "*";
        first_var = false;
        term += vars_->names[i];
        if (m[i] > 1) term += "^" + std::to_string(m[i]);
      }
    }
    if (out.empty()) {
      out = term;
    } else if (!term.empty() && term[0] == '-') {
      out += term;
    } else {
      out += "+" + term;
    }
  }
  return out;
}

}  // namespace occ
