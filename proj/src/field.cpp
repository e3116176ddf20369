#include "occert/field.hpp"

#include "occert/errors.hpp"

namespace occ {

FieldElem::FieldElem(MultiPoly num, MultiPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (!(*num_.vars() == *den_.vars()))
    throw varset_mismatch("fraction with mismatched variable sets");
  if (den_.is_zero()) throw division_by_zero("fraction with zero denominator");
  normalize();
}

FieldElem FieldElem::constant(const QSqrt2& c, const VarSetPtr& vars) {
  return FieldElem(MultiPoly::constant(c, vars), MultiPoly::constant(QSqrt2(1), vars));
}

FieldElem FieldElem::variable(const std::string& name, const VarSetPtr& vars) {
  return FieldElem(MultiPoly::variable(name, vars), MultiPoly::constant(QSqrt2(1), vars));
}

void FieldElem::normalize() {
  key_.clear();
  if (num_.is_zero()) {
    den_ = MultiPoly::constant(QSqrt2(1), den_.vars());
    return;
  }
  // Strip the common monomial factor.
  Monomial mn = num_.common_monomial();
  Monomial md = den_.common_monomial();
  Monomial common(mn.size());
  bool any = false;
  for (std::size_t i = 0; i < mn.size(); ++i) {
    common[i] = std::min(mn[i], md[i]);
    any = any || common[i] > 0;
  }
  if (any) {
    num_ = num_.divided_by_monomial(common);
    den_ = den_.divided_by_monomial(common);
  }
  // Make the denominator monic in the canonical term order; this also strips
  // any shared scalar, so proportional fractions get identical keys.
  QSqrt2 lead = den_.leading_coeff();
  if (!lead.is_one()) {
    QSqrt2 inv = lead.inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

bool FieldElem::is_one() const { return num_ == den_; }

bool FieldElem::as_rational(BigRational* out) const {
  if (!num_.is_constant() || !den_.is_constant()) return false;
  QSqrt2 n = num_.constant_term(), d = den_.constant_term();
  if (!n.is_rational() || !d.is_rational()) return false;
  if (d.is_zero()) return false;
  if (out) *out = n.rat / d.rat;
  return true;
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
  return FieldElem(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
  return FieldElem(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
  return FieldElem(num_ * o.num_, den_ * o.den_);
}

FieldElem FieldElem::operator/(const FieldElem& o) const { return *this * o.inverse(); }

FieldElem FieldElem::operator-() const { return FieldElem(-num_, den_); }

FieldElem FieldElem::inverse() const {
  if (num_.is_zero()) throw division_by_zero("field inverse of 0");
  return FieldElem(den_, num_);
}

FieldElem FieldElem::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  FieldElem r = constant(QSqrt2(1), vars());
  FieldElem base = *this;
  for (long i = 0; i < e; ++i) r = r * base;
  return r;
}

bool FieldElem::eq(const FieldElem& o) const {
  if (!(*vars() == *o.vars()))
    throw varset_mismatch("comparing elements over different variable sets");
  return (num_ * o.den_) == (o.num_ * den_);
}

FieldElem FieldElem::substitute(const std::map<std::string, FieldElem>& assignment) const {
  // All images must live in one target field.
  VarSetPtr target;
  for (const auto& [name, img] : assignment) {
    if (!target) target = img.vars();
    else if (!(*target == *img.vars()))
      throw varset_mismatch("substitution images over different variable sets");
  }
  if (!target) target = make_varset({});

  const auto& names = vars()->names;
  std::vector<const FieldElem*> images(names.size(), nullptr);
  auto eval_poly = [&](const MultiPoly& p) {
    FieldElem acc = FieldElem::constant(QSqrt2(0), target);
    for (const auto& [m, c] : p.terms()) {
      FieldElem term = FieldElem::constant(c, target);
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!images[i]) {
          auto it = assignment.find(names[i]);
          if (it == assignment.end())
            throw domain_error("substitution does not cover variable '" + names[i] + "'");
          images[i] = &it->second;
        }
        term = term * images[i]->pow(static_cast<long>(m[i]));
      }
      acc = acc + term;
    }
    return acc;
  };

  FieldElem n = eval_poly(num_);
  FieldElem d = eval_poly(den_);
  if (d.is_zero()) throw division_by_zero("zero denominator after substitution");
  return n / d;
}

std::string FieldElem::to_string() const {
  if (den_.is_constant() && den_.constant_term().is_one()) {
    return num_.to_string();
  }
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

const std::string& FieldElem::key() const {
  if (key_.empty()) key_ = to_string();
  return key_;
}

}  // namespace occ
