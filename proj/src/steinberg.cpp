#include "occert/steinberg.hpp"

#include "occert/errors.hpp"

namespace occ {

SLMatrix SLMatrix::identity(const VarSetPtr& vars) {
  FieldElem one = FieldElem::from_long(1, vars);
  FieldElem zero = FieldElem::from_long(0, vars);
  return SLMatrix{one, zero, zero, one};
}

SLMatrix SLMatrix::operator*(const SLMatrix& o) const {
  return SLMatrix{a * o.a + b * o.c, a * o.b + b * o.d,
                  c * o.a + d * o.c, c * o.b + d * o.d};
}

FieldElem SLMatrix::det() const { return a * d - b * c; }

SLMatrix SLMatrix::inverse() const {
  FieldElem dt = det();
  if (dt.is_zero()) throw division_by_zero("singular matrix");
  return SLMatrix{d / dt, -b / dt, -c / dt, a / dt};
}

bool SLMatrix::eq(const SLMatrix& o) const {
  return a.eq(o.a) && b.eq(o.b) && c.eq(o.c) && d.eq(o.d);
}

bool SLMatrix::is_identity() const {
  FieldElem one = FieldElem::from_long(1, a.vars());
  FieldElem zero = FieldElem::from_long(0, a.vars());
  return a.eq(one) && b.eq(zero) && c.eq(zero) && d.eq(one);
}

std::string SLMatrix::to_string() const {
  return "[[" + a.to_string() + ", " + b.to_string() + "], [" + c.to_string() +
         ", " + d.to_string() + "]]";
}

std::string schema_name(Schema s) {
  switch (s) {
    case Schema::R1: return "r1";
    case Schema::R2: return "r2";
    case Schema::R3: return "r3";
    case Schema::R4: return "r4";
  }
  return "?";
}

std::optional<Schema> schema_from_name(const std::string& name) {
  if (name == "r1") return Schema::R1;
  if (name == "r2") return Schema::R2;
  if (name == "r3") return Schema::R3;
  if (name == "r4") return Schema::R4;
  return std::nullopt;
}

bool RelatorInstance::same_instance(const RelatorInstance& o) const {
  if (schema != o.schema || alpha != o.alpha || params.size() != o.params.size())
    return false;
  for (std::size_t i = 0; i < params.size(); ++i)
    if (!params[i].eq(o.params[i])) return false;
  return true;
}

std::string RelatorInstance::to_string() const {
  std::string s = schema_name(schema) + "[" + (alpha > 0 ? "+1" : "-1") + "](";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) s += ", ";
    s += params[i].to_string();
  }
  return s + ")";
}

Word stein_letter(int alpha, const FieldElem& t) {
  return Word::letter(Generator::stein(alpha, t));
}

Word w_elem(int alpha, const FieldElem& u) {
  if (u.is_zero()) throw domain_error("w_alpha(0) undefined: unit parameter required");
  return stein_letter(alpha, u) * stein_letter(-alpha, -u.inverse()) *
         stein_letter(alpha, u);
}

Word h_elem(int alpha, const FieldElem& u) {
  FieldElem one = FieldElem::from_long(1, u.vars());
  return w_elem(alpha, u) * w_elem(alpha, one).inverse();
}

Word eta_elem(int alpha, const FieldElem& u) {
  FieldElem one = FieldElem::from_long(1, u.vars());
  return w_elem(alpha, u) * w_elem(-alpha, one);
}

Word c_elem(int alpha, const FieldElem& u, const FieldElem& v) {
  if (u.is_zero() || v.is_zero()) throw domain_error("c(u,v) needs units");
  return h_elem(alpha, u * v) * h_elem(alpha, u).inverse() * h_elem(alpha, v).inverse();
}

Word expand_relator(const RelatorInstance& r) {
  const auto& p = r.params;
  auto need = [&](std::size_t n) {
    if (p.size() != n)
      throw domain_error("relator " + schema_name(r.schema) + " expects " +
                         std::to_string(n) + " parameters");
  };
  switch (r.schema) {
    case Schema::R1: {
      need(2);
      const FieldElem& s = p[0];
      const FieldElem& t = p[1];
      return stein_letter(r.alpha, s + t) * stein_letter(r.alpha, s).inverse() *
             stein_letter(r.alpha, t).inverse();
    }
    case Schema::R2: {
      need(2);
      const FieldElem& u = p[0];
      const FieldElem& t = p[1];
      if (u.is_zero()) throw domain_error("r2 requires a unit first parameter");
      Word w = w_elem(r.alpha, u);
      return w * stein_letter(r.alpha, t) * w.inverse() *
             stein_letter(-r.alpha, u.inverse() * u.inverse() * t);
    }
    case Schema::R3: {
      need(2);
      const FieldElem& u = p[0];
      const FieldElem& t = p[1];
      if (u.is_zero()) throw domain_error("r3 requires a unit first parameter");
      return w_elem(r.alpha, u) * stein_letter(r.alpha, t) * w_elem(r.alpha, -u) *
             stein_letter(-r.alpha, u.inverse() * u.inverse() * t);
    }
    case Schema::R4: {
      need(2);
      const FieldElem& u = p[0];
      const FieldElem& v = p[1];
      if (u.is_zero() || v.is_zero()) throw domain_error("r4 requires unit parameters");
      Word c = stein_letter(r.alpha, -(u * v));
      RelatorInstance inner{Schema::R1, -r.alpha, {u.inverse(), v.inverse()}};
      return c * expand_relator(inner) * c.inverse();
    }
  }
  throw internal_error("unhandled schema");
}

SLMatrix pi_eval(const Word& w, const VarSetPtr& vars) {
  // Polynomial matrix over a shared denominator: unreduced field fractions
  // would double their denominator degree at every matrix addition, so the
  // letter denominators are tracked once and cleared at the end.
  MultiPoly one = MultiPoly::constant(QSqrt2(1), vars);
  MultiPoly zero(vars);
  MultiPoly a = one, b = zero, c = zero, d = one;
  MultiPoly den = one;
  for (const Letter& l : w.letters()) {
    if (!l.gen.is_stein())
      throw domain_error("pi_eval on named generator '" + l.gen.name() + "'");
    const FieldElem& t = l.gen.param();
    if (!(*t.vars() == *vars))
      throw varset_mismatch("pi_eval: parameter over a different variable set");
    MultiPoly n = l.sign < 0 ? -t.num() : t.num();
    const MultiPoly& q = t.den();
    // letter matrix: [[q, n], [0, q]] / q (upper) or [[q, 0], [n, q]] / q
    MultiPoly a2, b2, c2, d2;
    if (l.gen.alpha() > 0) {
      a2 = a * q;
      b2 = a * n + b * q;
      c2 = c * q;
      d2 = c * n + d * q;
    } else {
      a2 = a * q + b * n;
      b2 = b * q;
      c2 = c * q + d * n;
      d2 = d * q;
    }
    a = std::move(a2);
    b = std::move(b2);
    c = std::move(c2);
    d = std::move(d2);
    den = den * q;
  }
  return SLMatrix{FieldElem(a, den), FieldElem(b, den), FieldElem(c, den),
                  FieldElem(d, den)};
}

Word psi_image_of_letter(int alpha, const FieldElem& t, const FieldElem& c) {
  FieldElem one = FieldElem::from_long(1, c.vars());
  FieldElem c2m1 = c * c - one;
  if (c2m1.is_zero()) throw domain_error("psi requires a^2 != 1");
  return comm(h_elem(alpha, c), stein_letter(alpha, t / c2m1));
}

Word psi_apply(const Word& w, const FieldElem& c) {
  FieldElem one = FieldElem::from_long(1, c.vars());
  if ((c * c - one).is_zero()) throw domain_error("psi requires a^2 != 1");
  return map_word(w, [&](const Generator& g) {
    if (!g.is_stein())
      throw unmapped_generator("psi on named generator '" + g.name() + "'");
    return psi_image_of_letter(g.alpha(), g.param(), c);
  });
}

Word ghys_R1(int alpha, const FieldElem& a, const FieldElem& b) {
  Word xab = stein_letter(alpha, -(a * b));
  Word xua = stein_letter(-alpha, a.inverse());
  Word xma = stein_letter(alpha, -a);
  RelatorInstance i1{Schema::R1, alpha, {a * a, -a}};
  RelatorInstance i2{Schema::R3, alpha, {-a, a * a}};
  RelatorInstance i3{Schema::R1, alpha, {-b, -a}};
  return xab.inverse() * expand_relator(i1) * xua.inverse() * xma.inverse() *
         expand_relator(i2) * expand_relator(i3) * xma * xua * xab;
}

Word ghys_R2(int alpha, const FieldElem& a, const FieldElem& b) {
  Word xab = stein_letter(alpha, -(a * b));
  RelatorInstance i1{Schema::R1, -alpha, {a.inverse(), b.inverse()}};
  RelatorInstance i2{Schema::R1, alpha, {-b, b * b}};
  RelatorInstance i3{Schema::R3, alpha, {b, b * b}};
  Word wb = w_elem(alpha, b);
  return xab * expand_relator(i1) * xab.inverse() * expand_relator(i2) *
         wb.inverse() * expand_relator(i3) * wb;
}

GhysWords ghys_words(int alpha, const VarSetPtr& vars) {
  if (vars->index_of("u") < 0) throw domain_error("ghys_words needs a variable 'u'");
  FieldElem u = FieldElem::variable("u", vars);
  FieldElem one = FieldElem::from_long(1, vars);
  FieldElem v = one - u;

  GhysWords g;
  g.r1_uv = ghys_R1(alpha, u, v);
  g.r1_vu = ghys_R1(alpha, v, u);
  g.r2_uv = ghys_R2(alpha, u, v);
  g.r2_vu = ghys_R2(alpha, v, u);
  g.w_conj = w_elem(alpha, -(u * v));
  g.lhs = comm(eta_elem(alpha, u), eta_elem(alpha, v));
  g.rhs = g.r1_uv * g.w_conj.inverse() * g.r2_uv * g.r2_vu.inverse() * g.w_conj *
          g.r1_vu.inverse();

  auto r1_of = [&](const FieldElem& a, const FieldElem& b) {
    g.relators_used.push_back({Schema::R1, alpha, {a * a, -a}});
    g.relators_used.push_back({Schema::R3, alpha, {-a, a * a}});
    g.relators_used.push_back({Schema::R1, alpha, {-b, -a}});
  };
  auto r2_of = [&](const FieldElem& a, const FieldElem& b) {
    g.relators_used.push_back({Schema::R1, -alpha, {a.inverse(), b.inverse()}});
    g.relators_used.push_back({Schema::R1, alpha, {-b, b * b}});
    g.relators_used.push_back({Schema::R3, alpha, {b, b * b}});
  };
  r1_of(u, v);
  r1_of(v, u);
  r2_of(u, v);
  r2_of(v, u);
  return g;
}

GhysReport verify_ghys(int alpha) {
  VarSetPtr vars = make_varset({"u"});
  GhysWords g = ghys_words(alpha, vars);
  GhysReport rep;
  rep.relator_count = static_cast<int>(g.relators_used.size());
  rep.residual = g.lhs * g.rhs.inverse();
  rep.free_equal = rep.residual.is_identity();
  rep.pi_equal = pi_eval(rep.residual, vars).is_identity();
  return rep;
}

}  // namespace occ
