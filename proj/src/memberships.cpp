#include "occert/memberships.hpp"

#include "occert/errors.hpp"

namespace occ {

SteinScripts::SteinScripts(VarSetPtr vars)
    : vars_(std::move(vars)), pres_(Presentation::steinberg(vars_)) {}

RelatorProduct SteinScripts::checked(RelatorProduct rp, const char* what) const {
  VerifyResult v = verify_relator_product(pres_, rp);
  if (!v.ok) throw internal_error(std::string("script '") + what + "' failed verification");
  return rp;
}

Equiv SteinScripts::checked(Equiv e, const char* what) const {
  if (e.diff.target != e.lhs.inverse() * e.rhs)
    throw internal_error(std::string("script '") + what + "': diff target mismatch");
  VerifyResult v = verify_relator_product(pres_, e.diff);
  if (!v.ok) throw internal_error(std::string("script '") + what + "' failed verification");
  return e;
}

Equiv SteinScripts::refl(const Word& w) const {
  Equiv e;
  e.lhs = w;
  e.rhs = w;
  e.diff.target = Word();
  return e;
}

Equiv SteinScripts::symm(const Equiv& e) const {
  Equiv out;
  out.lhs = e.rhs;
  out.rhs = e.lhs;
  out.diff = e.diff.inverted();
  return out;
}

Equiv SteinScripts::trans(const Equiv& a, const Equiv& b) const {
  if (a.rhs != b.lhs) throw internal_error("trans: middle words differ");
  Equiv out;
  out.lhs = a.lhs;
  out.rhs = b.rhs;
  out.diff = RelatorProduct::concat(a.diff, b.diff);
  return out;
}

Equiv SteinScripts::mul(const Equiv& a, const Equiv& b) const {
  // (AC)^-1 BD = C^-1 (A^-1 B) C * (C^-1 D)
  Equiv out;
  out.lhs = a.lhs * b.lhs;
  out.rhs = a.rhs * b.rhs;
  out.diff = RelatorProduct::concat(a.diff.conjugated(b.lhs.inverse()), b.diff);
  return out;
}

Equiv SteinScripts::conj_compat(const Word& g, const Equiv& e) const {
  Equiv out;
  out.lhs = conj(g, e.lhs);
  out.rhs = conj(g, e.rhs);
  out.diff = e.diff.conjugated(g);
  return out;
}

Equiv SteinScripts::inv_compat(const Equiv& e) const {
  // A^-1 == B^-1 with diff target A B^-1 ... = conj(A, (A^-1 B)^-1)
  Equiv out;
  out.lhs = e.lhs.inverse();
  out.rhs = e.rhs.inverse();
  out.diff = e.diff.inverted().conjugated(e.lhs);
  return out;
}

Equiv SteinScripts::from_member(const RelatorProduct& member) const {
  Equiv e;
  e.lhs = member.target;
  e.rhs = Word();
  e.diff = member.inverted();
  return e;
}

RelatorProduct SteinScripts::to_member(const Equiv& e) const {
  if (!e.rhs.is_identity()) throw internal_error("to_member: rhs not identity");
  return e.diff.inverted().retargeted(e.lhs);
}

RelatorProduct SteinScripts::instance(Schema schema, int alpha,
                                      std::vector<FieldElem> params, int sign) const {
  RelatorInstance inst{schema, alpha, std::move(params)};
  Word w = expand_relator(inst);
  if (sign < 0) w = w.inverse();
  RelatorProduct rp;
  rp.target = w;
  rp.factors.push_back(RelatorFactor{Word(), RelatorRef::stein(std::move(inst)), sign});
  return rp;
}

RelatorProduct SteinScripts::x_zero(int alpha) const {
  // r1(0,0) = x(0)^-1, so x(0) = r1(0,0)^-1.
  FieldElem zero = fe(0);
  RelatorProduct rp = instance(Schema::R1, alpha, {zero, zero}, -1);
  return checked(rp.retargeted(stein_letter(alpha, zero)), "x_zero");
}

RelatorProduct SteinScripts::x_inv_pair(int alpha, const FieldElem& t) const {
  // x(-t) x(t) = r1(t,-t)^-1 * r1(0,0)^-1
  RelatorProduct rp = RelatorProduct::concat(instance(Schema::R1, alpha, {t, -t}, -1),
                                             instance(Schema::R1, alpha, {fe(0), fe(0)}, -1));
  return checked(rp.retargeted(stein_letter(alpha, -t) * stein_letter(alpha, t)),
                 "x_inv_pair");
}

Equiv SteinScripts::x_neg(int alpha, const FieldElem& t) const {
  // x(-t) == x(t)^-1: diff target x(t) x(t)^-1... = (x(t) x(-t))^-1 pattern:
  // (x(-t))^-1 x(t)^-1 = (x(t) x(-t))^-1 = x_inv_pair(alpha, -t) inverted.
  Equiv e;
  e.lhs = stein_letter(alpha, -t);
  e.rhs = stein_letter(alpha, t).inverse();
  e.diff = x_inv_pair(alpha, -t).inverted().retargeted(e.lhs.inverse() * e.rhs);
  return checked(e, "x_neg");
}

Equiv SteinScripts::x_add(int alpha, const FieldElem& s, const FieldElem& t) const {
  // x(s) x(t) == x(s+t): diff = x(t)^-1 x(s)^-1 x(s+t) = conj(x(s+t)^-1, r1(t,s))
  Equiv e;
  e.lhs = stein_letter(alpha, s) * stein_letter(alpha, t);
  e.rhs = stein_letter(alpha, s + t);
  RelatorProduct rp = instance(Schema::R1, alpha, {t, s}, +1)
                          .conjugated(stein_letter(alpha, s + t).inverse());
  e.diff = rp.retargeted(e.lhs.inverse() * e.rhs);
  return checked(e, "x_add");
}

Equiv SteinScripts::x_power(int alpha, const FieldElem& t, long n) const {
  if (n == 0) {
    Equiv e;
    e.lhs = Word();
    e.rhs = stein_letter(alpha, fe(0));
    e.diff = x_zero(alpha).retargeted(e.rhs);
    return checked(e, "x_power0");
  }
  if (n < 0) {
    Equiv pos = x_power(alpha, t, -n);  // x(t)^-n == x(-n t)
    Equiv inv = inv_compat(pos);        // x(t)^n == x(-n t)^-1
    // x_neg(alpha, -n t): x(n t) == x(-n t)^-1; flipped: x(-n t)^-1 == x(n t).
    Equiv use = symm(x_neg(alpha, -(fe(n) * t)));
    return checked(trans(inv, use), "x_power_neg");
  }
  Equiv acc = refl(stein_letter(alpha, t));
  FieldElem total = t;
  for (long i = 1; i < n; ++i) {
    // acc: x(t)^i == x(i t); extend by one letter.
    Equiv step = mul(acc, refl(stein_letter(alpha, t)));  // x(t)^{i+1} == x(it) x(t)
    Equiv add = x_add(alpha, total, t);
    acc = trans(step, add);
    total = total + t;
  }
  return checked(acc, "x_power");
}

Equiv SteinScripts::conj_w_same(int alpha, const FieldElem& u, const FieldElem& t) const {
  // A = w x(t) w^-1, B = x_{-a}(-u^-2 t);
  // A^-1 B = conj(x_{-a}(u^-2 t), r2^-1) * (x_{-a}(u^-2 t) x_{-a}(-u^-2 t))^-1-ish:
  // direct composition: A = r2 * x_{-a}(u^-2 t)^-1, so
  // A^-1 B = x_{-a}(u^-2 t) r2^-1 B.
  FieldElem s = u.inverse() * u.inverse() * t;
  Equiv e;
  Word w = w_elem(alpha, u);
  e.lhs = w * stein_letter(alpha, t) * w.inverse();
  e.rhs = stein_letter(-alpha, -s);
  Word xs = stein_letter(-alpha, s);
  // diff target = xs * r2^-1 * x(-s): conj(xs, r2^-1) * (xs * x(-s)) ... as
  // products: conj(xs, r2^-1) has target xs r2^-1 xs^-1; then the pair
  // xs x(-s) = x(-(-s)) x(-s) = x_inv_pair(-alpha, -s).
  RelatorProduct part1 = instance(Schema::R2, alpha, {u, t}, -1).conjugated(xs);
  RelatorProduct part2 = x_inv_pair(-alpha, -s);
  RelatorProduct diff = RelatorProduct::concat(part1, part2);
  e.diff = diff.retargeted(e.lhs.inverse() * e.rhs);
  return checked(e, "conj_w_same");
}

RelatorProduct SteinScripts::w_inverse_pair(int alpha, const FieldElem& u) const {
  // w(u) w(-u) = x(u) y(-1/u) [x(u) x(-u)] y(1/u) x(-u)
  //   with the bracket and then y(-1/u) y(1/u) and then x(u) x(-u) removed
  //   via x_inv_pair memberships.
  Word w1 = w_elem(alpha, u);
  Word w2 = w_elem(alpha, -u);
  Word target = w1 * w2;
  FieldElem ui = u.inverse();
  // Build as equivalence chain: target == eps.
  Word xu = stein_letter(alpha, u);
  Word ymu = stein_letter(-alpha, -ui);
  Word ypu = stein_letter(-alpha, ui);
  Word xmu = stein_letter(alpha, -u);
  // target = xu ymu [xu xmu] ypu xmu
  Equiv mid1 = from_member(x_inv_pair(alpha, -u));  // x(u) x(-u) == eps
  Equiv e1 = mul(refl(xu * ymu), mul(mid1, refl(ypu * xmu)));
  // -> xu ymu ypu xmu
  Equiv mid2 = from_member(x_inv_pair(-alpha, ui));  // y(-1/u) y(1/u) == eps
  Equiv e2 = mul(refl(xu), mul(mid2, refl(xmu)));
  // -> xu xmu
  Equiv mid3 = from_member(x_inv_pair(alpha, -u));
  Equiv chain = trans(trans(e1, e2), mid3);
  return checked(to_member(chain), "w_inverse_pair");
}

Equiv SteinScripts::w_inv_as_neg(int alpha, const FieldElem& u) const {
  // w(u)^-1 == w(-u): diff target w(u) w(-u) = w_inverse_pair.
  Equiv e;
  e.lhs = w_elem(alpha, u).inverse();
  e.rhs = w_elem(alpha, -u);
  e.diff = w_inverse_pair(alpha, u).retargeted(e.lhs.inverse() * e.rhs);
  return checked(e, "w_inv_as_neg");
}

Equiv SteinScripts::w_braid(int alpha, const FieldElem& u) const {
  // w_{-a}(-1/u) = y(-1/u) x(u) y(-1/u) == w_a(u), then symmetrize.
  FieldElem ui = u.inverse();
  Word w = w_elem(alpha, u);
  Word target = w_elem(-alpha, -ui);
  // y(-1/u) == w x(u) w^-1
  Equiv ey = symm(conj_w_same(alpha, u, u));
  // w_{-a}(-1/u) == (w x(u) w^-1) x(u) (w x(u) w^-1) = w x(u) (w^-1 x(u) w) x(u) w^-1
  Equiv e1 = mul(ey, mul(refl(stein_letter(alpha, u)), ey));
  // inner: w^-1 x(u) w == w(-u) x(u) w(-u)^-1 == y(-1/u)
  Equiv winv = w_inv_as_neg(alpha, u);  // w^-1 == w(-u)
  Equiv inner = mul(winv, mul(refl(stein_letter(alpha, u)), inv_compat(winv)));
  Equiv inner2 = trans(inner, conj_w_same(alpha, -u, u));  // == y(-(-u)^-2 u) = y(-1/u)
  // assemble: e1.rhs = w x(u) (w^-1 x(u) w) x(u) w^-1 literally
  Word prefix = w * stein_letter(alpha, u);
  Word suffix = stein_letter(alpha, u) * w.inverse();
  Equiv e2 = mul(refl(prefix), mul(symm(inner2), refl(suffix)));
  // e2: w x(u) y(-1/u) x(u) w^-1 == w x(u) (w^-1 x(u) w) x(u) w^-1
  // note w x(u) y(-1/u) x(u) w^-1 = w w w^-1 = w as words.
  Equiv whole = trans(e1, symm(e2));
  if (whole.lhs != target || whole.rhs != w) throw internal_error("w_braid: wiring");
  return checked(symm(whole), "w_braid");
}

Equiv SteinScripts::conj_w_opp(int alpha, const FieldElem& u, const FieldElem& t) const {
  // w_a(u) y(t) w_a(u)^-1 == x(-u^2 t) via the braid identity.
  Equiv braid = w_braid(alpha, u);  // w_a(u) == w_{-a}(-1/u)
  Word y = stein_letter(-alpha, t);
  Equiv e = mul(braid, mul(refl(y), inv_compat(braid)));
  // rhs = w_{-a}(-1/u) y(t) w_{-a}(-1/u)^-1 == x_a(-(-1/u)^-2 t) = x_a(-u^2 t)
  Equiv inner = conj_w_same(-alpha, -u.inverse(), t);
  return checked(trans(e, inner), "conj_w_opp");
}

Equiv SteinScripts::conj_h_same(int alpha, const FieldElem& u, const FieldElem& t) const {
  // h(u) x(t) h(u)^-1, h(u) = w(u) w(1)^-1:
  // w(1)^-1 x(t) w(1) == w(-1) x(t) w(-1)^-1 == y(-t); then
  // w(u) y(-t) w(u)^-1 == x(u^2 t).
  FieldElem one = fe(1);
  Word wu = w_elem(alpha, u);
  Word w1 = w_elem(alpha, one);
  Word x = stein_letter(alpha, t);
  Equiv winv = w_inv_as_neg(alpha, one);  // w(1)^-1 == w(-1)
  Equiv inner = mul(winv, mul(refl(x), inv_compat(winv)));
  inner = trans(inner, conj_w_same(alpha, -one, t));  // == y(-t)
  Equiv e = mul(refl(wu), mul(inner, refl(wu.inverse())));
  Equiv outer = conj_w_opp(alpha, u, -t);  // w(u) y(-t) w(u)^-1 == x(u^2 t)
  return checked(trans(e, outer), "conj_h_same");
}

Equiv SteinScripts::conj_h_opp(int alpha, const FieldElem& u, const FieldElem& t) const {
  // h_a(u) y(t) h_a(u)^-1 == y(u^-2 t):
  // w(1)^-1 y(t) w(1) == w(-1) y(t) w(-1)^-1 == x(-t); then
  // w(u) x(-t) w(u)^-1 == y(-u^-2 (-t)) = y(u^-2 t).
  FieldElem one = fe(1);
  Word wu = w_elem(alpha, u);
  Word y = stein_letter(-alpha, t);
  Equiv winv = w_inv_as_neg(alpha, one);
  Equiv inner = mul(winv, mul(refl(y), inv_compat(winv)));
  inner = trans(inner, conj_w_opp(alpha, -one, t));  // == x(-t)
  Equiv e = mul(refl(wu), mul(inner, refl(wu.inverse())));
  Equiv outer = conj_w_same(alpha, u, -t);  // w(u) x(-t) w(u)^-1 == y(u^-2 t)
  return checked(trans(e, outer), "conj_h_opp");
}

Equiv SteinScripts::conj_w_word(int alpha, const FieldElem& u, const Word& g) const {
  if (g.is_identity()) return refl(Word());
  // Fold conj_w_same / conj_w_opp over the letters of g:
  // (w A w^-1)(w l w^-1) = w (A l) w^-1.
  Word w = w_elem(alpha, u);
  Equiv acc;
  bool first = true;
  for (const Letter& l : g.letters()) {
    if (!l.gen.is_stein()) throw domain_error("conj_w_word: named generator");
    FieldElem tp = l.gen.param();
    Equiv letter_eq = l.gen.alpha() == alpha ? conj_w_same(alpha, u, tp)
                                             : conj_w_opp(alpha, u, tp);
    if (l.sign < 0) letter_eq = inv_compat(letter_eq);
    acc = first ? letter_eq : mul(acc, letter_eq);
    first = false;
  }
  if (acc.lhs != conj(w, g)) throw internal_error("conj_w_word: lhs mismatch");
  return checked(acc, "conj_w_word");
}

Word SteinScripts::HWord::word() const {
  Word w;
  for (const auto& [alpha, q, e] : factors) {
    Word h = h_elem(alpha, q);
    w = w * (e < 0 ? h.inverse() : h);
  }
  return w;
}

Equiv SteinScripts::conj_central_hword(const HWord& c0, const Word& g) const {
  if (g.is_identity()) return refl(Word());
  // c0 = f1 f2 ... fk: process each letter of g through the h-factors from
  // the inside out, tracking the exact parameter scaling; centrality means
  // the net scaling is 1 and the letter comes back unchanged.
  Equiv acc;
  bool first = true;
  for (const Letter& l : g.letters()) {
    if (!l.gen.is_stein()) throw domain_error("conj_central_hword: named generator");
    Equiv letter_acc = refl(Word::letter(l.gen, 1));
    for (std::size_t idx = c0.factors.size(); idx-- > 0;) {
      const auto& [halpha, q, e] = c0.factors[idx];
      const Letter& cur = letter_acc.rhs.letters()[0];
      FieldElem tcur = cur.gen.param();
      int beta = cur.gen.alpha();
      Word h = h_elem(halpha, q);
      Word fw = e < 0 ? h.inverse() : h;
      Equiv step;
      if (e > 0) {
        step = beta == halpha ? conj_h_same(halpha, q, tcur) : conj_h_opp(halpha, q, tcur);
      } else {
        // h^-1 x(tcur) h == x(t') with t' the inverse scaling: derive from
        // the forward rule at t' and conjugate by h^-1.
        FieldElem q2 = q * q;
        FieldElem tprime = beta == halpha ? tcur / q2 : tcur * q2;
        Equiv fwd = beta == halpha ? conj_h_same(halpha, q, tprime)
                                   : conj_h_opp(halpha, q, tprime);
        step = symm(conj_compat(h.inverse(), fwd));
        if (step.lhs != conj(h.inverse(), letter_acc.rhs))
          throw internal_error("conj_central_hword: inverse step wiring");
      }
      Equiv lifted = conj_compat(fw, letter_acc);
      letter_acc = trans(lifted, step);
    }
    const Letter& fin = letter_acc.rhs.letters()[0];
    if (!(fin.gen == l.gen))
      throw internal_error("conj_central_hword: net scaling is not 1");
    // Restore the letter to the exact input generator so later folds reduce.
    letter_acc.rhs = Word::letter(l.gen, 1);
    Equiv use = l.sign < 0 ? inv_compat(letter_acc) : letter_acc;
    acc = first ? use : mul(acc, use);
    first = false;
  }
  if (acc.lhs != conj(c0.word(), g)) throw internal_error("conj_central_hword: lhs mismatch");
  if (acc.rhs != g) throw internal_error("conj_central_hword: rhs mismatch");
  return checked(acc, "conj_central_hword");
}

RelatorProduct SteinScripts::comm_with_central(const Word& g, const HWord& c0) const {
  // [g, c0] = g c0 g^-1 c0^-1: from E = conj_central_hword(c0, g^-1):
  // symm(E): g^-1 == c0 g^-1 c0^-1, diff target = g c0 g^-1 c0^-1.
  Equiv e = conj_central_hword(c0, g.inverse());
  RelatorProduct rp = symm(e).diff;
  Word target = comm(g, c0.word());
  return checked(rp.retargeted(target), "comm_with_central");
}

RelatorProduct SteinScripts::comm_with_central(const Word& g, const HWord& c0,
                                               const RelatorProduct& rho) const {
  // c = c0 rho: [g, c0 rho] = [g, c0] * conj(c0, [g, rho]);
  // [g, rho] = (g rho g^-1) rho^-1 as a membership.
  RelatorProduct base = comm_with_central(g, c0);
  RelatorProduct comm_rho =
      RelatorProduct::concat(rho.conjugated(g), rho.inverted());
  RelatorProduct part2 = comm_rho.conjugated(c0.word());
  Word c = c0.word() * rho.target;
  RelatorProduct out = RelatorProduct::concat(base, part2).retargeted(comm(g, c));
  return checked(out, "comm_with_central_rho");
}

Equiv SteinScripts::eq1(int alpha, const FieldElem& t, long a) const {
  FieldElem fa = fe(a);
  FieldElem a2m1 = fa * fa - fe(1);
  if (a2m1.is_zero()) throw domain_error("eq1 requires a^2 != 1");
  FieldElem tp = t / a2m1;
  Word h = h_elem(alpha, fa);
  Word xt = stein_letter(alpha, tp);
  // [h, x(t')] = h x(t') h^-1 * x(t')^-1 == x(a^2 t') x(-t') == x(t)
  Equiv c1 = conj_h_same(alpha, fa, tp);                 // h x(t') h^-1 == x(a^2 t')
  Equiv c2 = symm(x_neg(alpha, tp));                     // x(t')^-1 == x(-t')
  Equiv e = mul(c1, c2);                                 // [h,x(t')] == x(a^2 t') x(-t')
  Equiv add = x_add(alpha, fa * fa * tp, -tp);           // == x(a^2 t' - t') = x(t)
  Equiv whole = trans(e, add);
  if (whole.lhs != comm(h, xt)) throw internal_error("eq1: lhs mismatch");
  return checked(symm(whole), "eq1");
}

Equiv SteinScripts::psi_equiv(const Word& g, long a) const {
  FieldElem fa = fe(a);
  Equiv acc = refl(Word());
  bool first = true;
  for (const Letter& l : g.letters()) {
    if (!l.gen.is_stein()) throw domain_error("psi_equiv: named generator");
    Equiv e = symm(eq1(l.gen.alpha(), l.gen.param(), a));  // [h, x(t')] == x(t)
    if (l.sign < 0) e = inv_compat(e);
    acc = first ? e : mul(acc, e);
    first = false;
  }
  if (g.is_identity()) return refl(Word());
  if (acc.lhs != psi_apply(g, fa)) throw internal_error("psi_equiv: lhs mismatch");
  if (acc.rhs != g) throw internal_error("psi_equiv: rhs mismatch");
  return checked(acc, "psi_equiv");
}

RelatorProduct SteinScripts::psi_defect(const Word& g, long a) const {
  // target g^-1 psi(g): from psi(g) == g, symm gives g == psi(g) with diff
  // target g^-1 psi(g).
  Equiv e = symm(psi_equiv(g, a));
  return checked(e.diff.retargeted(g.inverse() * psi_apply(g, fe(a))), "psi_defect");
}

RelatorProduct SteinScripts::derived_witness(const RelatorInstance& inst) const {
  if (inst.schema == Schema::R4) {
    const FieldElem& u = inst.params[0];
    const FieldElem& v = inst.params[1];
    RelatorProduct inner = instance(Schema::R1, -inst.alpha, {u.inverse(), v.inverse()});
    return checked(inner.conjugated(stein_letter(inst.alpha, -(u * v)))
                       .retargeted(expand_relator(inst)),
                   "derived_r4");
  }
  if (inst.schema == Schema::R3) {
    // r3(u,t) = r2(u,t) * conj(y(u^-2 t)^-1, w(u) w(-u))
    const FieldElem& u = inst.params[0];
    const FieldElem& t = inst.params[1];
    FieldElem s = u.inverse() * u.inverse() * t;
    RelatorProduct r2 = instance(Schema::R2, inst.alpha, {u, t});
    RelatorProduct pair =
        w_inverse_pair(inst.alpha, u).conjugated(stein_letter(-inst.alpha, s).inverse());
    return checked(RelatorProduct::concat(r2, pair).retargeted(expand_relator(inst)),
                   "derived_r3");
  }
  return instance(inst.schema, inst.alpha, inst.params);
}

std::vector<CommutatorFactor> SteinScripts::central_double_comm(
    const Word& x, const Word& y, const Word& c, const HWord& c0,
    const RelatorProduct& rho) const {
  // [[x,y],c] = conj([x,y], [y ry y^-1, y x y^-1]) * [x y ry x^-1, x rx x^-1]
  // ry = [y^-1, c], rx = [x^-1, c] in R.
  RelatorProduct ry = comm_with_central(y.inverse(), c0, rho);
  RelatorProduct rx = comm_with_central(x.inverse(), c0, rho);
  std::vector<CommutatorFactor> out;
  // first factor: [y ry y^-1, y x y^-1] with an R-member in the first slot:
  // [r, f] = [f, r]^-1.
  out.push_back(CommutatorFactor::commutator(conj(y, x), ry.conjugated(y), -1));
  out.back() = out.back().conjugated(comm(x, y));
  out.push_back(
      CommutatorFactor::commutator(x * y * ry.target * x.inverse(), rx.conjugated(x), +1));
  // exact check
  Word prod;
  for (const auto& f : out) prod = prod * f.expand(pres_);
  if (prod != comm(comm(x, y), c))
    throw internal_error("central_double_comm: identity failed");
  return out;
}

}  // namespace occ
