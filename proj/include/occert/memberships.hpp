#pragma once

#include "occert/certificates.hpp"

namespace occ {

// Witness that lhs == rhs modulo R: diff is a verifying relator product with
// target lhs^-1 * rhs, so lhs * diff.target = rhs in F.
struct Equiv {
  Word lhs, rhs;
  RelatorProduct diff;
};

// Scripted R-membership witnesses for the standard St2 identities, derived
// from r1/r2 instances only. Every constructor checks its output by exact
// expansion (internal_error on failure), so callers can compose freely.
class SteinScripts {
 public:
  explicit SteinScripts(VarSetPtr vars);

  const Presentation& presentation() const { return pres_; }
  const VarSetPtr& vars() const { return vars_; }

  // --- congruence calculus -------------------------------------------------
  Equiv refl(const Word& w) const;
  Equiv symm(const Equiv& e) const;
  Equiv trans(const Equiv& a, const Equiv& b) const;
  Equiv mul(const Equiv& a, const Equiv& b) const;
  Equiv conj_compat(const Word& g, const Equiv& e) const;
  Equiv inv_compat(const Equiv& e) const;
  // Membership of w (target w) as the equivalence w == 1.
  Equiv from_member(const RelatorProduct& member) const;
  // Membership of e.lhs given e: lhs == rhs == 1 requires rhs = identity.
  RelatorProduct to_member(const Equiv& e) const;

  // --- atomic witnesses ----------------------------------------------------
  RelatorProduct instance(Schema schema, int alpha, std::vector<FieldElem> params,
                          int sign = 1) const;
  // x_a(0) in R
  RelatorProduct x_zero(int alpha) const;
  // x_a(-t) x_a(t) in R
  RelatorProduct x_inv_pair(int alpha, const FieldElem& t) const;
  // x_a(-t) == x_a(t)^-1
  Equiv x_neg(int alpha, const FieldElem& t) const;
  // x_a(s) x_a(t) == x_a(s+t)
  Equiv x_add(int alpha, const FieldElem& s, const FieldElem& t) const;
  // x_a(t)^n == x_a(n t) for integer n
  Equiv x_power(int alpha, const FieldElem& t, long n) const;

  // --- w/h conjugation -----------------------------------------------------
  // w_a(u) x_a(t) w_a(u)^-1 == x_{-a}(-u^-2 t)
  Equiv conj_w_same(int alpha, const FieldElem& u, const FieldElem& t) const;
  // w_a(u) w_a(-u) in R
  RelatorProduct w_inverse_pair(int alpha, const FieldElem& u) const;
  // w_a(u)^-1 == w_a(-u)
  Equiv w_inv_as_neg(int alpha, const FieldElem& u) const;
  // w_a(u) == w_{-a}(-u^-1)
  Equiv w_braid(int alpha, const FieldElem& u) const;
  // w_a(u) x_{-a}(t) w_a(u)^-1 == x_a(-u^2 t)
  Equiv conj_w_opp(int alpha, const FieldElem& u, const FieldElem& t) const;
  // h_a(u) x_a(t) h_a(u)^-1 == x_a(u^2 t)
  Equiv conj_h_same(int alpha, const FieldElem& u, const FieldElem& t) const;
  // h_a(u) x_{-a}(t) h_a(u)^-1 == x_{-a}(u^-2 t)
  Equiv conj_h_opp(int alpha, const FieldElem& u, const FieldElem& t) const;
  // w_a(u) g w_a(u)^-1 == image, for any word g over Stein letters
  Equiv conj_w_word(int alpha, const FieldElem& u, const Word& g) const;

  // --- central h-words -----------------------------------------------------
  // A product of h_{beta}(q)^{e} factors acting diagonally; net scaling 1 on
  // both families makes it central.
  struct HWord {
    std::vector<std::tuple<int, FieldElem, int>> factors;  // (alpha, param, exponent)
    Word word() const;
  };
  // c0 g c0^-1 == g when the net scaling is 1 (checked); general g over
  // Stein letters.
  Equiv conj_central_hword(const HWord& c0, const Word& g) const;
  // [g, c] in R for c = c0 * rho with rho in R witnessed and c0 central.
  RelatorProduct comm_with_central(const Word& g, const HWord& c0,
                                   const RelatorProduct& rho) const;
  // [g, c0] in R for a central h-word alone.
  RelatorProduct comm_with_central(const Word& g, const HWord& c0) const;

  // --- psi -----------------------------------------------------------------
  // psi(g) == g (a an integer with a^2 != 1); diff is the defect witness for
  // g^-1 psi(g) after symmetrization.
  Equiv psi_equiv(const Word& g, long a) const;
  // x_a(t) == [h_a(c), x_a(t / (c^2 - 1))]
  Equiv eq1(int alpha, const FieldElem& t, long a) const;
  // defect witness: target g^-1 psi(g)
  RelatorProduct psi_defect(const Word& g, long a) const;

  // --- derived schemas -----------------------------------------------------
  // r3/r4 instances as products over {r1, r2}.
  RelatorProduct derived_witness(const RelatorInstance& inst) const;

  // The two-commutator certificate for [[x,y], c], c = c0 * rho central:
  // [[x,y],c] = conj([x,y], [y ry y^-1, y x y^-1]) [x y ry x^-1, x rx x^-1]
  // with ry = [y^-1, c], rx = [x^-1, c].
  std::vector<CommutatorFactor> central_double_comm(const Word& x, const Word& y,
                                                    const Word& c, const HWord& c0,
                                                    const RelatorProduct& rho) const;

  FieldElem fe(long n) const { return FieldElem::from_long(n, vars_); }

 private:
  RelatorProduct checked(RelatorProduct rp, const char* what) const;
  Equiv checked(Equiv e, const char* what) const;

  VarSetPtr vars_;
  Presentation pres_;
};

}  // namespace occ
