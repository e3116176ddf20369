#pragma once

#include <optional>
#include <string>
#include <vector>

#include "occert/words.hpp"

namespace occ {

// 2x2 matrix over the coefficient field; pi_eval only ever produces
// determinant-1 matrices, checked by tests rather than per multiplication.
struct SLMatrix {
  FieldElem a, b, c, d;  // row major: [[a, b], [c, d]]

  static SLMatrix identity(const VarSetPtr& vars);
  SLMatrix operator*(const SLMatrix& o) const;
  SLMatrix inverse() const;
  FieldElem det() const;
  bool eq(const SLMatrix& o) const;
  bool is_identity() const;
  std::string to_string() const;
};

enum class Schema { R1, R2, R3, R4 };

std::string schema_name(Schema s);
std::optional<Schema> schema_from_name(const std::string& name);

// One instantiated Steinberg relator. R1 takes (s,t), R2 and R3 take (u,t)
// with u a unit, R4 takes (u,v) with both units.
struct RelatorInstance {
  Schema schema;
  int alpha = 1;
  std::vector<FieldElem> params;

  bool same_instance(const RelatorInstance& o) const;
  std::string to_string() const;
};

// Literal relator words, freely reduced:
//   r1_a(s,t) = x_a(s+t) x_a(s)^-1 x_a(t)^-1
//   r2_a(u,t) = w_a(u) x_a(t) w_a(u)^-1 x_{-a}(u^-2 t)
//   r3_a(u,t) = w_a(u) x_a(t) w_a(-u) x_{-a}(u^-2 t)
//   r4_a(u,v) = x_a(-uv) r1_{-a}(u^-1, v^-1) x_a(-uv)^-1
Word expand_relator(const RelatorInstance& r);

Word stein_letter(int alpha, const FieldElem& t);
Word w_elem(int alpha, const FieldElem& u);
Word h_elem(int alpha, const FieldElem& u);
Word eta_elem(int alpha, const FieldElem& u);
Word c_elem(int alpha, const FieldElem& u, const FieldElem& v);
inline Word c_elem(const FieldElem& u, const FieldElem& v) { return c_elem(1, u, v); }

// Evaluation homomorphism into SL2: x_1(t) -> [[1,t],[0,1]],
// x_{-1}(t) -> [[1,0],[t,1]]. Throws on named generators.
SLMatrix pi_eval(const Word& w, const VarSetPtr& vars);

// The endomorphism sending x_a(t) to [h_a(c), x_a(t/(c^2-1))]; requires
// c^2 != 1. Fixes pi pointwise.
Word psi_apply(const Word& w, const FieldElem& c);
Word psi_image_of_letter(int alpha, const FieldElem& t, const FieldElem& c);

// The displayed identity of the Ghys computation over Q(sqrt2)(u), v = 1-u.
struct GhysWords {
  Word lhs;                                   // [eta_a(u), eta_a(v)]
  Word rhs;                                   // R1(u,v) w^-1 R2(u,v) R2(v,u)^-1 w R1(v,u)^-1
  Word r1_uv, r1_vu, r2_uv, r2_vu, w_conj;    // building blocks
  std::vector<RelatorInstance> relators_used; // the 12 instances
};

GhysWords ghys_words(int alpha, const VarSetPtr& vars);

struct GhysReport {
  bool free_equal = false;
  bool pi_equal = false;
  Word residual;
  int relator_count = 0;
};

GhysReport verify_ghys(int alpha);

// R-blocks of the Ghys identity as words in F given (a,b) in {(u,v),(v,u)}.
Word ghys_R1(int alpha, const FieldElem& a, const FieldElem& b);
Word ghys_R2(int alpha, const FieldElem& a, const FieldElem& b);

}  // namespace occ
