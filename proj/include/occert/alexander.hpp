#pragma once

#include <optional>
#include <string>
#include <vector>

#include "occert/laurent_mat.hpp"

namespace occ {

// Finitely presented Lambda-module: generators (rows) and a relation matrix
// whose columns are relation vectors.
struct ModulePresentation {
  std::vector<std::string> generators;
  LaurentMat relations;  // generators.size() x (#relations)

  void check() const;
  std::size_t num_generators() const { return generators.size(); }
};

struct ModuleInvariants {
  std::vector<LaurentPoly> torsion_factors;  // non-unit invariant factors, canonical
  std::size_t free_rank = 0;
  // Minimal generator count = free rank + number of torsion factors.
  std::size_t min_generators() const { return free_rank + torsion_factors.size(); }
  bool cyclic() const { return min_generators() <= 1; }
};

ModuleInvariants module_invariants(const ModulePresentation& pres);

// dim over Q of M (x) Lambda/(t - c): free rank plus the number of invariant
// factors vanishing at c.
std::size_t fiber_dimension(const ModulePresentation& pres, const BigRational& c);

struct MembershipWitness {
  std::vector<LaurentPoly> x;  // generator coefficients
  std::vector<LaurentPoly> y;  // relation coefficients
};

struct MembershipResult {
  bool member = false;
  std::optional<MembershipWitness> witness;
};

// Decides target in scale*M, i.e. solvability of
//   target = scale * x + relations * y
// over Lambda, via the SNF of the augmented matrix. Witnesses are verified
// exactly before being returned.
MembershipResult submodule_membership(const std::vector<LaurentPoly>& target,
                                      const ModulePresentation& pres,
                                      const LaurentPoly& scale);

struct BoundaryVectors {
  std::vector<LaurentPoly> m;
  std::vector<LaurentPoly> l;
};

struct OCMTReport {
  MembershipResult m_membership;
  MembershipResult l_membership;
  bool is_ocmt = false;  // both memberships hold
  ModuleInvariants invariants;
  bool cyclic = false;
  std::size_t dim_at_u = 0;      // dim of M (x) Lambda/(t - u)
  std::size_t dim_at_u_inv = 0;  // dim at t = 1/u
};

// The membership test of the translation-overcommutation criterion: the
// boundary classes must land in (t - u) * H1.
OCMTReport ocmt_check(const ModulePresentation& pres, const BoundaryVectors& boundary,
                      const BigRational& u);

// gcd of maximal minors of the relation matrix, canonical form; zero when
// all maximal minors vanish.
LaurentPoly alexander_polynomial(const ModulePresentation& pres);

// Adds the meridian vector as an extra relation: the presentation of the
// closed manifold obtained by filling along m.
ModulePresentation filled_presentation(const ModulePresentation& pres,
                                       const std::vector<LaurentPoly>& meridian);

struct Genus2Obstruction {
  bool cyclic = false;
  ModuleInvariants invariants;
};

// cyclic = true refutes OCMT-ness of a candidate: an overcommuting manifold
// for translations cannot have cyclic H1(M, Lambda).
Genus2Obstruction genus2_obstruction(const ModulePresentation& pres);

// Matrix file: one row per line, cells comma separated, entries Laurent
// expressions in t; '#' starts a comment.
LaurentMat parse_matrix_file(const std::string& text);
// Boundary file: first non-comment line = m entries, second = l entries.
BoundaryVectors parse_boundary_file(const std::string& text);

}  // namespace occ
