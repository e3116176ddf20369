#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "occert/steinberg.hpp"

namespace occ {

// A presentation F -> G: either the Steinberg presentation (Stein alphabet,
// schemas r1/r2 normally generating R, r3/r4 derived) or a finite named
// presentation.
class Presentation {
 public:
  enum class Kind { Steinberg, Named };

  static Presentation steinberg(VarSetPtr vars);
  static Presentation named(std::string name, std::vector<std::string> generators,
                            std::vector<std::pair<std::string, Word>> relators);

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  const VarSetPtr& vars() const { return vars_; }
  bool is_steinberg() const { return kind_ == Kind::Steinberg; }
  const std::vector<std::pair<std::string, Word>>& named_relators() const {
    return named_relators_;
  }

  Word relator_word(const std::string& name) const;

 private:
  Kind kind_ = Kind::Named;
  std::string name_;
  VarSetPtr vars_;
  std::vector<std::string> generators_;
  std::vector<std::pair<std::string, Word>> named_relators_;
};

// Reference to a relator of the presentation: a Steinberg schema instance or
// a named relator.
struct RelatorRef {
  std::string name;                         // named presentations
  std::optional<RelatorInstance> instance;  // Steinberg presentations

  static RelatorRef named(std::string n) { return RelatorRef{std::move(n), std::nullopt}; }
  static RelatorRef stein(RelatorInstance inst) { return RelatorRef{"", std::move(inst)}; }
  bool is_instance() const { return instance.has_value(); }
  bool same_as(const RelatorRef& o) const;
  std::string to_string() const;
};

Word expand_relator_ref(const Presentation& p, const RelatorRef& r);

// One factor conj(conjugator, relator^sign) of a relator product.
struct RelatorFactor {
  Word conjugator;
  RelatorRef relator;
  int sign = 1;

  Word expand(const Presentation& p) const;
  RelatorFactor conjugated(const Word& g) const;
  RelatorFactor inverted() const { return RelatorFactor{conjugator, relator, -sign}; }
};

// Witness for l_S: target = product of the expanded factors. cost() bounds
// l_S(target) in the factor count (r3/r4 references count 1, as in the
// source computations; see strict witnesses in memberships.hpp).
struct RelatorProduct {
  Word target;
  std::vector<RelatorFactor> factors;

  std::size_t cost() const { return factors.size(); }
  Word expansion(const Presentation& p) const;

  RelatorProduct inverted() const;
  RelatorProduct conjugated(const Word& g) const;
  static RelatorProduct concat(const RelatorProduct& a, const RelatorProduct& b);
  RelatorProduct retargeted(Word t) const;
};

struct VerifyResult {
  bool ok = false;
  Word residual;
  std::size_t cost = 0;
  std::vector<std::string> axiom_uses;
};

VerifyResult verify_relator_product(const Presentation& p, const RelatorProduct& rp);

// Imported commutator-cost axiom: asserts that conj(conjugator,
// [x_alpha(s), x_alpha(t)]) can be written with two commutators in [F,R].
// The expansion is the literal commutator word, so certificates containing
// axiom factors still verify exactly at the word level; only the cost claim
// is imported.
struct AxiomFactor {
  std::string kind;  // "translations-xi2"
  int alpha = 1;
  FieldElem s, t;
  Word conjugator;

  Word expand() const;
  std::string to_string() const;
};

// Signed commutator factor [f, r]^sign with an embedded witness for r in R,
// or an imported axiom factor.
struct CommutatorFactor {
  Word f;
  RelatorProduct r_witness;
  int sign = 1;
  std::optional<AxiomFactor> axiom;

  static CommutatorFactor commutator(Word f, RelatorProduct witness, int sign = 1);
  static CommutatorFactor from_axiom(AxiomFactor ax);

  bool is_axiom() const { return axiom.has_value(); }
  std::size_t cost() const { return is_axiom() ? 2 : 1; }
  Word expand(const Presentation& p) const;
  CommutatorFactor conjugated(const Word& g) const;
  CommutatorFactor inverted() const;
};

// Witness for cl_R: target = product of factor expansions, every embedded
// relator witness verifies. cost() counts 1 per factor and 2 per axiom
// import and bounds cl_R(target).
struct CommutatorProduct {
  Word target;
  std::vector<CommutatorFactor> factors;
  // Set when the target is a commutator [g, h] of known words.
  std::optional<std::pair<Word, Word>> target_pair;

  std::size_t cost() const;
  bool uses_axiom() const;
  Word expansion(const Presentation& p) const;
  CommutatorProduct conjugated(const Word& g) const;
  CommutatorProduct inverted() const;
};

VerifyResult verify_commutator_product(const Presentation& p, const CommutatorProduct& cp);

// Abelianization of a word over its generator set: signed letter counts
// grouped by generator equality.
std::vector<std::pair<Generator, long>> abelianization(const Word& w);
bool abelianization_trivial(const Word& w);

// Folds a sign-balanced relator product into a commutator product of half
// the cost, by the rewriting
//   f r f^-1 x g r^-1 g^-1  ->  f [r, f^-1 x g] f^-1 x.
// require_balanced = false skips the up-front balance/abelianization
// validation and fails only if the fold gets stuck.
CommutatorProduct fold_pairs(const Presentation& p, const RelatorProduct& rp,
                             bool require_balanced = true);

// [g r, h s] = [g r g^-1, g h g^-1] [g, h] [h g r h^-1, h s h^-1]: certificate
// for the commutator of adjusted lifts, cost + 2 (trivial adjustments are
// dropped).
CommutatorProduct lift_adjust(const Presentation& p, const CommutatorProduct& cp,
                              const RelatorProduct& r, const RelatorProduct& s);

// [g1, h1 h2] = [g1, h1] h1 [g1, h2] h1^-1, with the g-lifts reconciled
// through the supplied difference witness (target g1^-1 g2); cost at most
// cost1 + cost2 + 1.
CommutatorProduct compose_products(const Presentation& p, const CommutatorProduct& p1,
                                   const CommutatorProduct& p2,
                                   const RelatorProduct& lift_diff);

struct BoundReport {
  std::optional<long> l_S_cost;
  std::optional<long> cl_cost;
  std::optional<long> cl_R_cost;
  std::optional<long> t2_bound;
  std::optional<long> genus_bound;
  std::map<std::string, std::string> provenance;
};

// ocl(g,h) <= 5 l_S + 2 cl; genus bound one more.
BoundReport t2_bound(long l_S_cost, long cl_cost = 1);
BoundReport genus_from_clR(long cl_R_cost);

// Genus-(k+1) system (a_i, b_i) with product of commutators 1 in F and
// b_i in R witnessed for i >= 2.
struct SurfaceDatum {
  long genus = 1;
  std::vector<std::pair<Word, Word>> pairs;
  std::vector<RelatorProduct> witnesses;  // for pairs[1..]
};

// Requires a fully witnessed certificate (no axiom imports) with
// target_pair set.
SurfaceDatum surface_datum(const Presentation& p, const CommutatorProduct& cp);

struct SearchParams {
  std::size_t max_cost = 4;
  std::size_t max_word_len = 64;
  std::size_t budget = 200000;  // node expansions
  unsigned long seed = 0;
};

// Best-effort bounded search for a commutator certificate; deterministic for
// fixed inputs. Absence of a result proves nothing.
std::optional<CommutatorProduct> search_commutator_cert(const Presentation& p,
                                                        const Word& target,
                                                        const SearchParams& params);

struct AffineUnitReport {
  long gcd = 0;
  bool overcommutes = false;
};

// gcd of u^2 - 1 over the unit list; gcd 1 proves F(s,t) = 0.
AffineUnitReport affine_unit_argument(const std::vector<long>& units);

// Homomorphic transport of certificates (certificates are presentation
// monotone). gen_image extends to words; relator_image must produce a
// verifying product in the target presentation for the image of each
// referenced relator.
struct PresentationMap {
  const Presentation* from = nullptr;
  const Presentation* to = nullptr;
  std::function<Word(const Generator&)> gen_image;
  std::function<RelatorProduct(const RelatorRef&)> relator_image;
  // Optional: image of an axiom factor (e.g. the alpha-flip keeps the
  // translations family); absent means axiom factors are rejected.
  std::function<AxiomFactor(const AxiomFactor&)> axiom_image;
};

RelatorProduct transform_product(const PresentationMap& m, const RelatorProduct& rp);
CommutatorProduct transform_product(const PresentationMap& m, const CommutatorProduct& cp);

}  // namespace occ
