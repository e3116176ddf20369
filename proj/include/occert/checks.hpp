#pragma once

#include <random>
#include <string>

#include "occert/steinberg.hpp"

namespace occ {

// Seeded random elements of Q(sqrt2)(u): small polynomial fractions,
// sqrt2 components included. Zero draws for unit slots are rejected and
// resampled.
struct FieldSampler {
  VarSetPtr vars;
  std::mt19937_64 rng;

  explicit FieldSampler(VarSetPtr v, unsigned long seed);
  QSqrt2 coeff();
  MultiPoly poly();
  FieldElem element();
  FieldElem nonzero();
};

struct SampleOutcome {
  bool ok = true;
  std::string failure;
};

// pi(expand_relator(r)) = 1 for all four schemas at one random draw.
SampleOutcome relator_soundness_sample(unsigned long seed);
// Identities (1), (2), (3), (5) under pi, plus pi-fixedness of psi.
SampleOutcome prop53_sample(unsigned long seed);
// pi-fixedness and multiplicativity of psi on short random words.
SampleOutcome psi_sample(unsigned long seed);
// Which candidate right-hand side matches identity (4) under pi.
std::string resolve_id4(unsigned long seed);

struct SteinbergCheckResult {
  int samples = 0;
  int relator_passed = 0;
  int prop53_passed = 0;
  std::string id4_resolution;
  std::string first_failure;
  bool all_passed() const { return relator_passed == samples && prop53_passed == samples; }
};

// Per-sample seeds derive from seed + index, so the result is independent of
// the job split.
SteinbergCheckResult run_steinberg_check(int samples, unsigned long seed, int jobs = 1);

}  // namespace occ
