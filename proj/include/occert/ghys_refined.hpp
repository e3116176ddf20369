#pragma once

#include "occert/psi_certs.hpp"

namespace occ {

struct LedgerEntry {
  std::string step;
  std::string kind;      // decomposition | pair-r1 | pair-r3 | pair-r4 | final-fold
  int script_tokens = 0;  // the source accounting
  int achieved_tokens = 0;
  bool axiom = false;
};

struct IdentityCheck {
  std::string name;
  bool holds = false;
  std::string note;
};

struct GhysRefinedReport {
  std::vector<LedgerEntry> ledger;
  std::vector<IdentityCheck> checks;
  int ledger_total_before_fold = 0;  // 24 in the source accounting
  int final_fold_tokens = 1;
  long ocl_bound = 0;    // 25
  long genus_bound = 0;  // 26
  int achieved_cost = 0;
  bool axiom_imported = false;
  bool certificate_ok = false;
  CommutatorProduct certificate;  // verifying certificate for [eta'(u), eta'(v)]
  BoundReport bounds;
};

// The refined Ghys accounting: conjugator strips (6 tokens), six relator
// pair collapses (2+2+5+5+2+2 tokens) and the final fold (1 token) give
// ocl(h_a(u), h_a(v)) <= 25 and Heegaard genus <= 26. Every non-axiom token
// is realized by a verifying commutator factor; the translation-commutator
// pairs are imported via the xi^2 axiom when use_axiom is set, otherwise the
// provider must come from search.
GhysRefinedReport ghys_refined(int alpha, bool use_axiom = true);
GhysRefinedReport ghys_refined(int alpha, const TranslationCommProvider& provider,
                               bool provider_is_axiom);

}  // namespace occ
