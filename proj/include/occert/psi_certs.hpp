#pragma once

#include <functional>

#include "occert/memberships.hpp"

namespace occ {

// Supplier of commutator-certificate factors for conj(g, [x_a(s), x_a(t)]);
// the axiom-backed supplier returns one imported factor of cost 2, the
// search-backed one whatever the search achieves.
using TranslationCommProvider = std::function<std::vector<CommutatorFactor>(
    int alpha, const FieldElem& s, const FieldElem& t, const Word& conjugator)>;

TranslationCommProvider axiom_xi2_provider();
// Falls back to search_commutator_cert; throws certificate_error when the
// search comes up empty.
TranslationCommProvider search_xi2_provider(const Presentation& pres, SearchParams params);

// Certificate for psi(r) with r a relator instance; a is the integer
// parameter of psi (|a| >= 2). r1 costs 3 constructed factors plus one
// translation-commutator import; r2 costs 5 fully constructed factors;
// r4 is a conjugate of r1; r3 composes r2 with the psi image of the
// w_alpha(u) w_alpha(-u) membership.
CommutatorProduct psi_relator_cert(const SteinScripts& scripts, const RelatorInstance& inst,
                                   long a, const TranslationCommProvider& provider);

// psi image of a relator product: certificate for psi(rp.target).
CommutatorProduct psi_cert_of_product(const SteinScripts& scripts, const RelatorProduct& rp,
                                      long a, const TranslationCommProvider& provider);

// The Theorem-2 transport: given x with a verifying relator product and a
// commutator expression x = prod [f_i, g_i], produce a verifying commutator
// certificate for x of cost <= (max psi-cert cost) * l_S + 2 * cl.
CommutatorProduct psi_transport(const SteinScripts& scripts, const RelatorProduct& x_ls,
                                const std::vector<std::pair<Word, Word>>& x_cl, long a,
                                const TranslationCommProvider& provider);

}  // namespace occ
