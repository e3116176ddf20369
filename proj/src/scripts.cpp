#include "occert/scripts.hpp"

#include "occert/errors.hpp"

namespace occ {

TorusKnotData torus_knot(long p, long q) {
  if (p < 2 || q < 2) throw domain_error("torus knot needs p, q >= 2");
  long g = p, h = q;
  while (h) {
    long r = g % h;
    g = h;
    h = r;
  }
  if (g != 1) throw domain_error("torus knot needs coprime p, q");

  // Smallest nonnegative u with q u + p v = 1.
  long u = 0;
  while ((1 - q * u) % p != 0) ++u;
  long v = (1 - q * u) / p;

  Generator a = Generator::named("a");
  Generator b = Generator::named("b");
  Word wa = Word::letter(a), wb = Word::letter(b);
  Word relator = wa.pow(p) * wb.pow(-q);

  TorusKnotData d;
  d.presentation = Presentation::named("torus-knot", {"a", "b"}, {{"r", relator}});
  d.exp_u = u;
  d.exp_v = v;
  d.meridian = wa.pow(u) * wb.pow(v);
  d.longitude = wa.pow(p);

  // [m, l] = (a^u b^v) r (a^u b^v)^-1 * a^u r^-1 a^-u.
  d.ls_cert.target = comm(d.meridian, d.longitude);
  d.ls_cert.factors.push_back(RelatorFactor{d.meridian, RelatorRef::named("r"), +1});
  d.ls_cert.factors.push_back(RelatorFactor{wa.pow(u), RelatorRef::named("r"), -1});
  VerifyResult vr = verify_relator_product(d.presentation, d.ls_cert);
  if (!vr.ok) throw internal_error("torus knot l_S certificate failed");

  d.clr_cert = fold_pairs(d.presentation, d.ls_cert);
  d.clr_cert.target_pair = {{d.meridian, d.longitude}};
  VerifyResult vc = verify_commutator_product(d.presentation, d.clr_cert);
  if (!vc.ok) throw internal_error("torus knot cl_R certificate failed");

  d.bounds = genus_from_clR(static_cast<long>(d.clr_cert.cost()));
  d.bounds.l_S_cost = static_cast<long>(d.ls_cert.cost());
  d.bounds.provenance["l_S_cost"] = "verified-certificate";
  d.bounds.provenance["cl_R_cost"] = "verified-certificate";
  return d;
}

StevedoreData stevedore_module() {
  StevedoreData d;
  d.presentation.generators = {"m_L", "m_K"};
  d.presentation.relations = LaurentMat(2, 1);
  d.presentation.relations.at(0, 0) = parse_laurent("2*t-5+2*t^-1");
  d.presentation.relations.at(1, 0) = parse_laurent("t^-1-2");
  d.boundary.m = {LaurentPoly(), LaurentPoly(BigRational(1))};
  d.boundary.l = {parse_laurent("t-2"), LaurentPoly()};
  return d;
}

}  // namespace occ
