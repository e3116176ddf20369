#pragma once

#include "occert/alexander.hpp"
#include "occert/certificates.hpp"

namespace occ {

// Torus knot T(p,q): G = <a, b | a^p b^-q>, meridian m = a^u b^v with
// q u + p v = 1 (smallest nonnegative u), longitude l = a^p.
struct TorusKnotData {
  Presentation presentation;
  long exp_u = 0, exp_v = 0;
  Word meridian, longitude;
  RelatorProduct ls_cert;        // cost 2 for [m, l]
  CommutatorProduct clr_cert;    // cost 1, folded
  BoundReport bounds;            // genus 2
};

TorusKnotData torus_knot(long p, long q);

// The Stevedore-knot module data of the overcommuting-manifold example:
// H1(M, Lambda) = <m_L, m_K | l_L>, boundary m = m_K, l = l_K.
struct StevedoreData {
  ModulePresentation presentation;
  BoundaryVectors boundary;
};

StevedoreData stevedore_module();

}  // namespace occ
