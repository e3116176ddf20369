#pragma once

#include <random>

#include "occert/field.hpp"
#include "occert/words.hpp"

namespace occ::testing {

// Deterministic sampler shared by the property tests.
struct Sampler {
  VarSetPtr vars;
  std::mt19937_64 rng;

  explicit Sampler(VarSetPtr v, unsigned long seed = 7) : vars(std::move(v)), rng(seed) {}

  QSqrt2 coeff(bool with_sqrt2 = true) {
    std::uniform_int_distribution<int> d(-3, 3);
    std::uniform_int_distribution<int> irr(0, 3);
    return QSqrt2(BigRational(d(rng)),
                  with_sqrt2 && irr(rng) == 0 ? BigRational(d(rng)) : BigRational(0));
  }

  MultiPoly poly(int max_deg = 2) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    MultiPoly p(vars);
    int top = deg(rng);
    for (int k = 0; k <= top; ++k) {
      Monomial m(vars->size(), 0);
      if (!vars->names.empty()) {
        std::uniform_int_distribution<std::size_t> which(0, vars->size() - 1);
        m[which(rng)] = static_cast<unsigned>(k);
      }
      p.add_term(m, coeff());
    }
    return p;
  }

  FieldElem element() {
    MultiPoly num = poly();
    MultiPoly den = poly();
    int guard = 0;
    while (den.is_zero() && guard++ < 64) den = poly();
    if (den.is_zero()) den = MultiPoly::constant(QSqrt2(1), vars);
    return FieldElem(num, den);
  }

  FieldElem nonzero() {
    for (;;) {
      FieldElem e = element();
      if (!e.is_zero()) return e;
    }
  }

  Word word(std::size_t len) {
    Word w;
    std::uniform_int_distribution<int> alpha(0, 1);
    std::uniform_int_distribution<int> sign(0, 1);
    for (std::size_t i = 0; i < len; ++i) {
      Generator g = Generator::stein(alpha(rng) ? 1 : -1, element());
      w = w * Word::letter(g, sign(rng) ? 1 : -1);
    }
    return w;
  }
};

}  // namespace occ::testing
