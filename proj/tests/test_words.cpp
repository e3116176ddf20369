#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "occert/steinberg.hpp"

using namespace occ;
using occ::testing::Sampler;

namespace {
VarSetPtr st() { return make_varset({"s", "t"}); }
}  // namespace

TEST_CASE("basic reduction") {
  VarSetPtr vars = st();
  FieldElem s = FieldElem::variable("s", vars);
  FieldElem t = FieldElem::variable("t", vars);
  Word x1t = stein_letter(1, t);

  CHECK((x1t * x1t.inverse()).is_identity());
  CHECK((stein_letter(1, s) * x1t).size() == 2);

  // r1(t,s)^-1 r1(s,t) reduces to the 4-letter commutator: the middle pair
  // cancels because t+s and s+t are fe_eq-equal.
  Word r_ts = expand_relator({Schema::R1, 1, {t, s}});
  Word r_st = expand_relator({Schema::R1, 1, {s, t}});
  Word prod = r_ts.inverse() * r_st;
  CHECK(prod == comm(stein_letter(1, s), stein_letter(1, t)));
  CHECK(prod.size() == 4);
}

TEST_CASE("inverse and conjugation") {
  VarSetPtr vars = st();
  FieldElem s = FieldElem::variable("s", vars);
  FieldElem t = FieldElem::variable("t", vars);
  CHECK(Word().inverse().is_identity());
  Word w = stein_letter(1, s) * stein_letter(-1, t);
  CHECK(w.inverse().size() == 2);
  CHECK((w * w.inverse()).is_identity());

  CHECK(conj(Word(), w) == w);
  CHECK(conj(w, Word()).is_identity());
  CHECK(conj(stein_letter(1, s), stein_letter(1, t)).size() == 3);
  CHECK(comm(w, w).is_identity());
  CHECK(comm(stein_letter(1, s), stein_letter(1, t)).size() == 4);
}

TEST_CASE("eta commutator letter count") {
  VarSetPtr vars = make_varset({"u"});
  FieldElem u = FieldElem::variable("u", vars);
  FieldElem v = FieldElem::from_long(1, vars) - u;
  CHECK(eta_elem(1, u).size() == 6);
  // 24 letters before cancellation; the eta(v) eta(u)^-1 junction cancels
  // three w(1)-pairs, leaving 18.
  CHECK(comm(eta_elem(1, u), eta_elem(1, v)).size() == 18);
}

TEST_CASE("x_alpha(0) is an ordinary letter") {
  VarSetPtr vars = st();
  FieldElem zero = FieldElem::from_long(0, vars);
  Word w = stein_letter(1, zero);
  CHECK(w.size() == 1);
  CHECK((w * w).size() == 2);
  CHECK((w * w.inverse()).is_identity());
}

TEST_CASE("reduction is canonical under interleaving") {
  Sampler s(st(), 31);
  for (int round = 0; round < 50; ++round) {
    Word w = s.word(20);
    std::vector<Letter> letters = w.letters();
    // rebuild by random association order
    std::vector<Word> parts;
    for (const Letter& l : letters) parts.push_back(Word::letter(l.gen, l.sign));
    std::mt19937_64 rng(round);
    while (parts.size() > 1) {
      std::uniform_int_distribution<std::size_t> pick(0, parts.size() - 2);
      std::size_t i = pick(rng);
      parts[i] = parts[i] * parts[i + 1];
      parts.erase(parts.begin() + static_cast<long>(i + 1));
    }
    if (!parts.empty()) CHECK(parts[0] == w);
  }
}

TEST_CASE("length bounds and inverses on random words") {
  Sampler s(st(), 37);
  for (int i = 0; i < 60; ++i) {
    Word a = s.word(static_cast<std::size_t>(i % 200));
    Word b = s.word(20);
    CHECK((a * b).size() <= a.size() + b.size());
    CHECK(comm(a, b).size() <= 2 * a.size() + 2 * b.size());
    CHECK((a * a.inverse()).is_identity());
  }
}

TEST_CASE("map_word is a homomorphism") {
  VarSetPtr vars = st();
  Sampler s(vars, 41);
  FieldElem two = FieldElem::from_long(2, vars);
  auto image = [&](const Generator& g) {
    // x_a(t) -> x_{-a}(t) alpha flip
    return Word::letter(Generator::stein(-g.alpha(), g.param()));
  };
  for (int i = 0; i < 40; ++i) {
    Word a = s.word(15), b = s.word(15);
    CHECK(map_word(a * b, image) == map_word(a, image) * map_word(b, image));
    CHECK(map_word(a.inverse(), image) == map_word(a, image).inverse());
  }
  // identity assignment
  auto ident = [](const Generator& g) { return Word::letter(g); };
  Word w = s.word(30);
  CHECK(map_word(w, ident) == w);
  CHECK(map_word(Word(), ident).is_identity());
  (void)two;
}

TEST_CASE("psi letter image") {
  VarSetPtr vars = st();
  FieldElem t = FieldElem::variable("t", vars);
  FieldElem two = FieldElem::from_long(2, vars);
  FieldElem three = FieldElem::from_long(3, vars);
  Word img = psi_image_of_letter(1, t, two);
  CHECK(img == comm(h_elem(1, two), stein_letter(1, t / three)));
  CHECK(psi_apply(Word(), two).is_identity());
  CHECK_THROWS_AS(psi_apply(stein_letter(1, t), FieldElem::from_long(1, vars)),
                  domain_error);
}
