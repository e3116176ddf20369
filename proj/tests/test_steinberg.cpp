#include <doctest.h>

#include "helpers.hpp"
#include "occert/steinberg.hpp"

using namespace occ;
using occ::testing::Sampler;

namespace {
VarSetPtr uvars() { return make_varset({"u"}); }
}  // namespace

TEST_CASE("relator expansion") {
  VarSetPtr vars = make_varset({"s", "t", "u"});
  FieldElem s = FieldElem::variable("s", vars);
  FieldElem t = FieldElem::variable("t", vars);
  FieldElem u = FieldElem::variable("u", vars);
  FieldElem zero = FieldElem::from_long(0, vars);

  CHECK(expand_relator({Schema::R1, 1, {s, t}}).size() == 3);
  // r1(s, 0): x(s+0) cancels against x(s)^-1 leaving x(0)^-1
  Word degenerate = expand_relator({Schema::R1, 1, {s, zero}});
  CHECK(degenerate.size() == 1);
  CHECK(degenerate == stein_letter(1, zero).inverse());
  CHECK(expand_relator({Schema::R3, 1, {u, t}}).size() == 8);
  CHECK_THROWS_AS(expand_relator({Schema::R2, 1, {zero, t}}), domain_error);
}

TEST_CASE("generator words") {
  VarSetPtr vars = uvars();
  FieldElem u = FieldElem::variable("u", vars);
  FieldElem one = FieldElem::from_long(1, vars);
  CHECK(w_elem(1, u) ==
        stein_letter(1, u) * stein_letter(-1, -u.inverse()) * stein_letter(1, u));
  CHECK(h_elem(1, one).is_identity());
  CHECK(eta_elem(1, u).size() == 6);
  CHECK_THROWS_AS(w_elem(1, FieldElem::from_long(0, vars)), domain_error);
}

TEST_CASE("pi on generators") {
  VarSetPtr vars = uvars();
  FieldElem u = FieldElem::variable("u", vars);
  FieldElem t = u + FieldElem::from_long(1, vars);
  FieldElem zero = FieldElem::from_long(0, vars);
  FieldElem one = FieldElem::from_long(1, vars);

  SLMatrix xt = pi_eval(stein_letter(1, t), vars);
  CHECK(xt.a.eq(one));
  CHECK(xt.b.eq(t));
  CHECK(xt.c.eq(zero));

  SLMatrix wu = pi_eval(w_elem(1, u), vars);
  CHECK(wu.a.eq(zero));
  CHECK(wu.b.eq(u));
  CHECK(wu.c.eq(-u.inverse()));
  CHECK(wu.d.eq(zero));

  SLMatrix hu = pi_eval(h_elem(1, u), vars);
  CHECK(hu.a.eq(u));
  CHECK(hu.b.eq(zero));
  CHECK(hu.d.eq(u.inverse()));

  CHECK_THROWS_AS(pi_eval(Word::letter(Generator::named("a")), vars), domain_error);
}

TEST_CASE("pi is a determinant-one homomorphism on random words") {
  Sampler s(uvars(), 43);
  FieldElem one = FieldElem::from_long(1, s.vars);
  for (int i = 0; i < 12; ++i) {
    Word a = s.word(8), b = s.word(8);
    SLMatrix ma = pi_eval(a, s.vars), mb = pi_eval(b, s.vars);
    CHECK(pi_eval(a * b, s.vars).eq(ma * mb));
    CHECK(ma.det().eq(one));
  }
}

TEST_CASE("psi fixes pi") {
  Sampler s(uvars(), 47);
  FieldElem two = FieldElem::from_long(2, s.vars);
  for (int i = 0; i < 10; ++i) {
    Word w = s.word(5);
    CHECK(pi_eval(psi_apply(w, two), s.vars).eq(pi_eval(w, s.vars)));
  }
  // the displayed fixed point: pi(psi(x_1(t))) = pi(x_1(t))
  FieldElem t = s.element();
  Word img = psi_image_of_letter(1, t, two);
  CHECK(pi_eval(img, s.vars).eq(pi_eval(stein_letter(1, t), s.vars)));
}

TEST_CASE("ghys words") {
  GhysWords g = ghys_words(1, uvars());
  CHECK(g.relators_used.size() == 12);
  CHECK(g.lhs == g.rhs);
  VarSetPtr vars = uvars();
  CHECK(pi_eval(g.lhs, vars).is_identity());
  CHECK(pi_eval(g.rhs, vars).is_identity());

  GhysReport rep = verify_ghys(1);
  CHECK(rep.pi_equal);
  CHECK(rep.free_equal);
  CHECK(rep.residual.is_identity());
  CHECK(rep.relator_count == 12);

  GhysReport rep_neg = verify_ghys(-1);
  CHECK(rep_neg.pi_equal);
  CHECK(rep_neg.free_equal);
  CHECK(rep_neg.relator_count == 12);
}
