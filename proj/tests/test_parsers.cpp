#include <doctest.h>

#include "helpers.hpp"
#include "occert/certfile.hpp"
#include "occert/field_parser.hpp"
#include "occert/psi_certs.hpp"
#include "occert/report.hpp"
#include "occert/scripts.hpp"
#include "occert/word_parser.hpp"

using namespace occ;

TEST_CASE("field grammar") {
  VarSetPtr vars = make_varset({"s", "t", "u"});
  CHECK(parse_field_elem("u^-1", vars).eq(FieldElem::variable("u", vars).inverse()));
  CHECK(parse_field_elem("r2*r2", vars).eq(FieldElem::from_long(2, vars)));
  CHECK(parse_field_elem("(1-u)^2", vars).eq(parse_field_elem("1-2*u+u^2", vars)));
  CHECK(parse_field_elem("-u/(1-u)", vars)
            .eq(-(FieldElem::variable("u", vars) /
                  (FieldElem::from_long(1, vars) - FieldElem::variable("u", vars)))));
  CHECK_THROWS_AS(parse_field_elem("w", vars), parse_error);
  CHECK_THROWS_AS(parse_field_elem("u+", vars), parse_error);
  CHECK_THROWS_AS(parse_field_elem("1/0", vars), division_by_zero);
  auto scanned = scan_field_variables("s^2 + 2*t - r2*u");
  CHECK(scanned == std::set<std::string>{"s", "t", "u"});
}

TEST_CASE("word grammar") {
  VarSetPtr vars = make_varset({"s", "t"});
  FieldElem s = FieldElem::variable("s", vars);
  FieldElem t = FieldElem::variable("t", vars);
  CHECK(parse_word("x(+1,s)", vars) == stein_letter(1, s));
  CHECK(parse_word("x(-1,t)^-1", vars) == stein_letter(-1, t).inverse());
  CHECK(parse_word("[x(+1,s),x(+1,t)]", vars) ==
        comm(stein_letter(1, s), stein_letter(1, t)));
  CHECK(parse_word("conj(x(+1,s), x(-1,t))", vars) ==
        conj(stein_letter(1, s), stein_letter(-1, t)));
  CHECK(parse_word("1", vars).is_identity());
  CHECK(parse_word("a*b^-2", vars).size() == 3);
  CHECK(parse_word("x(+1,s)*x(+1,s)^-1", vars).is_identity());
  CHECK_THROWS_AS(parse_word("x(+2,s)", vars), parse_error);
  CHECK_THROWS_AS(parse_word("foo(", vars), parse_error);
}

TEST_CASE("word round trip") {
  occ::testing::Sampler smp(make_varset({"s", "t"}), 79);
  for (int i = 0; i < 40; ++i) {
    Word w = smp.word(12);
    Word back = parse_word(w.to_string(), smp.vars);
    CHECK(back == w);
    CHECK(back.to_string() == w.to_string());
  }
}

TEST_CASE("certificate files round trip") {
  TorusKnotData d = torus_knot(2, 3);
  std::string text = write_certificate(d.presentation, d.clr_cert);
  CertificateFile cf = read_certificate(text);
  CHECK(cf.kind == "commutator_product");
  VerifyResult v = verify_commutator_product(cf.presentation, cf.commutator_product);
  CHECK(v.ok);
  CHECK(v.cost == 1);
  // bit-exact round trip
  CHECK(write_certificate(cf.presentation, cf.commutator_product) == text);

  // steinberg relator product with an axiom-bearing commutator certificate
  VarSetPtr vars = make_varset({"s", "t", "u"});
  SteinScripts sc(vars);
  FieldElem s = FieldElem::variable("s", vars);
  FieldElem t = FieldElem::variable("t", vars);
  CommutatorProduct psi1 =
      psi_relator_cert(sc, {Schema::R1, 1, {s, t}}, 2, axiom_xi2_provider());
  std::string text2 = write_certificate(sc.presentation(), psi1);
  CertificateFile cf2 = read_certificate(text2);
  VerifyResult v2 = verify_commutator_product(cf2.presentation, cf2.commutator_product);
  CHECK(v2.ok);
  CHECK(v2.axiom_uses.size() == 1);
  CHECK(write_certificate(cf2.presentation, cf2.commutator_product) == text2);

  CHECK_THROWS_AS(read_certificate("{"), parse_error);
  CHECK_THROWS_AS(read_certificate("{\"format\":\"bogus\"}"), parse_error);
}

TEST_CASE("reports are deterministic") {
  auto build = [] {
    Report rep("demo");
    rep.body()["value"] = 42;
    rep.body()["list"] = {1, 2, 3};
    return rep;
  };
  Report a = build();
  Report b = build();
  CHECK(a.digest() == b.digest());
  CHECK(a.to_json() == b.to_json());
  Report c = build();
  c.body()["value"] = 43;
  CHECK(a.digest() != c.digest());
}
