#include "occert/checks.hpp"

#include <future>

namespace occ {

FieldSampler::FieldSampler(VarSetPtr v, unsigned long seed) : vars(std::move(v)), rng(seed) {}

QSqrt2 FieldSampler::coeff() {
  std::uniform_int_distribution<int> d(-3, 3);
  std::uniform_int_distribution<int> has_irr(0, 3);
  BigRational rat(d(rng));
  BigRational irr = has_irr(rng) == 0 ? BigRational(d(rng)) : BigRational(0);
  return QSqrt2(rat, irr);
}

MultiPoly FieldSampler::poly() {
  std::uniform_int_distribution<int> deg(0, 1);
  MultiPoly p(vars);
  int top = deg(rng);
  for (int k = 0; k <= top; ++k) {
    Monomial m(vars->size(), 0);
    if (!vars->names.empty()) m[0] = static_cast<unsigned>(k);
    p.add_term(m, coeff());
  }
  return p;
}

FieldElem FieldSampler::element() {
  MultiPoly num = poly();
  MultiPoly den = poly();
  int guard = 0;
  while (den.is_zero() && guard++ < 32) den = poly();
  if (den.is_zero()) den = MultiPoly::constant(QSqrt2(1), vars);
  return FieldElem(num, den);
}

FieldElem FieldSampler::nonzero() {
  for (;;) {
    FieldElem e = element();
    if (!e.is_zero()) return e;
  }
}

SampleOutcome relator_soundness_sample(unsigned long seed) {
  SampleOutcome out;
  VarSetPtr vars = make_varset({"u"});
  FieldSampler sampler(vars, seed);
  int alpha = (seed % 2 == 0) ? 1 : -1;
  FieldElem s = sampler.element();
  FieldElem t = sampler.element();
  FieldElem uu = sampler.nonzero();
  FieldElem vv = sampler.nonzero();
  for (Schema sch : {Schema::R1, Schema::R2, Schema::R3, Schema::R4}) {
    RelatorInstance inst{sch, alpha, {}};
    if (sch == Schema::R1) inst.params = {s, t};
    else if (sch == Schema::R4) inst.params = {uu, vv};
    else inst.params = {uu, t};
    if (!pi_eval(expand_relator(inst), vars).is_identity()) {
      out.ok = false;
      out.failure = "relator " + schema_name(sch) + " not pi-trivial";
      return out;
    }
  }
  return out;
}

SampleOutcome prop53_sample(unsigned long seed) {
  SampleOutcome out;
  VarSetPtr vars = make_varset({"u"});
  FieldSampler sampler(vars, seed ^ 0x9e3779b97f4a7c15ull);
  int alpha = (seed % 2 == 0) ? 1 : -1;
  FieldElem t = sampler.element();
  FieldElem uu = sampler.nonzero();
  FieldElem vv = sampler.nonzero();
  auto fail = [&](const std::string& what) {
    if (out.ok) {
      out.ok = false;
      out.failure = what;
    }
  };
  auto pi = [&](const Word& w) { return pi_eval(w, vars); };

  SLMatrix wu = pi(w_elem(alpha, uu));
  if (!wu.eq(pi(w_elem(alpha, -uu)).inverse())) fail("(1) w(u) = w(-u)^-1");
  if (!wu.eq(pi(w_elem(-alpha, -uu.inverse())))) fail("(1) w(u) = w_-a(-1/u)");
  if (!pi(h_elem(alpha, uu) * stein_letter(alpha, t) * h_elem(alpha, uu).inverse())
           .eq(pi(stein_letter(alpha, uu * uu * t))))
    fail("(2) h x h^-1 = x(u^2 t)");
  if (!pi(h_elem(alpha, uu)).eq(pi(h_elem(-alpha, uu)).inverse())) fail("(3)");
  if (!pi(c_elem(alpha, uu, vv)).is_identity()) fail("(5) c(u,v)");

  return out;
}

SampleOutcome psi_sample(unsigned long seed) {
  SampleOutcome out;
  VarSetPtr vars = make_varset({"u"});
  FieldSampler sampler(vars, seed ^ 0xdeadbeefcafef00dull);
  int alpha = (seed % 2 == 0) ? 1 : -1;
  FieldElem t = sampler.element();
  FieldElem vv = sampler.nonzero();
  FieldElem two = FieldElem::from_long(2, vars);
  Word w = stein_letter(alpha, t) * stein_letter(-alpha, vv);
  if (!pi_eval(psi_apply(w, two), vars).eq(pi_eval(w, vars))) {
    out.ok = false;
    out.failure = "pi o psi = pi";
    return out;
  }
  Word w2 = stein_letter(-alpha, vv).inverse() * stein_letter(alpha, t);
  if (psi_apply(w * w2, two) != psi_apply(w, two) * psi_apply(w2, two)) {
    out.ok = false;
    out.failure = "psi homomorphism";
  }
  return out;
}

std::string resolve_id4(unsigned long seed) {
  VarSetPtr vars = make_varset({"u"});
  FieldSampler sampler(vars, seed);
  int alpha = (seed % 2 == 0) ? 1 : -1;
  FieldElem uu = sampler.nonzero();
  FieldElem vv = sampler.nonzero();
  SLMatrix lhs =
      pi_eval(w_elem(alpha, uu) * w_elem(-alpha, vv) * w_elem(alpha, uu).inverse(), vars);
  FieldElem m = uu * uu * vv;
  struct Cand {
    const char* name;
    Word w;
  };
  std::vector<Cand> cands = {
      {"w_alpha(-u^2 v)", w_elem(alpha, -m)},
      {"w_alpha(u^2 v)", w_elem(alpha, m)},
      {"w_-alpha(-u^2 v)", w_elem(-alpha, -m)},
      {"w_-alpha(u^2 v)", w_elem(-alpha, m)},
  };
  for (const auto& c : cands)
    if (lhs.eq(pi_eval(c.w, vars))) return c.name;
  return "none";
}

SteinbergCheckResult run_steinberg_check(int samples, unsigned long seed, int jobs) {
  SteinbergCheckResult res;
  res.samples = samples;
  auto one = [&](int i) {
    SampleOutcome a = relator_soundness_sample(seed + static_cast<unsigned long>(i));
    SampleOutcome b = prop53_sample(seed + static_cast<unsigned long>(i));
    if (b.ok && i % 8 == 0) b = psi_sample(seed + static_cast<unsigned long>(i));
    return std::pair<SampleOutcome, SampleOutcome>(a, b);
  };
  std::vector<std::pair<SampleOutcome, SampleOutcome>> outs(
      static_cast<std::size_t>(samples));
  if (jobs <= 1) {
    for (int i = 0; i < samples; ++i) outs[static_cast<std::size_t>(i)] = one(i);
  } else {
    std::vector<std::future<std::pair<SampleOutcome, SampleOutcome>>> futs;
    futs.reserve(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i)
      futs.push_back(std::async(std::launch::async, one, i));
    for (int i = 0; i < samples; ++i) outs[static_cast<std::size_t>(i)] = futs[i].get();
  }
  for (const auto& [a, b] : outs) {
    if (a.ok) ++res.relator_passed;
    else if (res.first_failure.empty()) res.first_failure = a.failure;
    if (b.ok) ++res.prop53_passed;
    else if (res.first_failure.empty()) res.first_failure = b.failure;
  }
  res.id4_resolution = resolve_id4(seed);
  return res;
}

}  // namespace occ
