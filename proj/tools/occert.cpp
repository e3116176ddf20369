#include <cstdlib>
#include <future>
#include <iostream>
#include <random>

#include <CLI11.hpp>

#include "occert/certfile.hpp"
#include "occert/checks.hpp"
#include "occert/field_parser.hpp"
#include "occert/word_parser.hpp"
#include "occert/ghys_refined.hpp"
#include "occert/report.hpp"
#include "occert/scripts.hpp"

namespace occ {
namespace {

unsigned long default_seed() {
  if (const char* env = std::getenv("OCCERT_SEED")) return std::strtoul(env, nullptr, 10);
  return 1;
}

void emit(const Report& rep, const std::string& out_path, const std::string& summary) {
  if (!summary.empty()) std::cout << summary;
  std::cout << "digest: " << rep.digest() << "\n";
  if (!out_path.empty()) write_text_file(out_path, rep.to_json());
}

int cmd_steinberg_check(int samples, unsigned long seed, int jobs,
                        const std::string& out_path) {
  if (samples < 1) throw domain_error("need at least one sample");
  SteinbergCheckResult res = run_steinberg_check(samples, seed, jobs);
  Report rep("steinberg-check");
  rep.body()["seed"] = seed;
  rep.body()["samples"] = samples;
  rep.body()["relator_passed"] = res.relator_passed;
  rep.body()["prop53_passed"] = res.prop53_passed;
  rep.body()["all_passed"] = res.all_passed();
  rep.body()["id4_resolution"] = res.id4_resolution;
  if (!res.first_failure.empty()) rep.body()["first_failure"] = res.first_failure;
  std::string summary = "steinberg-check: relators " + std::to_string(res.relator_passed) +
                        "/" + std::to_string(samples) + ", identities " +
                        std::to_string(res.prop53_passed) + "/" + std::to_string(samples) +
                        "; identity (4) matches " + res.id4_resolution + "\n";
  emit(rep, out_path, summary);
  return res.all_passed() ? 0 : 1;
}

int cmd_ghys(int alpha, bool refined, bool axiom, const std::string& out_path) {
  GhysReport g = verify_ghys(alpha);
  BoundReport coarse = t2_bound(g.relator_count, 1);

  Report rep("ghys");
  rep.body()["alpha"] = alpha;
  rep.body()["pi_equal"] = g.pi_equal;
  rep.body()["free_equal"] = g.free_equal;
  rep.body()["residual"] = g.residual.to_string();
  rep.body()["relator_count"] = g.relator_count;
  rep.body()["t2_bound"] = *coarse.t2_bound;
  rep.body()["genus_bound_coarse"] = *coarse.genus_bound;
  rep.body()["provenance"] = {{"relator_count", "paper-script"},
                              {"t2_bound", "5*l_S + 2*cl"},
                              {"pi_equal", "verified"},
                              {"free_equal", "verified"}};
  std::string summary = "ghys: pi_equal=" + std::to_string(g.pi_equal) +
                        " free_equal=" + std::to_string(g.free_equal) +
                        " relators=" + std::to_string(g.relator_count) +
                        " ocl<=" + std::to_string(*coarse.t2_bound) + "\n";

  if (refined) {
    ReportJson jr;
    bool have_cert = true;
    GhysRefinedReport rr;
    if (axiom) {
      rr = ghys_refined(alpha, true);
    } else {
      try {
        rr = ghys_refined(alpha, false);
      } catch (const certificate_error& e) {
        have_cert = false;
        rr = ghys_refined(alpha, true);  // ledger structure, axiom-flagged
        jr["search_note"] = std::string(e.what());
      }
    }
    jr["axiom_imported"] = axiom;
    jr["ledger_total_before_fold"] = rr.ledger_total_before_fold;
    jr["final_fold_tokens"] = rr.final_fold_tokens;
    jr["ocl_bound"] = rr.ocl_bound;
    jr["genus_bound"] = rr.genus_bound;
    if (have_cert && (axiom || !rr.certificate.uses_axiom())) {
      jr["certificate_ok"] = rr.certificate_ok;
      jr["achieved_cost"] = rr.achieved_cost;
    } else {
      jr["certificate_ok"] = false;
      jr["achieved_constant"] =
          "unachieved: no translation-commutator certificate without the import";
    }
    ReportJson jledger = ReportJson::array();
    for (const auto& e : rr.ledger)
      jledger.push_back({{"step", e.step},
                         {"kind", e.kind},
                         {"script_tokens", e.script_tokens},
                         {"achieved_tokens", have_cert ? e.achieved_tokens : 0},
                         {"axiom", e.axiom}});
    jr["ledger"] = jledger;
    ReportJson jchecks = ReportJson::array();
    for (const auto& c : rr.checks)
      jchecks.push_back({{"name", c.name}, {"holds", c.holds}, {"note", c.note}});
    jr["identity_checks"] = jchecks;
    jr["provenance"] = {{"ocl_bound", "paper-script"},
                        {"genus_bound", "cl_R + 1"},
                        {"pair_tokens", axiom ? "axiom-import" : "search"}};
    rep.body()["refined"] = jr;
    summary += "refined: ledger xi^" + std::to_string(rr.ledger_total_before_fold) +
               " + final fold -> ocl<=" + std::to_string(rr.ocl_bound) +
               ", genus<=" + std::to_string(rr.genus_bound) +
               (have_cert ? " (certificate cost " + std::to_string(rr.achieved_cost) + ")"
                          : " (no certificate without --axiom translations-xi2)") +
               "\n";
  }
  emit(rep, out_path, summary);
  return 0;
}

int cmd_torus_knot(long p, long q, const std::string& out_path,
                   const std::string& cert_path) {
  TorusKnotData d = torus_knot(p, q);
  Report rep("torus-knot");
  rep.body()["p"] = p;
  rep.body()["q"] = q;
  rep.body()["meridian"] = d.meridian.to_string();
  rep.body()["longitude"] = d.longitude.to_string();
  rep.body()["l_S_cost"] = d.ls_cert.cost();
  rep.body()["cl_R_cost"] = d.clr_cert.cost();
  rep.body()["genus_bound"] = *d.bounds.genus_bound;
  rep.body()["provenance"] = {{"l_S_cost", "verified-certificate"},
                              {"cl_R_cost", "verified-certificate"},
                              {"genus_bound", "cl_R + 1"}};
  if (!cert_path.empty())
    write_text_file(cert_path, write_certificate(d.presentation, d.clr_cert));
  std::string summary = "torus-knot(" + std::to_string(p) + "," + std::to_string(q) +
                        "): l_S=" + std::to_string(d.ls_cert.cost()) +
                        " cl_R=" + std::to_string(d.clr_cert.cost()) +
                        " genus<=" + std::to_string(*d.bounds.genus_bound) + "\n";
  emit(rep, out_path, summary);
  return 0;
}

ReportJson membership_json(const MembershipResult& m) {
  ReportJson j;
  j["member"] = m.member;
  if (m.witness) {
    ReportJson x = ReportJson::array(), y = ReportJson::array();
    for (const auto& e : m.witness->x) x.push_back(e.to_string());
    for (const auto& e : m.witness->y) y.push_back(e.to_string());
    j["witness"] = {{"x", x}, {"y", y}};
  }
  return j;
}

int cmd_alexander(const std::string& matrix_path, const std::string& boundary_path,
                  const std::string& u_text, const std::string& out_path) {
  ModulePresentation pres;
  BoundaryVectors boundary;
  if (matrix_path.empty()) {
    StevedoreData d = stevedore_module();
    pres = d.presentation;
    boundary = d.boundary;
  } else {
    LaurentMat m = parse_matrix_file(read_text_file(matrix_path));
    for (std::size_t i = 0; i < m.rows(); ++i)
      pres.generators.push_back("g" + std::to_string(i + 1));
    pres.relations = m;
    if (!boundary_path.empty()) {
      boundary = parse_boundary_file(read_text_file(boundary_path));
    } else {
      StevedoreData d = stevedore_module();
      boundary = d.boundary;
    }
  }
  if (boundary.m.size() != pres.num_generators())
    throw parse_error("boundary vector length does not match the matrix");
  BigRational u = rat_from_string(u_text);

  OCMTReport rep0 = ocmt_check(pres, boundary, u);
  Genus2Obstruction g2 = genus2_obstruction(pres);
  ModulePresentation closed = filled_presentation(pres, boundary.m);
  LaurentPoly delta = alexander_polynomial(closed);

  Report rep("alexander");
  rep.body()["u"] = rat_to_string(u);
  rep.body()["m_membership"] = membership_json(rep0.m_membership);
  rep.body()["l_membership"] = membership_json(rep0.l_membership);
  rep.body()["is_ocmt"] = rep0.is_ocmt;
  rep.body()["cyclic"] = rep0.cyclic;
  rep.body()["min_generators"] = rep0.invariants.min_generators();
  rep.body()["free_rank"] = rep0.invariants.free_rank;
  ReportJson tf = ReportJson::array();
  for (const auto& f : rep0.invariants.torsion_factors) tf.push_back(f.to_string());
  rep.body()["torsion_factors"] = tf;
  rep.body()["dim_at_u"] = rep0.dim_at_u;
  rep.body()["dim_at_u_inverse"] = rep0.dim_at_u_inv;
  rep.body()["genus2_obstruction_cyclic"] = g2.cyclic;
  rep.body()["alexander_polynomial"] = delta.to_string();
  if (!delta.is_zero()) {
    rep.body()["delta_at_u_inverse"] = rat_to_string(delta.evaluate(1 / u));
    rep.body()["delta_at_u"] = rat_to_string(delta.evaluate(u));
  }
  rep.body()["provenance"] = {{"memberships", "verified-witness"},
                              {"invariants", "smith-normal-form"},
                              {"alexander_polynomial", "gcd-of-maximal-minors"}};
  std::string summary =
      "alexander: m in (t-u)H1: " + std::to_string(rep0.m_membership.member) +
      ", l in (t-u)H1: " + std::to_string(rep0.l_membership.member) +
      ", cyclic: " + std::to_string(rep0.cyclic) + ", Delta = " + delta.to_string() + "\n";
  emit(rep, out_path, summary);
  return 0;
}

int cmd_verify(const std::string& path, const std::string& out_path) {
  CertificateFile cf = read_certificate(read_text_file(path));
  VerifyResult v;
  if (cf.kind == "relator_product")
    v = verify_relator_product(cf.presentation, cf.relator_product);
  else
    v = verify_commutator_product(cf.presentation, cf.commutator_product);
  Report rep("verify");
  rep.body()["file"] = path;
  rep.body()["kind"] = cf.kind;
  rep.body()["ok"] = v.ok;
  rep.body()["cost"] = v.cost;
  rep.body()["residual"] = v.residual.to_string();
  ReportJson ax = ReportJson::array();
  for (const auto& a : v.axiom_uses) ax.push_back(a);
  rep.body()["axiom_uses"] = ax;
  std::string summary = std::string("verify: ") + (v.ok ? "OK" : "FAILED") +
                        " (cost " + std::to_string(v.cost) + ")" +
                        (v.ok ? "" : ", residual " + v.residual.to_string()) + "\n";
  emit(rep, out_path, summary);
  return v.ok ? 0 : 1;
}

int cmd_psi(const std::string& word_text, const std::string& schema_text, int alpha,
            const std::string& params_text, long a, bool axiom,
            const std::string& out_path, const std::string& cert_path) {
  VarSetPtr vars;
  Report rep("psi");
  rep.body()["a"] = a;
  if (!word_text.empty()) {
    auto names = scan_word_variables(word_text);
    vars = make_varset(std::vector<std::string>(names.begin(), names.end()));
    Word w = parse_word(word_text, vars);
    Word image = psi_apply(w, FieldElem::from_long(a, vars));
    rep.body()["word"] = w.to_string();
    rep.body()["image"] = image.to_string();
    emit(rep, out_path, "psi(" + w.to_string() + ") = " + image.to_string() + "\n");
    return 0;
  }
  auto schema = schema_from_name(schema_text);
  if (!schema) throw parse_error("unknown schema '" + schema_text + "'");
  std::set<std::string> names = scan_field_variables(params_text);
  names.insert("u");
  vars = make_varset(std::vector<std::string>(names.begin(), names.end()));
  RelatorInstance inst;
  inst.schema = *schema;
  inst.alpha = alpha;
  std::string cur;
  for (char c : params_text + ",") {
    if (c == ',') {
      if (!cur.empty()) inst.params.push_back(parse_field_elem(cur, vars));
      cur.clear();
    } else {
      cur += c;
    }
  }
  SteinScripts sc(vars);
  TranslationCommProvider provider =
      axiom ? axiom_xi2_provider()
            : search_xi2_provider(sc.presentation(), SearchParams{});
  CommutatorProduct cert = psi_relator_cert(sc, inst, a, provider);
  VerifyResult v = verify_commutator_product(sc.presentation(), cert);
  rep.body()["relator"] = inst.to_string();
  rep.body()["cost"] = v.cost;
  rep.body()["stated_constant"] = 5;
  rep.body()["ok"] = v.ok;
  rep.body()["axiom_imported"] = axiom;
  ReportJson ax = ReportJson::array();
  for (const auto& s : v.axiom_uses) ax.push_back(s);
  rep.body()["axiom_uses"] = ax;
  if (!cert_path.empty())
    write_text_file(cert_path, write_certificate(sc.presentation(), cert));
  emit(rep, out_path,
       "psi(" + inst.to_string() + "): certificate cost " + std::to_string(v.cost) +
           " (stated constant 5), verified=" + std::to_string(v.ok) + "\n");
  return v.ok ? 0 : 1;
}

int cmd_search(const std::string& target_text, std::size_t max_cost, std::size_t max_len,
               std::size_t budget, unsigned long seed, const std::string& out_path,
               const std::string& cert_path) {
  auto names = scan_word_variables(target_text);
  VarSetPtr vars = make_varset(std::vector<std::string>(names.begin(), names.end()));
  Word target = parse_word(target_text, vars);
  Presentation pres = Presentation::steinberg(vars);
  SearchParams params{max_cost, max_len, budget, seed};
  auto found = search_commutator_cert(pres, target, params);
  Report rep("search");
  rep.body()["target"] = target.to_string();
  rep.body()["max_cost"] = max_cost;
  rep.body()["budget"] = budget;
  rep.body()["seed"] = seed;
  rep.body()["found"] = found.has_value();
  if (found) {
    rep.body()["cost"] = found->cost();
    if (!cert_path.empty())
      write_text_file(cert_path, write_certificate(pres, *found));
  }
  emit(rep, out_path,
       found ? "search: found certificate of cost " + std::to_string(found->cost()) + "\n"
             : "search: no certificate found (proves nothing)\n");
  return 0;
}

int run(int argc, char** argv) {
  CLI::App app{"overcommutation certificates for Steinberg groups"};
  app.require_subcommand(1);
  unsigned long seed = default_seed();

  std::string out_path, cert_path;

  auto* sverify = app.add_subcommand("verify", "verify a certificate file");
  std::string verify_path;
  sverify->add_option("path", verify_path, "certificate file")->required();
  sverify->add_option("--out", out_path, "report file");

  auto* sghys = app.add_subcommand("ghys", "the commuting-diagonals computation");
  int alpha = 1;
  bool refined = false;
  std::vector<std::string> axioms;
  sghys->add_option("--alpha", alpha, "root sign (+1/-1)");
  sghys->add_flag("--refined", refined, "run the refined accounting");
  sghys->add_option("--axiom", axioms, "import a cost axiom (translations-xi2)");
  sghys->add_option("--out", out_path, "report file");

  auto* scheck = app.add_subcommand("steinberg-check", "pi-level relator and identity suite");
  int samples = 200;
  int jobs = 1;
  scheck->add_option("--samples", samples, "number of random draws");
  scheck->add_option("--seed", seed, "random seed");
  scheck->add_option("--jobs", jobs, "parallel jobs (seed-split deterministic)");
  scheck->add_option("--out", out_path, "report file");

  auto* salex = app.add_subcommand("alexander", "Laurent module computations");
  std::string matrix_path, boundary_path, u_text = "2";
  salex->add_option("--matrix", matrix_path, "relation matrix file (default: stevedore)");
  salex->add_option("--boundary", boundary_path, "boundary vectors file");
  salex->add_option("--u", u_text, "unit u (rational)");
  salex->add_option("--out", out_path, "report file");

  auto* storus = app.add_subcommand("torus-knot", "torus knot certificates");
  long p = 2, q = 3;
  storus->add_option("-p", p, "first parameter")->required();
  storus->add_option("-q", q, "second parameter")->required();
  storus->add_option("--out", out_path, "report file");
  storus->add_option("--cert", cert_path, "write the cl_R certificate here");

  auto* spsi = app.add_subcommand("psi", "psi images and psi-relator certificates");
  std::string word_text, schema_text = "r1", params_text = "s,t";
  long a_param = 2;
  bool psi_axiom = false;
  spsi->add_option("--word", word_text, "apply psi to a word");
  spsi->add_option("--schema", schema_text, "relator schema (r1|r2|r3|r4)");
  spsi->add_option("--alpha", alpha, "root sign");
  spsi->add_option("--params", params_text, "comma-separated parameters");
  spsi->add_option("--a", a_param, "integer a with a^2 != 1");
  spsi->add_flag("--axiom", psi_axiom, "import translations-xi2");
  spsi->add_option("--out", out_path, "report file");
  spsi->add_option("--cert", cert_path, "write the certificate here");

  auto* ssearch = app.add_subcommand("search", "bounded commutator-certificate search");
  std::string target_text;
  std::size_t max_cost = 4, max_len = 64, budget = 200000;
  ssearch->add_option("--target", target_text, "target word")->required();
  ssearch->add_option("--max-cost", max_cost, "maximal certificate cost");
  ssearch->add_option("--max-len", max_len, "maximal intermediate word length");
  ssearch->add_option("--budget", budget, "node expansion budget");
  ssearch->add_option("--seed", seed, "search seed");
  ssearch->add_option("--out", out_path, "report file");
  ssearch->add_option("--cert", cert_path, "write a found certificate here");

  CLI11_PARSE(app, argc, argv);

  if (sverify->parsed()) return cmd_verify(verify_path, out_path);
  if (sghys->parsed()) {
    bool axiom = false;
    for (const auto& ax : axioms) {
      if (ax == "translations-xi2") axiom = true;
      else throw parse_error("unknown axiom '" + ax + "'");
    }
    return cmd_ghys(alpha, refined, axiom, out_path);
  }
  if (scheck->parsed()) return cmd_steinberg_check(samples, seed, jobs, out_path);
  if (salex->parsed()) return cmd_alexander(matrix_path, boundary_path, u_text, out_path);
  if (storus->parsed()) return cmd_torus_knot(p, q, out_path, cert_path);
  if (spsi->parsed())
    return cmd_psi(word_text, schema_text, alpha, params_text, a_param, psi_axiom,
                   out_path, cert_path);
  if (ssearch->parsed())
    return cmd_search(target_text, max_cost, max_len, budget, seed, out_path, cert_path);
  return 2;
}

}  // namespace
}  // namespace occ

int main(int argc, char** argv) {
  try {
    return occ::run(argc, argv);
  } catch (const occ::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
