#include "occert/certfile.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "occert/errors.hpp"
#include "occert/field_parser.hpp"
#include "occert/word_parser.hpp"

namespace occ {

using json = nlohmann::ordered_json;

namespace {

json presentation_to_json(const Presentation& p) {
  json j;
  if (p.is_steinberg()) {
    j["kind"] = "steinberg";
    j["vars"] = p.vars()->names;
  } else {
    j["kind"] = "named";
    j["name"] = p.name();
    json rels = json::object();
    for (const auto& [name, w] : p.named_relators()) rels[name] = w.to_string();
    j["relators"] = rels;
  }
  return j;
}

Presentation presentation_from_json(const json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "steinberg") {
    std::vector<std::string> names = j.at("vars").get<std::vector<std::string>>();
    return Presentation::steinberg(make_varset(names));
  }
  if (kind == "named") {
    VarSetPtr vars = make_varset({});
    std::vector<std::pair<std::string, Word>> rels;
    std::vector<std::string> gens;
    for (const auto& [name, val] : j.at("relators").items())
      rels.emplace_back(name, parse_word(val.get<std::string>(), vars));
    return Presentation::named(j.value("name", "named"), gens, std::move(rels));
  }
  throw parse_error("unknown presentation kind '" + kind + "'");
}

json relator_ref_to_json(const RelatorRef& r) {
  json j;
  if (r.is_instance()) {
    j["schema"] = schema_name(r.instance->schema);
    j["alpha"] = r.instance->alpha;
    json params = json::array();
    for (const auto& p : r.instance->params) params.push_back(p.to_string());
    j["params"] = params;
  } else {
    j["name"] = r.name;
  }
  return j;
}

RelatorRef relator_ref_from_json(const json& j, const VarSetPtr& vars) {
  if (j.contains("schema")) {
    auto schema = schema_from_name(j.at("schema").get<std::string>());
    if (!schema) throw parse_error("unknown schema " + j.at("schema").dump());
    RelatorInstance inst;
    inst.schema = *schema;
    inst.alpha = j.at("alpha").get<int>();
    for (const auto& p : j.at("params"))
      inst.params.push_back(parse_field_elem(p.get<std::string>(), vars));
    return RelatorRef::stein(std::move(inst));
  }
  return RelatorRef::named(j.at("name").get<std::string>());
}

json relator_product_to_json(const RelatorProduct& rp) {
  json j;
  j["target"] = rp.target.to_string();
  json factors = json::array();
  for (const auto& f : rp.factors) {
    json jf;
    jf["conjugator"] = f.conjugator.to_string();
    jf["relator"] = relator_ref_to_json(f.relator);
    jf["sign"] = f.sign;
    factors.push_back(jf);
  }
  j["factors"] = factors;
  return j;
}

RelatorProduct relator_product_from_json(const json& j, const VarSetPtr& vars) {
  RelatorProduct rp;
  rp.target = parse_word(j.at("target").get<std::string>(), vars);
  for (const auto& jf : j.at("factors")) {
    RelatorFactor f;
    f.conjugator = parse_word(jf.at("conjugator").get<std::string>(), vars);
    f.relator = relator_ref_from_json(jf.at("relator"), vars);
    f.sign = jf.at("sign").get<int>();
    rp.factors.push_back(std::move(f));
  }
  return rp;
}

json commutator_product_to_json(const CommutatorProduct& cp) {
  json j;
  j["target"] = cp.target.to_string();
  if (cp.target_pair) {
    j["target_pair"] = {{"g", cp.target_pair->first.to_string()},
                        {"h", cp.target_pair->second.to_string()}};
  }
  json factors = json::array();
  for (const auto& f : cp.factors) {
    json jf;
    if (f.is_axiom()) {
      jf["axiom"] = f.axiom->kind;
      jf["alpha"] = f.axiom->alpha;
      jf["s"] = f.axiom->s.to_string();
      jf["t"] = f.axiom->t.to_string();
      jf["conjugator"] = f.axiom->conjugator.to_string();
    } else {
      jf["f"] = f.f.to_string();
      jf["sign"] = f.sign;
      jf["witness"] = relator_product_to_json(f.r_witness);
    }
    factors.push_back(jf);
  }
  j["factors"] = factors;
  return j;
}

CommutatorProduct commutator_product_from_json(const json& j, const VarSetPtr& vars) {
  CommutatorProduct cp;
  cp.target = parse_word(j.at("target").get<std::string>(), vars);
  if (j.contains("target_pair")) {
    cp.target_pair = {{parse_word(j.at("target_pair").at("g").get<std::string>(), vars),
                       parse_word(j.at("target_pair").at("h").get<std::string>(), vars)}};
  }
  for (const auto& jf : j.at("factors")) {
    if (jf.contains("axiom")) {
      AxiomFactor ax;
      ax.kind = jf.at("axiom").get<std::string>();
      ax.alpha = jf.at("alpha").get<int>();
      ax.s = parse_field_elem(jf.at("s").get<std::string>(), vars);
      ax.t = parse_field_elem(jf.at("t").get<std::string>(), vars);
      ax.conjugator = parse_word(jf.at("conjugator").get<std::string>(), vars);
      cp.factors.push_back(CommutatorFactor::from_axiom(std::move(ax)));
    } else {
      CommutatorFactor f;
      f.f = parse_word(jf.at("f").get<std::string>(), vars);
      f.sign = jf.at("sign").get<int>();
      f.r_witness = relator_product_from_json(jf.at("witness"), vars);
      cp.factors.push_back(std::move(f));
    }
  }
  return cp;
}

}  // namespace

std::string write_certificate(const Presentation& p, const RelatorProduct& rp) {
  json j;
  j["format"] = "occert-v1";
  j["kind"] = "relator_product";
  j["presentation"] = presentation_to_json(p);
  j["certificate"] = relator_product_to_json(rp);
  return j.dump(2) + "\n";
}

std::string write_certificate(const Presentation& p, const CommutatorProduct& cp) {
  json j;
  j["format"] = "occert-v1";
  j["kind"] = "commutator_product";
  j["presentation"] = presentation_to_json(p);
  j["certificate"] = commutator_product_to_json(cp);
  return j.dump(2) + "\n";
}

CertificateFile read_certificate(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const std::exception& e) {
    throw parse_error(std::string("bad certificate JSON: ") + e.what());
  }
  try {
    if (j.at("format").get<std::string>() != "occert-v1")
      throw parse_error("unsupported certificate format");
    CertificateFile out;
    out.kind = j.at("kind").get<std::string>();
    out.presentation = presentation_from_json(j.at("presentation"));
    const VarSetPtr& vars = out.presentation.vars();
    if (out.kind == "relator_product")
      out.relator_product = relator_product_from_json(j.at("certificate"), vars);
    else if (out.kind == "commutator_product")
      out.commutator_product = commutator_product_from_json(j.at("certificate"), vars);
    else
      throw parse_error("unknown certificate kind '" + out.kind + "'");
    return out;
  } catch (const json::exception& e) {
    throw parse_error(std::string("bad certificate structure: ") + e.what());
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw error("cannot write file '" + path + "'");
  out << content;
}

}  // namespace occ
