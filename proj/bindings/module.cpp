#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "occert/certfile.hpp"
#include "occert/checks.hpp"
#include "occert/field_parser.hpp"
#include "occert/ghys_refined.hpp"
#include "occert/scripts.hpp"
#include "occert/word_parser.hpp"

namespace py = pybind11;
using namespace occ;

namespace {

VarSetPtr varset_of(const std::vector<std::string>& names) { return make_varset(names); }

FieldElem parse_fe(const std::string& text, const std::vector<std::string>& vars) {
  return parse_field_elem(text, varset_of(vars));
}

Word parse_w(const std::string& text, const std::vector<std::string>& vars) {
  return parse_word(text, varset_of(vars));
}

}  // namespace

PYBIND11_MODULE(_occert, m) {
  m.doc() = "exact overcommutation certificates for the rank-one Steinberg group";

  py::register_exception<error>(m, "OccertError");

  py::class_<FieldElem>(m, "FieldElem")
      .def("__str__", &FieldElem::to_string)
      .def("__eq__", [](const FieldElem& a, const FieldElem& b) { return a.eq(b); })
      .def("__add__", [](const FieldElem& a, const FieldElem& b) { return a + b; })
      .def("__sub__", [](const FieldElem& a, const FieldElem& b) { return a - b; })
      .def("__mul__", [](const FieldElem& a, const FieldElem& b) { return a * b; })
      .def("__truediv__", [](const FieldElem& a, const FieldElem& b) { return a / b; })
      .def("__neg__", [](const FieldElem& a) { return -a; })
      .def("inverse", &FieldElem::inverse)
      .def("is_zero", &FieldElem::is_zero);

  py::class_<Word>(m, "Word")
      .def("__str__", &Word::to_string)
      .def("__eq__", [](const Word& a, const Word& b) { return a == b; })
      .def("__mul__", [](const Word& a, const Word& b) { return a * b; })
      .def("__len__", &Word::size)
      .def("inverse", &Word::inverse)
      .def("pow", &Word::pow)
      .def("is_identity", &Word::is_identity);

  m.def("parse_field_elem", &parse_fe, py::arg("text"), py::arg("vars"));
  m.def("parse_word", &parse_w, py::arg("text"), py::arg("vars"));
  m.def("conj", &conj);
  m.def("comm", &comm);

  py::class_<SLMatrix>(m, "SLMatrix")
      .def("__str__", &SLMatrix::to_string)
      .def("is_identity", &SLMatrix::is_identity)
      .def("det", [](const SLMatrix& a) { return a.det(); })
      .def("eq", &SLMatrix::eq);

  m.def(
      "pi_eval",
      [](const Word& w, const std::vector<std::string>& vars) {
        return pi_eval(w, varset_of(vars));
      },
      py::arg("word"), py::arg("vars"));
  m.def(
      "psi_apply",
      [](const Word& w, const FieldElem& a) { return psi_apply(w, a); },
      py::arg("word"), py::arg("a"));
  m.def(
      "expand_relator",
      [](const std::string& schema, int alpha, const std::vector<std::string>& params,
         const std::vector<std::string>& vars) {
        auto s = schema_from_name(schema);
        if (!s) throw parse_error("unknown schema " + schema);
        RelatorInstance inst;
        inst.schema = *s;
        inst.alpha = alpha;
        VarSetPtr vs = varset_of(vars);
        for (const auto& p : params) inst.params.push_back(parse_field_elem(p, vs));
        return expand_relator(inst);
      },
      py::arg("schema"), py::arg("alpha"), py::arg("params"), py::arg("vars"));

  py::class_<GhysReport>(m, "GhysReport")
      .def_readonly("free_equal", &GhysReport::free_equal)
      .def_readonly("pi_equal", &GhysReport::pi_equal)
      .def_readonly("relator_count", &GhysReport::relator_count)
      .def_property_readonly("residual",
                             [](const GhysReport& r) { return r.residual.to_string(); });
  m.def("verify_ghys", &verify_ghys, py::arg("alpha") = 1);

  py::class_<LedgerEntry>(m, "LedgerEntry")
      .def_readonly("step", &LedgerEntry::step)
      .def_readonly("kind", &LedgerEntry::kind)
      .def_readonly("script_tokens", &LedgerEntry::script_tokens)
      .def_readonly("achieved_tokens", &LedgerEntry::achieved_tokens)
      .def_readonly("axiom", &LedgerEntry::axiom);
  py::class_<IdentityCheck>(m, "IdentityCheck")
      .def_readonly("name", &IdentityCheck::name)
      .def_readonly("holds", &IdentityCheck::holds)
      .def_readonly("note", &IdentityCheck::note);
  py::class_<GhysRefinedReport>(m, "GhysRefinedReport")
      .def_readonly("ledger", &GhysRefinedReport::ledger)
      .def_readonly("checks", &GhysRefinedReport::checks)
      .def_readonly("ledger_total_before_fold", &GhysRefinedReport::ledger_total_before_fold)
      .def_readonly("final_fold_tokens", &GhysRefinedReport::final_fold_tokens)
      .def_readonly("ocl_bound", &GhysRefinedReport::ocl_bound)
      .def_readonly("genus_bound", &GhysRefinedReport::genus_bound)
      .def_readonly("achieved_cost", &GhysRefinedReport::achieved_cost)
      .def_readonly("certificate_ok", &GhysRefinedReport::certificate_ok);
  m.def(
      "ghys_refined", [](int alpha, bool axiom) { return ghys_refined(alpha, axiom); },
      py::arg("alpha") = 1, py::arg("use_axiom") = true);

  py::class_<TorusKnotData>(m, "TorusKnotData")
      .def_property_readonly("meridian",
                             [](const TorusKnotData& d) { return d.meridian.to_string(); })
      .def_property_readonly("longitude",
                             [](const TorusKnotData& d) { return d.longitude.to_string(); })
      .def_property_readonly("ls_cost",
                             [](const TorusKnotData& d) { return d.ls_cert.cost(); })
      .def_property_readonly("clr_cost",
                             [](const TorusKnotData& d) { return d.clr_cert.cost(); })
      .def_property_readonly("genus_bound",
                             [](const TorusKnotData& d) { return *d.bounds.genus_bound; })
      .def("certificate_json", [](const TorusKnotData& d) {
        return write_certificate(d.presentation, d.clr_cert);
      });
  m.def("torus_knot", &torus_knot, py::arg("p"), py::arg("q"));

  m.def("verify_certificate", [](const std::string& json_text) {
    CertificateFile cf = read_certificate(json_text);
    VerifyResult v = cf.kind == "relator_product"
                         ? verify_relator_product(cf.presentation, cf.relator_product)
                         : verify_commutator_product(cf.presentation, cf.commutator_product);
    py::dict out;
    out["ok"] = v.ok;
    out["cost"] = v.cost;
    out["residual"] = v.residual.to_string();
    out["axiom_uses"] = v.axiom_uses;
    return out;
  });

  m.def(
      "steinberg_check",
      [](int samples, unsigned long seed, int jobs) {
        SteinbergCheckResult r = run_steinberg_check(samples, seed, jobs);
        py::dict out;
        out["samples"] = r.samples;
        out["relator_passed"] = r.relator_passed;
        out["prop53_passed"] = r.prop53_passed;
        out["id4_resolution"] = r.id4_resolution;
        out["all_passed"] = r.all_passed();
        return out;
      },
      py::arg("samples") = 50, py::arg("seed") = 1, py::arg("jobs") = 1);

  m.def(
      "stevedore_report",
      [](const std::string& u_text) {
        StevedoreData d = stevedore_module();
        BigRational u = rat_from_string(u_text);
        OCMTReport rep = ocmt_check(d.presentation, d.boundary, u);
        ModulePresentation closed = filled_presentation(d.presentation, d.boundary.m);
        LaurentPoly delta = alexander_polynomial(closed);
        py::dict out;
        out["m_member"] = rep.m_membership.member;
        out["l_member"] = rep.l_membership.member;
        out["is_ocmt"] = rep.is_ocmt;
        out["cyclic"] = rep.cyclic;
        out["free_rank"] = rep.invariants.free_rank;
        out["dim_at_u"] = rep.dim_at_u;
        out["dim_at_u_inverse"] = rep.dim_at_u_inv;
        out["alexander_polynomial"] = delta.to_string();
        out["delta_at_u_inverse"] = rat_to_string(delta.evaluate(1 / u));
        return out;
      },
      py::arg("u") = "2");

  m.def("affine_unit_argument", [](const std::vector<long>& units) {
    AffineUnitReport r = affine_unit_argument(units);
    py::dict out;
    out["gcd"] = r.gcd;
    out["overcommutes"] = r.overcommutes;
    return out;
  });
}
