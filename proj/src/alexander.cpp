#include "occert/alexander.hpp"

#include <cctype>
#include <sstream>

#include "occert/errors.hpp"

namespace occ {

void ModulePresentation::check() const {
  if (relations.rows() != generators.size())
    throw domain_error("relation vector length does not match generator count");
}

ModuleInvariants module_invariants(const ModulePresentation& pres) {
  pres.check();
  SNFResult snf = smith_normal_form(pres.relations);
  ModuleInvariants inv;
  std::size_t nonzero = snf.invariant_factors.size();
  inv.free_rank = pres.num_generators() - nonzero;
  for (const auto& d : snf.invariant_factors)
    if (!d.is_unit()) inv.torsion_factors.push_back(d.canonical());
  return inv;
}

std::size_t fiber_dimension(const ModulePresentation& pres, const BigRational& c) {
  pres.check();
  // dim coker(A(c)) over Q = #generators - rank(A(c)).
  return pres.num_generators() - pres.relations.rank_at(c);
}

MembershipResult submodule_membership(const std::vector<LaurentPoly>& target,
                                      const ModulePresentation& pres,
                                      const LaurentPoly& scale) {
  pres.check();
  if (target.size() != pres.num_generators())
    throw domain_error("target vector length does not match generator count");
  const std::size_t n = pres.num_generators();
  const std::size_t m = pres.relations.cols();
  // target = scale * x + relations * y: augmented matrix [scale*I | R].
  LaurentMat aug(n, n + m);
  for (std::size_t i = 0; i < n; ++i) {
    aug.at(i, i) = scale;
    for (std::size_t j = 0; j < m; ++j) aug.at(i, n + j) = pres.relations.at(i, j);
  }
  auto sol = solve_linear(aug, target);
  MembershipResult res;
  res.member = sol.has_value();
  if (sol) {
    MembershipWitness w;
    w.x.assign(sol->begin(), sol->begin() + static_cast<long>(n));
    w.y.assign(sol->begin() + static_cast<long>(n), sol->end());
    // solve_linear already verified the identity exactly.
    res.witness = std::move(w);
  }
  return res;
}

OCMTReport ocmt_check(const ModulePresentation& pres, const BoundaryVectors& boundary,
                      const BigRational& u) {
  if (u == 0) throw domain_error("ocmt_check requires a unit u");
  LaurentPoly scale = LaurentPoly::t_power(1) - LaurentPoly(u);
  OCMTReport rep;
  rep.m_membership = submodule_membership(boundary.m, pres, scale);
  rep.l_membership = submodule_membership(boundary.l, pres, scale);
  rep.is_ocmt = rep.m_membership.member && rep.l_membership.member;
  rep.invariants = module_invariants(pres);
  rep.cyclic = rep.invariants.cyclic();
  rep.dim_at_u = fiber_dimension(pres, u);
  rep.dim_at_u_inv = fiber_dimension(pres, 1 / u);
  return rep;
}

LaurentPoly alexander_polynomial(const ModulePresentation& pres) {
  pres.check();
  if (pres.relations.cols() + 1 < pres.num_generators())
    throw domain_error("alexander_polynomial needs at least #generators - 1 relations");
  return gcd_of_maximal_minors(pres.relations);
}

ModulePresentation filled_presentation(const ModulePresentation& pres,
                                       const std::vector<LaurentPoly>& meridian) {
  pres.check();
  if (meridian.size() != pres.num_generators())
    throw domain_error("meridian vector length does not match generator count");
  ModulePresentation out;
  out.generators = pres.generators;
  out.relations = LaurentMat(pres.num_generators(), pres.relations.cols() + 1);
  for (std::size_t i = 0; i < pres.num_generators(); ++i) {
    for (std::size_t j = 0; j < pres.relations.cols(); ++j)
      out.relations.at(i, j) = pres.relations.at(i, j);
    out.relations.at(i, pres.relations.cols()) = meridian[i];
  }
  return out;
}

Genus2Obstruction genus2_obstruction(const ModulePresentation& pres) {
  Genus2Obstruction g;
  g.invariants = module_invariants(pres);
  g.cyclic = g.invariants.cyclic();
  return g;
}

namespace {

std::vector<std::string> nonempty_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    bool blank = true;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (!blank) lines.push_back(line);
  }
  return lines;
}

std::vector<LaurentPoly> parse_row(const std::string& line) {
  std::vector<LaurentPoly> row;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) row.push_back(parse_laurent(cell));
  return row;
}

}  // namespace

LaurentMat parse_matrix_file(const std::string& text) {
  auto lines = nonempty_lines(text);
  if (lines.empty()) throw parse_error("empty matrix file");
  std::vector<std::vector<LaurentPoly>> rows;
  for (const auto& line : lines) rows.push_back(parse_row(line));
  for (const auto& r : rows)
    if (r.size() != rows[0].size()) throw parse_error("ragged matrix rows");
  LaurentMat m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
  return m;
}

BoundaryVectors parse_boundary_file(const std::string& text) {
  auto lines = nonempty_lines(text);
  if (lines.size() != 2) throw parse_error("boundary file needs exactly two rows (m, l)");
  BoundaryVectors b;
  b.m = parse_row(lines[0]);
  b.l = parse_row(lines[1]);
  if (b.m.size() != b.l.size()) throw parse_error("boundary vectors of different length");
  return b;
}

}  // namespace occ
