#include "occert/certificates.hpp"

#include <algorithm>
#include <deque>

#include "occert/errors.hpp"

namespace occ {

Presentation Presentation::steinberg(VarSetPtr vars) {
  Presentation p;
  p.kind_ = Kind::Steinberg;
  p.name_ = "steinberg";
  p.vars_ = std::move(vars);
  return p;
}

Presentation Presentation::named(std::string name, std::vector<std::string> generators,
                                 std::vector<std::pair<std::string, Word>> relators) {
  Presentation p;
  p.kind_ = Kind::Named;
  p.name_ = std::move(name);
  p.vars_ = make_varset({});
  p.generators_ = std::move(generators);
  p.named_relators_ = std::move(relators);
  return p;
}

Word Presentation::relator_word(const std::string& name) const {
  for (const auto& [n, w] : named_relators_)
    if (n == name) return w;
  throw certificate_error("relator '" + name + "' unknown to presentation " + name_);
}

bool RelatorRef::same_as(const RelatorRef& o) const {
  if (is_instance() != o.is_instance()) return false;
  if (is_instance()) return instance->same_instance(*o.instance);
  return name == o.name;
}

std::string RelatorRef::to_string() const {
  return is_instance() ? instance->to_string() : name;
}

Word expand_relator_ref(const Presentation& p, const RelatorRef& r) {
  if (r.is_instance()) {
    if (!p.is_steinberg())
      throw certificate_error("schema instance used with a named presentation");
    return expand_relator(*r.instance);
  }
  return p.relator_word(r.name);
}

Word RelatorFactor::expand(const Presentation& p) const {
  Word rel = expand_relator_ref(p, relator);
  if (sign < 0) rel = rel.inverse();
  return conj(conjugator, rel);
}

RelatorFactor RelatorFactor::conjugated(const Word& g) const {
  return RelatorFactor{g * conjugator, relator, sign};
}

Word RelatorProduct::expansion(const Presentation& p) const {
  Word acc;
  for (const auto& f : factors) acc = acc * f.expand(p);
  return acc;
}

RelatorProduct RelatorProduct::inverted() const {
  RelatorProduct out;
  out.target = target.inverse();
  for (auto it = factors.rbegin(); it != factors.rend(); ++it)
    out.factors.push_back(it->inverted());
  return out;
}

RelatorProduct RelatorProduct::conjugated(const Word& g) const {
  RelatorProduct out;
  out.target = conj(g, target);
  for (const auto& f : factors) out.factors.push_back(f.conjugated(g));
  return out;
}

RelatorProduct RelatorProduct::concat(const RelatorProduct& a, const RelatorProduct& b) {
  RelatorProduct out;
  out.target = a.target * b.target;
  out.factors = a.factors;
  out.factors.insert(out.factors.end(), b.factors.begin(), b.factors.end());
  return out;
}

RelatorProduct RelatorProduct::retargeted(Word t) const {
  RelatorProduct out = *this;
  out.target = std::move(t);
  return out;
}

VerifyResult verify_relator_product(const Presentation& p, const RelatorProduct& rp) {
  VerifyResult res;
  res.cost = rp.cost();
  Word prod = rp.expansion(p);
  res.residual = prod * rp.target.inverse();
  res.ok = res.residual.is_identity();
  return res;
}

Word AxiomFactor::expand() const {
  return conj(conjugator, comm(stein_letter(alpha, s), stein_letter(alpha, t)));
}

std::string AxiomFactor::to_string() const {
  return kind + "(alpha=" + (alpha > 0 ? std::string("+1") : std::string("-1")) +
         ", s=" + s.to_string() + ", t=" + t.to_string() + ")";
}

CommutatorFactor CommutatorFactor::commutator(Word f, RelatorProduct witness, int sign) {
  CommutatorFactor c;
  c.f = std::move(f);
  c.r_witness = std::move(witness);
  c.sign = sign;
  return c;
}

CommutatorFactor CommutatorFactor::from_axiom(AxiomFactor ax) {
  CommutatorFactor c;
  c.axiom = std::move(ax);
  return c;
}

Word CommutatorFactor::expand(const Presentation& p) const {
  (void)p;
  if (is_axiom()) return axiom->expand();
  Word c = comm(f, r_witness.target);
  return sign < 0 ? c.inverse() : c;
}

CommutatorFactor CommutatorFactor::conjugated(const Word& g) const {
  if (is_axiom()) {
    AxiomFactor ax = *axiom;
    ax.conjugator = g * ax.conjugator;
    return from_axiom(std::move(ax));
  }
  CommutatorFactor c;
  c.f = conj(g, f);
  c.r_witness = r_witness.conjugated(g);
  c.sign = sign;
  return c;
}

CommutatorFactor CommutatorFactor::inverted() const {
  if (is_axiom()) {
    // [x(s), x(t)]^-1 = [x(t), x(s)], another translation commutator.
    AxiomFactor ax = *axiom;
    std::swap(ax.s, ax.t);
    return from_axiom(std::move(ax));
  }
  CommutatorFactor c = *this;
  c.sign = -sign;
  return c;
}

std::size_t CommutatorProduct::cost() const {
  std::size_t n = 0;
  for (const auto& f : factors) n += f.cost();
  return n;
}

bool CommutatorProduct::uses_axiom() const {
  return std::any_of(factors.begin(), factors.end(),
                     [](const CommutatorFactor& f) { return f.is_axiom(); });
}

Word CommutatorProduct::expansion(const Presentation& p) const {
  Word acc;
  for (const auto& f : factors) acc = acc * f.expand(p);
  return acc;
}

CommutatorProduct CommutatorProduct::conjugated(const Word& g) const {
  CommutatorProduct out;
  out.target = conj(g, target);
  if (target_pair)
    out.target_pair = {{conj(g, target_pair->first), conj(g, target_pair->second)}};
  for (const auto& f : factors) out.factors.push_back(f.conjugated(g));
  return out;
}

CommutatorProduct CommutatorProduct::inverted() const {
  CommutatorProduct out;
  out.target = target.inverse();
  for (auto it = factors.rbegin(); it != factors.rend(); ++it)
    out.factors.push_back(it->inverted());
  return out;
}

VerifyResult verify_commutator_product(const Presentation& p, const CommutatorProduct& cp) {
  VerifyResult res;
  res.cost = cp.cost();
  for (const auto& f : cp.factors) {
    if (f.is_axiom()) {
      res.axiom_uses.push_back(f.axiom->to_string());
      continue;
    }
    VerifyResult wit = verify_relator_product(p, f.r_witness);
    if (!wit.ok) {
      res.ok = false;
      res.residual = wit.residual;
      return res;
    }
  }
  Word prod = cp.expansion(p);
  res.residual = prod * cp.target.inverse();
  res.ok = res.residual.is_identity();
  if (res.ok && cp.target_pair) {
    Word pair_comm = comm(cp.target_pair->first, cp.target_pair->second);
    if (pair_comm != cp.target) {
      res.ok = false;
      res.residual = pair_comm * cp.target.inverse();
    }
  }
  return res;
}

std::vector<std::pair<Generator, long>> abelianization(const Word& w) {
  std::vector<std::pair<Generator, long>> sums;
  for (const Letter& l : w.letters()) {
    bool found = false;
    for (auto& [g, n] : sums) {
      if (g == l.gen) {
        n += l.sign;
        found = true;
        break;
      }
    }
    if (!found) sums.emplace_back(l.gen, l.sign);
  }
  sums.erase(std::remove_if(sums.begin(), sums.end(),
                            [](const auto& gn) { return gn.second == 0; }),
             sums.end());
  return sums;
}

bool abelianization_trivial(const Word& w) { return abelianization(w).empty(); }

namespace {

struct FoldItem {
  bool is_rel = false;
  RelatorFactor rel;        // when is_rel
  CommutatorFactor comm;    // otherwise
  Word expansion;
};

}  // namespace

CommutatorProduct fold_pairs(const Presentation& p, const RelatorProduct& rp,
                             bool require_balanced) {
  if (require_balanced) {
    if (rp.factors.size() % 2 != 0)
      throw certificate_error("fold_pairs: odd factor count");
    // Per-instance signed occurrence counts must cancel.
    std::vector<std::pair<RelatorRef, long>> sums;
    for (const auto& f : rp.factors) {
      bool found = false;
      for (auto& [ref, n] : sums) {
        if (ref.same_as(f.relator)) {
          n += f.sign;
          found = true;
          break;
        }
      }
      if (!found) sums.emplace_back(f.relator, f.sign);
    }
    for (const auto& [ref, n] : sums)
      if (n != 0)
        throw certificate_error("fold_pairs: unbalanced signs for " + ref.to_string());
    if (!abelianization_trivial(rp.target))
      throw certificate_error("fold_pairs: target has nontrivial abelianization");
  }

  std::deque<FoldItem> items;
  for (const auto& f : rp.factors) {
    FoldItem it;
    it.is_rel = true;
    it.rel = f;
    it.expansion = f.expand(p);
    items.push_back(std::move(it));
  }

  auto fold_adjacent = [&](std::size_t i, std::size_t j) {
    // items[i] and items[j] are mates; everything between is folded material.
    Word x;
    for (std::size_t k = i + 1; k < j; ++k) x = x * items[k].expansion;
    const RelatorFactor& first = items[i].rel;
    const RelatorFactor& mate = items[j].rel;
    const Word& f = first.conjugator;
    const Word& g = mate.conjugator;
    // f R^e f^-1 x g R^-e g^-1 = conj(f, [R^e, f^-1 x g]) x
    //                          = [f R^e f^-1, x g f^-1]^{sign of R-slot first}
    RelatorProduct witness;
    witness.factors.push_back(first);
    witness.target = items[i].expansion;
    CommutatorFactor folded =
        CommutatorFactor::commutator(x * g * f.inverse(), std::move(witness), -1);
    FoldItem out;
    out.is_rel = false;
    out.expansion = folded.expand(p);
    out.comm = std::move(folded);
    // Replace item i by the folded commutator; drop the mate; keep the
    // intervening material after the new factor.
    items[i] = std::move(out);
    items.erase(items.begin() + static_cast<long>(j));
  };

  for (;;) {
    // First unfolded factor.
    std::size_t i = items.size();
    for (std::size_t k = 0; k < items.size(); ++k) {
      if (items[k].is_rel) {
        i = k;
        break;
      }
    }
    if (i == items.size()) break;
    // Its nearest opposite-sign mate.
    std::size_t j = items.size();
    for (std::size_t k = i + 1; k < items.size(); ++k) {
      if (items[k].is_rel && items[k].rel.sign == -items[i].rel.sign &&
          items[k].rel.relator.same_as(items[i].rel.relator)) {
        j = k;
        break;
      }
    }
    if (j == items.size())
      throw certificate_error("fold_pairs: no mate for " + items[i].rel.relator.to_string());
    bool only_folded_between = true;
    for (std::size_t k = i + 1; k < j; ++k)
      if (items[k].is_rel) only_folded_between = false;
    if (only_folded_between) {
      // Intervening-x variant: f r f^-1 x g r^-1 g^-1 -> f [r, f^-1 x g] f^-1 x.
      fold_adjacent(i, j);
    } else {
      // Move the mate left past everything in between: B1...Bk M = M' B1...Bk
      // with M' = (B1...Bk) M (B1...Bk)^-1, then fold the adjacent pair.
      Word conj_acc;
      for (std::size_t k = i + 1; k < j; ++k) conj_acc = conj_acc * items[k].expansion;
      FoldItem mate = items[j];
      mate.rel = mate.rel.conjugated(conj_acc);
      mate.expansion = conj(conj_acc, mate.expansion);
      items.erase(items.begin() + static_cast<long>(j));
      items.insert(items.begin() + static_cast<long>(i) + 1, std::move(mate));
      fold_adjacent(i, i + 1);
    }
  }

  CommutatorProduct out;
  out.target = rp.target;
  for (auto& it : items) out.factors.push_back(std::move(it.comm));
  VerifyResult check = verify_commutator_product(p, out);
  if (!check.ok) throw internal_error("fold_pairs: folded certificate failed verification");
  return out;
}

CommutatorProduct lift_adjust(const Presentation& p, const CommutatorProduct& cp,
                              const RelatorProduct& r, const RelatorProduct& s) {
  if (!cp.target_pair)
    throw certificate_error("lift_adjust needs a certificate with a commutator target pair");
  VerifyResult v0 = verify_commutator_product(p, cp);
  if (!v0.ok) throw certificate_error("lift_adjust: input certificate does not verify");
  if (!verify_relator_product(p, r).ok || !verify_relator_product(p, s).ok)
    throw certificate_error("lift_adjust: adjustment witness does not verify");

  const Word& g = cp.target_pair->first;
  const Word& h = cp.target_pair->second;
  CommutatorProduct out;
  Word g2 = g * r.target;
  Word h2 = h * s.target;
  out.target_pair = {{g2, h2}};
  out.target = comm(g2, h2);
  // [g r, h s] = [g r g^-1, g h g^-1] [g, h] [h g r h^-1, h s h^-1]
  if (!r.target.is_identity())
    out.factors.push_back(
        CommutatorFactor::commutator(conj(g, h), r.conjugated(g), -1));
  for (const auto& f : cp.factors) out.factors.push_back(f);
  if (!s.target.is_identity())
    out.factors.push_back(
        CommutatorFactor::commutator(h * g * r.target * h.inverse(), s.conjugated(h), +1));
  VerifyResult check = verify_commutator_product(p, out);
  if (!check.ok) throw internal_error("lift_adjust: output failed verification");
  return out;
}

CommutatorProduct compose_products(const Presentation& p, const CommutatorProduct& p1,
                                   const CommutatorProduct& p2,
                                   const RelatorProduct& lift_diff) {
  if (!p1.target_pair || !p2.target_pair)
    throw certificate_error("compose_products needs commutator target pairs");
  if (!verify_commutator_product(p, p1).ok || !verify_commutator_product(p, p2).ok)
    throw certificate_error("compose_products: input certificate does not verify");
  if (!verify_relator_product(p, lift_diff).ok)
    throw certificate_error("compose_products: lift difference witness does not verify");
  const Word& g1 = p1.target_pair->first;
  const Word& h1 = p1.target_pair->second;
  const Word& g2 = p2.target_pair->first;
  const Word& h2 = p2.target_pair->second;
  if (g1.inverse() * g2 != lift_diff.target)
    throw certificate_error("compose_products: witness target is not g1^-1 g2");

  // [g1, h2] = [g2 rbar, h2] = [g2 rbar g2^-1, g2 h2 g2^-1] [g2, h2],
  // rbar = g2^-1 g1 = (g1^-1 g2)^-1.
  CommutatorProduct mid;
  mid.target = comm(g1, h2);
  mid.target_pair = {{g1, h2}};
  RelatorProduct rbar = lift_diff.inverted();
  if (!rbar.target.is_identity())
    mid.factors.push_back(
        CommutatorFactor::commutator(conj(g2, h2), rbar.conjugated(g2), -1));
  for (const auto& f : p2.factors) mid.factors.push_back(f);

  CommutatorProduct out;
  out.target_pair = {{g1, h1 * h2}};
  out.target = comm(g1, h1 * h2);
  for (const auto& f : p1.factors) out.factors.push_back(f);
  CommutatorProduct mid_conj = mid.conjugated(h1);
  for (const auto& f : mid_conj.factors) out.factors.push_back(f);
  VerifyResult check = verify_commutator_product(p, out);
  if (!check.ok) throw internal_error("compose_products: output failed verification");
  return out;
}

BoundReport t2_bound(long l_S_cost, long cl_cost) {
  if (l_S_cost < 0 || cl_cost < 0) throw domain_error("t2_bound: negative input");
  BoundReport b;
  b.l_S_cost = l_S_cost;
  b.cl_cost = cl_cost;
  b.t2_bound = 5 * l_S_cost + 2 * cl_cost;
  b.genus_bound = *b.t2_bound + 1;
  b.provenance["t2_bound"] = "5*l_S + 2*cl";
  b.provenance["genus_bound"] = "ocl + 1";
  return b;
}

BoundReport genus_from_clR(long cl_R_cost) {
  if (cl_R_cost < 0) throw domain_error("genus_from_clR: negative input");
  BoundReport b;
  b.cl_R_cost = cl_R_cost;
  b.genus_bound = cl_R_cost + 1;
  b.provenance["genus_bound"] = "cl_R + 1";
  return b;
}

SurfaceDatum surface_datum(const Presentation& p, const CommutatorProduct& cp) {
  if (!cp.target_pair)
    throw certificate_error("surface_datum needs a commutator target pair");
  if (cp.uses_axiom())
    throw certificate_error(
        "surface_datum needs a fully witnessed certificate (axiom imports have no pairs)");
  VerifyResult v = verify_commutator_product(p, cp);
  if (!v.ok) throw certificate_error("surface_datum: certificate does not verify");

  SurfaceDatum d;
  d.genus = static_cast<long>(cp.factors.size()) + 1;
  d.pairs.emplace_back(cp.target_pair->first, cp.target_pair->second);
  // [g,h] = C_2 ... C_{k+1}  =>  [g,h] C_{k+1}^-1 ... C_2^-1 = 1, and
  // [f,r]^-1 = [f^-1, f r f^-1] keeps the R-member in the second slot.
  for (auto it = cp.factors.rbegin(); it != cp.factors.rend(); ++it) {
    if (it->sign > 0) {
      d.pairs.emplace_back(it->f.inverse(), conj(it->f, it->r_witness.target));
      d.witnesses.push_back(it->r_witness.conjugated(it->f));
    } else {
      d.pairs.emplace_back(it->f, it->r_witness.target);
      d.witnesses.push_back(it->r_witness);
    }
  }
  Word prod;
  for (const auto& [a, b] : d.pairs) prod = prod * comm(a, b);
  if (!prod.is_identity()) throw internal_error("surface_datum: pair product not trivial");
  for (const auto& w : d.witnesses)
    if (!verify_relator_product(p, w).ok)
      throw internal_error("surface_datum: witness failed verification");
  return d;
}

AffineUnitReport affine_unit_argument(const std::vector<long>& units) {
  if (units.empty()) throw domain_error("affine_unit_argument: empty unit list");
  AffineUnitReport rep;
  long g = 0;
  for (long u : units) {
    if (u > -2 && u < 2)
      throw domain_error("affine_unit_argument: units must satisfy |u| >= 2");
    long v = u * u - 1;
    // gcd
    long a = g < 0 ? -g : g, b = v < 0 ? -v : v;
    while (b) {
      long r = a % b;
      a = b;
      b = r;
    }
    g = a;
  }
  rep.gcd = g;
  rep.overcommutes = (g == 1);
  return rep;
}

RelatorProduct transform_product(const PresentationMap& m, const RelatorProduct& rp) {
  RelatorProduct out;
  out.target = map_word(rp.target, m.gen_image);
  for (const auto& f : rp.factors) {
    RelatorProduct image = m.relator_image(f.relator);
    if (f.sign < 0) image = image.inverted();
    image = image.conjugated(map_word(f.conjugator, m.gen_image));
    out.factors.insert(out.factors.end(), image.factors.begin(), image.factors.end());
  }
  return out;
}

CommutatorProduct transform_product(const PresentationMap& m, const CommutatorProduct& cp) {
  CommutatorProduct out;
  out.target = map_word(cp.target, m.gen_image);
  if (cp.target_pair)
    out.target_pair = {{map_word(cp.target_pair->first, m.gen_image),
                        map_word(cp.target_pair->second, m.gen_image)}};
  for (const auto& f : cp.factors) {
    if (f.is_axiom()) {
      if (!m.axiom_image)
        throw certificate_error("transform: no image rule for axiom factors");
      out.factors.push_back(CommutatorFactor::from_axiom(m.axiom_image(*f.axiom)));
      continue;
    }
    CommutatorFactor img;
    img.f = map_word(f.f, m.gen_image);
    img.r_witness = transform_product(m, f.r_witness);
    img.sign = f.sign;
    out.factors.push_back(std::move(img));
  }
  return out;
}

namespace {

// Deterministic BFS over factor sequences.
struct SearchCandidate {
  Word f;
  RelatorProduct witness;
  int sign;
  Word expansion;
};

}  // namespace

std::optional<CommutatorProduct> search_commutator_cert(const Presentation& p,
                                                        const Word& target,
                                                        const SearchParams& params) {
  if (!abelianization_trivial(target))
    throw certificate_error("search: target has nontrivial abelianization");
  CommutatorProduct empty;
  empty.target = target;
  if (target.is_identity()) return empty;

  // Candidate relators: named relators, or schema instances over the
  // parameter pool of the target.
  std::vector<RelatorProduct> relator_pool;
  if (p.is_steinberg()) {
    std::vector<FieldElem> pool;
    auto push_param = [&](const FieldElem& e) {
      for (const auto& q : pool)
        if (q.eq(e)) return;
      pool.push_back(e);
    };
    for (const Letter& l : target.letters())
      if (l.gen.is_stein()) push_param(l.gen.param());
    std::vector<FieldElem> base = pool;
    for (const auto& a : base) {
      push_param(-a);
      if (!a.is_zero()) push_param(a.inverse());
    }
    for (const auto& a : base)
      for (const auto& b : base) {
        push_param(a + b);
        push_param(a * b);
      }
    if (pool.size() > 16) pool.resize(16);
    auto add_instance = [&](RelatorInstance inst) {
      RelatorProduct rp;
      Word w = expand_relator(inst);
      rp.target = w;
      rp.factors.push_back(RelatorFactor{Word(), RelatorRef::stein(std::move(inst)), +1});
      relator_pool.push_back(std::move(rp));
    };
    for (int alpha : {1, -1}) {
      for (const auto& a : pool)
        for (const auto& b : pool) {
          add_instance(RelatorInstance{Schema::R1, alpha, {a, b}});
          if (!a.is_zero()) add_instance(RelatorInstance{Schema::R2, alpha, {a, b}});
        }
    }
  } else {
    for (const auto& [name, w] : p.named_relators()) {
      RelatorProduct rp;
      rp.target = w;
      rp.factors.push_back(RelatorFactor{Word(), RelatorRef::named(name), +1});
      relator_pool.push_back(rp);
    }
  }

  // Conjugator pool: identity, single target letters, short prefixes.
  std::vector<Word> conj_pool;
  conj_pool.push_back(Word());
  for (const Letter& l : target.letters()) {
    Word w = Word::letter(l.gen, l.sign);
    if (std::find(conj_pool.begin(), conj_pool.end(), w) == conj_pool.end())
      conj_pool.push_back(w);
    Word wi = w.inverse();
    if (std::find(conj_pool.begin(), conj_pool.end(), wi) == conj_pool.end())
      conj_pool.push_back(wi);
  }
  Word prefix;
  for (std::size_t i = 0; i < target.size() && i < 4; ++i) {
    prefix = prefix * Word::letter(target.letters()[i].gen, target.letters()[i].sign);
    if (std::find(conj_pool.begin(), conj_pool.end(), prefix) == conj_pool.end())
      conj_pool.push_back(prefix);
  }
  if (conj_pool.size() > 24) conj_pool.resize(24);

  std::vector<SearchCandidate> candidates;
  for (const auto& rp : relator_pool) {
    for (const auto& fw : conj_pool) {
      for (int sign : {1, -1}) {
        SearchCandidate c{fw, rp, sign, Word()};
        CommutatorFactor cf = CommutatorFactor::commutator(fw, rp, sign);
        c.expansion = cf.expand(p);
        if (c.expansion.is_identity()) continue;
        candidates.push_back(std::move(c));
      }
    }
  }

  struct Node {
    Word acc;
    std::vector<std::size_t> picks;
  };
  std::deque<Node> frontier;
  frontier.push_back(Node{Word(), {}});
  std::size_t expansions = 0;
  for (std::size_t depth = 0; depth < params.max_cost; ++depth) {
    std::deque<Node> next;
    while (!frontier.empty()) {
      Node node = std::move(frontier.front());
      frontier.pop_front();
      for (std::size_t ci = 0; ci < candidates.size(); ++ci) {
        if (++expansions > params.budget) return std::nullopt;
        Word acc = node.acc * candidates[ci].expansion;
        if (acc.size() > params.max_word_len) continue;
        std::vector<std::size_t> picks = node.picks;
        picks.push_back(ci);
        if (acc == target) {
          CommutatorProduct out;
          out.target = target;
          for (std::size_t k : picks)
            out.factors.push_back(CommutatorFactor::commutator(
                candidates[k].f, candidates[k].witness, candidates[k].sign));
          VerifyResult check = verify_commutator_product(p, out);
          if (!check.ok) throw internal_error("search: found certificate fails verification");
          return out;
        }
        next.push_back(Node{std::move(acc), std::move(picks)});
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

}  // namespace occ
