#include "occert/psi_certs.hpp"

#include "occert/errors.hpp"

namespace occ {

TranslationCommProvider axiom_xi2_provider() {
  return [](int alpha, const FieldElem& s, const FieldElem& t, const Word& conjugator) {
    AxiomFactor ax;
    ax.kind = "translations-xi2";
    ax.alpha = alpha;
    ax.s = s;
    ax.t = t;
    ax.conjugator = conjugator;
    return std::vector<CommutatorFactor>{CommutatorFactor::from_axiom(std::move(ax))};
  };
}

TranslationCommProvider search_xi2_provider(const Presentation& pres, SearchParams params) {
  return [pres, params](int alpha, const FieldElem& s, const FieldElem& t,
                        const Word& conjugator) {
    Word target = comm(stein_letter(alpha, s), stein_letter(alpha, t));
    auto found = search_commutator_cert(pres, target, params);
    if (!found)
      throw certificate_error(
          "no translation-commutator certificate found by search; "
          "enable the translations-xi2 axiom import");
    std::vector<CommutatorFactor> out;
    for (const auto& f : found->factors) out.push_back(f.conjugated(conjugator));
    return out;
  };
}

namespace {

void check_cert(const Presentation& pres, const CommutatorProduct& cp, const char* what) {
  VerifyResult v = verify_commutator_product(pres, cp);
  if (!v.ok) throw internal_error(std::string(what) + ": certificate failed verification");
}

CommutatorProduct psi_cert_r1(const SteinScripts& sc, int alpha, const FieldElem& s,
                              const FieldElem& t, long a,
                              const TranslationCommProvider& provider) {
  FieldElem fa = sc.fe(a);
  FieldElem one = sc.fe(1);
  FieldElem a2m1 = fa * fa - one;
  FieldElem sp = s / a2m1, tp = t / a2m1;
  FieldElem sigma = s + sp;  // a^2 s / (a^2 - 1)
  Word h = h_elem(alpha, fa);
  Word xs = stein_letter(alpha, sp);
  Word xt = stein_letter(alpha, tp);
  Word P = comm(h, xs);
  Word Q = comm(h, xt);
  Word A = xs * xt;

  // [h, x(s'+t')] = [h, A rho] = [h, A] conj(A, [h, rho])
  Equiv e_add = sc.x_add(alpha, sp, tp);  // A == x(s'+t')
  RelatorProduct rho = e_add.diff;        // target A^-1 x(s'+t')
  CommutatorFactor xi1 =
      CommutatorFactor::commutator(conj(A, h), rho.conjugated(A), +1);
  // psi(r1) = [P x(s'), Q] * conj(Q P, xi1)
  CommutatorFactor xi1pp = xi1.conjugated(Q * P);

  // [P x(s'), Q] = [x(sigma) rho_A, x(t) rho_B]
  Equiv e_p = sc.eq1(alpha, s, a);                          // x(s) == P
  Equiv e_a = sc.trans(sc.symm(sc.x_add(alpha, s, sp)),     // x(sigma) == x(s) x(s')
                       sc.mul(e_p, sc.refl(xs)));           //          == P x(s')
  RelatorProduct rho_a = e_a.diff;
  Equiv e_b = sc.eq1(alpha, t, a);  // x(t) == Q
  RelatorProduct rho_b = e_b.diff;

  Word xsig = stein_letter(alpha, sigma);
  Word xtl = stein_letter(alpha, t);
  CommutatorFactor xi2 =
      CommutatorFactor::commutator(conj(xsig, xtl), rho_a.conjugated(xsig), -1);
  std::vector<CommutatorFactor> core = provider(alpha, sigma, t, Word());
  CommutatorFactor xi3 = CommutatorFactor::commutator(
      xtl * xsig * rho_a.target * xtl.inverse(), rho_b.conjugated(xtl), +1);

  CommutatorProduct out;
  RelatorInstance inst{Schema::R1, alpha, {s, t}};
  out.target = psi_apply(expand_relator(inst), fa);
  out.factors.push_back(std::move(xi2));
  for (auto& f : core) out.factors.push_back(std::move(f));
  out.factors.push_back(std::move(xi3));
  out.factors.push_back(std::move(xi1pp));
  check_cert(sc.presentation(), out, "psi_cert_r1");
  return out;
}

CommutatorProduct psi_cert_r2(const SteinScripts& sc, int alpha, const FieldElem& u,
                              const FieldElem& t, long a) {
  FieldElem fa = sc.fe(a);
  FieldElem one = sc.fe(1);
  FieldElem a2m1 = fa * fa - one;
  FieldElem tp = t / a2m1;
  FieldElem ui2 = u.inverse() * u.inverse();

  Word w = w_elem(alpha, u);
  Word psiw = psi_apply(w, fa);
  Word h2 = h_elem(-alpha, fa);
  Word Y = stein_letter(-alpha, ui2 * tp);
  Word X = stein_letter(-alpha, -(ui2 * tp));
  Word Xhat = conj(psiw, stein_letter(alpha, tp));
  Word G = conj(psiw, h_elem(alpha, fa));
  Word c = h2.inverse() * G;

  // rho_1: M == Xhat for M = [h2, xtilde]
  Equiv e_m = sc.eq1(-alpha, -(ui2 * tp), a);  // X == M
  Word M = e_m.rhs;
  Equiv e_psi = sc.psi_equiv(w, a);  // psi(w) == w
  Equiv e_c1 = sc.mul(e_psi, sc.mul(sc.refl(stein_letter(alpha, tp)), sc.inv_compat(e_psi)));
  Equiv e_c2 = sc.conj_w_same(alpha, u, tp);  // w x(t') w^-1 == X
  Equiv e_xhat = sc.trans(e_c1, e_c2);        // Xhat == X
  Equiv e_mx = sc.trans(sc.symm(e_m), sc.symm(e_xhat));  // M == Xhat
  RelatorProduct rho1 = e_mx.diff;

  // centrality data for c: c == c0 * rho_c with c0 an h-word
  SteinScripts::HWord c0;
  c0.factors = {{-alpha, fa, -1}, {-alpha, -(ui2 * fa), +1}, {-alpha, -ui2, -1}};
  Equiv e_wa = sc.conj_w_word(alpha, u, w_elem(alpha, fa));
  Equiv e_w1 = sc.inv_compat(sc.conj_w_word(alpha, u, w_elem(alpha, one)));
  Equiv e_g =
      sc.mul(e_psi, sc.mul(sc.refl(h_elem(alpha, fa)), sc.inv_compat(e_psi)));  // G == w h w^-1
  Equiv e_h0 = sc.mul(e_wa, e_w1);  // w h_a(a) w^-1 == H0 (as a product of two conjugates)
  Equiv e_g2 = sc.trans(e_g, e_h0);
  Equiv e_cc = sc.mul(sc.refl(h2.inverse()), e_g2);  // c == h2^-1 H0 = c0
  if (e_cc.rhs != c0.word()) throw internal_error("psi_cert_r2: c0 word mismatch");
  RelatorProduct rho_c = sc.symm(e_cc).diff;  // target c0^-1 c

  // [c, Xhat] = [c, M rho1] = [c, M] conj(M, [c, rho1]);
  // [c, M] = [[h2, xtilde], c]^-1 via the two-factor central identity.
  Word xtilde = stein_letter(-alpha, -(ui2 * tp) / a2m1);
  std::vector<CommutatorFactor> dc = sc.central_double_comm(h2, xtilde, c, c0, rho_c);
  std::vector<CommutatorFactor> comm_cM;
  for (auto it = dc.rbegin(); it != dc.rend(); ++it) comm_cM.push_back(it->inverted());
  CommutatorFactor xi_a =
      CommutatorFactor::commutator(conj(M, c), rho1.conjugated(M), +1);

  CommutatorProduct out;
  RelatorInstance inst{Schema::R2, alpha, {u, t}};
  out.target = psi_apply(expand_relator(inst), fa);
  // piece A: h2 ([c,M] xi_a) h2^-1
  for (const auto& f : comm_cM) out.factors.push_back(f.conjugated(h2));
  out.factors.push_back(xi_a.conjugated(h2));
  // piece B: [h2, Xhat] [h2, Y] = [Y^-1, [h2,Y]^-1] * conj([h2,Y]^-1, xi_b)
  Equiv e_negx = sc.x_neg(-alpha, ui2 * tp);                // X == Y^-1
  Equiv e_y2 = sc.trans(sc.symm(e_negx), sc.symm(e_xhat));  // Y^-1 == X == Xhat
  RelatorProduct rho2 = e_y2.diff;
  CommutatorFactor xi_b =
      CommutatorFactor::commutator(conj(Y.inverse(), h2), rho2.conjugated(Y.inverse()), +1);
  // [h2, Y] == Y^{a^2-1}:
  long k = a * a - 1;
  Equiv e1 = sc.conj_h_same(-alpha, fa, ui2 * tp);  // h2 Y h2^-1 == x(a^2 s)
  Equiv e4 = sc.mul(e1, sc.symm(e_negx));           // [h2,Y] == x(a^2 s) x(-s)
  FieldElem svar = ui2 * tp;
  Equiv e5 = sc.trans(e4, sc.x_add(-alpha, fa * fa * svar, -svar));  // == x((a^2-1) s)
  Equiv e6 = sc.trans(e5, sc.symm(sc.x_power(-alpha, svar, k)));     // == Y^{a^2-1}
  Equiv e7 = sc.symm(sc.inv_compat(e6));  // Y^{-(a^2-1)} == [h2,Y]^-1
  RelatorProduct rho3 = e7.diff;
  Word ypow = Y.pow(-k);
  CommutatorFactor xi_c =
      CommutatorFactor::commutator(conj(ypow, Y.inverse()), rho3.conjugated(ypow), +1);
  out.factors.push_back(xi_c);
  out.factors.push_back(xi_b.conjugated(comm(h2, Y).inverse()));
  check_cert(sc.presentation(), out, "psi_cert_r2");
  return out;
}

}  // namespace

CommutatorProduct psi_relator_cert(const SteinScripts& sc, const RelatorInstance& inst,
                                   long a, const TranslationCommProvider& provider) {
  if (a == 0 || a == 1 || a == -1) throw domain_error("psi requires an integer a with a^2 != 1");
  switch (inst.schema) {
    case Schema::R1:
      return psi_cert_r1(sc, inst.alpha, inst.params[0], inst.params[1], a, provider);
    case Schema::R2:
      return psi_cert_r2(sc, inst.alpha, inst.params[0], inst.params[1], a);
    case Schema::R4: {
      const FieldElem& u = inst.params[0];
      const FieldElem& v = inst.params[1];
      RelatorInstance inner{Schema::R1, -inst.alpha, {u.inverse(), v.inverse()}};
      CommutatorProduct base = psi_relator_cert(sc, inner, a, provider);
      Word conjw = psi_apply(stein_letter(inst.alpha, -(u * v)), sc.fe(a));
      CommutatorProduct out = base.conjugated(conjw);
      out.target = psi_apply(expand_relator(inst), sc.fe(a));
      check_cert(sc.presentation(), out, "psi_cert_r4");
      return out;
    }
    case Schema::R3: {
      // r3 = r2 * conj(y^-1, w(u) w(-u)): psi splits accordingly.
      const FieldElem& u = inst.params[0];
      const FieldElem& t = inst.params[1];
      FieldElem s = u.inverse() * u.inverse() * t;
      CommutatorProduct base = psi_relator_cert(sc, {Schema::R2, inst.alpha, {u, t}}, a, provider);
      RelatorProduct pair = sc.w_inverse_pair(inst.alpha, u);
      CommutatorProduct tail = psi_cert_of_product(sc, pair, a, provider);
      Word conjw = psi_apply(stein_letter(-inst.alpha, s), sc.fe(a)).inverse();
      CommutatorProduct out;
      out.target = psi_apply(expand_relator(inst), sc.fe(a));
      for (const auto& f : base.factors) out.factors.push_back(f);
      CommutatorProduct tail_conj = tail.conjugated(conjw);
      for (const auto& f : tail_conj.factors) out.factors.push_back(f);
      check_cert(sc.presentation(), out, "psi_cert_r3");
      return out;
    }
  }
  throw internal_error("unhandled schema");
}

CommutatorProduct psi_cert_of_product(const SteinScripts& sc, const RelatorProduct& rp,
                                      long a, const TranslationCommProvider& provider) {
  CommutatorProduct out;
  out.target = psi_apply(rp.target, sc.fe(a));
  for (const auto& f : rp.factors) {
    if (!f.relator.is_instance())
      throw certificate_error("psi_cert_of_product needs schema instances");
    CommutatorProduct piece = psi_relator_cert(sc, *f.relator.instance, a, provider);
    if (f.sign < 0) piece = piece.inverted();
    piece = piece.conjugated(psi_apply(f.conjugator, sc.fe(a)));
    for (const auto& pf : piece.factors) out.factors.push_back(pf);
  }
  check_cert(sc.presentation(), out, "psi_cert_of_product");
  return out;
}

CommutatorProduct psi_transport(const SteinScripts& sc, const RelatorProduct& x_ls,
                                const std::vector<std::pair<Word, Word>>& x_cl, long a,
                                const TranslationCommProvider& provider) {
  const Presentation& pres = sc.presentation();
  VerifyResult v = verify_relator_product(pres, x_ls);
  if (!v.ok) throw certificate_error("psi_transport: l_S certificate does not verify");
  Word cl_prod;
  for (const auto& [f, g] : x_cl) cl_prod = cl_prod * comm(f, g);
  if (cl_prod != x_ls.target)
    throw certificate_error("psi_transport: commutator expression does not reduce to x");

  FieldElem fa = sc.fe(a);
  // psi(x) certificate from the psi-relator certificates.
  CommutatorProduct psi_x = psi_cert_of_product(sc, x_ls, a, provider);

  // x = psi(x) * prod of 2k moved defect commutators:
  // [f,g] = xi [psi f, psi g] xi' reversed; assembled mechanically below.
  // For each factor [f_i, g_i]: [psi f, psi g] = [f r(f), g r(g)]
  //   = [f r f^-1, f g f^-1] [f, g] [g f r g^-1, g s g^-1]
  // so [f, g] = [f r f^-1, f g f^-1]^-1 [psi f, psi g] conj(g f r g^-1, ...)^-1.
  CommutatorProduct out;
  out.target = x_ls.target;
  // x = prod_i [f_i, g_i]; [f_i,g_i] = xi_i^-1 [psi f_i, psi g_i] xi'_i^-1.
  // Collect words first, then move all xi inverses to the right of psi(x).
  struct Piece {
    CommutatorFactor pre, post;
    Word psi_comm;
  };
  std::vector<Piece> pieces;
  for (const auto& [f, g] : x_cl) {
    RelatorProduct rf = sc.psi_defect(f, a);  // target f^-1 psi(f)
    RelatorProduct rg = sc.psi_defect(g, a);
    Piece pc;
    pc.pre = CommutatorFactor::commutator(conj(f, g), rf.conjugated(f), -1).inverted();
    pc.post = CommutatorFactor::commutator(g * f * rf.target * g.inverse(),
                                           rg.conjugated(g), +1)
                  .inverted();
    pc.psi_comm = comm(psi_apply(f, fa), psi_apply(g, fa));
    pieces.push_back(std::move(pc));
  }
  // Move every xi-factor to the right: X * C = C * (C^-1 X C).
  std::vector<CommutatorFactor> moved;
  Word suffix;  // product of the remaining psi-commutators to the right
  // Compute suffixes: for piece i, the factors to its right are
  // psi_comm_{i} ... psi_comm_{k}; pre_i sits before psi_comm_i, post_i after.
  // Walk from the left, maintaining the word that xi must commute past.
  // x = pre_1 psi_1 post_1 pre_2 psi_2 post_2 ... ;
  // target arrangement: (psi_1 psi_2 ... psi_k) followed by moved factors.
  std::vector<Word> right_psi(pieces.size() + 1);
  right_psi[pieces.size()] = Word();
  for (std::size_t i = pieces.size(); i-- > 0;)
    right_psi[i] = pieces[i].psi_comm * right_psi[i + 1];
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    // pre_i must cross psi_i ... psi_k; post_i must cross psi_{i+1} ... psi_k.
    moved.push_back(pieces[i].pre.conjugated(right_psi[i].inverse()));
    moved.push_back(pieces[i].post.conjugated(right_psi[i + 1].inverse()));
  }
  for (const auto& f : psi_x.factors) out.factors.push_back(f);
  for (const auto& f : moved) out.factors.push_back(f);
  VerifyResult check = verify_commutator_product(pres, out);
  if (!check.ok) throw internal_error("psi_transport: output failed verification");
  return out;
}

}  // namespace occ
