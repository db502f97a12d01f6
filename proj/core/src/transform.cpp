#include "llg/transform.hpp"

#include <algorithm>

#include "llg/errors.hpp"

namespace llg {

ProofPtr axiom_proof(System sys, const Formula& a, bool atoms_enabled) {
  if (polarity(a) == Polarity::Negative) {
    ProofPtr q = axiom_proof(sys, dual(a), atoms_enabled);  // [a, dual(a)]
    return exchange_to(q, {dual(a), a});
  }
  switch (a.tag()) {
    case Tag::One:
      return mk_bot(mk_one(), 0);
    case Tag::Zero:
      return mk_top({Formula::top(), Formula::zero()}, 0);
    case Tag::Atom:
      if (!atoms_enabled) throw ProofError("axiom_proof: atoms are not enabled");
      return mk_identity(a);
    case Tag::Tensor: {
      Formula x = a.left(), y = a.right();
      ProofPtr ax = axiom_proof(sys, x, atoms_enabled);
      ProofPtr ay = axiom_proof(sys, y, atoms_enabled);
      Sequent concl{dual(x), dual(y), a};
      RuleTag which = sys == System::LL ? RuleTag::PlainTensor : RuleTag::NewTens;
      ProofPtr t = mk_tensor(which, concl, 2,
                             {SplitPart::Gamma, SplitPart::Delta, SplitPart::Principal},
                             ax, ay);
      return mk_par(t, 0);
    }
    case Tag::Plus: {
      Formula x = a.left(), y = a.right();
      ProofPtr l = mk_plus_l(axiom_proof(sys, x, atoms_enabled), 1, y);
      ProofPtr r = mk_plus_r(axiom_proof(sys, y, atoms_enabled), 1, x);
      return mk_with(l, r, 0);
    }
    case Tag::WhyNot: {
      Formula c = a.child();
      if (sys != System::LLTN) {
        ProofPtr ax = axiom_proof(sys, c, atoms_enabled);  // [dual(c), c]
        ProofPtr der = mk_classic_dereliction(ax, 1);      // [dual(c), ?c]
        return mk_classic_promotion(der, 0);               // [!dual(c), ?c]
      }
      // LLTN: promotion schema over context {?c}
      ProofPtr base_one = mk_dereliction(mk_bot(mk_one(), 0), 0, 0, c);  // [?c, 1]
      ProofPtr base_a = mk_dereliction(
          exchange_to(axiom_proof(sys, c, atoms_enabled), {c, dual(c)}), 0, 1, c);  // [?c, dual(c)]
      return mk_promotion_schema({dual(a), a}, 0, base_one, base_a);
    }
    default:
      throw ProofError("axiom_proof: unexpected positive tag");
  }
}

ProofPtr dup_proof(const Formula& a) {
  Formula bang = Formula::of_course(a);
  ProofPtr leaf = axiom_proof(System::LLT, bang);  // [?dual(a), !a]
  Sequent tconcl{Formula::why_not(dual(a)), Formula::tensor(bang, bang)};
  ProofPtr t = mk_tensor(RuleTag::NewTens, tconcl, 1,
                         {SplitPart::Theta, SplitPart::Principal}, leaf, leaf);
  ProofPtr p = mk_par(t, 0);  // [?dual(a) @ (!a * !a)]
  return mk_classic_promotion(p, 0);  // [duplicator(a)]
}

ProofPtr apply_dup(ProofPtr p) {
  const Sequent& s = p->conclusion;
  const std::size_t n = s.size();
  if (n < 2 || !(s[n - 1] == s[n - 2]) || !s[n - 1].is(Tag::WhyNot))
    throw ProofError("apply_dup: conclusion must end with two equal ?-formulas");
  Formula qc = s[n - 1];
  Formula c = qc.child();
  Sequent gamma(s.begin(), s.end() - 2);

  ProofPtr fused = mk_par(p, static_cast<int>(n) - 2);  // [Gamma, ?c @ ?c]
  Formula bang_dual = Formula::of_course(dual(c));
  ProofPtr ax = axiom_proof(System::LLT, bang_dual);  // [?c, !dual(c)]
  Formula tens = Formula::tensor(bang_dual, Formula::par(qc, qc));

  Sequent tconcl = gamma;
  tconcl.push_back(qc);
  tconcl.push_back(tens);
  std::vector<SplitPart> split(gamma.size(), SplitPart::Delta);
  split.push_back(SplitPart::Gamma);
  split.push_back(SplitPart::Principal);
  ProofPtr t = mk_tensor(RuleTag::NewTens, tconcl, static_cast<int>(tconcl.size()) - 1,
                         std::move(split), ax, fused);
  return mk_classic_dereliction(t, static_cast<int>(tconcl.size()) - 1);
}

// ---- contraction elimination ----------------------------------------------

namespace {

Sequent duals_of(const std::vector<Formula>& ds) {
  Sequent out;
  out.reserve(ds.size());
  for (const auto& d : ds) out.push_back(dual(d));
  return out;
}

Sequent appended(const Sequent& a, const Sequent& b) {
  Sequent out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

ElimResult elim(const ProofPtr& p) {
  const RuleInstance& r = p->rule;
  const Sequent& c = p->conclusion;
  switch (r.tag) {
    case RuleTag::Cut:
      throw ProofError("eliminate_contractions: input must be cut-free");
    case RuleTag::Dereliction:
    case RuleTag::Promotion:
      throw ProofError("eliminate_contractions: input must be an LL or LLT proof");
    case RuleTag::One:
    case RuleTag::Top:
    case RuleTag::Identity:
      return {p, {}};

    case RuleTag::Contraction: {
      ElimResult sub = elim(p->premises[0]);
      const std::size_t i = static_cast<std::size_t>(r.principal);
      Formula qc = c[i];
      Sequent prem_c = p->premises[0]->conclusion;
      Sequent rest = erased_at(erased_at(prem_c, i + 1), i);
      Sequent target = appended(rest, duals_of(sub.duplicators));
      target.push_back(qc);
      target.push_back(qc);
      ProofPtr q = apply_dup(exchange_to(sub.proof, target));
      Formula d = duplicator(dual(qc.child()));
      Sequent fin = appended(c, duals_of(sub.duplicators));
      fin.push_back(dual(d));
      q = exchange_to(q, fin);
      sub.duplicators.push_back(d);
      return {q, std::move(sub.duplicators)};
    }

    case RuleTag::Bot:
    case RuleTag::Par:
    case RuleTag::PlusL:
    case RuleTag::PlusR:
    case RuleTag::Weakening:
    case RuleTag::ClassicDereliction:
    case RuleTag::ClassicPromotion:
    case RuleTag::Exchange: {
      ElimResult sub = elim(p->premises[0]);
      Sequent fin = appended(c, duals_of(sub.duplicators));
      // The appended tail is inert context for these rules, so the same
      // rule instance applies to the extended conclusion.
      RuleInstance nr = r;
      return {std::make_shared<Proof>(
                  fin, nr,
                  std::vector<ProofPtr>{exchange_to(sub.proof, expected_premises(fin, nr)[0])}),
              std::move(sub.duplicators)};
    }

    case RuleTag::With: {
      ElimResult l = elim(p->premises[0]);
      ElimResult rr = elim(p->premises[1]);
      Sequent dl = duals_of(l.duplicators);
      Sequent dr = duals_of(rr.duplicators);
      // Pad each premise with the other's duplicator duals (weakenings).
      ProofPtr lp = l.proof;
      for (const auto& f : dr)
        lp = mk_weakening(lp, static_cast<int>(lp->conclusion.size()), f);
      ProofPtr rp = rr.proof;
      for (std::size_t j = 0; j < dl.size(); ++j)
        rp = mk_weakening(rp, static_cast<int>(rr.proof->conclusion.size() + j) -
                                  static_cast<int>(dr.size()),
                          dl[j]);
      // rp above mixes the tails; fix the order explicitly.
      Sequent rtarget = appended(appended(p->premises[1]->conclusion, dl), dr);
      rp = exchange_to(rp, rtarget);
      Sequent ltarget = appended(appended(p->premises[0]->conclusion, dl), dr);
      lp = exchange_to(lp, ltarget);
      ProofPtr out = mk_with(lp, rp, r.principal);
      std::vector<Formula> ds = l.duplicators;
      ds.insert(ds.end(), rr.duplicators.begin(), rr.duplicators.end());
      Sequent fin = appended(c, duals_of(ds));
      return {exchange_to(out, fin), std::move(ds)};
    }

    case RuleTag::PlainTensor:
    case RuleTag::NewTens: {
      ElimResult l = elim(p->premises[0]);
      ElimResult rr = elim(p->premises[1]);
      Sequent dl = duals_of(l.duplicators);
      Sequent dr = duals_of(rr.duplicators);
      Sequent fin = appended(appended(c, dl), dr);
      std::vector<SplitPart> split = r.split;
      if (r.tag == RuleTag::PlainTensor) {
        // Output lives in LLT.
        for (auto& sp : split)
          if (sp == SplitPart::Theta) throw ProofError("plain tensor with theta");
      }
      split.insert(split.end(), dl.size(), SplitPart::Gamma);
      split.insert(split.end(), dr.size(), SplitPart::Delta);
      ProofPtr out = mk_tensor(RuleTag::NewTens, fin, r.principal, std::move(split),
                               l.proof, rr.proof);
      std::vector<Formula> ds = l.duplicators;
      ds.insert(ds.end(), rr.duplicators.begin(), rr.duplicators.end());
      return {out, std::move(ds)};
    }
  }
  throw ProofError("eliminate_contractions: unsupported rule");
}

}  // namespace

ElimResult eliminate_contractions(ProofPtr p) {
  if (!cut_free(p)) throw ProofError("eliminate_contractions: input must be cut-free");
  return elim(p);
}

ProofPtr bound_proof(ProofPtr p) {
  Sequent gamma = p->conclusion;
  ElimResult er = eliminate_contractions(std::move(p));
  if (er.duplicators.empty()) return er.proof;

  ProofPtr right = par_fold_tail(er.proof, gamma.size());
  ProofPtr left;
  Formula cut_f = er.duplicators[0];
  for (std::size_t i = 0; i < er.duplicators.size(); ++i) {
    Formula body = Formula::one();
    if (!duplicator_body(er.duplicators[i], &body))
      throw ProofError("bound_proof: malformed duplicator");
    ProofPtr dp = dup_proof(body);
    if (i == 0) {
      left = dp;
    } else {
      Formula nf = Formula::tensor(cut_f, er.duplicators[i]);
      left = mk_tensor(RuleTag::NewTens, {nf}, 0, {SplitPart::Principal}, left, dp);
      cut_f = nf;
    }
  }
  Sequent p2target{dual(cut_f)};
  p2target.insert(p2target.end(), gamma.begin(), gamma.end());
  right = exchange_to(right, p2target);
  return mk_cut_simple(left, right, cut_f, {}, gamma);
}

// ---- system translations ---------------------------------------------------

ProofPtr translate_ll_to_llt(ProofPtr p) {
  std::vector<ProofPtr> prems;
  prems.reserve(p->premises.size());
  for (const auto& q : p->premises) prems.push_back(translate_ll_to_llt(q));
  RuleInstance r = p->rule;
  if (r.tag == RuleTag::PlainTensor) r.tag = RuleTag::NewTens;
  return std::make_shared<Proof>(p->conclusion, std::move(r), std::move(prems), p->family);
}

ProofPtr translate_llt_to_ll(ProofPtr p) {
  const RuleInstance& r = p->rule;
  if (r.tag == RuleTag::Dereliction || r.tag == RuleTag::Promotion)
    throw ProofError("translate_llt_to_ll: LLTN rule in input");
  std::vector<ProofPtr> prems;
  prems.reserve(p->premises.size());
  for (const auto& q : p->premises) prems.push_back(translate_llt_to_ll(q));
  if (r.tag != RuleTag::NewTens) {
    RuleInstance nr = r;
    return std::make_shared<Proof>(p->conclusion, std::move(nr), std::move(prems), p->family);
  }

  const Sequent& c = p->conclusion;
  const int n = static_cast<int>(c.size());
  Sequent gammas, deltas, thetas;
  for (int j = 0; j < n; ++j) {
    if (j == r.principal) continue;
    switch (r.split[static_cast<std::size_t>(j)]) {
      case SplitPart::Gamma: gammas.push_back(c[static_cast<std::size_t>(j)]); break;
      case SplitPart::Delta: deltas.push_back(c[static_cast<std::size_t>(j)]); break;
      case SplitPart::Theta: thetas.push_back(c[static_cast<std::size_t>(j)]); break;
      default: break;
    }
  }
  if (thetas.empty()) {
    RuleInstance nr = r;
    nr.tag = RuleTag::PlainTensor;
    return std::make_shared<Proof>(p->conclusion, std::move(nr), std::move(prems), nullptr);
  }
  const Formula& principal = c[static_cast<std::size_t>(r.principal)];
  // Plain tensor with both contexts carrying a full copy of theta, then one
  // contraction per shared formula.
  Sequent tconcl = appended(appended(gammas, thetas), appended(deltas, thetas));
  tconcl.push_back(principal);
  std::vector<SplitPart> split;
  split.insert(split.end(), gammas.size() + thetas.size(), SplitPart::Gamma);
  split.insert(split.end(), deltas.size() + thetas.size(), SplitPart::Delta);
  split.push_back(SplitPart::Principal);
  ProofPtr t = mk_tensor(RuleTag::PlainTensor, tconcl, static_cast<int>(tconcl.size()) - 1,
                         std::move(split), prems[0], prems[1]);
  // Interleave the two theta copies pairwise, contract each pair.
  Sequent order = gammas;
  for (const auto& th : thetas) {
    order.push_back(th);
    order.push_back(th);
  }
  order.insert(order.end(), deltas.begin(), deltas.end());
  order.push_back(principal);
  t = exchange_to(t, order);
  for (std::size_t j = 0; j < thetas.size(); ++j)
    t = mk_contraction(t, static_cast<int>(gammas.size() + j));
  return exchange_to(t, c);
}

// ---- LLT -> LLTN -----------------------------------------------------------

namespace {

// Cut-free LLTN proof of ctx ++ [1] for an all-? context.
ProofPtr context_unit_proof(const Sequent& ctx) {
  ProofPtr w = mk_one();
  for (std::size_t j = ctx.size(); j-- > 0;) {
    if (!ctx[j].is(Tag::WhyNot)) throw ProofError("context_unit_proof: context must be ?-prefixed");
    w = mk_dereliction(mk_bot(w, 0), 0, 0, ctx[j].child());
  }
  return w;
}

ProofPtr to_lltn(const ProofPtr& p) {
  const RuleInstance& r = p->rule;
  const Sequent& c = p->conclusion;
  switch (r.tag) {
    case RuleTag::Contraction:
      throw ProofError("llt_to_lltn: contraction in input (bound the proof first)");
    case RuleTag::ClassicDereliction: {
      ProofPtr q = to_lltn(p->premises[0]);
      return mk_dereliction(q, r.principal, 1, c[static_cast<std::size_t>(r.principal)].child());
    }
    case RuleTag::Weakening: {
      ProofPtr q = to_lltn(p->premises[0]);
      ProofPtr b = mk_bot(q, r.principal);
      return mk_dereliction(b, r.principal, 0, c[static_cast<std::size_t>(r.principal)].child());
    }
    case RuleTag::ClassicPromotion: {
      ProofPtr q = to_lltn(p->premises[0]);
      const std::size_t i = static_cast<std::size_t>(r.principal);
      Formula body = c[i].child();
      Sequent ctx = erased_at(c, i);
      Sequent atarget = ctx;
      atarget.push_back(body);
      ProofPtr base_a = exchange_to(q, atarget);
      ProofPtr base_one = context_unit_proof(ctx);
      return mk_promotion_schema(c, r.principal, base_one, base_a);
    }
    case RuleTag::PlainTensor: {
      RuleInstance nr = r;
      nr.tag = RuleTag::NewTens;
      std::vector<ProofPtr> prems{to_lltn(p->premises[0]), to_lltn(p->premises[1])};
      return std::make_shared<Proof>(c, std::move(nr), std::move(prems), nullptr);
    }
    default: {
      std::vector<ProofPtr> prems;
      prems.reserve(p->premises.size());
      for (const auto& q : p->premises) prems.push_back(to_lltn(q));
      RuleInstance nr = r;
      return std::make_shared<Proof>(c, std::move(nr), std::move(prems), p->family);
    }
  }
}

}  // namespace

ProofPtr llt_to_lltn(ProofPtr p) {
  if (!contraction_free(p))
    throw ProofError("llt_to_lltn: input contains contractions");
  return to_lltn(p);
}

// ---- cut admissibility -----------------------------------------------------

namespace {

struct Piece {
  ProofPtr main;            // proves main_ctx ++ [extra]? ++ [phi]
  Sequent main_ctx;
  std::optional<Formula> extra;
  ProofPtr aux;             // proves aux_ctx ++ [dual(extra)]
  Sequent aux_ctx;
};

Piece decompose(const ProofPtr& p, int pos, const Formula& phi) {
  const Sequent& s = p->conclusion;
  if (p->rule.tag != RuleTag::Cut) {
    Sequent ctx = erased_at(s, static_cast<std::size_t>(pos));
    Sequent target = ctx;
    target.push_back(phi);
    return {exchange_to(p, target), std::move(ctx), std::nullopt, nullptr, {}};
  }
  const RuleInstance& r = p->rule;
  Formula b = *r.cut_formula;
  bool phi_left = r.split[static_cast<std::size_t>(pos)] == SplitPart::Gamma;
  ProofPtr q1 = p->premises[0];  // gammas ++ [b]
  ProofPtr q2 = p->premises[1];  // [dual b] ++ deltas
  ProofPtr main = phi_left ? q1 : q2;
  ProofPtr aux = phi_left ? q2 : q1;
  Formula extra = phi_left ? b : dual(b);
  // Contexts of main/aux without the cut formula occurrence.
  Sequent main_all = main->conclusion;
  Sequent aux_all = aux->conclusion;
  if (phi_left) {
    main_all.pop_back();                    // drop trailing b
    aux_all.erase(aux_all.begin());         // drop leading dual(b)
  } else {
    main_all.erase(main_all.begin());       // drop leading dual(b)
    aux_all.pop_back();                     // drop trailing b
  }
  // Locate phi inside main_all: it is the rank of pos within its side.
  int rank = 0;
  for (int j = 0; j < pos; ++j)
    if (r.split[static_cast<std::size_t>(j)] == r.split[static_cast<std::size_t>(pos)]) ++rank;
  Sequent main_ctx = erased_at(main_all, static_cast<std::size_t>(rank));
  Sequent target = main_ctx;
  target.push_back(extra);
  target.push_back(phi);
  Sequent aux_target = aux_all;
  aux_target.push_back(dual(extra));
  return {exchange_to(main, target), std::move(main_ctx), extra,
          exchange_to(aux, aux_target), std::move(aux_all)};
}

}  // namespace

ProofPtr compose_cuts(ProofPtr p1, int pos1, ProofPtr p2, int pos2, bool atoms_enabled) {
  const Formula a = p1->conclusion[static_cast<std::size_t>(pos1)];
  if (!(p2->conclusion[static_cast<std::size_t>(pos2)] == dual(a)))
    throw ProofError("compose_cuts: cut formulas do not match");
  if (!is_bounded(p1) || !is_bounded(p2))
    throw ProofError("compose_cuts: inputs must be bounded");
  Sequent gamma = erased_at(p1->conclusion, static_cast<std::size_t>(pos1));
  Sequent delta = erased_at(p2->conclusion, static_cast<std::size_t>(pos2));
  Sequent fin = appended(gamma, delta);

  if (cut_free(p1) && cut_free(p2)) {
    Sequent t1 = gamma;
    t1.push_back(a);
    Sequent t2{dual(a)};
    t2.insert(t2.end(), delta.begin(), delta.end());
    return mk_cut_simple(exchange_to(p1, t1), exchange_to(p2, t2), a, gamma, delta);
  }

  Piece d1 = decompose(p1, pos1, a);
  Piece d2 = decompose(p2, pos2, dual(a));

  // Left premise: tensor the two mains on (a * dual a), then fold the
  // auxiliary formulas into the cut formula with pars.
  Sequent lconcl = d1.main_ctx;
  if (d1.extra) lconcl.push_back(*d1.extra);
  std::size_t d2start = lconcl.size();
  lconcl.insert(lconcl.end(), d2.main_ctx.begin(), d2.main_ctx.end());
  if (d2.extra) lconcl.push_back(*d2.extra);
  Formula core = Formula::tensor(a, dual(a));
  lconcl.push_back(core);
  std::vector<SplitPart> split;
  split.insert(split.end(), d2start, SplitPart::Gamma);
  split.insert(split.end(), lconcl.size() - d2start - 1, SplitPart::Delta);
  split.push_back(SplitPart::Principal);
  ProofPtr left = mk_tensor(RuleTag::NewTens, lconcl, static_cast<int>(lconcl.size()) - 1,
                            std::move(split), d1.main, d2.main);

  Formula g = core;
  Sequent plain_ctx = appended(d1.main_ctx, d2.main_ctx);
  if (d1.extra) {
    Sequent order = plain_ctx;
    if (d2.extra) order.push_back(*d2.extra);
    order.push_back(g);
    order.push_back(*d1.extra);
    left = mk_par(exchange_to(left, order), static_cast<int>(order.size()) - 2);
    g = Formula::par(g, *d1.extra);
  }
  if (d2.extra) {
    Sequent order = plain_ctx;
    order.push_back(g);
    order.push_back(*d2.extra);
    left = mk_par(exchange_to(left, order), static_cast<int>(order.size()) - 2);
    g = Formula::par(g, *d2.extra);
  }
  Sequent ltarget = plain_ctx;
  ltarget.push_back(g);
  left = exchange_to(left, ltarget);

  // Right premise: dual(g) = ((dual a @ a) * dual E1) * dual E2 over the
  // auxiliary proofs and one axiom.
  ProofPtr rt = mk_par(axiom_proof(System::LLTN, a, atoms_enabled), 0);  // [dual(a) @ a]
  Formula rf = Formula::par(dual(a), a);
  Sequent rctx;
  if (d1.extra) {
    Formula nf = Formula::tensor(rf, dual(*d1.extra));
    Sequent concl = rctx;
    concl.insert(concl.end(), d1.aux_ctx.begin(), d1.aux_ctx.end());
    concl.push_back(nf);
    std::vector<SplitPart> sp(concl.size() - 1, SplitPart::Delta);
    sp.push_back(SplitPart::Principal);
    rt = mk_tensor(RuleTag::NewTens, concl, static_cast<int>(concl.size()) - 1,
                   std::move(sp), rt, d1.aux);
    rf = nf;
    rctx = appended(rctx, d1.aux_ctx);
  }
  if (d2.extra) {
    Formula nf = Formula::tensor(rf, dual(*d2.extra));
    Sequent concl = rctx;
    concl.insert(concl.end(), d2.aux_ctx.begin(), d2.aux_ctx.end());
    concl.push_back(nf);
    std::vector<SplitPart> sp;
    sp.insert(sp.end(), rctx.size(), SplitPart::Gamma);
    sp.insert(sp.end(), d2.aux_ctx.size(), SplitPart::Delta);
    sp.push_back(SplitPart::Principal);
    rt = mk_tensor(RuleTag::NewTens, concl, static_cast<int>(concl.size()) - 1,
                   std::move(sp), rt, d2.aux);
    rf = nf;
    rctx = appended(rctx, d2.aux_ctx);
  }
  if (!(rf == dual(g))) throw ProofError("compose_cuts: internal shape mismatch");
  Sequent rtarget{dual(g)};
  rtarget.insert(rtarget.end(), rctx.begin(), rctx.end());
  rt = exchange_to(rt, rtarget);

  ProofPtr cut = mk_cut_simple(left, rt, g, plain_ctx, rctx);
  return exchange_to(cut, fin);
}

// ---- anodyne modifications -------------------------------------------------

namespace {

bool anodyne_head_ok(AnodyneKind k, const Formula& f) {
  switch (k) {
    case AnodyneKind::Bot: return f.is(Tag::Bot);
    case AnodyneKind::Par: return f.is(Tag::Par);
    case AnodyneKind::WithLeft:
    case AnodyneKind::WithRight: return f.is(Tag::With);
    case AnodyneKind::Bang: return f.is(Tag::OfCourse);
  }
  return false;
}

ProofPtr anodyne_rec(AnodyneKind k, int pos, int n, const ProofPtr& p);

// The conclusion after the modification.
Sequent anodyne_conclusion(AnodyneKind k, int pos, int n, const Sequent& s) {
  const std::size_t i = static_cast<std::size_t>(pos);
  switch (k) {
    case AnodyneKind::Bot: return erased_at(s, i);
    case AnodyneKind::Par:
      return inserted_at(replaced_at(s, i, s[i].left()), i + 1, s[i].right());
    case AnodyneKind::WithLeft: return replaced_at(s, i, s[i].left());
    case AnodyneKind::WithRight: return replaced_at(s, i, s[i].right());
    case AnodyneKind::Bang:
      return replaced_at(s, i, power(s[i].child(), n, PowerMode::Tensor));
  }
  throw ProofError("anodyne: unknown kind");
}

int adjust_index(AnodyneKind k, int pos, int idx) {
  switch (k) {
    case AnodyneKind::Bot: return idx > pos ? idx - 1 : idx;
    case AnodyneKind::Par: return idx > pos ? idx + 1 : idx;
    default: return idx;
  }
}

ProofPtr anodyne_rec(AnodyneKind k, int pos, int n, const ProofPtr& p) {
  const RuleInstance& r = p->rule;
  const Sequent& c = p->conclusion;

  // Principal cases: the designated formula is introduced right here.
  if (r.principal == pos) {
    switch (r.tag) {
      case RuleTag::Bot:
        if (k == AnodyneKind::Bot) return p->premises[0];
        break;
      case RuleTag::Par:
        if (k == AnodyneKind::Par) return p->premises[0];
        break;
      case RuleTag::With:
        if (k == AnodyneKind::WithLeft) return p->premises[0];
        if (k == AnodyneKind::WithRight) return p->premises[1];
        break;
      case RuleTag::Promotion:
        if (k == AnodyneKind::Bang)
          return p->family->instantiate(n, promotion_premise(c, r, n));
        break;
      case RuleTag::ClassicPromotion:
        if (k == AnodyneKind::Bang)
          throw ProofError("anodyne bang requires an LLTN promotion node");
        break;
      default:
        break;
    }
  }

  Sequent nc = anodyne_conclusion(k, pos, n, c);
  switch (r.tag) {
    case RuleTag::Cut:
      throw ProofError("anodyne: input must be cut-free");
    case RuleTag::One:
    case RuleTag::Identity:
      throw ProofError("anodyne: no matching connective to invert");
    case RuleTag::Top: {
      return mk_top(nc, adjust_index(k, pos, r.principal));
    }
    case RuleTag::Exchange: {
      const std::size_t i = static_cast<std::size_t>(r.principal);
      int pos2 = pos;
      if (pos == static_cast<int>(i)) pos2 = static_cast<int>(i) + 1;
      else if (pos == static_cast<int>(i) + 1) pos2 = static_cast<int>(i);
      return exchange_to(anodyne_rec(k, pos2, n, p->premises[0]), nc);
    }
    case RuleTag::With: {
      ProofPtr l = anodyne_rec(k, pos, n, p->premises[0]);
      ProofPtr rr = anodyne_rec(k, pos, n, p->premises[1]);
      return mk_with(l, rr, adjust_index(k, pos, r.principal));
    }
    case RuleTag::Bot:
    case RuleTag::Weakening: {
      int pos2 = pos > r.principal ? pos - 1 : pos;
      ProofPtr q = anodyne_rec(k, pos2, n, p->premises[0]);
      int np = adjust_index(k, pos, r.principal);
      if (r.tag == RuleTag::Bot) return mk_bot(q, np);
      return mk_weakening(q, np, c[static_cast<std::size_t>(r.principal)]);
    }
    case RuleTag::Par: {
      int pos2 = pos > r.principal ? pos + 1 : pos;
      ProofPtr q = anodyne_rec(k, pos2, n, p->premises[0]);
      return mk_par(q, adjust_index(k, pos, r.principal));
    }
    case RuleTag::PlusL:
    case RuleTag::PlusR: {
      ProofPtr q = anodyne_rec(k, pos, n, p->premises[0]);
      const Formula& f = c[static_cast<std::size_t>(r.principal)];
      int np = adjust_index(k, pos, r.principal);
      if (r.tag == RuleTag::PlusL) return mk_plus_l(q, np, f.right());
      return mk_plus_r(q, np, f.left());
    }
    case RuleTag::Dereliction: {
      ProofPtr q = anodyne_rec(k, pos, n, p->premises[0]);
      return mk_dereliction(q, adjust_index(k, pos, r.principal), r.arity,
                            c[static_cast<std::size_t>(r.principal)].child());
    }
    case RuleTag::ClassicDereliction: {
      ProofPtr q = anodyne_rec(k, pos, n, p->premises[0]);
      return mk_classic_dereliction(q, adjust_index(k, pos, r.principal));
    }
    case RuleTag::Contraction: {
      int pos2 = pos > r.principal ? pos + 1 : pos;
      ProofPtr q = anodyne_rec(k, pos2, n, p->premises[0]);
      return mk_contraction(q, adjust_index(k, pos, r.principal));
    }
    case RuleTag::ClassicPromotion:
      // The context must stay all-?; none of the anodyne heads is.
      throw ProofError("anodyne: cannot rewrite inside a classic promotion context");
    case RuleTag::Promotion: {
      if (p->family->is_schema())
        throw ProofError("anodyne: schema promotion context is all-?, nothing to invert");
      std::vector<ProofPtr> members;
      members.reserve(p->family->members().size());
      for (const auto& m : p->family->members())
        members.push_back(anodyne_rec(k, pos, n, m));
      return mk_promotion_explicit(nc, adjust_index(k, pos, r.principal),
                                   std::move(members));
    }
    case RuleTag::PlainTensor:
    case RuleTag::NewTens: {
      SplitPart side = r.split[static_cast<std::size_t>(pos)];
      if (side == SplitPart::Theta)
        throw ProofError("anodyne: shared tensor context is all-?, nothing to invert");
      // Position of pos inside the owning premise: rank within its block.
      int rank = 0;
      for (int j = 0; j < pos; ++j)
        if (j != r.principal && r.split[static_cast<std::size_t>(j)] == side) ++rank;
      std::vector<ProofPtr> prems = p->premises;
      if (side == SplitPart::Gamma)
        prems[0] = anodyne_rec(k, rank, n, prems[0]);
      else
        prems[1] = anodyne_rec(k, rank, n, prems[1]);
      std::vector<SplitPart> split = r.split;
      switch (k) {
        case AnodyneKind::Bot:
          split.erase(split.begin() + pos);
          break;
        case AnodyneKind::Par:
          split.insert(split.begin() + pos, side);
          break;
        default:
          break;
      }
      return mk_tensor(r.tag, nc, adjust_index(k, pos, r.principal), std::move(split),
                       prems[0], prems[1]);
    }
    default:
      throw ProofError("anodyne: unsupported rule " + to_string(r.tag));
  }
}

}  // namespace

ProofPtr anodyne(AnodyneKind kind, int pos, int bang_n, ProofPtr p) {
  if (pos < 0 || pos >= static_cast<int>(p->conclusion.size()))
    throw ProofError("anodyne: position out of range");
  if (!anodyne_head_ok(kind, p->conclusion[static_cast<std::size_t>(pos)]))
    throw ProofError("anodyne: connective missing at the designated position");
  if (kind == AnodyneKind::Bang && bang_n < 0)
    throw ProofError("anodyne: negative bang arity");
  if (!cut_free(p)) throw ProofError("anodyne: input must be cut-free");
  return anodyne_rec(kind, pos, bang_n, p);
}

// ---- paper fixtures ---------------------------------------------------------

Sequent laurent_sequent() {
  Formula x = Formula::tensor(Formula::bot(), Formula::bot());
  Formula nx = dual(x);
  Formula head = Formula::plus(Formula::bot(), Formula::par(nx, Formula::why_not(nx)));
  return {head, Formula::of_course(x)};
}

ProofPtr laurent_proof(int bound) {
  Formula x = Formula::tensor(Formula::bot(), Formula::bot());
  Formula nx = dual(x);
  Formula qnx = Formula::why_not(nx);
  Formula head = Formula::plus(Formula::bot(), Formula::par(nx, qnx));
  Formula alt = Formula::par(nx, qnx);

  // Premise for arity 0: [head, 1] by PlusL over [B, 1].
  ProofPtr prem0 = mk_plus_l(mk_bot(mk_one(), 0), 0, alt);

  // Core for arity >= 1: [nx, ?nx, tensor^n x] by shared-context splits over
  // [nx, ?nx, x] and [?nx, x].
  ProofPtr ax = axiom_proof(System::LLTN, x);  // [nx, x]
  ProofPtr core1 = mk_dereliction(mk_bot(ax, 1), 1, 0, nx);  // [nx, ?nx, x]
  ProofPtr side = mk_dereliction(ax, 0, 1, nx);              // [?nx, x]

  std::vector<ProofPtr> members{prem0};
  ProofPtr core = core1;
  for (int n = 1; n <= bound; ++n) {
    if (n >= 2) {
      Sequent concl{nx, qnx, power(x, n, PowerMode::Tensor)};
      core = mk_tensor(RuleTag::NewTens, concl, 2,
                       {SplitPart::Gamma, SplitPart::Theta, SplitPart::Principal},
                       core, side);
    }
    ProofPtr prem = mk_plus_r(mk_par(core, 0), 0, Formula::bot());
    members.push_back(prem);
  }
  return mk_promotion_explicit(laurent_sequent(), 1, std::move(members));
}

Sequent with_par_counterexample_sequent() {
  Formula x = Formula::tensor(Formula::bot(), Formula::top());
  Formula y = Formula::par(Formula::one(), Formula::zero());
  Formula xy = Formula::with(x, y);
  Formula lhs = Formula::with(x, Formula::par(xy, y));
  return {dual(lhs), Formula::why_not(xy)};
}

ProofPtr with_par_counterexample_proof() {
  Formula x = Formula::tensor(Formula::bot(), Formula::top());
  Formula y = Formula::par(Formula::one(), Formula::zero());
  Formula xy = Formula::with(x, y);
  Formula qxy = Formula::why_not(xy);
  Formula lhs = Formula::with(x, Formula::par(xy, y));
  Formula nlhs = dual(lhs);  // dual(x) + (dual(xy) * dual(y))

  // Left branch: [dual x, ?xy, x] then PlusL.
  ProofPtr axx = axiom_proof(System::LLT, x);                 // [dual x, x]
  ProofPtr lx = mk_weakening(axx, 1, qxy);                    // [dual x, ?xy, x]
  ProofPtr l = mk_plus_l(lx, 0, Formula::tensor(dual(xy), dual(y)));  // [nlhs, ?xy, x]

  // Right branch: [dual(xy) * dual(y), ?xy, y] then PlusR.
  ProofPtr axy = axiom_proof(System::LLT, y);                 // [dual y, y]
  ProofPtr axxy = axiom_proof(System::LLT, xy);               // [dual xy, xy]
  ProofPtr dxy = mk_classic_dereliction(axxy, 1);             // [dual xy, ?xy]
  Sequent tconcl{Formula::tensor(dual(xy), dual(y)), qxy, y};
  ProofPtr t = mk_tensor(RuleTag::NewTens, tconcl, 0,
                         {SplitPart::Principal, SplitPart::Gamma, SplitPart::Delta},
                         dxy, axy);
  ProofPtr r = mk_plus_r(t, 0, dual(x));                      // [nlhs, ?xy, y]

  ProofPtr w = mk_with(exchange_to(l, {nlhs, qxy, x}), exchange_to(r, {nlhs, qxy, y}), 2);
  // [nlhs, ?xy, xy] -> [nlhs, ?xy, ?xy] -> [nlhs, ?xy]
  ProofPtr d = mk_classic_dereliction(w, 2);
  return mk_contraction(d, 1);
}

}  // namespace llg
