#include "llg/proof.hpp"

#include <algorithm>

#include "llg/errors.hpp"

namespace llg {

std::string to_string(System s) {
  switch (s) {
    case System::LL: return "ll";
    case System::LLT: return "llt";
    case System::LLTN: return "lltn";
  }
  return "?";
}

std::string to_string(RuleTag t) {
  switch (t) {
    case RuleTag::One: return "one";
    case RuleTag::Bot: return "bot";
    case RuleTag::Top: return "top";
    case RuleTag::PlainTensor: return "tensor";
    case RuleTag::NewTens: return "new_tens";
    case RuleTag::Par: return "par";
    case RuleTag::PlusL: return "plus_l";
    case RuleTag::PlusR: return "plus_r";
    case RuleTag::With: return "with";
    case RuleTag::Dereliction: return "dereliction";
    case RuleTag::Promotion: return "promotion";
    case RuleTag::Weakening: return "weakening";
    case RuleTag::Contraction: return "contraction";
    case RuleTag::ClassicDereliction: return "classic_dereliction";
    case RuleTag::ClassicPromotion: return "classic_promotion";
    case RuleTag::Exchange: return "exchange";
    case RuleTag::Cut: return "cut";
    case RuleTag::Identity: return "identity";
  }
  return "?";
}

bool rule_in_system(RuleTag t, System s) {
  switch (t) {
    case RuleTag::One:
    case RuleTag::Bot:
    case RuleTag::Top:
    case RuleTag::Par:
    case RuleTag::PlusL:
    case RuleTag::PlusR:
    case RuleTag::With:
    case RuleTag::Exchange:
    case RuleTag::Cut:
    case RuleTag::Identity:
      return true;
    case RuleTag::PlainTensor:
      return s == System::LL;
    case RuleTag::NewTens:
      return s != System::LL;
    case RuleTag::Dereliction:
    case RuleTag::Promotion:
      return s == System::LLTN;
    case RuleTag::Weakening:
    case RuleTag::Contraction:
    case RuleTag::ClassicDereliction:
    case RuleTag::ClassicPromotion:
      return s == System::LL || s == System::LLT;
  }
  return false;
}

namespace {

bool valid_pos(const Sequent& s, int i) {
  return i >= 0 && i < static_cast<int>(s.size());
}

}  // namespace

std::string rule_shape_error(const Sequent& c, const RuleInstance& r) {
  auto need = [&](Tag t, const char* what) -> std::string {
    if (!valid_pos(c, r.principal)) return "principal position out of range";
    if (!c[static_cast<std::size_t>(r.principal)].is(t))
      return std::string("principal is not ") + what;
    return "";
  };
  const int n = static_cast<int>(c.size());
  switch (r.tag) {
    case RuleTag::One:
      if (n != 1 || !c[0].is(Tag::One)) return "one rule concludes exactly [1]";
      return "";
    case RuleTag::Bot:
      return need(Tag::Bot, "B");
    case RuleTag::Top:
      return need(Tag::Top, "T");
    case RuleTag::Par:
      return need(Tag::Par, "a par formula");
    case RuleTag::PlusL:
    case RuleTag::PlusR:
      return need(Tag::Plus, "a plus formula");
    case RuleTag::With:
      return need(Tag::With, "a with formula");
    case RuleTag::PlainTensor:
    case RuleTag::NewTens: {
      auto e = need(Tag::Tensor, "a tensor");
      if (!e.empty()) return e;
      if (static_cast<int>(r.split.size()) != n) return "split size mismatch";
      for (int i = 0; i < n; ++i) {
        if (i == r.principal) {
          if (r.split[static_cast<std::size_t>(i)] != SplitPart::Principal)
            return "principal not marked in split";
        } else {
          SplitPart sp = r.split[static_cast<std::size_t>(i)];
          if (sp == SplitPart::Principal) return "stray principal mark in split";
          if (sp == SplitPart::Theta) {
            if (r.tag == RuleTag::PlainTensor)
              return "plain tensor rule has no shared context";
            if (!c[static_cast<std::size_t>(i)].is(Tag::WhyNot))
              return "shared tensor context must be ?-prefixed";
          }
        }
      }
      return "";
    }
    case RuleTag::Dereliction:
      if (r.arity < 0) return "negative dereliction arity";
      return need(Tag::WhyNot, "a ?-formula");
    case RuleTag::Promotion:
      return need(Tag::OfCourse, "a !-formula");
    case RuleTag::Weakening:
    case RuleTag::Contraction:
    case RuleTag::ClassicDereliction:
      return need(Tag::WhyNot, "a ?-formula");
    case RuleTag::ClassicPromotion: {
      auto e = need(Tag::OfCourse, "a !-formula");
      if (!e.empty()) return e;
      for (int i = 0; i < n; ++i)
        if (i != r.principal && !c[static_cast<std::size_t>(i)].is(Tag::WhyNot))
          return "promotion context must be ?-prefixed";
      return "";
    }
    case RuleTag::Exchange:
      if (r.principal < 0 || r.principal + 1 >= n) return "exchange position out of range";
      return "";
    case RuleTag::Cut:
      if (!r.cut_formula) return "cut carries no cut formula";
      if (static_cast<int>(r.split.size()) != n) return "split size mismatch";
      for (SplitPart sp : r.split)
        if (sp != SplitPart::Gamma && sp != SplitPart::Delta)
          return "cut split entries must be gamma or delta";
      return "";
    case RuleTag::Identity:
      if (n != 2) return "identity concludes exactly two formulas";
      if (!c[1].is(Tag::Atom)) return "identity is restricted to atoms";
      if (!(c[0] == dual(c[1]))) return "identity conclusion is not a dual pair";
      return "";
  }
  return "unknown rule tag";
}

std::vector<Sequent> expected_premises(const Sequent& c, const RuleInstance& r) {
  const std::size_t i = static_cast<std::size_t>(r.principal);
  const int n = static_cast<int>(c.size());
  switch (r.tag) {
    case RuleTag::One:
    case RuleTag::Top:
    case RuleTag::Identity:
      return {};
    case RuleTag::Bot:
    case RuleTag::Weakening:
      return {erased_at(c, i)};
    case RuleTag::Par: {
      Sequent p = replaced_at(c, i, c[i].left());
      return {inserted_at(p, i + 1, c[i].right())};
    }
    case RuleTag::PlusL:
      return {replaced_at(c, i, c[i].left())};
    case RuleTag::PlusR:
      return {replaced_at(c, i, c[i].right())};
    case RuleTag::With:
      return {replaced_at(c, i, c[i].left()), replaced_at(c, i, c[i].right())};
    case RuleTag::PlainTensor:
    case RuleTag::NewTens: {
      Sequent p1, p2;
      for (int j = 0; j < n; ++j)
        if (j != r.principal && r.split[static_cast<std::size_t>(j)] == SplitPart::Gamma)
          p1.push_back(c[static_cast<std::size_t>(j)]);
      for (int j = 0; j < n; ++j)
        if (j != r.principal && r.split[static_cast<std::size_t>(j)] == SplitPart::Delta)
          p2.push_back(c[static_cast<std::size_t>(j)]);
      for (int j = 0; j < n; ++j)
        if (j != r.principal && r.split[static_cast<std::size_t>(j)] == SplitPart::Theta) {
          p1.push_back(c[static_cast<std::size_t>(j)]);
          p2.push_back(c[static_cast<std::size_t>(j)]);
        }
      p1.push_back(c[i].left());
      p2.push_back(c[i].right());
      return {p1, p2};
    }
    case RuleTag::Dereliction:
      return {replaced_at(c, i, power(c[i].child(), r.arity, PowerMode::Par))};
    case RuleTag::Contraction:
      return {inserted_at(c, i + 1, c[i])};
    case RuleTag::ClassicDereliction:
    case RuleTag::ClassicPromotion:
      return {replaced_at(c, i, c[i].child())};
    case RuleTag::Exchange: {
      Sequent p = c;
      std::swap(p[i], p[i + 1]);
      return {p};
    }
    case RuleTag::Cut: {
      Sequent p1, p2;
      for (int j = 0; j < n; ++j)
        if (r.split[static_cast<std::size_t>(j)] == SplitPart::Gamma)
          p1.push_back(c[static_cast<std::size_t>(j)]);
      p1.push_back(*r.cut_formula);
      p2.push_back(dual(*r.cut_formula));
      for (int j = 0; j < n; ++j)
        if (r.split[static_cast<std::size_t>(j)] == SplitPart::Delta)
          p2.push_back(c[static_cast<std::size_t>(j)]);
      return {p1, p2};
    }
    case RuleTag::Promotion:
      throw ProofError("promotion premises come from the premise family");
  }
  throw ProofError("unknown rule tag");
}

Sequent promotion_premise(const Sequent& c, const RuleInstance& r, int n) {
  const std::size_t i = static_cast<std::size_t>(r.principal);
  return replaced_at(c, i, power(c[i].child(), n, PowerMode::Tensor));
}

// ---- exchange_to ---------------------------------------------------------

ProofPtr exchange_to(ProofPtr p, const Sequent& target) {
  if (p->conclusion == target) return p;
  if (p->conclusion.size() != target.size())
    throw ProofError("exchange_to: [" + to_string(p->conclusion) +
                     "] is not a permutation of [" + to_string(target) + "]");
  ProofPtr cur = std::move(p);
  Sequent work = cur->conclusion;
  for (std::size_t i = 0; i < target.size(); ++i) {
    std::size_t j = i;
    while (j < work.size() && !(work[j] == target[i])) ++j;
    if (j == work.size())
      throw ProofError("exchange_to: [" + to_string(work) +
                       "] is not a permutation of [" + to_string(target) + "]");
    while (j > i) {
      std::swap(work[j - 1], work[j]);
      RuleInstance r;
      r.tag = RuleTag::Exchange;
      r.principal = static_cast<int>(j - 1);
      cur = std::make_shared<Proof>(work, std::move(r), std::vector<ProofPtr>{cur});
      --j;
    }
  }
  return cur;
}

// ---- premise families ----------------------------------------------------

std::shared_ptr<const PremiseFamily> PremiseFamily::make_explicit(
    std::vector<ProofPtr> members) {
  if (members.empty())
    throw ProofError("explicit promotion family must cover at least arity 0");
  auto f = std::make_shared<PremiseFamily>();
  f->members_ = std::move(members);
  return f;
}

std::shared_ptr<const PremiseFamily> PremiseFamily::make_schema(ProofPtr base_one,
                                                                ProofPtr base_a) {
  if (!base_one || !base_a) throw ProofError("schema needs both base proofs");
  if (base_one->conclusion.empty() || base_a->conclusion.empty())
    throw ProofError("schema base with empty conclusion");
  Sequent ctx1(base_one->conclusion.begin(), base_one->conclusion.end() - 1);
  Sequent ctx2(base_a->conclusion.begin(), base_a->conclusion.end() - 1);
  if (!(ctx1 == ctx2)) throw ProofError("schema bases disagree on the context");
  if (!base_one->conclusion.back().is(Tag::One))
    throw ProofError("schema unit base must end in 1");
  for (const auto& f : ctx1)
    if (!f.is(Tag::WhyNot)) throw ProofError("schema context must be ?-prefixed");
  auto f = std::make_shared<PremiseFamily>();
  f->base_one_ = std::move(base_one);
  f->base_a_ = std::move(base_a);
  return f;
}

ProofPtr PremiseFamily::instantiate(int n, const Sequent& expected) const {
  if (n < 0) throw ProofError("negative promotion arity");
  if (!is_schema()) {
    if (n > explicit_bound())
      throw ProofError("explicit promotion family covers arities up to " +
                       std::to_string(explicit_bound()) + ", asked for " +
                       std::to_string(n));
    return exchange_to(members_[static_cast<std::size_t>(n)], expected);
  }
  Sequent ctx(base_a_->conclusion.begin(), base_a_->conclusion.end() - 1);
  Formula a = base_a_->conclusion.back();
  ProofPtr cur;
  if (n == 0) {
    cur = base_one_;
  } else {
    cur = base_a_;
    for (int k = 2; k <= n; ++k) {
      Sequent concl = ctx;
      concl.push_back(power(a, k, PowerMode::Tensor));
      std::vector<SplitPart> split(concl.size(), SplitPart::Theta);
      split.back() = SplitPart::Principal;
      cur = mk_tensor(RuleTag::NewTens, concl, static_cast<int>(concl.size()) - 1,
                      std::move(split), cur, base_a_);
    }
  }
  return exchange_to(cur, expected);
}

// ---- stats ---------------------------------------------------------------

ProofStats stats(const ProofPtr& p) {
  ProofStats st;
  std::vector<const Proof*> work{p.get()};
  while (!work.empty()) {
    const Proof* q = work.back();
    work.pop_back();
    ++st.nodes;
    if (q->rule.tag == RuleTag::Cut) ++st.cuts;
    if (q->rule.tag == RuleTag::Contraction) ++st.contractions;
    for (const auto& pr : q->premises) work.push_back(pr.get());
    if (q->family) {
      if (q->family->is_schema()) {
        work.push_back(q->family->base_one().get());
        work.push_back(q->family->base_a().get());
      } else {
        for (const auto& m : q->family->members()) work.push_back(m.get());
      }
    }
  }
  return st;
}

bool cut_free(const ProofPtr& p) { return stats(p).cuts == 0; }
bool contraction_free(const ProofPtr& p) { return stats(p).contractions == 0; }

bool is_bounded(const ProofPtr& p) {
  if (p->rule.tag == RuleTag::Cut)
    return cut_free(p->premises[0]) && cut_free(p->premises[1]);
  return cut_free(p);
}

long long node_count(const ProofPtr& p) { return stats(p).nodes; }

// ---- builders ------------------------------------------------------------

namespace {

ProofPtr finish(Sequent concl, RuleInstance r, std::vector<ProofPtr> prems) {
  auto err = rule_shape_error(concl, r);
  if (!err.empty())
    throw ProofError(err + " (" + to_string(r.tag) + " at [" + to_string(concl) + "])");
  auto exp = expected_premises(concl, r);
  if (exp.size() != prems.size())
    throw ProofError("premise count mismatch for " + to_string(r.tag));
  for (std::size_t i = 0; i < exp.size(); ++i)
    prems[i] = exchange_to(prems[i], exp[i]);
  return std::make_shared<Proof>(std::move(concl), std::move(r), std::move(prems));
}

}  // namespace

ProofPtr mk_one() {
  RuleInstance r;
  r.tag = RuleTag::One;
  return finish({Formula::one()}, std::move(r), {});
}

ProofPtr mk_top(Sequent concl, int pos) {
  RuleInstance r;
  r.tag = RuleTag::Top;
  r.principal = pos;
  return finish(std::move(concl), std::move(r), {});
}

ProofPtr mk_bot(ProofPtr prem, int pos) {
  Sequent concl = inserted_at(prem->conclusion, static_cast<std::size_t>(pos), Formula::bot());
  RuleInstance r;
  r.tag = RuleTag::Bot;
  r.principal = pos;
  return finish(std::move(concl), std::move(r), {std::move(prem)});
}

ProofPtr mk_par(ProofPtr prem, int pos) {
  const Sequent& s = prem->conclusion;
  auto i = static_cast<std::size_t>(pos);
  if (i + 1 >= s.size()) throw ProofError("mk_par: position out of range");
  Formula fused = Formula::par(s[i], s[i + 1]);
  Sequent concl = replaced_at(erased_at(s, i + 1), i, fused);
  RuleInstance r;
  r.tag = RuleTag::Par;
  r.principal = pos;
  return finish(std::move(concl), std::move(r), {std::move(prem)});
}

ProofPtr mk_plus_l(ProofPtr prem, int pos, Formula right) {
  auto i = static_cast<std::size_t>(pos);
  Sequent concl = replaced_at(prem->conclusion, i,
                              Formula::plus(prem->conclusion[i], std::move(right)));
  RuleInstance r;
  r.tag = RuleTag::PlusL;
  r.principal = pos;
  return finish(std::move(concl), std::move(r), {std::move(prem)});
}

ProofPtr mk_plus_r(ProofPtr prem, int pos, Formula left) {
  auto i = static_cast<std::size_t>(pos);
  Sequent concl = replaced_at(prem->conclusion, i,
                              Formula::plus(std::move(left), prem->conclusion[i]));
  RuleInstance r;
  r.tag = RuleTag::PlusR;
  r.principal = pos;
  return finish(std::move(concl), std::move(r), {std::move(prem)});
}

ProofPtr mk_with(ProofPtr l, ProofPtr rp, int pos) {
  auto i = static_cast<std::size_t>(pos);
  if (i >= l->conclusion.size() || i >= rp->conclusion.size())
    throw ProofError("mk_with: position out of range");
  Formula a = l->conclusion[i], b = rp->conclusion[i];
  Sequent concl = replaced_at(l->conclusion, i, Formula::with(a, b));
  RuleInstance r;
  r.tag = RuleTag::With;
  r.principal = pos;
  return finish(std::move(concl), std::move(r), {std::move(l), std::move(rp)});
}

ProofPtr mk_exchange(ProofPtr prem, int pos) {
  auto i = static_cast<std::size_t>(pos);
  Sequent concl = prem->conclusion;
  if (i + 1 >= concl.size()) throw ProofError("mk_exchange: position out of range");
  std::swap(concl[i], concl[i + 1]);
  RuleInstance r;
  r.tag = RuleTag::Exchange;
  r.principal = pos;
  return finish(std::move(concl), std::move(r), {std::move(prem)});
}

ProofPtr mk_tensor(RuleTag which, Sequent concl, int principal,
                   std::vector<SplitPart> split, ProofPtr p1, ProofPtr p2) {
  if (which != RuleTag::PlainTensor && which != RuleTag::NewTens)
    throw ProofError("mk_tensor: not a tensor rule");
  RuleInstance r;
  r.tag = which;
  r.principal = principal;
  r.split = std::move(split);
  return finish(std::move(concl), std::move(r), {std::move(p1), std::move(p2)});
}

ProofPtr mk_dereliction(ProofPtr prem, int pos, int n, Formula body) {
  auto i = static_cast<std::size_t>(pos);
  if (i >= prem->conclusion.size()) throw ProofError("mk_dereliction: position out of range");
  if (!(prem->conclusion[i] == power(body, n, PowerMode::Par)))
    throw ProofError("mk_dereliction: premise does not carry par^" + std::to_string(n) +
                     " of the body at the given position");
  Sequent concl = replaced_at(prem->conclusion, i, Formula::why_not(std::move(body)));
  RuleInstance r;
  r.tag = RuleTag::Dereliction;
  r.principal = pos;
  r.arity = n;
  return finish(std::move(concl), std::move(r), {std::move(prem)});
}

ProofPtr mk_weakening(ProofPtr prem, int pos, Formula whynot) {
  Sequent concl = inserted_at(prem->conclusion, static_cast<std::size_t>(pos), std::move(whynot));
  RuleInstance r;
  r.tag = RuleTag::Weakening;
  r.principal = pos;
  return finish(std::move(concl), std::move(r), {std::move(prem)});
}

ProofPtr mk_contraction(ProofPtr prem, int pos) {
  auto i = static_cast<std::size_t>(pos);
  const Sequent& s = prem->conclusion;
  if (i + 1 >= s.size() || !(s[i] == s[i + 1]))
    throw ProofError("mk_contraction: premise lacks a duplicate pair at the position");
  Sequent concl = erased_at(s, i + 1);
  RuleInstance r;
  r.tag = RuleTag::Contraction;
  r.principal = pos;
  return finish(std::move(concl), std::move(r), {std::move(prem)});
}

ProofPtr mk_classic_dereliction(ProofPtr prem, int pos) {
  auto i = static_cast<std::size_t>(pos);
  Sequent concl = replaced_at(prem->conclusion, i, Formula::why_not(prem->conclusion[i]));
  RuleInstance r;
  r.tag = RuleTag::ClassicDereliction;
  r.principal = pos;
  return finish(std::move(concl), std::move(r), {std::move(prem)});
}

ProofPtr mk_classic_promotion(ProofPtr prem, int pos) {
  auto i = static_cast<std::size_t>(pos);
  Sequent concl = replaced_at(prem->conclusion, i, Formula::of_course(prem->conclusion[i]));
  RuleInstance r;
  r.tag = RuleTag::ClassicPromotion;
  r.principal = pos;
  return finish(std::move(concl), std::move(r), {std::move(prem)});
}

namespace {

ProofPtr finish_promotion(Sequent concl, int pos,
                          std::shared_ptr<const PremiseFamily> fam) {
  RuleInstance r;
  r.tag = RuleTag::Promotion;
  r.principal = pos;
  auto err = rule_shape_error(concl, r);
  if (!err.empty()) throw ProofError(err);
  return std::make_shared<Proof>(std::move(concl), std::move(r),
                                 std::vector<ProofPtr>{}, std::move(fam));
}

}  // namespace

ProofPtr mk_promotion_explicit(Sequent concl, int pos, std::vector<ProofPtr> members) {
  RuleInstance probe;
  probe.tag = RuleTag::Promotion;
  probe.principal = pos;
  for (std::size_t n = 0; n < members.size(); ++n)
    members[n] = exchange_to(members[n],
                             promotion_premise(concl, probe, static_cast<int>(n)));
  return finish_promotion(std::move(concl), pos, PremiseFamily::make_explicit(std::move(members)));
}

ProofPtr mk_promotion_schema(Sequent concl, int pos, ProofPtr base_one, ProofPtr base_a) {
  auto fam = PremiseFamily::make_schema(std::move(base_one), std::move(base_a));
  const Sequent& ba = fam->base_a()->conclusion;
  Sequent ctx(ba.begin(), ba.end() - 1);
  auto i = static_cast<std::size_t>(pos);
  if (i >= concl.size() || !concl[i].is(Tag::OfCourse))
    throw ProofError("mk_promotion_schema: principal is not a !-formula");
  if (!(concl[i].child() == ba.back()))
    throw ProofError("mk_promotion_schema: base formula does not match the promoted body");
  if (!multiset_equal(erased_at(concl, i), ctx))
    throw ProofError("mk_promotion_schema: context mismatch with schema bases");
  return finish_promotion(std::move(concl), pos, std::move(fam));
}

ProofPtr mk_cut(ProofPtr p1, ProofPtr p2, Formula f, Sequent concl,
                std::vector<SplitPart> split) {
  RuleInstance r;
  r.tag = RuleTag::Cut;
  r.split = std::move(split);
  r.cut_formula = std::move(f);
  return finish(std::move(concl), std::move(r), {std::move(p1), std::move(p2)});
}

ProofPtr mk_identity(const Formula& positive_atom) {
  if (!positive_atom.is(Tag::Atom)) throw ProofError("mk_identity: atoms only");
  RuleInstance r;
  r.tag = RuleTag::Identity;
  return finish({dual(positive_atom), positive_atom}, std::move(r), {});
}

ProofPtr mk_cut_simple(ProofPtr p1, ProofPtr p2, const Formula& f, Sequent gamma,
                       Sequent delta) {
  Sequent concl = gamma;
  concl.insert(concl.end(), delta.begin(), delta.end());
  std::vector<SplitPart> split;
  split.insert(split.end(), gamma.size(), SplitPart::Gamma);
  split.insert(split.end(), delta.size(), SplitPart::Delta);
  return mk_cut(std::move(p1), std::move(p2), f, std::move(concl), std::move(split));
}

ProofPtr par_fold_tail(ProofPtr p, std::size_t start) {
  if (start >= p->conclusion.size())
    throw ProofError("par_fold_tail: nothing to fold");
  while (p->conclusion.size() > start + 1) p = mk_par(p, static_cast<int>(start));
  return p;
}

}  // namespace llg
