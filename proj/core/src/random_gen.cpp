#include "llg/random_gen.hpp"

#include <algorithm>
#include <set>

#include "llg/errors.hpp"
#include "llg/transform.hpp"

namespace llg {

namespace {

Formula f(const char* s) { return parse_formula(s); }

int pick(std::mt19937_64& rng, int n) {
  return static_cast<int>(rng() % static_cast<std::uint64_t>(n));
}

}  // namespace

std::vector<Formula> small_formula_pool() {
  return {f("1"), f("B"), f("1 + B"), f("B & 1"), f("1 * 1"), f("B @ B"), f("0"), f("T")};
}

std::vector<Formula> basic_label_pool() {
  return {f("1"), f("1 * 1"), f("1 + 1"), f("B * B"), f("(1 + 1) * 1")};
}

std::vector<Formula> exponential_label_pool() {
  return {f("1"),      f("?1"),          f("1 + 1"),  f("?(1 & 1)"), f("1 * 1"),
          f("?(1+1)"), f("(1 + 1) * 1"), f("?B"),     f("B * B"),    f("1 * ?1"),
          f("0 + 1")};
}

// ---- proofs ---------------------------------------------------------------

namespace {

// Grow p by one random rule; returns p unchanged if the pick is inapplicable.
// Conclusion of a tensor combination of p with a small closed proof q.
ProofPtr tensor_with_small(std::mt19937_64& rng, ProofPtr p, int budget,
                           const std::vector<Formula>& pool, System sys) {
  ProofPtr q = pick(rng, 2) ? mk_one()
                            : axiom_proof(sys, pool[static_cast<std::size_t>(pick(rng, 6))]);
  if (node_count(p) + node_count(q) + 1 > budget) return p;
  const Sequent& s1 = p->conclusion;
  const Sequent& s2 = q->conclusion;
  auto i = static_cast<std::size_t>(pick(rng, static_cast<int>(s1.size())));
  auto j = static_cast<std::size_t>(pick(rng, static_cast<int>(s2.size())));
  Sequent concl = erased_at(s1, i);
  Sequent rest2 = erased_at(s2, j);
  concl.insert(concl.end(), rest2.begin(), rest2.end());
  concl.push_back(Formula::tensor(s1[i], s2[j]));
  std::vector<SplitPart> split;
  split.insert(split.end(), s1.size() - 1, SplitPart::Gamma);
  split.insert(split.end(), s2.size() - 1, SplitPart::Delta);
  split.push_back(SplitPart::Principal);
  RuleTag which = sys == System::LL ? RuleTag::PlainTensor : RuleTag::NewTens;
  return mk_tensor(which, std::move(concl), static_cast<int>(s1.size() + s2.size()) - 2,
                   std::move(split), std::move(p), std::move(q));
}

ProofPtr grow_classic(std::mt19937_64& rng, ProofPtr p, int budget,
                      const std::vector<Formula>& pool, System sys) {
  const Sequent& s = p->conclusion;
  const int n = static_cast<int>(s.size());
  switch (pick(rng, 11)) {
    case 10:
      return tensor_with_small(rng, p, budget, pool, sys);
    case 0:
      return mk_bot(p, pick(rng, n + 1));
    case 1:
      if (n >= 2) return mk_par(p, pick(rng, n - 1));
      return p;
    case 2:
      return mk_plus_l(p, pick(rng, n), pool[static_cast<std::size_t>(pick(rng, static_cast<int>(pool.size())))]);
    case 3:
      return mk_plus_r(p, pick(rng, n), pool[static_cast<std::size_t>(pick(rng, static_cast<int>(pool.size())))]);
    case 4:
      if (2 * node_count(p) + 1 <= budget) return mk_with(p, p, pick(rng, n));
      return p;
    case 5: {
      // weakening; half the time duplicate an existing ?-formula to make
      // contractions reachable
      std::vector<int> qpos;
      for (int i = 0; i < n; ++i)
        if (s[static_cast<std::size_t>(i)].is(Tag::WhyNot)) qpos.push_back(i);
      if (!qpos.empty() && pick(rng, 2) == 0) {
        int i = qpos[static_cast<std::size_t>(pick(rng, static_cast<int>(qpos.size())))];
        return mk_weakening(p, i + 1, s[static_cast<std::size_t>(i)]);
      }
      Formula base = pool[static_cast<std::size_t>(pick(rng, static_cast<int>(pool.size())))];
      return mk_weakening(p, pick(rng, n + 1), Formula::why_not(base));
    }
    case 6:
      return mk_classic_dereliction(p, pick(rng, n));
    case 7: {
      // contraction: prefer two existing equal ?-formulas, else synthesise
      // the duplicate pair
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (s[static_cast<std::size_t>(i)].is(Tag::WhyNot) &&
              s[static_cast<std::size_t>(i)] == s[static_cast<std::size_t>(j)]) {
            Sequent target = s;
            Formula moved = target[static_cast<std::size_t>(j)];
            target.erase(target.begin() + j);
            target.insert(target.begin() + i + 1, moved);
            return mk_contraction(exchange_to(p, target), i);
          }
      for (int i = 0; i < n; ++i)
        if (s[static_cast<std::size_t>(i)].is(Tag::WhyNot))
          return mk_contraction(mk_weakening(p, i + 1, s[static_cast<std::size_t>(i)]), i);
      int i = pick(rng, n);
      ProofPtr q = mk_classic_dereliction(p, i);
      return mk_contraction(mk_weakening(q, i + 1, q->conclusion[static_cast<std::size_t>(i)]), i);
    }
    case 8: {
      // promotion when the context allows it
      for (int i = 0; i < n; ++i) {
        bool ok = true;
        for (int j = 0; j < n && ok; ++j)
          if (j != i && !s[static_cast<std::size_t>(j)].is(Tag::WhyNot)) ok = false;
        if (ok) return mk_classic_promotion(p, i);
      }
      return p;
    }
    case 9:
      if (n >= 2) return mk_exchange(p, pick(rng, n - 1));
      return p;
  }
  (void)sys;
  return p;
}

ProofPtr grow_lltn(std::mt19937_64& rng, ProofPtr p, int budget,
                   const std::vector<Formula>& pool) {
  const Sequent& s = p->conclusion;
  const int n = static_cast<int>(s.size());
  switch (pick(rng, 10)) {
    case 9:
      return tensor_with_small(rng, p, budget, pool, System::LLTN);
    case 0:
      return mk_bot(p, pick(rng, n + 1));
    case 1:
      if (n >= 2) return mk_par(p, pick(rng, n - 1));
      return p;
    case 2:
      return mk_plus_l(p, pick(rng, n), pool[static_cast<std::size_t>(pick(rng, static_cast<int>(pool.size())))]);
    case 3:
      return mk_plus_r(p, pick(rng, n), pool[static_cast<std::size_t>(pick(rng, static_cast<int>(pool.size())))]);
    case 4:
      if (2 * node_count(p) + 1 <= budget) return mk_with(p, p, pick(rng, n));
      return p;
    case 5: {
      // 0-ary dereliction on a B position (the LLTN weakening)
      for (int i = 0; i < n; ++i)
        if (s[static_cast<std::size_t>(i)].is(Tag::Bot))
          return mk_dereliction(p, i, 0,
                                pool[static_cast<std::size_t>(pick(rng, static_cast<int>(pool.size())))]);
      int at = pick(rng, n + 1);
      return mk_dereliction(mk_bot(p, at), at, 0,
                            pool[static_cast<std::size_t>(pick(rng, static_cast<int>(pool.size())))]);
    }
    case 6:
      // 1-ary dereliction anywhere
      {
        int i = pick(rng, n);
        return mk_dereliction(p, i, 1, s[static_cast<std::size_t>(i)]);
      }
    case 7: {
      // 2-ary dereliction on an A @ A pattern
      for (int i = 0; i < n; ++i) {
        const Formula& g = s[static_cast<std::size_t>(i)];
        if (g.is(Tag::Par) && g.left() == g.right())
          return mk_dereliction(p, i, 2, g.left());
      }
      return p;
    }
    case 8: {
      // schema promotion when the context is all-?
      for (int i = 0; i < n; ++i) {
        bool ok = true;
        for (int j = 0; j < n && ok; ++j)
          if (j != i && !s[static_cast<std::size_t>(j)].is(Tag::WhyNot)) ok = false;
        if (ok) {
          Sequent ctx = erased_at(s, static_cast<std::size_t>(i));
          Sequent atarget = ctx;
          atarget.push_back(s[static_cast<std::size_t>(i)]);
          ProofPtr base_a = exchange_to(p, atarget);
          ProofPtr base_one = mk_one();
          for (std::size_t j = ctx.size(); j-- > 0;)
            base_one = mk_dereliction(mk_bot(base_one, 0), 0, 0, ctx[j].child());
          Sequent concl = replaced_at(s, static_cast<std::size_t>(i),
                                      Formula::of_course(s[static_cast<std::size_t>(i)]));
          return mk_promotion_schema(concl, i, base_one, base_a);
        }
      }
      return p;
    }
  }
  return p;
}

}  // namespace

ProofPtr gen_proof(std::mt19937_64& rng, System sys, int max_nodes) {
  const auto pool = small_formula_pool();
  ProofPtr p;
  switch (pick(rng, 3)) {
    case 0:
      p = mk_one();
      break;
    case 1: {
      Sequent c{Formula::top()};
      if (pick(rng, 2)) c.push_back(pool[static_cast<std::size_t>(pick(rng, static_cast<int>(pool.size())))]);
      p = mk_top(c, 0);
      break;
    }
    default: {
      Formula a = pool[static_cast<std::size_t>(pick(rng, 6))];  // atom-free slice
      p = axiom_proof(sys, a);
      break;
    }
  }
  for (int step = 0; step < 4 * max_nodes; ++step) {
    if (node_count(p) >= max_nodes) break;
    ProofPtr q = sys == System::LLTN
                     ? grow_lltn(rng, p, max_nodes, pool)
                     : grow_classic(rng, p, max_nodes, pool, sys);
    if (node_count(q) <= max_nodes) p = q;
  }
  return p;
}

std::vector<ProofPtr> gen_proofs(const ProofGenOptions& opt, int count) {
  std::mt19937_64 rng(opt.seed);
  std::vector<ProofPtr> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out.push_back(gen_proof(rng, opt.sys, opt.max_nodes));
  return out;
}

// ---- positions --------------------------------------------------------------

Position gen_position(std::mt19937_64& rng, const PositionGenOptions& opt) {
  const std::vector<Formula>& pool = opt.pool;
  if (pool.empty()) throw GameError("gen_position: empty label pool");
  int n = 1 + pick(rng, opt.max_vertices);
  std::vector<PosVertex> vs;
  std::vector<PosEdge> es;
  for (int i = 0; i < n; ++i) {
    Team t = opt.team_mode == 1   ? Team::Opponent
             : opt.team_mode == 2 ? Team::Proponent
                                  : (pick(rng, 2) ? Team::Proponent : Team::Opponent);
    vs.push_back({i, t});
    if (i > 0) {
      int parent = pick(rng, i);
      Formula label = pool[static_cast<std::size_t>(pick(rng, static_cast<int>(pool.size())))];
      if (pick(rng, 2))
        es.push_back({parent, i, label});
      else
        es.push_back({i, parent, label});
    }
  }
  int token = pick(rng, n);
  return make_position(std::move(vs), std::move(es), token);
}

std::vector<Position> gen_positions(const PositionGenOptions& opt, int count) {
  std::mt19937_64 rng(opt.seed);
  std::vector<Position> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out.push_back(gen_position(rng, opt));
  return out;
}

std::vector<Position> opponent_corpus(int max_vertices, const std::vector<Formula>& pool,
                                      int count, std::uint64_t seed) {
  PositionGenOptions opt;
  opt.max_vertices = max_vertices;
  opt.pool = pool;
  opt.seed = seed;
  opt.team_mode = 1;
  std::mt19937_64 rng(seed);
  std::vector<Position> out;
  std::set<std::string> seen;
  int attempts = 0;
  while (static_cast<int>(out.size()) < count && attempts < 50 * count) {
    ++attempts;
    Position p = gen_position(rng, opt);
    if (seen.insert(canonical_form(p)).second) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace llg
