#include "llg/search.hpp"

#include <algorithm>
#include <optional>
#include <unordered_map>
#include <vector>

#include "llg/errors.hpp"

namespace llg {

namespace {

struct Searcher {
  System sys;
  SearchOptions opt;
  long long explored = 0;

  struct Entry {
    int refuted_depth = -1;  // exhausted for all remaining depths <= this
    ProofPtr proof;          // reusable at any depth
  };
  std::unordered_map<std::string, Entry> memo;

  static std::string key(const Sequent& s) {
    std::vector<std::string> parts;
    parts.reserve(s.size());
    for (const auto& f : s) parts.push_back(to_string(f));
    std::sort(parts.begin(), parts.end());
    std::string out;
    for (auto& p : parts) {
      out += p;
      out += ';';
    }
    return out;
  }

  void tick() {
    if (++explored > opt.node_budget) throw BudgetExhausted("search node budget exceeded");
  }

  std::optional<ProofPtr> prove(const Sequent& s, int depth) {
    tick();
    const std::string k = key(s);
    if (auto it = memo.find(k); it != memo.end()) {
      if (it->second.proof) return exchange_to(it->second.proof, s);
      if (it->second.refuted_depth >= depth) return std::nullopt;
    }
    auto found = [&](ProofPtr p) -> std::optional<ProofPtr> {
      memo[k].proof = p;
      return p;
    };

    const int n = static_cast<int>(s.size());
    // Leaves first.
    for (int i = 0; i < n; ++i)
      if (s[static_cast<std::size_t>(i)].is(Tag::Top)) return found(mk_top(s, i));
    if (n == 1 && s[0].is(Tag::One)) return found(mk_one());
    if (opt.atoms_enabled && n == 2 && s[1].is(Tag::Atom) && s[0] == dual(s[1]))
      return found(mk_identity(s[1]));
    if (opt.atoms_enabled && n == 2 && s[0].is(Tag::Atom) && s[1] == dual(s[0]))
      return found(exchange_to(mk_identity(s[0]), s));

    if (depth <= 0) {
      record_refuted(k, depth);
      return std::nullopt;
    }

    // Non-branching / low-branching rules first, tensor splits last.
    for (int i = 0; i < n; ++i) {
      const Formula& f = s[static_cast<std::size_t>(i)];
      const auto iu = static_cast<std::size_t>(i);
      switch (f.tag()) {
        case Tag::Bot:
          if (auto q = prove(erased_at(s, iu), depth - 1)) return found(mk_bot(*q, i));
          break;
        case Tag::Par: {
          Sequent sub = inserted_at(replaced_at(s, iu, f.left()), iu + 1, f.right());
          if (auto q = prove(sub, depth - 1)) return found(mk_par(*q, i));
          break;
        }
        case Tag::With: {
          auto l = prove(replaced_at(s, iu, f.left()), depth - 1);
          if (!l) break;
          auto r = prove(replaced_at(s, iu, f.right()), depth - 1);
          if (!r) break;
          return found(mk_with(*l, *r, i));
        }
        case Tag::Plus: {
          if (auto q = prove(replaced_at(s, iu, f.left()), depth - 1))
            return found(mk_plus_l(*q, i, f.right()));
          if (auto q = prove(replaced_at(s, iu, f.right()), depth - 1))
            return found(mk_plus_r(*q, i, f.left()));
          break;
        }
        case Tag::WhyNot: {
          if (sys == System::LLTN) {
            for (int ar = 0; ar <= opt.arity_cap; ++ar) {
              Sequent sub = replaced_at(s, iu, power(f.child(), ar, PowerMode::Par));
              if (auto q = prove(sub, depth - 1))
                return found(mk_dereliction(*q, i, ar, f.child()));
            }
          } else {
            if (auto q = prove(erased_at(s, iu), depth - 1))
              return found(mk_weakening(*q, i, f));
            if (auto q = prove(replaced_at(s, iu, f.child()), depth - 1))
              return found(mk_classic_dereliction(*q, i));
            if (auto q = prove(inserted_at(s, iu + 1, f), depth - 1))
              return found(mk_contraction(*q, i));
          }
          break;
        }
        case Tag::OfCourse: {
          if (sys == System::LLTN) {
            std::vector<ProofPtr> members;
            bool ok = true;
            for (int ar = 0; ar <= opt.arity_cap && ok; ++ar) {
              Sequent sub = replaced_at(s, iu, power(f.child(), ar, PowerMode::Tensor));
              if (auto q = prove(sub, depth - 1))
                members.push_back(*q);
              else
                ok = false;
            }
            if (ok) return found(mk_promotion_explicit(s, i, std::move(members)));
          } else {
            bool ctx_ok = true;
            for (int j = 0; j < n && ctx_ok; ++j)
              if (j != i && !s[static_cast<std::size_t>(j)].is(Tag::WhyNot)) ctx_ok = false;
            if (ctx_ok) {
              if (auto q = prove(replaced_at(s, iu, f.child()), depth - 1))
                return found(mk_classic_promotion(*q, i));
            }
          }
          break;
        }
        default:
          break;
      }
    }

    // Tensor splits.
    for (int i = 0; i < n; ++i) {
      const Formula& f = s[static_cast<std::size_t>(i)];
      if (!f.is(Tag::Tensor)) continue;
      std::vector<int> others;
      for (int j = 0; j < n; ++j)
        if (j != i) others.push_back(j);
      const bool three_way = sys != System::LL;
      // Odometer over assignments: 0 = gamma, 1 = delta, 2 = theta (?-only).
      std::vector<int> assign(others.size(), 0);
      for (;;) {
        std::vector<SplitPart> split(static_cast<std::size_t>(n), SplitPart::Gamma);
        split[static_cast<std::size_t>(i)] = SplitPart::Principal;
        for (std::size_t o = 0; o < others.size(); ++o) {
          SplitPart sp = assign[o] == 0   ? SplitPart::Gamma
                         : assign[o] == 1 ? SplitPart::Delta
                                          : SplitPart::Theta;
          split[static_cast<std::size_t>(others[o])] = sp;
        }
        RuleInstance r;
        r.tag = sys == System::LL ? RuleTag::PlainTensor : RuleTag::NewTens;
        r.principal = i;
        r.split = split;
        auto exp = expected_premises(s, r);
        if (auto q1 = prove(exp[0], depth - 1)) {
          if (auto q2 = prove(exp[1], depth - 1))
            return found(mk_tensor(r.tag, s, i, split, *q1, *q2));
        }
        std::size_t o = 0;
        while (o < assign.size()) {
          int limit =
              three_way && s[static_cast<std::size_t>(others[o])].is(Tag::WhyNot) ? 2 : 1;
          if (assign[o] < limit) {
            ++assign[o];
            std::fill(assign.begin(), assign.begin() + static_cast<std::ptrdiff_t>(o), 0);
            break;
          }
          ++o;
        }
        if (o == assign.size()) break;
      }
    }

    record_refuted(k, depth);
    return std::nullopt;
  }

  void record_refuted(const std::string& k, int depth) {
    auto& e = memo[k];
    if (!e.proof) e.refuted_depth = std::max(e.refuted_depth, depth);
  }
};

}  // namespace

SearchResult search_cutfree(System sys, const Sequent& goal, SearchOptions opt) {
  if (!opt.atoms_enabled && !atom_free(goal))
    throw ProofError("search_cutfree: goal contains atoms but atoms are not enabled");
  Searcher se{sys, opt, 0, {}};
  SearchResult res;
  try {
    auto p = se.prove(goal, opt.depth_limit);
    res.explored = se.explored;
    if (p) {
      res.status = SearchStatus::Proved;
      res.proof = *p;
    } else {
      res.status = SearchStatus::Exhausted;
    }
  } catch (const BudgetExhausted&) {
    res.status = SearchStatus::Budget;
    res.explored = se.explored;
  }
  return res;
}

}  // namespace llg
