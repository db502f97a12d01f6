#include "llg/solve.hpp"

#include "llg/errors.hpp"

namespace llg {

namespace {

Winner run_rec(const Position& p, const SolveOptions& opt,
               std::unordered_map<std::string, Winner>& memo, long long& budget) {
  if (--budget < 0) throw BudgetExhausted("solve budget exceeded");
  std::string key = canonical_form(p);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  const bool own = opt.proponents & mask_of(team_of(p, p.token));
  MoveList ml = enumerate_moves(p, opt.variant, opt.caps, opt.exotic);
  Winner res;
  bool saw_unknown = false;
  if (own) {
    res = Winner::OpponentWins;
    for (const auto& m : ml.moves) {
      Winner w = run_rec(apply_move(p, m).pos, opt, memo, budget);
      if (w == Winner::ProponentWins) {
        res = Winner::ProponentWins;
        break;
      }
      if (w == Winner::Unknown) saw_unknown = true;
    }
    if (res != Winner::ProponentWins && (saw_unknown || ml.truncated))
      res = Winner::Unknown;
  } else {
    res = Winner::ProponentWins;
    for (const auto& m : ml.moves) {
      Winner w = run_rec(apply_move(p, m).pos, opt, memo, budget);
      if (w == Winner::OpponentWins) {
        res = Winner::OpponentWins;
        break;
      }
      if (w == Winner::Unknown) saw_unknown = true;
    }
    if (res == Winner::ProponentWins && (saw_unknown || ml.truncated))
      res = Winner::Unknown;
  }
  memo.emplace(std::move(key), res);
  return res;
}

}  // namespace

Winner Solver::run(const Position& p) {
  long long budget = opt_.caps.node_budget;
  return run_rec(p, opt_, memo_, budget);
}

Winner solve(const Position& p, const SolveOptions& opt) {
  Solver s(opt);
  return s.run(p);
}

}  // namespace llg
