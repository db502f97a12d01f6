#pragma once

#include <unordered_map>

#include "llg/moves.hpp"
#include "llg/strategy.hpp"

namespace llg {

struct SolveOptions {
  Variant variant = Variant::LLTN;
  Caps caps;
  bool exotic = false;
  TeamMask proponents = kProponentMask;
};

// Backward induction over the finite play tree, memoized on canonical forms.
// Proponent-token positions win when some successor wins, opponent-token
// positions when all do; Unknown propagates from capped ?-enumerations.
// Throws BudgetExhausted when caps.node_budget runs out.
Winner solve(const Position& p, const SolveOptions& opt);

// Reusable solver: the memo table survives across calls with equal options.
class Solver {
 public:
  explicit Solver(SolveOptions opt) : opt_(opt) {}
  Winner run(const Position& p);
  std::size_t memo_size() const { return memo_.size(); }

 private:
  SolveOptions opt_;
  std::unordered_map<std::string, Winner> memo_;
};

}  // namespace llg
