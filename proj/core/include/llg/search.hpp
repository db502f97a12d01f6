#pragma once

#include <string>

#include "llg/proof.hpp"

namespace llg {

enum class SearchStatus { Proved, Exhausted, Budget };

struct SearchOptions {
  int depth_limit = 12;
  int arity_cap = 2;              // n-ary rules explored for n = 0..arity_cap
  bool atoms_enabled = false;
  long long node_budget = 20'000'000;
};

struct SearchResult {
  SearchStatus status = SearchStatus::Exhausted;
  ProofPtr proof;                 // set when status == Proved
  long long explored = 0;
};

// Exhaustive backward cut-free search. `Exhausted` certifies that no proof
// exists within the depth and arity caps; this is a complete refutation
// only when the search space is finite (e.g. exponential-free sequents).
// Hitting the node budget aborts with status Budget instead.
SearchResult search_cutfree(System sys, const Sequent& goal, SearchOptions opt = {});

}  // namespace llg
