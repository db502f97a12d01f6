#pragma once

#include <string>

#include "llg/proof.hpp"

namespace llg {

struct CheckOptions {
  int n_check = 4;            // promotion premises are validated for n = 0..n_check
  bool atoms_enabled = false; // allow atoms and the Identity rule
};

struct CheckReport {
  bool valid = false;
  long long cut_count = 0;
  long long contraction_count = 0;
  int checked_promotion_bound = 0;
  std::string failure_locus;    // e.g. "root.premise[1].promotion[3]"
  std::string failure_message;

  std::string render() const;
};

// Re-validates every node against the system's rule set: rule legality,
// shape, and exact premise sequents (up to the recorded permutation data in
// each rule instance). Promotion nodes are validated for each arity up to
// n_check; validity is therefore bound-limited for promotions, which the
// report records.
CheckReport check_proof(System sys, const ProofPtr& p, CheckOptions opt = {});

}  // namespace llg
