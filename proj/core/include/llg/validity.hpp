#pragma once

#include <map>
#include <vector>

#include "llg/solve.hpp"
#include "llg/strategy.hpp"

namespace llg {

struct BasePort {
  int vertex;
  Formula label;
};

// A base position with dangling edges, optionally decorated with proofs for
// its own-team vertices; the witness side of a validity claim.
struct Witness {
  Position base;
  std::vector<BasePort> ports;
  std::map<int, ProofPtr> proofs;  // empty: validity is checked by solve
  TeamMask own = kProponentMask;
};

// Base + one attached tree per port (vertices forced to the opponent team,
// rooted at their token vertex, ids offset above the base's); normalized.
Position assemble(const Witness& w, const std::vector<Position>& attached);

struct ValidityCase {
  std::vector<int> attachment;  // corpus index per port
  int token;
  Winner winner;
};

struct ValidityReport {
  std::vector<ValidityCase> cases;
  long long pw = 0, ow = 0, unknown = 0;
  bool pass = false;  // every case ProponentWins
  std::string render() const;
  std::string summary() const;
};

struct ValidityOptions {
  Variant variant = Variant::LLTN;
  Caps caps;
  bool use_decorations = true;  // when the witness carries proofs
};

// Desk-scale validity harness: every tuple of corpus trees on the dangling
// edges, every initial token placement. A PASS is evidence, not a proof:
// the real definition quantifies over all trees.
ValidityReport validity_check(const Sequent& gamma, const Witness& w,
                              const std::vector<Position>& corpus,
                              const ValidityOptions& opt);

// The base position and decorations induced by a bounded proof: a single
// decorated vertex for a cut-free proof, two vertices joined by the cut
// formula's edge for a root cut.
Witness soundness_pipeline(const ProofPtr& p, bool atoms_enabled = false);

// Composite witness for the cut of two validity witnesses: their bases
// joined by an edge labelled with the cut formula, the second side moved to
// the second proponent team, strategies intersected.
Witness cut_compose_witness(const Witness& w1, int port1, const Witness& w2, int port2);

}  // namespace llg
