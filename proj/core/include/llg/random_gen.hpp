#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "llg/position.hpp"
#include "llg/proof.hpp"

namespace llg {

// Small atom-free formulas used to seed random structures.
std::vector<Formula> small_formula_pool();
// Positive atom-free labels without exponentials (keeps games finite-branching).
std::vector<Formula> basic_label_pool();
// Positive atom-free labels of depth <= 3 including ?-formulas.
std::vector<Formula> exponential_label_pool();

struct ProofGenOptions {
  System sys = System::LL;
  int max_nodes = 15;
  std::uint64_t seed = 1;
};

// Forward generation: random legal rules applied to a growing proof.
// Deterministic for a fixed seed. LL proofs include weakening, dereliction,
// contraction and (occasionally) promotion; LLTN proofs include n-ary
// dereliction and schema promotions.
ProofPtr gen_proof(std::mt19937_64& rng, System sys, int max_nodes);
std::vector<ProofPtr> gen_proofs(const ProofGenOptions& opt, int count);

struct PositionGenOptions {
  int max_vertices = 3;
  std::vector<Formula> pool;  // defaults to basic_label_pool()
  std::uint64_t seed = 1;
  int team_mode = 0;  // 0 random, 1 all opponents, 2 all proponents
};

Position gen_position(std::mt19937_64& rng, const PositionGenOptions& opt);
std::vector<Position> gen_positions(const PositionGenOptions& opt, int count);

// Deterministic deduplicated corpus of small opponent trees, used as the
// attached V's in validity checks.
std::vector<Position> opponent_corpus(int max_vertices, const std::vector<Formula>& pool,
                                      int count, std::uint64_t seed);

}  // namespace llg
