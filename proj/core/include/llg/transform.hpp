#pragma once

#include <vector>

#include "llg/proof.hpp"

namespace llg {

// Cut-free proof of [dual(a), a]. For LL/LLT the ! case goes through the
// classic promotion/dereliction pair; for LLTN through a promotion schema.
ProofPtr axiom_proof(System sys, const Formula& a, bool atoms_enabled = false);

// Cut- and contraction-free LLT proof of [duplicator(a)].
ProofPtr dup_proof(const Formula& a);

// From a proof of Gamma, ?A, ?A (the two equal ?-formulas last) derives
// Gamma, ?A, dual(duplicator(dual(A))) without adding cuts or contractions.
ProofPtr apply_dup(ProofPtr p);

struct ElimResult {
  ProofPtr proof;                   // cc-free LLT proof of Gamma, dual(D_1), ..., dual(D_k)
  std::vector<Formula> duplicators; // D_1 ... D_k, one per eliminated contraction
};

// Contraction elimination for cut-free LL or LLT proofs. Rejects cuts.
ElimResult eliminate_contractions(ProofPtr p);

// Bounded LLT proof of the same sequent: either the cc-free proof itself,
// or one root cut between the tensor of the duplicator proofs and the
// par-packaged cc-free proof.
ProofPtr bound_proof(ProofPtr p);

ProofPtr translate_ll_to_llt(ProofPtr p);
ProofPtr translate_llt_to_ll(ProofPtr p);

// Bounded, contraction-free LLT proof -> bounded LLTN proof of the same
// sequent. Classic promotions become schema promotions; weakening becomes
// 0-ary dereliction over a fresh B; classic dereliction becomes 1-ary.
ProofPtr llt_to_lltn(ProofPtr p);

// Cut admissibility for bounded LLTN proofs: p1 proves a sequent with A at
// pos1, p2 one with dual(A) at pos2; the result is a bounded proof of the
// two contexts side by side.
ProofPtr compose_cuts(ProofPtr p1, int pos1, ProofPtr p2, int pos2,
                      bool atoms_enabled = false);

enum class AnodyneKind { Bot, Par, WithLeft, WithRight, Bang };

// Cut-freeness-preserving inversions on cut-free LLTN proofs:
//   Bot:       Gamma, B      -> Gamma
//   Par:       Gamma, A @ B  -> Gamma, A, B
//   WithLeft:  Gamma, A & B  -> Gamma, A
//   WithRight: Gamma, A & B  -> Gamma, B
//   Bang:      Gamma, !A     -> Gamma, tensor^n A
// `pos` designates the principal position; `bang_n` is the n for Bang.
ProofPtr anodyne(AnodyneKind kind, int pos, int bang_n, ProofPtr p);

// The bounded LLTN proof of B + (X^ @ ?X^), !X with X = B * B, via an
// explicit promotion family covering arities 0..bound.
ProofPtr laurent_proof(int bound);
// The sequent it proves.
Sequent laurent_sequent();

// The cut-free LLT proof (with one contraction) of
// dual(X & ((X & Y) @ Y)), ?(X & Y) with X = B * T, Y = 1 @ 0.
ProofPtr with_par_counterexample_proof();
Sequent with_par_counterexample_sequent();

}  // namespace llg
