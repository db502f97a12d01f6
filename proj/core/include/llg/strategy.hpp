#pragma once

#include <map>
#include <optional>

#include "llg/moves.hpp"
#include "llg/position.hpp"
#include "llg/proof.hpp"

namespace llg {

enum class Winner { ProponentWins, OpponentWins, Unknown };
std::string to_string(Winner w);

using TeamMask = std::uint8_t;
constexpr TeamMask mask_of(Team t) { return static_cast<TeamMask>(1u << static_cast<int>(t)); }
constexpr TeamMask kProponentMask = 1u << static_cast<int>(Team::Proponent);

struct DecoratedPosition {
  Position pos;
  std::map<int, ProofPtr> proofs;  // own-team vertex id -> cut-free LLTN proof
};

// Empty when every own-team vertex carries a proof whose conclusion equals
// its sequent as a multiset.
std::string decorated_error(const DecoratedPosition& d, TeamMask own);

// The proof-driven welcoming strategy of Lemma-style soundness: when an own
// vertex holds the token, play the move matching the first non-exchange rule
// of its proof; accept every other move, rewriting affected decorations by
// the matching anodyne transformation. Choices are tie-broken on canonical
// codes, so they are stable under isomorphism.
class ProofStrategy {
 public:
  ProofStrategy(DecoratedPosition d, TeamMask own = kProponentMask);

  const Position& position() const { return d_.pos; }
  const std::map<int, ProofPtr>& proofs() const { return d_.proofs; }
  TeamMask own_mask() const { return own_; }
  bool own(Team t) const { return own_ & mask_of(t); }
  bool token_is_own() const { return own(team_of(d_.pos, d_.pos.token)); }

  // The selector's move for the active own vertex; nullopt if it is stuck.
  std::optional<Move> propose() const;
  // Applies any legal move (own moves must match the selector's rule map).
  void advance(const Move& m);

 private:
  DecoratedPosition d_;
  TeamMask own_;
};

ProofStrategy strategy_from_proofs(const DecoratedPosition& d);

// Combined strategy of two disjoint own-teams over the same position; its
// play set is the intersection of the two inputs' play sets.
ProofStrategy intersect(const ProofStrategy& a, const ProofStrategy& b);

// Simulates the strategy against every opponent behaviour (opponent ?-moves
// enumerated up to caps.expo_cap). ProponentWins iff every maximal position
// leaves the token with a non-own vertex; Unknown when a capped universal
// branch prevented a definite answer.
Winner check_winning(const ProofStrategy& s, const Caps& caps);

// All plays generated by the strategy (own moves follow the selector, other
// moves enumerated with caps), as move sequences from the start position.
std::vector<std::vector<Move>> strategy_plays(const ProofStrategy& s, const Caps& caps);

}  // namespace llg
