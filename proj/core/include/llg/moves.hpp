#pragma once

#include <map>
#include <string>
#include <vector>

#include "llg/position.hpp"

namespace llg {

enum class Variant { Naive, LLTN };

struct Caps {
  int expo_cap = 2;                    // max n enumerated for ?-moves
  long long node_budget = 10'000'000;  // guard for exhaustive enumerations
};

struct Move {
  enum class Kind {
    NegativePass,
    OneDelete,
    TensorSplit,
    PlusLeft,
    PlusRight,
    NaiveDereliction,
    NaiveWeakening,
    ExpoChoice,
    Exotic,
  };
  Kind kind;
  int edge = -1;           // index into Position::edges
  int expo_n = 0;          // ExpoChoice
  std::vector<int> part;   // TensorSplit: per other adjacent edge of the
                           // active vertex (ascending edge index):
                           // 0 -> stays with v1, 1 -> v2, 2 -> copied to both
  bool operator==(const Move&) const = default;
};

std::string to_string(Move::Kind k);
std::string describe(const Move& m, const Position& p);

struct MoveList {
  std::vector<Move> moves;
  bool truncated = false;  // an infinite ?-enumeration was capped
};

// All legal moves of the token-holding vertex.
MoveList enumerate_moves(const Position& p, Variant var, const Caps& caps, bool exotic);

struct Applied {
  Position pos;
  // new vertex id -> pre-move vertex id (identity for untouched vertices;
  // split and copied vertices map to their originals).
  std::map<int, int> origin;
};

Applied apply_move(const Position& p, const Move& m);

struct PlayStats {
  long long positions = 0;
  int max_len = 0;
  bool budget_exhausted = false;
};

// Exhaustive depth-first enumeration of the play tree from p.
PlayStats all_plays(const Position& p, Variant var, const Caps& caps, bool exotic);

}  // namespace llg
