#pragma once

#include <stdexcept>
#include <string>

namespace llg {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Syntax error in the formula / sequent grammar. `position` is a byte offset
// into the input.
struct ParseError : Error {
  ParseError(const std::string& msg, std::size_t pos)
      : Error(msg + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
  std::size_t position;
};

// Misuse of a proof constructor or transformation (shape mismatch, wrong
// rule arity, and the like).
struct ProofError : Error {
  using Error::Error;
};

// Ill-formed position or illegal move.
struct GameError : Error {
  using Error::Error;
};

// An enumeration ran past its node budget. Distinct from a capped result:
// hitting the budget aborts the computation instead of truncating it.
struct BudgetExhausted : Error {
  using Error::Error;
};

}  // namespace llg
