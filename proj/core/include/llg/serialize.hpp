#pragma once

#include <string>

#include "llg/position.hpp"
#include "llg/proof.hpp"
#include "llg/validity.hpp"

namespace llg {

// JSON text formats. Formulas are grammar strings; proofs are trees with
// {conclusion, rule, premises | family}; positions are {vertices, edges,
// token}; witnesses add ports.

std::string proof_to_json(const ProofPtr& p);
ProofPtr proof_from_json(const std::string& text);

std::string position_to_json(const Position& p);
Position position_from_json(const std::string& text);

std::string witness_to_json(const Witness& w);
Witness witness_from_json(const std::string& text);

// Graphviz export: teams as node shapes, the token as a doubled border.
std::string position_to_dot(const Position& p);

}  // namespace llg
