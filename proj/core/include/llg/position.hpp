#pragma once

#include <string>
#include <vector>

#include "llg/formula.hpp"

namespace llg {

enum class Team : std::uint8_t { Opponent = 0, Proponent = 1, ProponentPrime = 2 };

std::string to_string(Team t);

struct PosVertex {
  int id;
  Team team;
};

struct PosEdge {
  int src, dst;
  Formula label;
};

// A punctured, directed, signed, normally labelled tree: every label is a
// positive atom-free formula, the underlying undirected graph is a tree, and
// `token` names the active vertex.
struct Position {
  std::vector<PosVertex> vertices;
  std::vector<PosEdge> edges;
  int token = 0;
};

// Reverses every negatively labelled edge, dualizing its label.
Position normalize(Position raw);

// Empty string when well-formed; otherwise a description of the violation.
std::string position_error(const Position& p);
// normalize + position_error, throwing GameError on failure.
Position make_position(std::vector<PosVertex> vs, std::vector<PosEdge> es, int token);

bool has_vertex(const Position& p, int v);
Team team_of(const Position& p, int v);
int max_vertex_id(const Position& p);
// Indices into p.edges of the edges adjacent to v, ascending.
std::vector<int> adjacent_edges(const Position& p, int v);
int far_end(const PosEdge& e, int v);

// The sequent a vertex sees: its adjacent edges in edge-index order, output
// edges contributing their label and input edges the dual.
Sequent sequent_of(const Position& p, int v);

// Vertex ids of the component of `start` when `blocked_edge` is removed.
std::vector<int> component_of(const Position& p, int start, int blocked_edge);

// Order-independent code rooted at the token: equal codes iff isomorphic.
std::string canonical_form(const Position& p);
bool iso(const Position& a, const Position& b);

std::string render(const Position& p);  // human-readable listing

}  // namespace llg
