#include "llg/position.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "llg/errors.hpp"

namespace llg {

std::string to_string(Team t) {
  switch (t) {
    case Team::Opponent: return "O";
    case Team::Proponent: return "P";
    case Team::ProponentPrime: return "P'";
  }
  return "?";
}

Position normalize(Position raw) {
  for (auto& e : raw.edges) {
    if (!positive(e.label)) {
      std::swap(e.src, e.dst);
      e.label = dual(e.label);
    }
  }
  return raw;
}

std::string position_error(const Position& p) {
  std::set<int> ids;
  for (const auto& v : p.vertices) {
    if (!ids.insert(v.id).second) return "duplicate vertex id " + std::to_string(v.id);
  }
  if (p.vertices.empty()) return "empty position";
  if (!ids.count(p.token)) return "token names no vertex";
  for (const auto& e : p.edges) {
    if (!ids.count(e.src) || !ids.count(e.dst)) return "edge endpoint missing";
    if (e.src == e.dst) return "self-loop";
    if (!positive(e.label)) return "negative edge label " + to_string(e.label);
    if (!atom_free(e.label)) return "edge label contains atoms";
  }
  if (p.edges.size() + 1 != p.vertices.size())
    return "edge count does not match a tree";
  // Connectivity.
  std::map<int, std::vector<int>> adj;
  for (const auto& e : p.edges) {
    adj[e.src].push_back(e.dst);
    adj[e.dst].push_back(e.src);
  }
  std::set<int> seen{p.vertices[0].id};
  std::vector<int> stack{p.vertices[0].id};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (seen.insert(w).second) stack.push_back(w);
  }
  if (seen.size() != p.vertices.size()) return "position is not connected";
  return "";
}

Position make_position(std::vector<PosVertex> vs, std::vector<PosEdge> es, int token) {
  Position p{std::move(vs), std::move(es), token};
  p = normalize(std::move(p));
  if (auto err = position_error(p); !err.empty()) throw GameError("bad position: " + err);
  return p;
}

bool has_vertex(const Position& p, int v) {
  return std::any_of(p.vertices.begin(), p.vertices.end(),
                     [&](const PosVertex& x) { return x.id == v; });
}

Team team_of(const Position& p, int v) {
  for (const auto& x : p.vertices)
    if (x.id == v) return x.team;
  throw GameError("no such vertex " + std::to_string(v));
}

int max_vertex_id(const Position& p) {
  int m = -1;
  for (const auto& x : p.vertices) m = std::max(m, x.id);
  return m;
}

std::vector<int> adjacent_edges(const Position& p, int v) {
  std::vector<int> out;
  for (std::size_t i = 0; i < p.edges.size(); ++i)
    if (p.edges[i].src == v || p.edges[i].dst == v) out.push_back(static_cast<int>(i));
  return out;
}

int far_end(const PosEdge& e, int v) { return e.src == v ? e.dst : e.src; }

Sequent sequent_of(const Position& p, int v) {
  Sequent out;
  for (const auto& e : p.edges) {
    if (e.src == v)
      out.push_back(e.label);
    else if (e.dst == v)
      out.push_back(dual(e.label));
  }
  return out;
}

std::vector<int> component_of(const Position& p, int start, int blocked_edge) {
  std::set<int> seen{start};
  std::vector<int> stack{start};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (std::size_t i = 0; i < p.edges.size(); ++i) {
      if (static_cast<int>(i) == blocked_edge) continue;
      const auto& e = p.edges[i];
      int w;
      if (e.src == v) w = e.dst;
      else if (e.dst == v) w = e.src;
      else continue;
      if (seen.insert(w).second) stack.push_back(w);
    }
  }
  return {seen.begin(), seen.end()};
}

namespace {

std::string code_of(const Position& p, int v, int parent_edge) {
  std::vector<std::string> kids;
  for (int ei : adjacent_edges(p, v)) {
    if (ei == parent_edge) continue;
    const auto& e = p.edges[static_cast<std::size_t>(ei)];
    int w = far_end(e, v);
    std::string k = e.src == v ? "o" : "i";
    k += '[';
    k += to_string(e.label);
    k += ']';
    k += code_of(p, w, ei);
    kids.push_back(std::move(k));
  }
  std::sort(kids.begin(), kids.end());
  std::string out = "(";
  out += to_string(team_of(p, v));
  for (auto& k : kids) out += k;
  out += ')';
  return out;
}

}  // namespace

std::string canonical_form(const Position& p) { return code_of(p, p.token, -1); }

bool iso(const Position& a, const Position& b) {
  return canonical_form(a) == canonical_form(b);
}

std::string render(const Position& p) {
  std::string out;
  for (const auto& v : p.vertices) {
    out += "v" + std::to_string(v.id) + " [" + to_string(v.team) + "]";
    if (v.id == p.token) out += " <token>";
    out += " :";
    bool any = false;
    for (const auto& e : p.edges) {
      if (e.src == v.id) {
        out += "  ->v" + std::to_string(e.dst) + " " + to_string(e.label);
        any = true;
      } else if (e.dst == v.id) {
        out += "  <-v" + std::to_string(e.src) + " " + to_string(e.label);
        any = true;
      }
    }
    if (!any) out += "  (isolated)";
    out += '\n';
  }
  return out;
}

}  // namespace llg
