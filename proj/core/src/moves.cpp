#include "llg/moves.hpp"

#include <algorithm>
#include <set>

#include "llg/errors.hpp"

namespace llg {

std::string to_string(Move::Kind k) {
  switch (k) {
    case Move::Kind::NegativePass: return "pass";
    case Move::Kind::OneDelete: return "one";
    case Move::Kind::TensorSplit: return "tensor";
    case Move::Kind::PlusLeft: return "plus_left";
    case Move::Kind::PlusRight: return "plus_right";
    case Move::Kind::NaiveDereliction: return "dereliction";
    case Move::Kind::NaiveWeakening: return "weakening";
    case Move::Kind::ExpoChoice: return "expo";
    case Move::Kind::Exotic: return "exotic";
  }
  return "?";
}

std::string describe(const Move& m, const Position& p) {
  const auto& e = p.edges[static_cast<std::size_t>(m.edge)];
  std::string out = to_string(m.kind) + " on v" + std::to_string(e.src) + "->v" +
                    std::to_string(e.dst) + " : " + to_string(e.label);
  if (m.kind == Move::Kind::ExpoChoice) out += " (n=" + std::to_string(m.expo_n) + ")";
  if (m.kind == Move::Kind::TensorSplit) {
    out += " [";
    for (std::size_t i = 0; i < m.part.size(); ++i) {
      if (i) out += ',';
      out += m.part[i] == 0 ? "v1" : m.part[i] == 1 ? "v2" : "both";
    }
    out += ']';
  }
  return out;
}

MoveList enumerate_moves(const Position& p, Variant var, const Caps& caps, bool exotic) {
  MoveList out;
  const int v = p.token;
  const std::vector<int> adj = adjacent_edges(p, v);
  for (int ei : adj) {
    const auto& e = p.edges[static_cast<std::size_t>(ei)];
    if (e.dst == v) {
      out.moves.push_back({Move::Kind::NegativePass, ei, 0, {}});
      continue;
    }
    switch (e.label.tag()) {
      case Tag::One:
        if (adj.size() == 1) out.moves.push_back({Move::Kind::OneDelete, ei, 0, {}});
        if (exotic) out.moves.push_back({Move::Kind::Exotic, ei, 0, {}});
        break;
      case Tag::Plus:
        out.moves.push_back({Move::Kind::PlusLeft, ei, 0, {}});
        out.moves.push_back({Move::Kind::PlusRight, ei, 0, {}});
        break;
      case Tag::WhyNot:
        if (var == Variant::Naive) {
          out.moves.push_back({Move::Kind::NaiveDereliction, ei, 0, {}});
          out.moves.push_back({Move::Kind::NaiveWeakening, ei, 0, {}});
        } else {
          for (int n = 0; n <= caps.expo_cap; ++n)
            out.moves.push_back({Move::Kind::ExpoChoice, ei, n, {}});
          out.truncated = true;
        }
        break;
      case Tag::Tensor: {
        std::vector<int> others;
        for (int o : adj)
          if (o != ei) others.push_back(o);
        std::vector<int> assign(others.size(), 0);
        for (;;) {
          Move m{Move::Kind::TensorSplit, ei, 0, assign};
          out.moves.push_back(std::move(m));
          std::size_t o = 0;
          while (o < assign.size()) {
            const auto& oe = p.edges[static_cast<std::size_t>(others[o])];
            int limit = (oe.src == v && oe.label.is(Tag::WhyNot)) ? 2 : 1;
            if (assign[o] < limit) {
              ++assign[o];
              std::fill(assign.begin(), assign.begin() + static_cast<std::ptrdiff_t>(o), 0);
              break;
            }
            ++o;
          }
          if (o == assign.size()) break;
        }
        break;
      }
      default:
        break;  // 0-labelled outputs have no moves
    }
  }
  return out;
}

namespace {

Position erase_vertices(const Position& p, const std::set<int>& gone,
                        const std::set<int>& gone_edges) {
  Position out;
  out.token = p.token;
  for (const auto& v : p.vertices)
    if (!gone.count(v.id)) out.vertices.push_back(v);
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    if (gone_edges.count(static_cast<int>(i))) continue;
    const auto& e = p.edges[i];
    if (gone.count(e.src) || gone.count(e.dst)) continue;
    out.edges.push_back(e);
  }
  return out;
}

PosEdge normal_edge(int src, int dst, Formula label) {
  if (positive(label)) return {src, dst, std::move(label)};
  return {dst, src, dual(label)};
}

void check_result(const Position& p) {
  if (auto err = position_error(p); !err.empty())
    throw GameError("move produced an ill-formed position: " + err);
}

}  // namespace

Applied apply_move(const Position& p, const Move& m) {
  if (m.edge < 0 || m.edge >= static_cast<int>(p.edges.size()))
    throw GameError("apply_move: bad edge index");
  const PosEdge e = p.edges[static_cast<std::size_t>(m.edge)];
  Applied out;
  for (const auto& v : p.vertices) out.origin[v.id] = v.id;

  switch (m.kind) {
    case Move::Kind::NegativePass: {
      if (e.dst != p.token) throw GameError("pass: not an input edge of the active vertex");
      out.pos = p;
      out.pos.token = e.src;
      break;
    }
    case Move::Kind::OneDelete: {
      if (e.src != p.token || !e.label.is(Tag::One))
        throw GameError("one: not an output 1-edge of the active vertex");
      if (adjacent_edges(p, e.src).size() != 1)
        throw GameError("one: the 1-edge is not the sole adjacent edge");
      out.pos = erase_vertices(p, {e.src}, {m.edge});
      out.pos.token = e.dst;
      out.origin.erase(e.src);
      break;
    }
    case Move::Kind::PlusLeft:
    case Move::Kind::PlusRight: {
      if (e.src != p.token || !e.label.is(Tag::Plus)) throw GameError("plus: bad edge");
      Formula nl = m.kind == Move::Kind::PlusLeft ? e.label.left() : e.label.right();
      out.pos = p;
      out.pos.edges[static_cast<std::size_t>(m.edge)] = normal_edge(e.src, e.dst, nl);
      out.pos.token = e.dst;
      break;
    }
    case Move::Kind::NaiveDereliction: {
      if (e.src != p.token || !e.label.is(Tag::WhyNot)) throw GameError("dereliction: bad edge");
      out.pos = p;
      out.pos.edges[static_cast<std::size_t>(m.edge)] =
          normal_edge(e.src, e.dst, e.label.child());
      out.pos.token = e.dst;
      break;
    }
    case Move::Kind::NaiveWeakening: {
      if (e.src != p.token || !e.label.is(Tag::WhyNot)) throw GameError("weakening: bad edge");
      auto comp = component_of(p, e.dst, m.edge);
      std::set<int> gone(comp.begin(), comp.end());
      out.pos = erase_vertices(p, gone, {m.edge});
      out.pos.token = p.token;
      for (int g : gone) out.origin.erase(g);
      break;
    }
    case Move::Kind::ExpoChoice: {
      if (e.src != p.token || !e.label.is(Tag::WhyNot)) throw GameError("expo: bad edge");
      if (m.expo_n < 0) throw GameError("expo: negative arity");
      Formula nl = power(dual(e.label.child()), m.expo_n, PowerMode::Tensor);
      out.pos = p;
      out.pos.edges[static_cast<std::size_t>(m.edge)] = normal_edge(e.dst, e.src, nl);
      out.pos.token = e.dst;
      break;
    }
    case Move::Kind::Exotic: {
      if (e.src != p.token || !e.label.is(Tag::One)) throw GameError("exotic: bad edge");
      out.pos = p;
      out.pos.edges[static_cast<std::size_t>(m.edge)] = {e.dst, e.src, Formula::zero()};
      out.pos.token = e.dst;
      break;
    }
    case Move::Kind::TensorSplit: {
      if (e.src != p.token || !e.label.is(Tag::Tensor)) throw GameError("tensor: bad edge");
      const int v = e.src, w = e.dst;
      std::vector<int> others;
      for (int o : adjacent_edges(p, v))
        if (o != m.edge) others.push_back(o);
      if (m.part.size() != others.size())
        throw GameError("tensor: partition size mismatch");
      int next = max_vertex_id(p) + 1;
      const int v1 = next++, v2 = next++;
      const Team vt = team_of(p, v);

      Position np;
      np.token = w;
      for (const auto& x : p.vertices)
        if (x.id != v) np.vertices.push_back(x);
      np.vertices.push_back({v1, vt});
      np.vertices.push_back({v2, vt});
      out.origin.erase(v);
      out.origin[v1] = v;
      out.origin[v2] = v;

      std::set<int> adjacent_set(others.begin(), others.end());
      for (std::size_t i = 0; i < p.edges.size(); ++i) {
        if (static_cast<int>(i) == m.edge) continue;
        PosEdge ne = p.edges[i];
        if (adjacent_set.count(static_cast<int>(i))) {
          std::size_t rank = static_cast<std::size_t>(
              std::find(others.begin(), others.end(), static_cast<int>(i)) - others.begin());
          int part = m.part[rank];
          if (part == 2) {
            const auto& oe = p.edges[i];
            if (oe.src != v || !oe.label.is(Tag::WhyNot))
              throw GameError("tensor: shared part must be an output ?-edge");
          }
          int target = m.part[rank] == 1 ? v2 : v1;
          if (ne.src == v) ne.src = target;
          if (ne.dst == v) ne.dst = target;
        }
        np.edges.push_back(ne);
      }
      np.edges.push_back(normal_edge(v1, w, e.label.left()));
      np.edges.push_back(normal_edge(v2, w, e.label.right()));

      // Second copies of the shared subtrees, attached to v2.
      for (std::size_t r = 0; r < others.size(); ++r) {
        if (m.part[r] != 2) continue;
        const PosEdge& oe = p.edges[static_cast<std::size_t>(others[r])];
        int faroot = far_end(oe, v);
        auto comp = component_of(p, faroot, others[r]);
        std::sort(comp.begin(), comp.end());
        std::map<int, int> remap;
        for (int cv : comp) {
          remap[cv] = next++;
          np.vertices.push_back({remap[cv], team_of(p, cv)});
          out.origin[remap[cv]] = cv;
        }
        std::set<int> in_comp(comp.begin(), comp.end());
        for (const auto& ce : p.edges)
          if (in_comp.count(ce.src) && in_comp.count(ce.dst))
            np.edges.push_back({remap[ce.src], remap[ce.dst], ce.label});
        PosEdge attach = oe;
        attach.src = attach.src == v ? v2 : remap[attach.src];
        attach.dst = attach.dst == v ? v2 : remap[attach.dst];
        np.edges.push_back(attach);
      }
      out.pos = std::move(np);
      break;
    }
  }
  check_result(out.pos);
  return out;
}

PlayStats all_plays(const Position& p, Variant var, const Caps& caps, bool exotic) {
  PlayStats st;
  struct Frame {
    Position pos;
    std::vector<Move> moves;
    std::size_t next = 0;
  };
  std::vector<Frame> stack;
  stack.push_back({p, enumerate_moves(p, var, caps, exotic).moves, 0});
  st.positions = 1;
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.next >= f.moves.size()) {
      stack.pop_back();
      continue;
    }
    const Move m = f.moves[f.next++];
    if (st.positions >= caps.node_budget) {
      st.budget_exhausted = true;
      return st;
    }
    Position nxt = apply_move(f.pos, m).pos;
    ++st.positions;
    std::vector<Move> nmoves = enumerate_moves(nxt, var, caps, exotic).moves;
    stack.push_back({std::move(nxt), std::move(nmoves), 0});
    st.max_len = std::max(st.max_len, static_cast<int>(stack.size()) - 1);
  }
  return st;
}

}  // namespace llg
