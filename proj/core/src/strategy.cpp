#include "llg/strategy.hpp"

#include <algorithm>

#include "llg/errors.hpp"
#include "llg/transform.hpp"

namespace llg {

std::string to_string(Winner w) {
  switch (w) {
    case Winner::ProponentWins: return "proponent-wins";
    case Winner::OpponentWins: return "opponent-wins";
    case Winner::Unknown: return "unknown";
  }
  return "?";
}

std::string decorated_error(const DecoratedPosition& d, TeamMask own) {
  if (auto err = position_error(d.pos); !err.empty()) return err;
  // An own vertex without a proof is merely stuck (it loses when the token
  // reaches it); a mismatched proof is an invariant breach.
  for (const auto& v : d.pos.vertices) {
    if (!(own & mask_of(v.team))) continue;
    auto it = d.proofs.find(v.id);
    if (it == d.proofs.end()) continue;
    if (!multiset_equal(it->second->conclusion, sequent_of(d.pos, v.id)))
      return "vertex " + std::to_string(v.id) + ": proof concludes [" +
             to_string(it->second->conclusion) + "] but sees [" +
             to_string(sequent_of(d.pos, v.id)) + "]";
  }
  return "";
}

namespace {

// First non-exchange step of a proof.
const Proof* strip_exchanges(const Proof* p) {
  while (p->rule.tag == RuleTag::Exchange) p = p->premises[0].get();
  return p;
}

// Canonical sort key for an adjacent edge: used to tie-break between
// formula-equal candidates so the selector is iso-stable.
std::string edge_key(const Position& p, int v, int ei) {
  const auto& e = p.edges[static_cast<std::size_t>(ei)];
  std::string k = e.src == v ? "o" : "i";
  k += '[';
  k += to_string(e.label);
  k += ']';
  // Code of the far-side subtree, rooted at the far end.
  struct Rec {
    const Position& p;
    std::string operator()(int w, int pe) const {
      std::vector<std::string> kids;
      for (int j : adjacent_edges(p, w)) {
        if (j == pe) continue;
        const auto& je = p.edges[static_cast<std::size_t>(j)];
        std::string kk = je.src == w ? "o" : "i";
        kk += '[';
        kk += to_string(je.label);
        kk += ']';
        kk += (*this)(far_end(je, w), j);
        kids.push_back(std::move(kk));
      }
      std::sort(kids.begin(), kids.end());
      std::string out = "(";
      out += to_string(team_of(p, w));
      for (auto& s : kids) out += s;
      out += ')';
      return out;
    }
  };
  k += Rec{p}(far_end(e, v), ei);
  return k;
}

// Contribution of edge ei to the sequent of v.
Formula contribution(const Position& p, int v, int ei) {
  const auto& e = p.edges[static_cast<std::size_t>(ei)];
  return e.src == v ? e.label : dual(e.label);
}

// The adjacent edge of v whose contribution equals f; among formula-equal
// candidates, the canonically smallest not yet claimed.
int match_edge(const Position& p, int v, const Formula& f, std::vector<int>& claimed) {
  std::vector<std::pair<std::string, int>> cands;
  for (int ei : adjacent_edges(p, v)) {
    if (std::find(claimed.begin(), claimed.end(), ei) != claimed.end()) continue;
    if (contribution(p, v, ei) == f) cands.emplace_back(edge_key(p, v, ei), ei);
  }
  if (cands.empty())
    throw GameError("decoration invariant breach: no edge carries " + to_string(f));
  auto best = std::min_element(cands.begin(), cands.end());
  claimed.push_back(best->second);
  return best->second;
}

int find_formula(const Sequent& s, const Formula& f) {
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] == f) return static_cast<int>(i);
  throw GameError("decoration invariant breach: conclusion lacks " + to_string(f));
}

}  // namespace

ProofStrategy::ProofStrategy(DecoratedPosition d, TeamMask own)
    : d_(std::move(d)), own_(own) {
  if (auto err = decorated_error(d_, own_); !err.empty())
    throw GameError("bad decorated position: " + err);
}

std::optional<Move> ProofStrategy::propose() const {
  const Position& p = d_.pos;
  const int v = p.token;
  if (!token_is_own()) throw GameError("propose: token is not held by an own vertex");
  auto it = d_.proofs.find(v);
  if (it == d_.proofs.end()) return std::nullopt;
  const Proof* q = strip_exchanges(it->second.get());
  const RuleInstance& r = q->rule;
  std::vector<int> claimed;
  switch (r.tag) {
    case RuleTag::One: {
      auto adj = adjacent_edges(p, v);
      if (adj.size() != 1) return std::nullopt;
      return Move{Move::Kind::OneDelete, adj[0], 0, {}};
    }
    case RuleTag::PlusL:
    case RuleTag::PlusR: {
      int ei = match_edge(p, v, q->conclusion[static_cast<std::size_t>(r.principal)], claimed);
      return Move{r.tag == RuleTag::PlusL ? Move::Kind::PlusLeft : Move::Kind::PlusRight,
                  ei, 0, {}};
    }
    case RuleTag::Dereliction: {
      int ei = match_edge(p, v, q->conclusion[static_cast<std::size_t>(r.principal)], claimed);
      return Move{Move::Kind::ExpoChoice, ei, r.arity, {}};
    }
    case RuleTag::NewTens: {
      // Map every conclusion position to an edge, then read the partition
      // off the rule's split.
      const Sequent& c = q->conclusion;
      std::map<int, int> edge_part;  // edge index -> 0 (v1) / 1 (v2) / 2 (shared)
      int principal_edge = -1;
      for (std::size_t j = 0; j < c.size(); ++j) {
        int ei = match_edge(p, v, c[j], claimed);
        if (static_cast<int>(j) == r.principal) {
          principal_edge = ei;
        } else {
          switch (r.split[j]) {
            case SplitPart::Gamma: edge_part[ei] = 0; break;
            case SplitPart::Delta: edge_part[ei] = 1; break;
            case SplitPart::Theta: edge_part[ei] = 2; break;
            default: break;
          }
        }
      }
      Move m{Move::Kind::TensorSplit, principal_edge, 0, {}};
      for (int ei : adjacent_edges(p, v))
        if (ei != principal_edge) m.part.push_back(edge_part.at(ei));
      return m;
    }
    case RuleTag::Bot:
    case RuleTag::Par:
    case RuleTag::With:
    case RuleTag::Top:
    case RuleTag::Promotion: {
      // Negative first rule: pass the token along the input edge carrying
      // the dual of the principal formula.
      Formula principal = q->conclusion[static_cast<std::size_t>(r.principal)];
      int ei = match_edge(p, v, principal, claimed);
      const auto& e = p.edges[static_cast<std::size_t>(ei)];
      if (e.dst != v)
        throw GameError("negative principal matched an output edge");
      return Move{Move::Kind::NegativePass, ei, 0, {}};
    }
    default:
      throw GameError("proof rule " + to_string(r.tag) + " has no move mapping");
  }
}

void ProofStrategy::advance(const Move& m) {
  const Position before = d_.pos;
  const PosEdge e = before.edges[static_cast<std::size_t>(m.edge)];
  const int active = before.token;
  const bool active_own = own(team_of(before, active));

  Applied ap = apply_move(before, m);

  std::map<int, ProofPtr> np;
  for (const auto& [nid, oid] : ap.origin) {
    auto it = d_.proofs.find(oid);
    if (it != d_.proofs.end() && own(team_of(ap.pos, nid))) np[nid] = it->second;
  }

  // Active own vertex: step the proof along the rule that matches the move.
  if (active_own && m.kind != Move::Kind::NegativePass) {
    auto it = d_.proofs.find(active);
    if (it == d_.proofs.end()) throw GameError("advance: active own vertex undecorated");
    const Proof* q = strip_exchanges(it->second.get());
    const RuleInstance& r = q->rule;
    switch (m.kind) {
      case Move::Kind::OneDelete:
        if (r.tag != RuleTag::One) throw GameError("advance: move does not follow the proof");
        break;  // vertex gone
      case Move::Kind::PlusLeft:
        if (r.tag != RuleTag::PlusL) throw GameError("advance: move does not follow the proof");
        np[active] = q->premises[0];
        break;
      case Move::Kind::PlusRight:
        if (r.tag != RuleTag::PlusR) throw GameError("advance: move does not follow the proof");
        np[active] = q->premises[0];
        break;
      case Move::Kind::ExpoChoice: {
        if (r.tag != RuleTag::Dereliction || r.arity != m.expo_n)
          throw GameError("advance: move does not follow the proof");
        np[active] = q->premises[0];
        break;
      }
      case Move::Kind::TensorSplit: {
        if (r.tag != RuleTag::NewTens) throw GameError("advance: move does not follow the proof");
        // The two split vertices are the only fresh ids mapping back to the
        // active vertex; the lower id carries the gamma/theta/A premise.
        int v1 = -1, v2 = -1;
        for (const auto& [nid, oid] : ap.origin)
          if (oid == active && nid != active) {
            if (v1 < 0) v1 = nid;
            else v2 = nid;
          }
        if (v1 > v2) std::swap(v1, v2);
        if (v1 < 0 || v2 < 0) throw GameError("advance: split vertices not found");
        np[v1] = q->premises[0];
        np[v2] = q->premises[1];
        break;
      }
      default:
        throw GameError("advance: unsupported own move kind");
    }
  }

  // Passive far-end own vertex: anodyne rewrite of the affected formula.
  if (m.kind != Move::Kind::NegativePass) {
    int w = e.dst;
    if (w != active && has_vertex(ap.pos, w) && own(team_of(ap.pos, w)) && np.count(w)) {
      ProofPtr pw = np[w];
      switch (m.kind) {
        case Move::Kind::OneDelete:
          np[w] = anodyne(AnodyneKind::Bot, find_formula(pw->conclusion, Formula::bot()), 0, pw);
          break;
        case Move::Kind::TensorSplit:
          np[w] = anodyne(AnodyneKind::Par, find_formula(pw->conclusion, dual(e.label)), 0, pw);
          break;
        case Move::Kind::PlusLeft:
          np[w] = anodyne(AnodyneKind::WithLeft, find_formula(pw->conclusion, dual(e.label)), 0, pw);
          break;
        case Move::Kind::PlusRight:
          np[w] = anodyne(AnodyneKind::WithRight, find_formula(pw->conclusion, dual(e.label)), 0, pw);
          break;
        case Move::Kind::ExpoChoice:
          np[w] = anodyne(AnodyneKind::Bang, find_formula(pw->conclusion, dual(e.label)),
                          m.expo_n, pw);
          break;
        case Move::Kind::NaiveDereliction:
        case Move::Kind::NaiveWeakening:
        case Move::Kind::Exotic:
          throw GameError("advance: move kind outside the strategy game");
        default:
          break;
      }
    }
  }

  d_.pos = std::move(ap.pos);
  d_.proofs = std::move(np);
  if (auto err = decorated_error(d_, own_); !err.empty())
    throw GameError("advance broke the decoration invariant: " + err);
}

ProofStrategy strategy_from_proofs(const DecoratedPosition& d) { return ProofStrategy(d); }

ProofStrategy intersect(const ProofStrategy& a, const ProofStrategy& b) {
  if (a.own_mask() & b.own_mask()) throw GameError("intersect: overlapping teams");
  if (canonical_form(a.position()) != canonical_form(b.position()) ||
      !(a.position().token == b.position().token))
    throw GameError("intersect: strategies disagree on the position");
  DecoratedPosition d;
  d.pos = a.position();
  d.proofs = a.proofs();
  for (const auto& [k, v] : b.proofs()) d.proofs[k] = v;
  return ProofStrategy(std::move(d), a.own_mask() | b.own_mask());
}

namespace {

Winner explore(ProofStrategy st, const Caps& caps, long long& budget) {
  for (;;) {
    if (--budget < 0) throw BudgetExhausted("check_winning budget exceeded");
    if (st.token_is_own()) {
      auto m = st.propose();
      if (!m) return Winner::OpponentWins;  // not total, hence not winning
      st.advance(*m);
      continue;
    }
    MoveList ml = enumerate_moves(st.position(), Variant::LLTN, caps, false);
    if (ml.moves.empty()) return ml.truncated ? Winner::Unknown : Winner::ProponentWins;
    Winner acc = Winner::ProponentWins;
    for (const auto& m : ml.moves) {
      ProofStrategy child = st;
      child.advance(m);
      Winner w = explore(std::move(child), caps, budget);
      if (w == Winner::OpponentWins) return Winner::OpponentWins;
      if (w == Winner::Unknown) acc = Winner::Unknown;
    }
    return ml.truncated ? Winner::Unknown : acc;
  }
}

}  // namespace

Winner check_winning(const ProofStrategy& s, const Caps& caps) {
  long long budget = caps.node_budget;
  return explore(s, caps, budget);
}

namespace {

void collect_plays(const ProofStrategy& st, const Caps& caps, std::vector<Move>& prefix,
                   std::vector<std::vector<Move>>& out, long long& budget) {
  if (--budget < 0) throw BudgetExhausted("strategy_plays budget exceeded");
  out.push_back(prefix);
  std::vector<Move> moves;
  if (st.token_is_own()) {
    if (auto m = st.propose()) moves.push_back(*m);
  } else {
    moves = enumerate_moves(st.position(), Variant::LLTN, caps, false).moves;
  }
  for (const auto& m : moves) {
    ProofStrategy child = st;
    child.advance(m);
    prefix.push_back(m);
    collect_plays(child, caps, prefix, out, budget);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<std::vector<Move>> strategy_plays(const ProofStrategy& s, const Caps& caps) {
  std::vector<std::vector<Move>> out;
  std::vector<Move> prefix;
  long long budget = caps.node_budget;
  collect_plays(s, caps, prefix, out, budget);
  return out;
}

}  // namespace llg
