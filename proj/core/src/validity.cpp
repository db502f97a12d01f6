#include "llg/validity.hpp"

#include <algorithm>

#include "llg/errors.hpp"

namespace llg {

Position assemble(const Witness& w, const std::vector<Position>& attached) {
  if (attached.size() != w.ports.size())
    throw GameError("assemble: one attachment per port required");
  Position out = w.base;
  int next = max_vertex_id(out) + 1;
  for (std::size_t i = 0; i < attached.size(); ++i) {
    const Position& v = attached[i];
    std::map<int, int> remap;
    for (const auto& x : v.vertices) {
      remap[x.id] = next++;
      out.vertices.push_back({remap[x.id], Team::Opponent});
    }
    for (const auto& e : v.edges)
      out.edges.push_back({remap[e.src], remap[e.dst], e.label});
    out.edges.push_back({w.ports[i].vertex, remap[v.token], w.ports[i].label});
  }
  out = normalize(std::move(out));
  if (auto err = position_error(out); !err.empty())
    throw GameError("assemble produced a bad position: " + err);
  return out;
}

std::string ValidityReport::summary() const {
  return std::string(pass ? "PASS" : "FAIL") + " (proponent-wins: " + std::to_string(pw) +
         ", opponent-wins: " + std::to_string(ow) + ", unknown: " + std::to_string(unknown) +
         ")";
}

std::string ValidityReport::render() const {
  std::string out;
  for (const auto& c : cases) {
    out += "V(";
    for (std::size_t i = 0; i < c.attachment.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(c.attachment[i]);
    }
    out += ") token=v" + std::to_string(c.token) + " -> " + to_string(c.winner) + "\n";
  }
  out += summary();
  out += '\n';
  return out;
}

ValidityReport validity_check(const Sequent& gamma, const Witness& w,
                              const std::vector<Position>& corpus,
                              const ValidityOptions& opt) {
  if (gamma.size() != w.ports.size())
    throw GameError("validity_check: sequent arity differs from the port count");
  for (std::size_t i = 0; i < gamma.size(); ++i)
    if (!(gamma[i] == w.ports[i].label))
      throw GameError("validity_check: port " + std::to_string(i) + " carries " +
                      to_string(w.ports[i].label) + ", sequent expects " +
                      to_string(gamma[i]));
  if (!atom_free(gamma)) throw GameError("validity_check: sequent must be atom-free");
  if (corpus.empty()) throw GameError("validity_check: empty corpus");

  ValidityReport rep;
  rep.pass = true;
  const std::size_t nports = w.ports.size();
  std::vector<int> tuple(nports, 0);
  Solver solver({opt.variant, opt.caps, false, w.own});
  for (;;) {
    std::vector<Position> attached;
    attached.reserve(nports);
    for (std::size_t i = 0; i < nports; ++i)
      attached.push_back(corpus[static_cast<std::size_t>(tuple[i])]);
    Position composite = assemble(w, attached);
    for (const auto& vx : composite.vertices) {
      Position start = composite;
      start.token = vx.id;
      Winner win;
      if (opt.use_decorations && !w.proofs.empty()) {
        DecoratedPosition d{start, w.proofs};
        win = check_winning(ProofStrategy(std::move(d), w.own), opt.caps);
      } else {
        win = solver.run(start);
      }
      rep.cases.push_back({tuple, vx.id, win});
      switch (win) {
        case Winner::ProponentWins: ++rep.pw; break;
        case Winner::OpponentWins: ++rep.ow; rep.pass = false; break;
        case Winner::Unknown: ++rep.unknown; rep.pass = false; break;
      }
    }
    if (nports == 0) break;
    std::size_t i = 0;
    while (i < nports) {
      if (tuple[i] + 1 < static_cast<int>(corpus.size())) {
        ++tuple[i];
        std::fill(tuple.begin(), tuple.begin() + static_cast<std::ptrdiff_t>(i), 0);
        break;
      }
      ++i;
    }
    if (i == nports) break;
  }
  return rep;
}

Witness soundness_pipeline(const ProofPtr& p, bool atoms_enabled) {
  (void)atoms_enabled;
  if (!atom_free(p->conclusion))
    throw GameError("soundness_pipeline: game positions are atom-free");
  if (!is_bounded(p)) throw GameError("soundness_pipeline: proof must be bounded");

  Witness w;
  if (p->rule.tag != RuleTag::Cut) {
    w.base.vertices = {{0, Team::Proponent}};
    w.base.token = 0;
    for (const auto& f : p->conclusion) w.ports.push_back({0, f});
    w.proofs[0] = p;
    return w;
  }
  const RuleInstance& r = p->rule;
  Formula a = *r.cut_formula;
  w.base.vertices = {{0, Team::Proponent}, {1, Team::Proponent}};
  w.base.token = 0;
  w.base.edges.push_back({0, 1, a});
  w.base = normalize(std::move(w.base));
  for (std::size_t i = 0; i < p->conclusion.size(); ++i)
    w.ports.push_back({r.split[i] == SplitPart::Gamma ? 0 : 1, p->conclusion[i]});
  w.proofs[0] = p->premises[0];  // gamma ++ [a]
  w.proofs[1] = p->premises[1];  // [dual a] ++ delta
  return w;
}

Witness cut_compose_witness(const Witness& w1, int port1, const Witness& w2, int port2) {
  const Formula& a = w1.ports[static_cast<std::size_t>(port1)].label;
  if (!(w2.ports[static_cast<std::size_t>(port2)].label == dual(a)))
    throw GameError("cut_compose_witness: cut formula mismatch");
  if (w1.own != kProponentMask || w2.own != kProponentMask)
    throw GameError("cut_compose_witness: inputs must be single-team witnesses");

  Witness out;
  out.base = w1.base;
  int offset = max_vertex_id(w1.base) + 1;
  for (const auto& v : w2.base.vertices) {
    Team t = v.team == Team::Proponent ? Team::ProponentPrime : v.team;
    out.base.vertices.push_back({v.id + offset, t});
  }
  for (const auto& e : w2.base.edges)
    out.base.edges.push_back({e.src + offset, e.dst + offset, e.label});
  out.base.edges.push_back(
      {w1.ports[static_cast<std::size_t>(port1)].vertex,
       w2.ports[static_cast<std::size_t>(port2)].vertex + offset, a});
  out.base = normalize(std::move(out.base));
  if (auto err = position_error(out.base); !err.empty())
    throw GameError("cut_compose_witness: bad composite base: " + err);

  for (std::size_t i = 0; i < w1.ports.size(); ++i)
    if (static_cast<int>(i) != port1) out.ports.push_back(w1.ports[i]);
  for (std::size_t i = 0; i < w2.ports.size(); ++i)
    if (static_cast<int>(i) != port2)
      out.ports.push_back({w2.ports[i].vertex + offset, w2.ports[i].label});

  out.proofs = w1.proofs;
  for (const auto& [k, v] : w2.proofs) out.proofs[k + offset] = v;
  out.own = kProponentMask | mask_of(Team::ProponentPrime);
  return out;
}

}  // namespace llg
