#include "llg/serialize.hpp"

#include <json.hpp>

#include "llg/errors.hpp"

namespace llg {

using nlohmann::json;

namespace {

const char* split_name(SplitPart s) {
  switch (s) {
    case SplitPart::Gamma: return "gamma";
    case SplitPart::Delta: return "delta";
    case SplitPart::Theta: return "theta";
    case SplitPart::Principal: return "principal";
  }
  return "?";
}

SplitPart split_from(const std::string& s) {
  if (s == "gamma") return SplitPart::Gamma;
  if (s == "delta") return SplitPart::Delta;
  if (s == "theta") return SplitPart::Theta;
  if (s == "principal") return SplitPart::Principal;
  throw Error("unknown split part: " + s);
}

RuleTag tag_from(const std::string& s) {
  for (int t = 0; t <= static_cast<int>(RuleTag::Identity); ++t)
    if (to_string(static_cast<RuleTag>(t)) == s) return static_cast<RuleTag>(t);
  throw Error("unknown rule tag: " + s);
}

json rule_to_json(const RuleInstance& r) {
  json j;
  j["tag"] = to_string(r.tag);
  if (r.principal >= 0) j["principal"] = r.principal;
  if (r.tag == RuleTag::Dereliction) j["n"] = r.arity;
  if (!r.split.empty()) {
    json sp = json::array();
    for (auto s : r.split) sp.push_back(split_name(s));
    j["split"] = sp;
  }
  if (r.cut_formula) j["formula"] = to_string(*r.cut_formula);
  return j;
}

RuleInstance rule_from_json(const json& j) {
  RuleInstance r;
  r.tag = tag_from(j.at("tag").get<std::string>());
  if (j.contains("principal")) r.principal = j.at("principal").get<int>();
  if (j.contains("n")) r.arity = j.at("n").get<int>();
  if (j.contains("split"))
    for (const auto& s : j.at("split")) r.split.push_back(split_from(s.get<std::string>()));
  if (j.contains("formula")) r.cut_formula = parse_formula(j.at("formula").get<std::string>());
  return r;
}

json sequent_to_json(const Sequent& s) {
  json j = json::array();
  for (const auto& f : s) j.push_back(to_string(f));
  return j;
}

Sequent sequent_from_json(const json& j) {
  Sequent s;
  for (const auto& f : j) s.push_back(parse_formula(f.get<std::string>()));
  return s;
}

json proof_to_json_rec(const ProofPtr& p) {
  json j;
  j["conclusion"] = sequent_to_json(p->conclusion);
  j["rule"] = rule_to_json(p->rule);
  if (p->family) {
    json fam;
    if (p->family->is_schema()) {
      fam["kind"] = "tensor_split";
      fam["base_one"] = proof_to_json_rec(p->family->base_one());
      fam["base_a"] = proof_to_json_rec(p->family->base_a());
    } else {
      fam["kind"] = "explicit";
      json mem = json::array();
      for (const auto& m : p->family->members()) mem.push_back(proof_to_json_rec(m));
      fam["premises"] = mem;
    }
    j["family"] = fam;
  } else {
    json prem = json::array();
    for (const auto& q : p->premises) prem.push_back(proof_to_json_rec(q));
    j["premises"] = prem;
  }
  return j;
}

ProofPtr proof_from_json_rec(const json& j) {
  Sequent concl = sequent_from_json(j.at("conclusion"));
  RuleInstance r = rule_from_json(j.at("rule"));
  std::shared_ptr<const PremiseFamily> fam;
  std::vector<ProofPtr> prems;
  if (j.contains("family")) {
    const json& f = j.at("family");
    if (f.at("kind") == "tensor_split") {
      fam = PremiseFamily::make_schema(proof_from_json_rec(f.at("base_one")),
                                       proof_from_json_rec(f.at("base_a")));
    } else {
      std::vector<ProofPtr> members;
      for (const auto& m : f.at("premises")) members.push_back(proof_from_json_rec(m));
      fam = PremiseFamily::make_explicit(std::move(members));
    }
  } else if (j.contains("premises")) {
    for (const auto& q : j.at("premises")) prems.push_back(proof_from_json_rec(q));
  }
  return std::make_shared<Proof>(std::move(concl), std::move(r), std::move(prems),
                                 std::move(fam));
}

Team team_from(const std::string& s) {
  if (s == "O") return Team::Opponent;
  if (s == "P") return Team::Proponent;
  if (s == "P'") return Team::ProponentPrime;
  throw Error("unknown team: " + s);
}

json position_to_json_obj(const Position& p) {
  json j;
  json vs = json::array();
  for (const auto& v : p.vertices)
    vs.push_back(json{{"id", v.id}, {"team", to_string(v.team)}});
  json es = json::array();
  for (const auto& e : p.edges)
    es.push_back(json{{"src", e.src}, {"dst", e.dst}, {"label", to_string(e.label)}});
  j["vertices"] = vs;
  j["edges"] = es;
  j["token"] = p.token;
  return j;
}

Position position_from_json_obj(const json& j) {
  std::vector<PosVertex> vs;
  std::vector<PosEdge> es;
  for (const auto& v : j.at("vertices"))
    vs.push_back({v.at("id").get<int>(), team_from(v.at("team").get<std::string>())});
  for (const auto& e : j.at("edges"))
    es.push_back({e.at("src").get<int>(), e.at("dst").get<int>(),
                  parse_formula(e.at("label").get<std::string>())});
  return make_position(std::move(vs), std::move(es), j.at("token").get<int>());
}

}  // namespace

std::string proof_to_json(const ProofPtr& p) { return proof_to_json_rec(p).dump(2); }

ProofPtr proof_from_json(const std::string& text) {
  return proof_from_json_rec(json::parse(text));
}

std::string position_to_json(const Position& p) { return position_to_json_obj(p).dump(2); }

Position position_from_json(const std::string& text) {
  return position_from_json_obj(json::parse(text));
}

std::string witness_to_json(const Witness& w) {
  json j;
  j["position"] = position_to_json_obj(w.base);
  json ports = json::array();
  for (const auto& p : w.ports)
    ports.push_back(json{{"vertex", p.vertex}, {"label", to_string(p.label)}});
  j["ports"] = ports;
  if (!w.proofs.empty()) {
    json pr = json::object();
    for (const auto& [k, v] : w.proofs) pr[std::to_string(k)] = proof_to_json_rec(v);
    j["proofs"] = pr;
  }
  return j.dump(2);
}

Witness witness_from_json(const std::string& text) {
  json j = json::parse(text);
  Witness w;
  w.base = position_from_json_obj(j.at("position"));
  for (const auto& p : j.at("ports"))
    w.ports.push_back({p.at("vertex").get<int>(),
                       parse_formula(p.at("label").get<std::string>())});
  if (j.contains("proofs"))
    for (const auto& [k, v] : j.at("proofs").items())
      w.proofs[std::stoi(k)] = proof_from_json_rec(v);
  return w;
}

std::string position_to_dot(const Position& p) {
  std::string out = "digraph position {\n";
  for (const auto& v : p.vertices) {
    out += "  v" + std::to_string(v.id) + " [label=\"" + to_string(v.team) + std::to_string(v.id) +
           "\", shape=" + (v.team == Team::Opponent ? "circle" : v.team == Team::Proponent ? "box" : "diamond");
    if (v.id == p.token) out += ", peripheries=2";
    out += "];\n";
  }
  for (const auto& e : p.edges) {
    std::string label = to_string(e.label);
    std::string esc;
    for (char c : label) {
      if (c == '"' || c == '\\') esc += '\\';
      esc += c;
    }
    out += "  v" + std::to_string(e.src) + " -> v" + std::to_string(e.dst) + " [label=\"" +
           esc + "\"];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace llg
