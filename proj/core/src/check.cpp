#include "llg/check.hpp"

#include <unordered_set>
#include <vector>

#include "llg/errors.hpp"

namespace llg {

namespace {

struct WorkItem {
  ProofPtr node;
  std::string locus;
};

}  // namespace

CheckReport check_proof(System sys, const ProofPtr& p, CheckOptions opt) {
  CheckReport rep;
  rep.checked_promotion_bound = opt.n_check;
  {
    auto st = stats(p);
    rep.cut_count = st.cuts;
    rep.contraction_count = st.contractions;
  }
  auto fail = [&](const std::string& locus, const std::string& msg) {
    rep.valid = false;
    rep.failure_locus = locus;
    rep.failure_message = msg;
    return rep;
  };

  // Subproofs are shared aggressively (schema instantiation reuses its base
  // proofs); a node's validity depends only on the node, so each distinct
  // node is checked once.
  std::unordered_set<const Proof*> done;
  std::vector<WorkItem> work;
  work.push_back({p, "root"});
  while (!work.empty()) {
    WorkItem item = std::move(work.back());
    work.pop_back();
    if (!done.insert(item.node.get()).second) continue;
    const Proof& q = *item.node;

    if (!rule_in_system(q.rule.tag, sys))
      return fail(item.locus, "rule " + to_string(q.rule.tag) + " is not part of " + to_string(sys));
    if (q.rule.tag == RuleTag::Identity && !opt.atoms_enabled)
      return fail(item.locus, "identity rule requires atom-enabled checking");
    if (!opt.atoms_enabled && !atom_free(q.conclusion))
      return fail(item.locus, "conclusion contains atoms but atoms are not enabled");
    if (auto err = rule_shape_error(q.conclusion, q.rule); !err.empty())
      return fail(item.locus, err);

    if (q.rule.tag == RuleTag::Promotion) {
      if (!q.family) return fail(item.locus, "promotion node without premise family");
      if (!q.family->is_schema() && q.family->explicit_bound() < opt.n_check)
        return fail(item.locus, "explicit promotion family covers arities up to " +
                                    std::to_string(q.family->explicit_bound()) +
                                    " but n_check is " + std::to_string(opt.n_check));
      for (int n = 0; n <= opt.n_check; ++n) {
        Sequent expected = promotion_premise(q.conclusion, q.rule, n);
        ProofPtr inst;
        try {
          inst = q.family->instantiate(n, expected);
        } catch (const ProofError& e) {
          return fail(item.locus, std::string("promotion premise ") + std::to_string(n) +
                                      ": " + e.what());
        }
        work.push_back({inst, item.locus + ".promotion[" + std::to_string(n) + "]"});
      }
      continue;
    }

    std::vector<Sequent> expected;
    try {
      expected = expected_premises(q.conclusion, q.rule);
    } catch (const ProofError& e) {
      return fail(item.locus, e.what());
    }
    if (expected.size() != q.premises.size())
      return fail(item.locus, "premise count mismatch");
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (!(q.premises[i]->conclusion == expected[i]))
        return fail(item.locus + ".premise[" + std::to_string(i) + "]",
                    "premise concludes [" + to_string(q.premises[i]->conclusion) +
                        "], rule expects [" + to_string(expected[i]) + "]");
      work.push_back({q.premises[i], item.locus + ".premise[" + std::to_string(i) + "]"});
    }
  }

  rep.valid = true;
  return rep;
}

std::string CheckReport::render() const {
  std::string out;
  out += valid ? "valid: yes\n" : "valid: no\n";
  out += "cuts: " + std::to_string(cut_count) + "\n";
  out += "contractions: " + std::to_string(contraction_count) + "\n";
  out += "promotion premises checked up to n = " + std::to_string(checked_promotion_bound) + "\n";
  if (!valid) {
    out += "failure at: " + failure_locus + "\n";
    out += "reason: " + failure_message + "\n";
  }
  return out;
}

}  // namespace llg
