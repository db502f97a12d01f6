#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "llg/formula.hpp"

namespace llg {

enum class System { LL, LLT, LLTN };

std::string to_string(System s);

enum class RuleTag : std::uint8_t {
  One,
  Bot,
  Top,
  PlainTensor,         // LL
  NewTens,             // LLT, LLTN: tensor with a shared ?-context
  Par,
  PlusL,
  PlusR,
  With,
  Dereliction,         // LLTN: ?A from par^n A
  Promotion,           // LLTN: !A from the family { tensor^n A }
  Weakening,           // LL, LLT
  Contraction,         // LL, LLT
  ClassicDereliction,  // LL, LLT
  ClassicPromotion,    // LL, LLT
  Exchange,
  Cut,
  Identity,            // atom-enabled mode only
};

std::string to_string(RuleTag t);

// Which premise a conclusion position feeds in a tensor or cut rule.
enum class SplitPart : std::uint8_t { Gamma, Delta, Theta, Principal };

// A rule instance pins down exactly how a node's conclusion maps onto the
// rule shape: the principal position, the context split for tensor/cut
// rules, and rule parameters. Given the conclusion, the premise sequents
// are fully determined (see expected_premises / promotion_premise).
struct RuleInstance {
  RuleTag tag;
  int principal = -1;            // position of the principal formula
  int arity = 0;                 // Dereliction: the n in par^n
  std::vector<SplitPart> split;  // tensor/cut: one entry per conclusion position
  std::optional<Formula> cut_formula;
};

class Proof;
using ProofPtr = std::shared_ptr<const Proof>;

// Premises of an infinitary promotion node. Either an explicit finite list
// covering n = 0..k, or a schema that derives the premise for every n from
// two base proofs of ctx,1 and ctx,A by splitting the n-fold tensor with
// the whole (all-?) context shared.
class PremiseFamily {
 public:
  static std::shared_ptr<const PremiseFamily> make_explicit(std::vector<ProofPtr> members);
  static std::shared_ptr<const PremiseFamily> make_schema(ProofPtr base_one, ProofPtr base_a);

  bool is_schema() const { return base_one_ != nullptr; }
  int explicit_bound() const { return static_cast<int>(members_.size()) - 1; }
  const std::vector<ProofPtr>& members() const { return members_; }
  const ProofPtr& base_one() const { return base_one_; }
  const ProofPtr& base_a() const { return base_a_; }

  // Proof of `expected`, which must be a permutation of ctx ++ [tensor^n A].
  // Throws ProofError for an explicit family when n > bound.
  ProofPtr instantiate(int n, const Sequent& expected) const;

 private:
  std::vector<ProofPtr> members_;
  ProofPtr base_one_, base_a_;
};

class Proof {
 public:
  Proof(Sequent conclusion, RuleInstance rule, std::vector<ProofPtr> premises,
        std::shared_ptr<const PremiseFamily> family = nullptr)
      : conclusion(std::move(conclusion)),
        rule(std::move(rule)),
        premises(std::move(premises)),
        family(std::move(family)) {}

  Sequent conclusion;
  RuleInstance rule;
  std::vector<ProofPtr> premises;
  std::shared_ptr<const PremiseFamily> family;  // Promotion only
};

// Shape of a rule at a given conclusion. Empty result = ok.
std::string rule_shape_error(const Sequent& concl, const RuleInstance& r);
// Whether the tag is part of the given system's rule set.
bool rule_in_system(RuleTag t, System s);

// Premise sequents of a finite-premise rule (everything except Promotion).
std::vector<Sequent> expected_premises(const Sequent& concl, const RuleInstance& r);
// Premise sequent of a Promotion node at arity n.
Sequent promotion_premise(const Sequent& concl, const RuleInstance& r, int n);

struct ProofStats {
  long long cuts = 0;
  long long contractions = 0;
  long long nodes = 0;
};

// Counts over the finite skeleton plus the stored family proofs (explicit
// members, or the two schema bases once each). Schema instantiation adds
// only tensor and exchange nodes, so cut/contraction-freeness reported here
// is exact.
ProofStats stats(const ProofPtr& p);
bool cut_free(const ProofPtr& p);
bool contraction_free(const ProofPtr& p);
// Cut-free, or a single root cut over two cut-free subproofs.
bool is_bounded(const ProofPtr& p);

// ---- constructors -------------------------------------------------------
// Builders validate the rule shape and exchange the supplied premises into
// the expected order, so callers may pass premises with permuted
// conclusions (of the same multiset).

ProofPtr mk_one();
ProofPtr mk_top(Sequent concl, int pos);
ProofPtr mk_bot(ProofPtr prem, int pos);
ProofPtr mk_par(ProofPtr prem, int pos);
ProofPtr mk_plus_l(ProofPtr prem, int pos, Formula right);
ProofPtr mk_plus_r(ProofPtr prem, int pos, Formula left);
ProofPtr mk_with(ProofPtr l, ProofPtr r, int pos);
ProofPtr mk_exchange(ProofPtr prem, int pos);
ProofPtr mk_tensor(RuleTag which, Sequent concl, int principal,
                   std::vector<SplitPart> split, ProofPtr p1, ProofPtr p2);
ProofPtr mk_dereliction(ProofPtr prem, int pos, int n, Formula body);
ProofPtr mk_weakening(ProofPtr prem, int pos, Formula whynot);
ProofPtr mk_contraction(ProofPtr prem, int pos);
ProofPtr mk_classic_dereliction(ProofPtr prem, int pos);
ProofPtr mk_classic_promotion(ProofPtr prem, int pos);
ProofPtr mk_promotion_explicit(Sequent concl, int pos, std::vector<ProofPtr> members);
ProofPtr mk_promotion_schema(Sequent concl, int pos, ProofPtr base_one, ProofPtr base_a);
ProofPtr mk_cut(ProofPtr p1, ProofPtr p2, Formula f, Sequent concl,
                std::vector<SplitPart> split);
ProofPtr mk_identity(const Formula& positive_atom);

// Reorders a proof's conclusion into `target` (a permutation of it) by
// inserting Exchange nodes.
ProofPtr exchange_to(ProofPtr p, const Sequent& target);

// Convenience: root cut with premise1 = gamma ++ [f] from p1, premise2 =
// [dual f] ++ delta from p2; conclusion gamma ++ delta.
ProofPtr mk_cut_simple(ProofPtr p1, ProofPtr p2, const Formula& f,
                       Sequent gamma, Sequent delta);

// Fuses conclusion positions start..end-1 into one left-nested par formula.
ProofPtr par_fold_tail(ProofPtr p, std::size_t start);

long long node_count(const ProofPtr& p);

}  // namespace llg
