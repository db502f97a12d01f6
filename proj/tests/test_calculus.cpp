#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "llg/check.hpp"
#include "llg/errors.hpp"
#include "llg/random_gen.hpp"
#include "llg/transform.hpp"
#include "test_util.hpp"

using namespace llg;

namespace {
Formula f(const char* s) { return parse_formula(s); }

// [B, ?1, ?1] built by hand (LLT).
ProofPtr premise_with_qq() {
  ProofPtr p = mk_classic_dereliction(mk_one(), 0);  // [?1]
  p = mk_weakening(p, 1, f("?1"));                   // [?1, ?1]
  return mk_bot(p, 0);                               // [B, ?1, ?1]
}
}  // namespace

TEST_CASE("two-rule proof checks in every system") {
  ProofPtr p = mk_bot(mk_one(), 0);  // [B, 1]
  CHECK(p->conclusion == parse_sequent("B, 1"));
  for (System sys : {System::LL, System::LLT, System::LLTN}) {
    auto rep = check_proof(sys, p, {5, false});
    CHECK(rep.valid);
    CHECK(rep.cut_count == 0);
    CHECK(rep.contraction_count == 0);
  }
}

TEST_CASE("checker rejects out-of-system rules") {
  ProofPtr p = mk_classic_dereliction(mk_one(), 0);  // LL/LLT only
  CHECK(check_proof(System::LLT, p).valid);
  auto rep = check_proof(System::LLTN, p);
  CHECK(!rep.valid);
  CHECK(rep.failure_locus == "root");
}

TEST_CASE("checker flags malformed nodes with a locus") {
  // Hand-built bad node: Bot whose premise proves the wrong sequent.
  RuleInstance r;
  r.tag = RuleTag::Bot;
  r.principal = 0;
  auto bad = std::make_shared<Proof>(parse_sequent("B, 1 * 1"), r,
                                     std::vector<ProofPtr>{mk_one()});
  auto rep = check_proof(System::LLT, ProofPtr(bad));
  CHECK(!rep.valid);
  CHECK(rep.failure_locus == "root.premise[0]");
}

TEST_CASE("dup proofs are cc-free in LLT") {
  for (const char* s : {"1", "B", "1 + B", "!1"}) {
    ProofPtr d = dup_proof(f(s));
    CHECK(d->conclusion == Sequent{duplicator(f(s))});
    auto rep = check_proof(System::LLT, d, {0, false});
    CHECK(rep.valid);
    CHECK(rep.cut_count == 0);
    CHECK(rep.contraction_count == 0);
  }
}

TEST_CASE("apply_dup rewrites the trailing pair") {
  ProofPtr p = premise_with_qq();
  ProofPtr q = apply_dup(p);
  CHECK(q->conclusion == parse_sequent("B, ?1, ?(!B * (?1 @ ?1))"));
  auto rep = check_proof(System::LLT, q);
  CHECK(rep.valid);
  CHECK(rep.cut_count == 0);
  CHECK(rep.contraction_count == 0);
  // Conclusion formula is the dual of a duplicator.
  CHECK(q->conclusion.back() == dual(duplicator(f("B"))));

  // Empty context works too.
  ProofPtr small = mk_weakening(mk_classic_dereliction(mk_one(), 0), 1, f("?1"));
  ProofPtr qs = apply_dup(small);
  CHECK(check_proof(System::LLT, qs).valid);

  CHECK_THROWS_AS(apply_dup(mk_one()), ProofError);
}

TEST_CASE("axiom proofs") {
  ProofPtr a1 = axiom_proof(System::LLTN, f("1"));
  CHECK(a1->conclusion == parse_sequent("B, 1"));
  CHECK(check_proof(System::LLTN, a1).valid);

  ProofPtr abang = axiom_proof(System::LLTN, f("!1"));
  CHECK(abang->conclusion == parse_sequent("?B, !1"));
  CHECK(check_proof(System::LLTN, abang, {4, false}).valid);
  CHECK(cut_free(abang));

  ProofPtr aplus = axiom_proof(System::LLTN, f("1 + B"));
  CHECK(check_proof(System::LLTN, aplus).valid);
  CHECK(cut_free(aplus));

  // LLT flavour uses the classic exponential rules.
  ProofPtr allt = axiom_proof(System::LLT, f("!1"));
  CHECK(check_proof(System::LLT, allt).valid);
  CHECK(contraction_free(allt));

  CHECK_THROWS_AS(axiom_proof(System::LLTN, f("X")), ProofError);
  ProofPtr ax = axiom_proof(System::LLTN, f("X"), true);
  CHECK(check_proof(System::LLTN, ax, {4, true}).valid);
}

TEST_CASE("axiom proofs over a random formula corpus") {
  std::mt19937_64 rng(21);
  for (int it = 0; it < 40; ++it) {
    Formula a = random_formula(rng, 2);
    ProofPtr p = axiom_proof(System::LLTN, a);
    CHECK(multiset_equal(p->conclusion, {dual(a), a}));
    CHECK(check_proof(System::LLTN, p, {3, false}).valid);
    CHECK(cut_free(p));
    ProofPtr q = axiom_proof(System::LLT, a);
    CHECK(check_proof(System::LLT, q, {3, false}).valid);
    CHECK(cut_free(q));
    CHECK(contraction_free(q));
  }
}

TEST_CASE("boundedness predicate") {
  ProofPtr cf = mk_bot(mk_one(), 0);
  CHECK(is_bounded(cf));

  ProofPtr rc = mk_cut_simple(mk_one(), mk_bot(mk_one(), 0), f("1"), {}, {f("1")});
  CHECK(rc->conclusion == parse_sequent("1"));
  CHECK(is_bounded(rc));
  CHECK(check_proof(System::LLTN, rc).valid);

  // A cut nested under a par is not bounded.
  ProofPtr nested = mk_bot(rc, 0);
  CHECK(!is_bounded(nested));
  auto st = stats(nested);
  CHECK(st.cuts == 1);
}

TEST_CASE("laurent sequent has a bounded LLTN proof") {
  ProofPtr p = laurent_proof(6);
  CHECK(p->conclusion == laurent_sequent());
  auto rep = check_proof(System::LLTN, p, {4, false});
  CHECK(rep.valid);
  CHECK(is_bounded(p));
  CHECK(cut_free(p));
  // Explicit family bound is enforced.
  auto deep = check_proof(System::LLTN, p, {7, false});
  CHECK(!deep.valid);
}

TEST_CASE("with/par counterexample proof checks in LLT") {
  ProofPtr p = with_par_counterexample_proof();
  CHECK(p->conclusion == with_par_counterexample_sequent());
  auto rep = check_proof(System::LLT, p);
  CHECK(rep.valid);
  CHECK(rep.cut_count == 0);
  CHECK(rep.contraction_count == 1);
}

TEST_CASE("system translations") {
  // PlainTensor -> NewTens with empty shared context.
  ProofPtr ax = axiom_proof(System::LL, f("1 * 1"));
  CHECK(check_proof(System::LL, ax).valid);
  ProofPtr t = translate_ll_to_llt(ax);
  CHECK(check_proof(System::LLT, t).valid);
  CHECK(t->conclusion == ax->conclusion);

  // Round trip through LL on a theta-free proof.
  ProofPtr back = translate_llt_to_ll(t);
  CHECK(check_proof(System::LL, back).valid);
  CHECK(back->conclusion == ax->conclusion);

  // A shared-context tensor becomes a plain tensor plus contractions.
  ProofPtr leaf = axiom_proof(System::LLT, f("!1"));  // [?B, !1]
  Sequent tc{f("?B"), f("!1 * !1")};
  ProofPtr nt = mk_tensor(RuleTag::NewTens, tc, 1,
                          {SplitPart::Theta, SplitPart::Principal}, leaf, leaf);
  CHECK(check_proof(System::LLT, nt).valid);
  ProofPtr ll = translate_llt_to_ll(nt);
  CHECK(check_proof(System::LL, ll).valid);
  CHECK(ll->conclusion == tc);
  CHECK(stats(ll).contractions - stats(nt).contractions == 1);

  // Proofs without tensor nodes pass through unchanged.
  ProofPtr simple = mk_bot(mk_one(), 0);
  CHECK(translate_ll_to_llt(simple)->rule.tag == RuleTag::Bot);
  CHECK(translate_llt_to_ll(simple)->conclusion == simple->conclusion);
}

TEST_CASE("random proofs check in their system") {
  auto lls = gen_proofs({System::LL, 15, 42}, 60);
  for (const auto& p : lls) {
    CHECK(node_count(p) <= 15);
    CHECK(check_proof(System::LL, p).valid);
  }
  auto lltns = gen_proofs({System::LLTN, 15, 43}, 60);
  for (const auto& p : lltns) CHECK(check_proof(System::LLTN, p, {3, false}).valid);
  // Reproducible for a fixed seed.
  auto again = gen_proofs({System::LL, 15, 42}, 60);
  REQUIRE(again.size() == lls.size());
  for (std::size_t i = 0; i < again.size(); ++i)
    CHECK(to_string(again[i]->conclusion) == to_string(lls[i]->conclusion));
}

TEST_CASE("promotion families: explicit bound errors and schema instances") {
  ProofPtr abang = axiom_proof(System::LLTN, f("?B"));  // promotion schema at 0
  REQUIRE(abang->rule.tag == RuleTag::Promotion);
  REQUIRE(abang->family->is_schema());
  Sequent want = promotion_premise(abang->conclusion, abang->rule, 3);
  ProofPtr inst = abang->family->instantiate(3, want);
  CHECK(inst->conclusion == want);
  CHECK(check_proof(System::LLTN, inst).valid);

  ProofPtr lp = laurent_proof(3);
  CHECK_THROWS_AS(lp->family->instantiate(9, promotion_premise(lp->conclusion, lp->rule, 9)),
                  ProofError);
}
