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

// A proof of [?1] that uses one contraction.
ProofPtr contracted_q1() {
  ProofPtr p = mk_classic_dereliction(mk_one(), 0);  // [?1]
  p = mk_weakening(p, 1, f("?1"));                   // [?1, ?1]
  return mk_contraction(p, 0);                       // [?1]
}
}  // namespace

TEST_CASE("contraction elimination on a contraction-free proof") {
  ProofPtr p = axiom_proof(System::LL, f("1 * 1"));
  auto [out, ds] = eliminate_contractions(p);
  CHECK(ds.empty());
  CHECK(out->conclusion == p->conclusion);
  auto rep = check_proof(System::LLT, out);
  CHECK(rep.valid);
  CHECK(rep.cut_count == 0);
  CHECK(rep.contraction_count == 0);
}

TEST_CASE("contraction elimination, single contraction on ?1") {
  ProofPtr p = contracted_q1();
  REQUIRE(stats(p).contractions == 1);
  auto [out, ds] = eliminate_contractions(p);
  REQUIRE(ds.size() == 1);
  CHECK(ds[0] == duplicator(f("B")));  // duplicator(dual(1))
  Sequent want = p->conclusion;
  want.push_back(dual(ds[0]));
  CHECK(out->conclusion == want);
  auto rep = check_proof(System::LLT, out);
  CHECK(rep.valid);
  CHECK(rep.cut_count == 0);
  CHECK(rep.contraction_count == 0);
}

TEST_CASE("contraction elimination rejects cuts") {
  ProofPtr rc = mk_cut_simple(mk_one(), mk_bot(mk_one(), 0), f("1"), {}, {f("1")});
  CHECK_THROWS_AS(eliminate_contractions(rc), ProofError);
}

TEST_CASE("contraction elimination over the random LL corpus") {
  auto corpus = gen_proofs({System::LL, 15, 101}, 120);
  int contracted = 0;
  for (const auto& p : corpus) {
    auto st = stats(p);
    auto [out, ds] = eliminate_contractions(p);
    if (st.contractions > 0) ++contracted;
    CHECK(static_cast<long long>(ds.size()) == st.contractions);
    Sequent want = p->conclusion;
    for (const auto& d : ds) want.push_back(dual(d));
    CHECK(out->conclusion == want);
    auto rep = check_proof(System::LLT, out);
    CHECK(rep.valid);
    CHECK(rep.cut_count == 0);
    CHECK(rep.contraction_count == 0);
  }
  CHECK(contracted >= 10);  // the generator must exercise contractions
}

TEST_CASE("bounding a contraction-free proof stays cut-free") {
  ProofPtr p = axiom_proof(System::LL, f("1 + B"));
  ProofPtr b = bound_proof(p);
  CHECK(b->conclusion == p->conclusion);
  CHECK(cut_free(b));
  CHECK(is_bounded(b));
}

TEST_CASE("bounding the one-contraction proof yields a single root cut") {
  ProofPtr p = contracted_q1();
  ProofPtr b = bound_proof(p);
  CHECK(b->conclusion == p->conclusion);
  CHECK(b->rule.tag == RuleTag::Cut);
  CHECK(is_bounded(b));
  auto st = stats(b);
  CHECK(st.cuts == 1);
  CHECK(st.contractions == 0);
  CHECK(check_proof(System::LLT, b).valid);
}

TEST_CASE("bounding over the random corpus") {
  auto corpus = gen_proofs({System::LL, 15, 202}, 80);
  for (const auto& p : corpus) {
    ProofPtr b = bound_proof(p);
    CHECK(b->conclusion == p->conclusion);
    CHECK(is_bounded(b));
    CHECK(stats(b).cuts <= 1);
    CHECK(check_proof(System::LLT, b).valid);
  }
}

TEST_CASE("llt_to_lltn on a promotion over a ?-context") {
  ProofPtr p = mk_weakening(mk_one(), 0, f("?1"));  // [?1, 1]
  p = mk_classic_promotion(p, 1);                   // [?1, !1]
  REQUIRE(check_proof(System::LLT, p).valid);
  ProofPtr q = llt_to_lltn(p);
  CHECK(q->conclusion == p->conclusion);
  CHECK(check_proof(System::LLTN, q, {5, false}).valid);
  REQUIRE(q->rule.tag == RuleTag::Promotion);
  REQUIRE(q->family->is_schema());
  // The arity-2 instance proves [?1, 1 * 1] via a shared-context split.
  Sequent want = promotion_premise(q->conclusion, q->rule, 2);
  ProofPtr inst = q->family->instantiate(2, want);
  CHECK(inst->conclusion == Sequent{f("?1"), f("1 * 1")});
  CHECK(check_proof(System::LLTN, inst).valid);
  REQUIRE(inst->rule.tag == RuleTag::NewTens);
  bool has_theta = false;
  for (auto sp : inst->rule.split) has_theta |= sp == SplitPart::Theta;
  CHECK(has_theta);
}

TEST_CASE("llt_to_lltn retags the exponential-free fragment") {
  ProofPtr p = axiom_proof(System::LLT, f("(1 + B) * 1"));
  ProofPtr q = llt_to_lltn(p);
  CHECK(q->conclusion == p->conclusion);
  CHECK(check_proof(System::LLTN, q).valid);
  CHECK(node_count(q) == node_count(p));
}

TEST_CASE("llt_to_lltn of the dup derivation re-checks at depth 4") {
  ProofPtr d = dup_proof(f("1"));
  ProofPtr q = llt_to_lltn(d);
  CHECK(q->conclusion == d->conclusion);
  CHECK(check_proof(System::LLTN, q, {4, false}).valid);
  CHECK(cut_free(q));
}

TEST_CASE("llt_to_lltn rejects contractions") {
  CHECK_THROWS_AS(llt_to_lltn(contracted_q1()), ProofError);
}

TEST_CASE("full pipeline over the random corpus re-checks at n_check 5") {
  auto corpus = gen_proofs({System::LL, 13, 303}, 50);
  for (const auto& p : corpus) {
    ProofPtr q = llt_to_lltn(bound_proof(p));
    CHECK(q->conclusion == p->conclusion);
    CHECK(is_bounded(q));
    CHECK(check_proof(System::LLTN, q, {5, false}).valid);
  }
}

TEST_CASE("compose_cuts: both cut-free") {
  ProofPtr p1 = axiom_proof(System::LLTN, f("1"));        // [B, 1]
  ProofPtr p2 = mk_bot(mk_bot(mk_one(), 0), 0);           // [B, B, 1]
  // Cut on the 1 of p1 against the first B of p2.
  ProofPtr c = compose_cuts(p1, 1, p2, 0);
  CHECK(c->rule.tag == RuleTag::Cut);
  CHECK(is_bounded(c));
  CHECK(c->conclusion == parse_sequent("B, B, 1"));
  CHECK(check_proof(System::LLTN, c).valid);
}

TEST_CASE("compose_cuts: both with root cuts uses the fused cut formula") {
  // p1: root cut concluding [B, 1] with auxiliary 1.
  ProofPtr p1 = mk_cut_simple(mk_one(), mk_bot(mk_bot(mk_one(), 0), 0), f("1"),
                              {}, parse_sequent("B, 1"));
  REQUIRE(is_bounded(p1));
  REQUIRE(check_proof(System::LLTN, p1).valid);
  // p2: root cut concluding [B, 1] with auxiliary 1.
  ProofPtr p2 = mk_cut_simple(mk_one(), mk_bot(mk_bot(mk_one(), 0), 0), f("1"),
                              {}, parse_sequent("B, 1"));
  REQUIRE(is_bounded(p2));
  REQUIRE(check_proof(System::LLTN, p2).valid);
  // Cut formula: the 1 in p1 against the B in p2.
  ProofPtr c = compose_cuts(p1, 1, p2, 0);
  CHECK(c->conclusion == parse_sequent("B, 1"));
  CHECK(is_bounded(c));
  auto st = stats(c);
  CHECK(st.cuts == 1);
  CHECK(check_proof(System::LLTN, c).valid);
}

TEST_CASE("compose_cuts over random compatible pairs") {
  std::mt19937_64 rng(404);
  int done = 0;
  while (done < 40) {
    ProofPtr q = gen_proof(rng, System::LLTN, 12);
    int pos = static_cast<int>(rng() % q->conclusion.size());
    Formula a = q->conclusion[static_cast<std::size_t>(pos)];
    // Partner proof containing dual(a), padded by a few units.
    ProofPtr r = axiom_proof(System::LLTN, a);  // [dual a, a]
    if (rng() % 2) r = mk_bot(r, 2);
    ProofPtr c = compose_cuts(q, pos, r, 0);
    Sequent want = erased_at(q->conclusion, static_cast<std::size_t>(pos));
    Sequent rest = erased_at(r->conclusion, 0);
    want.insert(want.end(), rest.begin(), rest.end());
    CHECK(c->conclusion == want);
    CHECK(is_bounded(c));
    CHECK(check_proof(System::LLTN, c, {3, false}).valid);
    ++done;
  }
}

TEST_CASE("compose_cuts against an axiom keeps the conclusion") {
  std::mt19937_64 rng(505);
  for (int it = 0; it < 20; ++it) {
    ProofPtr q = gen_proof(rng, System::LLTN, 10);
    int pos = static_cast<int>(rng() % q->conclusion.size());
    Formula a = q->conclusion[static_cast<std::size_t>(pos)];
    ProofPtr ax = axiom_proof(System::LLTN, a);  // [dual a, a]
    ProofPtr c = compose_cuts(q, pos, ax, 0);
    CHECK(multiset_equal(c->conclusion, q->conclusion));
    CHECK(check_proof(System::LLTN, c, {3, false}).valid);
  }
}

TEST_CASE("anodyne: unit removal strips the bot") {
  ProofPtr p = mk_bot(mk_one(), 0);  // [B, 1]
  ProofPtr q = anodyne(AnodyneKind::Bot, 0, 0, p);
  CHECK(q->conclusion == parse_sequent("1"));
  CHECK(check_proof(System::LLTN, q).valid);
}

TEST_CASE("anodyne: with projections take the matching premise") {
  ProofPtr one = mk_bot(mk_one(), 0);
  ProofPtr w = mk_with(one, one, 0);  // [B & B, 1]
  ProofPtr l = anodyne(AnodyneKind::WithLeft, 0, 0, w);
  CHECK(l->conclusion == parse_sequent("B, 1"));
  ProofPtr r = anodyne(AnodyneKind::WithRight, 0, 0, w);
  CHECK(r->conclusion == parse_sequent("B, 1"));
}

TEST_CASE("anodyne: par split and bang projection") {
  ProofPtr p = mk_par(mk_bot(mk_one(), 0), 0);  // [B @ 1]
  ProofPtr q = anodyne(AnodyneKind::Par, 0, 0, p);
  CHECK(q->conclusion == parse_sequent("B, 1"));

  ProofPtr lp = laurent_proof(4);
  ProofPtr b2 = anodyne(AnodyneKind::Bang, 1, 2, lp);
  CHECK(b2->conclusion == Sequent{laurent_sequent()[0], f("(B * B) * (B * B)")});
  CHECK(cut_free(b2));
  CHECK(check_proof(System::LLTN, b2).valid);
  // Beyond the explicit family bound.
  CHECK_THROWS_AS(anodyne(AnodyneKind::Bang, 1, 9, lp), ProofError);
}

TEST_CASE("anodyne: errors") {
  ProofPtr p = mk_bot(mk_one(), 0);
  CHECK_THROWS_AS(anodyne(AnodyneKind::Par, 0, 0, p), ProofError);   // wrong head
  CHECK_THROWS_AS(anodyne(AnodyneKind::Bot, 5, 0, p), ProofError);   // out of range
  ProofPtr rc = mk_cut_simple(mk_one(), mk_bot(mk_bot(mk_one(), 0), 0), f("1"),
                              {}, parse_sequent("B, 1"));
  CHECK_THROWS_AS(anodyne(AnodyneKind::Bot, 0, 0, rc), ProofError);  // not cut-free
}

TEST_CASE("anodyne preserves cut-freeness over random applicable proofs") {
  std::mt19937_64 rng(606);
  int applied = 0;
  while (applied < 120) {
    ProofPtr p = gen_proof(rng, System::LLTN, 14);
    const Sequent& s = p->conclusion;
    for (int i = 0; i < static_cast<int>(s.size()); ++i) {
      const Formula& g = s[static_cast<std::size_t>(i)];
      ProofPtr q;
      switch (g.tag()) {
        case Tag::Bot: q = anodyne(AnodyneKind::Bot, i, 0, p); break;
        case Tag::Par: q = anodyne(AnodyneKind::Par, i, 0, p); break;
        case Tag::With:
          q = anodyne(rng() % 2 ? AnodyneKind::WithLeft : AnodyneKind::WithRight, i, 0, p);
          break;
        case Tag::OfCourse:
          q = anodyne(AnodyneKind::Bang, i, static_cast<int>(rng() % 3), p);
          break;
        default: continue;
      }
      CHECK(cut_free(q));
      CHECK(check_proof(System::LLTN, q, {2, false}).valid);
      ++applied;
    }
  }
  CHECK(applied >= 120);
}
