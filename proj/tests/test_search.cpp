#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "llg/check.hpp"
#include "llg/random_gen.hpp"
#include "llg/search.hpp"
#include "llg/transform.hpp"

using namespace llg;

namespace {
Formula f(const char* s) { return parse_formula(s); }
}

TEST_CASE("B * B has no cut-free proof: a complete refutation") {
  auto res = search_cutfree(System::LLTN, {f("B * B")}, {10, 2, false, 1000000});
  CHECK(res.status == SearchStatus::Exhausted);
  auto ll = search_cutfree(System::LL, {f("B * B")}, {10, 2, false, 1000000});
  CHECK(ll.status == SearchStatus::Exhausted);
}

TEST_CASE("B, 1 is found immediately") {
  auto res = search_cutfree(System::LLTN, parse_sequent("B, 1"), {5, 2, false, 100000});
  REQUIRE(res.status == SearchStatus::Proved);
  CHECK(res.proof->conclusion == parse_sequent("B, 1"));
  CHECK(check_proof(System::LLTN, res.proof).valid);
}

TEST_CASE("found proofs re-check and are cut-free") {
  // Provable goals drawn from proofs the generator built.
  auto corpus = gen_proofs({System::LLTN, 9, 77}, 30);
  for (const auto& p : corpus) {
    auto res = search_cutfree(System::LLTN, p->conclusion, {9, 2, false, 400000});
    if (res.status != SearchStatus::Proved) continue;  // caps may be too tight
    auto rep = check_proof(System::LLTN, res.proof, {2, false});
    CHECK(rep.valid);
    CHECK(rep.cut_count == 0);
  }
}

TEST_CASE("search handles exponential goals within arity caps") {
  auto res = search_cutfree(System::LLTN, parse_sequent("?B, !1"), {8, 3, false, 500000});
  REQUIRE(res.status == SearchStatus::Proved);
  CHECK(check_proof(System::LLTN, res.proof, {3, false}).valid);
}

TEST_CASE("classic systems: weakening and contraction are searched") {
  auto res = search_cutfree(System::LL, parse_sequent("?T, 1"), {6, 2, false, 100000});
  REQUIRE(res.status == SearchStatus::Proved);
  CHECK(check_proof(System::LL, res.proof).valid);
}

TEST_CASE("atoms mode uses the identity leaf") {
  auto res = search_cutfree(System::LL, parse_sequent("X^, X"), {4, 2, true, 10000});
  REQUIRE(res.status == SearchStatus::Proved);
  CHECK(check_proof(System::LL, res.proof, {2, true}).valid);
  CHECK_THROWS(search_cutfree(System::LL, parse_sequent("X^, X"), {4, 2, false, 10000}));
}

TEST_CASE("budget exhaustion is a distinct outcome") {
  auto res = search_cutfree(System::LL, laurent_sequent(), {12, 3, false, 50});
  CHECK(res.status == SearchStatus::Budget);
}

TEST_CASE("the laurent sequent is not LL-provable within depth 12") {
  auto res = search_cutfree(System::LL, laurent_sequent(), {12, 3, false, 20'000'000});
  CHECK(res.status == SearchStatus::Exhausted);
}
