#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "llg/formula.hpp"
#include "test_util.hpp"

using namespace llg;

namespace {
Formula f(const char* s) { return parse_formula(s); }
}

TEST_CASE("duality on units and connectives") {
  CHECK(dual(f("1")) == f("B"));
  CHECK(dual(f("B + B")) == f("1 & 1"));
  CHECK(dual(f("0")) == f("T"));
  CHECK(dual(f("?X")) == f("!X^"));
}

TEST_CASE("dual of a duplicator, expanded by hand") {
  // duplicator(1) = !(?B @ (!1 * !1)); its dual swaps every connective.
  CHECK(duplicator(f("1")) == f("!(?B @ (!1 * !1))"));
  CHECK(dual(duplicator(f("1"))) == f("?(!1 * (?B @ ?B))"));
}

TEST_CASE("polarity follows the head connective") {
  CHECK(polarity(f("?X")) == Polarity::Positive);
  CHECK(polarity(f("!X")) == Polarity::Negative);
  CHECK(polarity(f("1 * B")) == Polarity::Positive);
  CHECK(polarity(f("T")) == Polarity::Negative);
  CHECK(polarity(Formula::atom("X", false)) == Polarity::Negative);
}

TEST_CASE("connective powers") {
  Formula a = f("1 + B");
  CHECK(power(a, 0, PowerMode::Tensor) == f("1"));
  CHECK(power(a, 0, PowerMode::Par) == f("B"));
  CHECK(power(a, 1, PowerMode::Par) == a);
  CHECK(power(a, 3, PowerMode::Tensor) ==
        Formula::tensor(Formula::tensor(a, a), a));
}

TEST_CASE("power leaf multisets agree with split powers") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 50; ++it) {
    Formula a = random_formula(rng, 2);
    int m = static_cast<int>(rng() % 4), n = static_cast<int>(rng() % 4);
    if (m + n == 0) continue;
    Formula whole = power(a, m + n, PowerMode::Tensor);
    Formula split = (m == 0)   ? power(a, n, PowerMode::Tensor)
                    : (n == 0) ? power(a, m, PowerMode::Tensor)
                               : Formula::tensor(power(a, m, PowerMode::Tensor),
                                                 power(a, n, PowerMode::Tensor));
    auto lw = leaves_of(whole), ls = leaves_of(split);
    auto key = [](const Formula& x) { return to_string(x); };
    std::vector<std::string> kw, ks;
    for (auto& x : lw) kw.push_back(key(x));
    for (auto& x : ls) ks.push_back(key(x));
    std::sort(kw.begin(), kw.end());
    std::sort(ks.begin(), ks.end());
    CHECK(kw == ks);
  }
}

TEST_CASE("duplicators") {
  CHECK(duplicator(f("B")) == f("!(?1 @ (!B * !B))"));
  CHECK(dual(duplicator(f("B"))) == f("?(!B * (?1 @ ?1))"));
  std::mt19937_64 rng(3);
  for (int it = 0; it < 30; ++it) {
    Formula a = random_formula(rng, 2);
    Formula d = duplicator(a);
    CHECK(polarity(d) == Polarity::Negative);
    Formula body = Formula::one();
    REQUIRE(duplicator_body(d, &body));
    CHECK(body == a);
  }
}

TEST_CASE("substitution replaces both signs in one pass") {
  Formula target = f("X^ @ ?X^");
  Formula b = f("B * B");
  CHECK(substitute(target, "X", b) == f("(1 @ 1) @ ?(1 @ 1)"));
  CHECK(substitute(f("1"), "X", f("T")) == f("1"));
  // b may mention the same atom without looping: one pass only.
  CHECK(substitute(f("X"), "X", f("X")) == f("X"));
  CHECK(substitute(f("X"), "X", f("X @ X")) == f("X @ X"));
}

TEST_CASE("parsing: sugar, precedence, round trips") {
  CHECK(parse_formula("0") == Formula::zero());
  CHECK(to_string(parse_formula("(1+1)&T")) == "(1 + 1) & T");
  // -o desugars on the spot and respects priorities.
  CHECK(parse_formula("!1 -o B*C") == f("?B @ (B * C)"));
  CHECK(parse_formula("!1 -o B*C") == Formula::par(dual(f("!1")), f("B * C")));
  // postfix ^ binds tighter than prefixes
  CHECK(parse_formula("?X^") == Formula::why_not(Formula::atom("X", false)));
  CHECK(parse_formula("(1 @ B)^") == f("B * 1"));
  // precedence: * < & < + < @
  CHECK(parse_formula("1 @ 1 + 1 & 1 * 1") ==
        Formula::par(f("1"), Formula::plus(f("1"), Formula::with(f("1"), f("1 * 1")))));
  CHECK_THROWS_AS(parse_formula("1 +"), ParseError);
  CHECK_THROWS_AS(parse_formula("(1"), ParseError);
  CHECK_THROWS_AS(parse_formula("1)"), ParseError);
}

TEST_CASE("dual is an involution and flips polarity") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 200; ++it) {
    Formula a = random_formula(rng, 4, true);
    CHECK(dual(dual(a)) == a);
    CHECK(polarity(dual(a)) != polarity(a));
  }
}

TEST_CASE("parse of print is the identity") {
  std::mt19937_64 rng(13);
  for (int it = 0; it < 300; ++it) {
    Formula a = random_formula(rng, 4, true);
    CHECK(parse_formula(to_string(a)) == a);
  }
}

TEST_CASE("sequent parsing and multiset equality") {
  Sequent s = parse_sequent("1, B @ B, ?X");
  REQUIRE(s.size() == 3);
  CHECK(s[1] == f("B @ B"));
  CHECK(multiset_equal(s, {f("?X"), f("1"), f("B @ B")}));
  CHECK(!multiset_equal(s, {f("?X"), f("1"), f("1")}));
  CHECK(atom_free(parse_sequent("1, B")));
  CHECK(!atom_free(s));
}
