#include <random>

#include "doctest.h"
#include "shuffle/errors.hpp"
#include "shuffle/shuffle.hpp"
#include "test_support.hpp"

using namespace shuffle;
using shuffle::testing::load_golden_expansions;
using shuffle::testing::random_poly;

namespace {

const LaurentPoly z1 = LaurentPoly::z(1);
const LaurentPoly z2 = LaurentPoly::z(2);
const LaurentPoly z3 = LaurentPoly::z(3);
const LaurentPoly q1 = LaurentPoly::q1();
const LaurentPoly q2 = LaurentPoly::q2();
const LaurentPoly q = LaurentPoly::q();

const LaurentPoly kG1 =
    2 * q * z1 * z1 - (1 + q1 + q2 - 2 * q + q1 * q + q2 * q + q * q) * z1 * z2 + 2 * q * z2 * z2;

ShuffleElement letter(int d) { return ShuffleElement::letter(d); }

/// Random symmetric element of V_arity built by symmetrizing a random polynomial.
ShuffleElement random_element(std::mt19937_64& rng, int arity, int terms = 2) {
  return ShuffleElement::make(arity, sym(random_poly(rng, arity, terms, 1), arity));
}

}  // namespace

TEST_CASE("omega") {
  const RationalFunction w = omega(1, 2);
  CHECK(w.denominator == z1 - z2);
  CHECK(w.numerator == omega_numerator(1, 2));
  CHECK(w.numerator == (z1 - q * z2) * (z2 - q1 * z1) * (z2 - q2 * z1));
  const Substitution unit{{Variable::q1(), LaurentPoly(1)}, {Variable::q2(), LaurentPoly(1)}};
  CHECK(substitute(w.numerator, unit) == (z1 - z2) * (z2 - z1) * (z2 - z1));
  // frozen from the sympy reference
  CHECK(to_string(substitute(w.numerator, unit)) == "-z2^3 + 3 z1 z2^2 - 3 z1^2 z2 + z1^3");
  CHECK(to_string(w.numerator) ==
        "-q1^2 q2^2 z1^2 z2 + q1 q2^2 z1 z2^2 + q1^2 q2 z1 z2^2 - q1 q2 z2^3 + q1 q2 z1^3 - q2 z1^2 z2 - q1 z1^2 z2 + "
        "z1 z2^2");
  CHECK(omega(2, 1).denominator == z2 - z1);
  CHECK(omega(2, 1).numerator == permute_z(w.numerator, std::vector<int>{2, 1}));
  CHECK_THROWS(omega(1, 1));
}

TEST_CASE("sym") {
  CHECK(sym(z1, 2) == z1 + z2);
  CHECK(sym(z1 + z2, 2) == 2 * (z1 + z2));
  CHECK(sym(z1 * z2 * z3, 3) == 6 * z1 * z2 * z3);
  CHECK(sym(z1 * z1 * z2, 3) ==
        z1 * z1 * z2 + z1 * z1 * z3 + z2 * z2 * z1 + z2 * z2 * z3 + z3 * z3 * z1 + z3 * z3 * z2);
  CHECK(sym(z1, 3) == 2 * (z1 + z2 + z3));
  CHECK(sym(LaurentPoly(5), 0) == LaurentPoly(5));
}

TEST_CASE("vandermonde") {
  CHECK(vandermonde(1) == LaurentPoly(1));
  CHECK(vandermonde(2) == z1 - z2);
  CHECK(vandermonde(3) == (z1 - z2) * (z1 - z3) * (z2 - z3));
}

TEST_CASE("element validation") {
  CHECK_THROWS_AS(ShuffleElement::make(2, z1), NotSymmetric);
  CHECK_THROWS_AS(ShuffleElement::make(1, z2), ArityMismatch);
  CHECK_THROWS_AS(ShuffleElement::make(9, LaurentPoly(1)), ArityMismatch);
  CHECK_NOTHROW(ShuffleElement::make(2, z1 * z2));
  CHECK_THROWS_AS(letter(0) + ShuffleElement::one(2), ArityMismatch);
}

TEST_CASE("shuffle examples") {
  CHECK(shuffle::shuffle(ShuffleElement::one(1), ShuffleElement::one(1)).poly() == kG1);
  CHECK(shuffle::shuffle(letter(1), ShuffleElement::one(1)).poly() ==
        q * z1 * z1 * z1 + (-q1 - q2 + 2 * q - q * q) * (z1 + z2) * z1 * z2 + q * z2 * z2 * z2);
  for (int d = -3; d <= 3; ++d) {
    CHECK(shuffle::shuffle(letter(d), ShuffleElement::scalar(1)) == letter(d));
    CHECK(shuffle::shuffle(ShuffleElement::scalar(q1), letter(d)).poly() == q1 * LaurentPoly::z(1, d));
  }
  CHECK(shuffle_word({}) == ShuffleElement::scalar(1));
  CHECK(shuffle_word({4}).poly() == LaurentPoly::z(1, 4));
  CHECK(shuffle_word({0}).poly() == LaurentPoly(1));
  CHECK(shuffle_word({1, 1}).poly() == z1 * z2 * shuffle_word({0, 0}).poly());
  // frozen from the sympy reference
  CHECK(to_string(shuffle_word({0, 0}).poly()) ==
        "-q1^2 q2^2 z1 z2 - q1 q2^2 z1 z2 - q1^2 q2 z1 z2 + 2 q1 q2 z2^2 + 2 q1 q2 z1 z2 + 2 q1 q2 z1^2 - q2 z1 z2 - "
        "q1 z1 z2 - z1 z2");
}

TEST_CASE("shuffle is not commutative") {
  CHECK_FALSE(shuffle::shuffle(letter(1), letter(0)) == shuffle::shuffle(letter(0), letter(1)));
}

TEST_CASE("golden expansions") {
  const auto rows = load_golden_expansions();
  REQUIRE(rows.size() >= 10);
  WordExpander expander;
  for (const auto& [w, text] : rows) {
    CAPTURE(to_string(w));
    CHECK(to_string(expander.expand(w).poly()) == text);
  }
}

TEST_CASE("word expander caches prefixes") {
  WordExpander expander;
  const ShuffleElement& e = expander.expand({1, 0, 2});
  CHECK(e == shuffle_word({1, 0, 2}));
  CHECK(expander.cached() >= 3);
  CHECK(&expander.expand({1, 0, 2}) == &e);
}

TEST_CASE("output is symmetric") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 10; ++i) {
    const int k = 1 + static_cast<int>(rng() % 2);
    const int l = 1 + static_cast<int>(rng() % 2);
    const ShuffleElement r = shuffle::shuffle(random_element(rng, k), random_element(rng, l));
    CHECK(r.arity() == k + l);
    CHECK(is_symmetric(r.poly(), k + l));
  }
}

TEST_CASE("associativity on random letters") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int i = 0; i < 10; ++i) {
    const ShuffleElement a = letter(d(rng)), b = letter(d(rng)), c = letter(d(rng));
    CHECK(shuffle::shuffle(shuffle::shuffle(a, b), c) == shuffle::shuffle(a, shuffle::shuffle(b, c)));
  }
}

TEST_CASE("associativity with a higher-arity operand") {
  std::mt19937_64 rng(8);
  const ShuffleElement a = random_element(rng, 2), b = letter(-1), c = random_element(rng, 1);
  CHECK(shuffle::shuffle(shuffle::shuffle(a, b), c) == shuffle::shuffle(a, shuffle::shuffle(b, c)));
}

TEST_CASE("bilinearity over the coefficient ring") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 8; ++i) {
    const ShuffleElement p = random_element(rng, 2);
    const ShuffleElement p2 = random_element(rng, 2);
    const ShuffleElement r = random_element(rng, 1);
    const LaurentPoly c = random_poly(rng, 0, 2);
    CHECK(shuffle::shuffle(p.times(c) + p2, r) == shuffle::shuffle(p, r).times(c) + shuffle::shuffle(p2, r));
    CHECK(shuffle::shuffle(r, p.times(c) + p2) == shuffle::shuffle(r, p).times(c) + shuffle::shuffle(r, p2));
  }
}

TEST_CASE("homogeneity degree a + b + 2kl") {
  std::mt19937_64 rng(10);
  for (int i = 0; i < 8; ++i) {
    const int k = 1 + static_cast<int>(rng() % 2);
    const int l = 1 + static_cast<int>(rng() % 2);
    const int a = static_cast<int>(rng() % 5) - 2;
    const int b = static_cast<int>(rng() % 5) - 2;
    // symmetrized homogeneous monomials, with q-coefficients
    Monomial ma, mb;
    for (int j = 1; j < k; ++j) ma.set(Variable::z(j), -1);
    ma.set(Variable::z(k), a + (k - 1));
    for (int j = 1; j < l; ++j) mb.set(Variable::z(j), 2);
    mb.set(Variable::z(l), b - 2 * (l - 1));
    const ShuffleElement p = ShuffleElement::make(k, sym(LaurentPoly::monomial(ma) * (1 + q1), k));
    const ShuffleElement r = ShuffleElement::make(l, sym(LaurentPoly::monomial(mb) * q2, l));
    REQUIRE(p.poly().z_homogeneous_degree() == a);
    REQUIRE(r.poly().z_homogeneous_degree() == b);
    const ShuffleElement s = shuffle::shuffle(p, r);
    CHECK(s.poly().z_homogeneous_degree() == a + b + 2 * k * l);
  }
}

TEST_CASE("coset expansion agrees with the full symmetrization") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 6; ++i) {
    const int k = 1 + static_cast<int>(rng() % 2);
    const ShuffleElement p = random_element(rng, k);
    const ShuffleElement r = random_element(rng, 1);
    CHECK(shuffle::shuffle(p, r) == shuffle_full_sym(p, r));
    CHECK(shuffle::shuffle(r, p) == shuffle_full_sym(r, p));
  }
  CHECK(shuffle::shuffle(letter(2), letter(-1)) == shuffle_full_sym(letter(2), letter(-1)));
}

TEST_CASE("arity cap") {
  CHECK_THROWS_AS(shuffle_word(GeneratorWord(std::vector<int>(9, 0))), ArityMismatch);
}
