// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "shuffle/conditions.hpp"
#include "shuffle/expr.hpp"
#include "shuffle/generators.hpp"

using namespace shuffle;

namespace {

const LaurentPoly z1 = LaurentPoly::z(1);
const LaurentPoly z2 = LaurentPoly::z(2);
const LaurentPoly q1 = LaurentPoly::q1();
const LaurentPoly q2 = LaurentPoly::q2();
const LaurentPoly q = LaurentPoly::q();

struct Outcome {
  bool ok;
  std::string detail;
};

class Suite {
 public:
  void run(int id, const std::string& name, double limit_seconds, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o{false, ""};
    try {
      o = body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && secs > limit_seconds) {
      o.ok = false;
      o.detail += " (over the " + fmt(limit_seconds) + " s limit)";
    }
    failures_ += o.ok ? 0 : 1;
    std::cout << (o.ok ? "PASS" : "FAIL") << "  " << id << ". " << name << "  [" << fmt(secs) << " s] " << o.detail
              << std::endl;
  }

  int failures() const { return failures_; }

 private:
  static std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", x);
    return buf;
  }

  int failures_ = 0;
};

std::string count(int passed, int total) {
  return std::to_string(passed) + "/" + std::to_string(total);
}

GeneratorWord random_word(std::mt19937_64& rng, int arity, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  std::vector<int> e(arity);
  for (int& x : e) x = d(rng);
  return GeneratorWord(std::move(e));
}

}  // namespace

int main() {
  Suite suite;
  WordExpander expander;
  std::mt19937_64 rng(20240611);

  suite.run(1, "golden expansion sh[0,0]", 1, [] {
    const std::string got = to_string(eval("sh[0,0]").poly());
    const LaurentPoly expected =
        2 * q * z1 * z1 - (1 + q1 + q2 - 2 * q + q1 * q + q2 * q + q * q) * z1 * z2 + 2 * q * z2 * z2;
    return Outcome{got == to_string(expected), got};
  });

  suite.run(2, "golden expansion sh[1,0]", 1, [] {
    const std::string got = to_string(eval("sh[1,0]").poly());
    const LaurentPoly expected =
        q * z1 * z1 * z1 + (-q1 - q2 + 2 * q - q * q) * (z1 + z2) * z1 * z2 + q * z2 * z2 * z2;
    return Outcome{got == to_string(expected), got};
  });

  suite.run(3, "2 sh[1,0] - (z1+z2) sh[0,0] = z1 z2 (1-q1)(1-q2)(1-q)(z1+z2)", 1, [] {
    const LaurentPoly lhs = eval("2 sh[1,0] - (z1 + z2) sh[0,0]").poly();
    const LaurentPoly rhs = z1 * z2 * (1 - q1) * (1 - q2) * (1 - q) * (z1 + z2);
    return Outcome{lhs == rhs, ""};
  });

  suite.run(4, "associativity on [-2,2]^3", 30, [] {
    int passed = 0;
    for (int a = -2; a <= 2; ++a)
      for (int b = -2; b <= 2; ++b)
        for (int c = -2; c <= 2; ++c) {
          const auto za = ShuffleElement::letter(a), zb = ShuffleElement::letter(b), zc = ShuffleElement::letter(c);
          passed += shuffle::shuffle(shuffle::shuffle(za, zb), zc) == shuffle::shuffle(za, shuffle::shuffle(zb, zc));
        }
    return Outcome{passed == 125, count(passed, 125)};
  });

  suite.run(5, "wheel conditions on arity-3 words in [0,2]^3 and 10 random arity-4 words", 120, [&] {
    int passed = 0;
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; b <= 2; ++b)
        for (int c = 0; c <= 2; ++c) passed += wheel_check(expander.expand({a, b, c}));
    for (int i = 0; i < 10; ++i) passed += wheel_check(expander.expand(random_word(rng, 4, 0, 2)));
    return Outcome{passed == 37, count(passed, 37)};
  });

  suite.run(6, "module relations for k in {2,3,4}, n in [-2,2], 5 random words each", 300, [&] {
    int passed = 0, total = 0;
    for (int k = 2; k <= 4; ++k)
      for (int n = -2; n <= 2; ++n)
        for (int i = 0; i < 5; ++i) {
          const GeneratorWord w = random_word(rng, k, -3, 3);
          passed += verify_lemma(w, n, LemmaRelation::ProductPower, &expander);
          passed += verify_lemma(w, n, LemmaRelation::PowerSum, &expander);
          total += 2;
        }
    return Outcome{passed == total, count(passed, total)};
  });

  suite.run(7, "arity-3 base identities and their swapped variants", 60, [&] {
    int passed = 0, printed = 0;
    const auto& ids = base_identities3();
    for (const auto& id : ids) {
      printed += !id.swapped_variant;
      passed += verify_certificate({id.target, id.terms}, &expander);
    }
    const int total = static_cast<int>(ids.size());
    return Outcome{passed == total && printed == 9,
                   count(passed, total) + " (" + std::to_string(printed) + " printed, " +
                       std::to_string(total - printed) + " swapped)"};
  });

  suite.run(8, "reduce3 certificates on [-1,3]^3", 600, [&] {
    int passed = 0;
    for (int a = -1; a <= 3; ++a)
      for (int b = -1; b <= 3; ++b)
        for (int c = -1; c <= 3; ++c) {
          const ModuleCertificate cert = reduce3({a, b, c});
          bool symmetric = true;
          for (const auto& t : cert.combination) symmetric = symmetric && is_symmetric(t.cofactor, 3);
          passed += symmetric && verify_certificate(cert, &expander);
        }
    return Outcome{passed == 125, count(passed, 125)};
  });

  suite.run(9, "reduce2 certificates on [-2,3]^2", 60, [&] {
    int passed = 0;
    for (int a = -2; a <= 3; ++a)
      for (int b = -2; b <= 3; ++b) {
        const ModuleCertificate cert = reduce2({a, b});
        bool symmetric = true;
        for (const auto& t : cert.combination) symmetric = symmetric && is_symmetric(t.cofactor, 2);
        passed += symmetric && verify_certificate(cert, &expander);
      }
    return Outcome{passed == 36, count(passed, 36)};
  });

  suite.run(10, "2 omega numerator = (z1-z2) g1 + z1 z2 g2", 1, [] {
    const OmegaDecomposition d = omega_decomposition();
    return Outcome{2 * d.omega_numerator == (z1 - z2) * d.g1 + z1 * z2 * d.g2, ""};
  });

  suite.run(11, "ideal certificates for arity 2 and 3 on [-1,2]", 300, [&] {
    int passed = 0;
    for (int a = -1; a <= 2; ++a)
      for (int b = -1; b <= 2; ++b) {
        passed += verify_ideal_certificate(ideal_certificate(GeneratorWord{a, b}, &expander), &expander);
        for (int c = -1; c <= 2; ++c)
          passed += verify_ideal_certificate(ideal_certificate(GeneratorWord{a, b, c}, &expander), &expander);
      }
    return Outcome{passed == 80, count(passed, 80)};
  });

  suite.run(12, "divisibility by (1+q1)(1+q2)(1+q) after z2 = -z1", 120, [&] {
    int passed = 0;
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; b <= 2; ++b) {
        const CorollaryResult r2 = corollary_check(expander.expand({a, b}));
        passed += r2.divisible && substitute(expander.expand({a, b}).poly(), {{Variable::z(2), -z1}}) ==
                                      r2.cofactor * corollary_factor();
        for (int c = 0; c <= 2; ++c) {
          const CorollaryResult r3 = corollary_check(expander.expand({a, b, c}));
          passed += r3.divisible && substitute(expander.expand({a, b, c}).poly(), {{Variable::z(2), -z1}}) ==
                                        r3.cofactor * corollary_factor();
        }
      }
    const CorollaryResult g1 = corollary_check(ShuffleElement::make(2, ideal_g1()));
    const bool spot = g1.divisible && g1.cofactor == z1 * z1;
    return Outcome{passed == 36 && spot, count(passed, 36) + ", g1 cofactor " + to_string(g1.cofactor)};
  });

  suite.run(13, "wheel_check and ideal_wheel_check agree on 50 random arity-3 inputs", 60, [&] {
    int agree = 0, members = 0;
    std::uniform_int_distribution<int> coin(0, 1), coef(-3, 3), exp(-1, 2);
    for (int i = 0; i < 50; ++i) {
      // a V_3-combination of two words, perturbed by a symmetric monomial sum on odd draws
      ShuffleElement p = expander.expand(random_word(rng, 3, -1, 2)).times(elementary_symmetric(coin(rng) + 1, 3)) +
                         expander.expand(random_word(rng, 3, -1, 2)).times(LaurentPoly(coef(rng)) * q1);
      if (i % 2 == 1) {
        Monomial m;
        m.set(Variable::q2(), exp(rng));
        for (int j = 1; j <= 3; ++j) m.set(Variable::z(j), exp(rng));
        const int c = coef(rng);
        p = p + ShuffleElement::make(3, sym(LaurentPoly::monomial(m, c == 0 ? 1 : c), 3));
      }
      const bool w = wheel_check(p);
      members += w;
      agree += w == ideal_wheel_check(p);
    }
    return Outcome{agree == 50 && members > 0 && members < 50,
                   count(agree, 50) + " agree, " + std::to_string(members) + " satisfy the conditions"};
  });

  std::cout << (suite.failures() == 0 ? "all criteria passed" : std::to_string(suite.failures()) + " failed")
            << std::endl;
  return suite.failures() == 0 ? 0 : 1;
}
