#pragma once

#include <optional>
#include <variant>

#include "shuffle/generators.hpp"
#include "shuffle/shuffle.hpp"

namespace shuffle {

/// g1(z_m, z_n) = 2q z_m^2 - (1 + q1 + q2 - 2q + q1 q + q2 q + q^2) z_m z_n + 2q z_n^2
LaurentPoly ideal_g1(int m = 1, int n = 2);
/// g2(z_m, z_n) = (1 - q1)(1 - q2)(1 - q)(z_m + z_n)
LaurentPoly ideal_g2(int m = 1, int n = 2);
/// (1 + q1)(1 + q2)(1 + q)
LaurentPoly corollary_factor();

/// Vanishing on both wheel loci (z1, z2, z3) = (q z3, q2 z3, z3) and
/// (q z3, q1 z3, z3), with every other variable left formal. Vacuously true
/// below arity 3.
bool wheel_check(const ShuffleElement& p);

/// Zero residue modulo (q1 z1 - z2, q2 z2 - z3) and (q2 z1 - z2, q1 z2 - z3).
/// Throws ArityTooSmall below arity 3.
bool ideal_wheel_check(const ShuffleElement& p);

/// The cleared kernel identity 2 N(z_m, z_n) = (z_m - z_n) g1 + z_m z_n g2,
/// where N is the numerator of omega.
struct OmegaDecomposition {
  LaurentPoly omega_numerator;
  LaurentPoly g1;
  LaurentPoly g2;
};

/// Checks the identity exactly; throws IdentityViolated if it fails.
OmegaDecomposition omega_decomposition(int m = 1, int n = 2);

/// Cofactors with expand(target) = a * g1(z1, z2) + b * g2(z1, z2) in the
/// full Laurent ring.
struct IdealCertificate {
  std::variant<GeneratorWord, ShuffleElement> target;
  LaurentPoly a;
  LaurentPoly b;
};

/// Builds cofactors for the expansion of a word of arity >= 2.
IdealCertificate ideal_certificate(const GeneratorWord& w, WordExpander* expander = nullptr);
/// Same for an arbitrary element; throws NotInIdeal when none exist.
IdealCertificate ideal_certificate(const ShuffleElement& p);

/// Membership test in (g1, g2); returns cofactors (a, b) or nothing.
std::optional<std::pair<LaurentPoly, LaurentPoly>> ideal_cofactors(const LaurentPoly& f);

bool verify_ideal_certificate(const IdealCertificate& c, WordExpander* expander = nullptr);

struct CorollaryResult {
  bool divisible = false;
  /// P(z1, -z1, z3, ...) / ((1 + q1)(1 + q2)(1 + q)) when divisible.
  LaurentPoly cofactor;
};

/// Substitutes z2 = -z1 and divides by (1 + q1)(1 + q2)(1 + q).
/// Throws ArityTooSmall below arity 2.
CorollaryResult corollary_check(const ShuffleElement& p);

}  // namespace shuffle
