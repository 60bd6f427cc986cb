#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "shuffle/monomial.hpp"

namespace shuffle {

using Rational = mpq_class;

/// Sparse Laurent polynomial in q1, q2, z1..zk with exact rational
/// coefficients.
///
/// Terms are kept sorted ascending in the monomial order with no zero
/// coefficients, so two polynomials are equal iff their term vectors are.
/// Values are immutable once built; every operation returns a new value.
class LaurentPoly {
 public:
  struct Term {
    Monomial mono;
    Rational coef;
    friend bool operator==(const Term&, const Term&) = default;
  };

  LaurentPoly() = default;
  LaurentPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  LaurentPoly(long c) : LaurentPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  LaurentPoly(int c) : LaurentPoly(Rational(c)) {}   // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(const Monomial& m, const Rational& c = 1);
  static LaurentPoly var(Variable v, Monomial::Exponent e = 1);
  static LaurentPoly q1() { return var(Variable::q1()); }
  static LaurentPoly q2() { return var(Variable::q2()); }
  /// q = q1*q2.
  static LaurentPoly q() { return monomial(Monomial::of(Variable::q1()) * Monomial::of(Variable::q2())); }
  static LaurentPoly z(int index, Monomial::Exponent e = 1) { return var(Variable::z(index), e); }

  /// Builds a canonical polynomial from arbitrary (possibly repeated, possibly
  /// zero) terms.
  static LaurentPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  /// Constant term-only polynomial (no variables at all).
  bool is_constant() const;
  /// Greatest term in the monomial order; requires nonzero.
  const Term& leading_term() const { return terms_.back(); }
  Rational coefficient(const Monomial& m) const;

  /// Largest z index appearing, 0 when free of z.
  int max_z_index() const;
  /// Common z-degree when every term has the same total z exponent.
  std::optional<std::int64_t> z_homogeneous_degree() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& c);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly mul_monomial(const Monomial& m, const Rational& c = 1) const;

  /// Non-negative power; negative powers only for monomials.
  LaurentPoly pow(int e) const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  explicit LaurentPoly(std::vector<Term> sorted) : terms_(std::move(sorted)) {}
  std::vector<Term> terms_;
};

/// Transient fraction; only used while clearing shuffle denominators.
struct RationalFunction {
  LaurentPoly numerator;
  LaurentPoly denominator;
};

inline LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q) { return p + q; }
inline LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }

/// Quotient t with t*d == p. Throws NotDivisible when d does not divide p and
/// std::domain_error when d is zero.
LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& d);
std::optional<LaurentPoly> try_exact_div(const LaurentPoly& p, const LaurentPoly& d);

using Substitution = std::map<Variable, LaurentPoly>;

/// Ring homomorphism sending each listed variable to its image. Variables
/// with negative exponents need a single-term image (NonInvertibleImage
/// otherwise).
LaurentPoly substitute(const LaurentPoly& p, const Substitution& images);

/// Relabels z_i -> z_{sigma[i-1]}. sigma is a permutation of 1..k given as
/// 1-based images; z indices above k are left alone.
LaurentPoly permute_z(const LaurentPoly& p, std::span<const int> sigma);

/// Like permute_z but sigma need only be injective; used to embed k
/// variables into a larger set.
LaurentPoly relabel_z(const LaurentPoly& p, std::span<const int> targets);

/// True iff p is invariant under every adjacent transposition of z1..zk.
bool is_symmetric(const LaurentPoly& p, int arity);

/// Canonical rendering: terms descending in the monomial order, reduced
/// fractions, factors `q1^a q2^b z1^c ...` with exponent 1 and unit
/// coefficients omitted.
std::string to_string(const LaurentPoly& p);
std::string to_string(const Monomial& m);

}  // namespace shuffle
