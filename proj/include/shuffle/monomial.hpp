#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>

namespace shuffle {

/// Largest arity (number of z variables) a single polynomial may use.
inline constexpr int kMaxArity = 8;
inline constexpr int kNumSlots = 2 + kMaxArity;

/// One of q1, q2, z1, ..., z_kMaxArity. There is no variable for q; it is
/// always the product q1*q2.
class Variable {
 public:
  enum class Kind : std::uint8_t { Q1, Q2, Z };

  static constexpr Variable q1() { return Variable(Kind::Q1, 0); }
  static constexpr Variable q2() { return Variable(Kind::Q2, 0); }
  /// z_index with 1-based index.
  static Variable z(int index);

  constexpr Kind kind() const { return kind_; }
  /// 1-based z index; 0 for q1/q2.
  constexpr int index() const { return index_; }
  /// Position in the exponent vector: q1, q2, z1, z2, ...
  constexpr int slot() const {
    return kind_ == Kind::Q1 ? 0 : kind_ == Kind::Q2 ? 1 : 1 + index_;
  }
  static Variable from_slot(int slot);

  std::string name() const;

  friend constexpr auto operator<=>(const Variable& a, const Variable& b) {
    return a.slot() <=> b.slot();
  }
  friend constexpr bool operator==(const Variable& a, const Variable& b) {
    return a.slot() == b.slot();
  }

 private:
  constexpr Variable(Kind kind, int index) : kind_(kind), index_(index) {}
  Kind kind_;
  int index_;
};

/// Laurent monomial q1^a q2^b z1^c ... stored as a dense exponent vector.
/// Absent variables have exponent zero, so equality of vectors is equality of
/// monomials.
class Monomial {
 public:
  using Exponent = std::int32_t;

  constexpr Monomial() : exps_{} {}
  static Monomial of(Variable v, Exponent e = 1);

  Exponent operator[](Variable v) const { return exps_[v.slot()]; }
  Exponent slot(int s) const { return exps_[s]; }
  void set(Variable v, Exponent e) { exps_[v.slot()] = e; }
  void set_slot(int s, Exponent e) { exps_[s] = e; }

  bool is_one() const;
  /// Sum of all exponents, parameters included.
  std::int64_t degree() const {
    std::int64_t d = 0;
    for (Exponent e : exps_) d += e;
    return d;
  }
  /// Sum of z exponents only.
  std::int64_t z_degree() const;
  /// Largest z index with a nonzero exponent, 0 if none.
  int max_z_index() const;
  /// True when no exponent is negative.
  bool is_polynomial() const;

  Monomial inverse() const;
  Monomial& operator*=(const Monomial& o);
  Monomial& operator/=(const Monomial& o);
  friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }
  friend Monomial operator/(Monomial a, const Monomial& b) { return a /= b; }

  /// Componentwise minimum / maximum of exponents.
  static Monomial gcd(const Monomial& a, const Monomial& b);
  static Monomial lcm(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::size_t hash() const;

 private:
  std::array<Exponent, kNumSlots> exps_;
};

/// Monomial order: total degree first, ties broken lexicographically with
/// q1 < q2 < z1 < ... < zk (the greatest variable is compared first).
/// Returns negative, zero or positive.
inline int compare(const Monomial& a, const Monomial& b) {
  const auto da = a.degree();
  const auto db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  for (int s = kNumSlots - 1; s >= 0; --s) {
    if (a.slot(s) != b.slot(s)) return a.slot(s) < b.slot(s) ? -1 : 1;
  }
  return 0;
}

struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace shuffle
