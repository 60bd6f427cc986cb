#pragma once

#include <compare>
#include <initializer_list>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "shuffle/laurent_poly.hpp"

namespace shuffle {

/// An element of V_k: a Laurent polynomial symmetric in z1..zk together with
/// its arity k. Arity 0 elements are scalars in q1, q2.
class ShuffleElement {
 public:
  ShuffleElement() = default;

  /// Checks that poly uses no z index above arity and is symmetric.
  static ShuffleElement make(int arity, LaurentPoly poly);
  static ShuffleElement scalar(LaurentPoly c) { return make(0, std::move(c)); }
  /// The one-variable element z1^d of V_1.
  static ShuffleElement letter(int d);
  /// The constant 1 of V_d.
  static ShuffleElement one(int arity);

  int arity() const { return arity_; }
  const LaurentPoly& poly() const { return poly_; }

  /// Multiplication by an element of V_k (c must be symmetric in z1..zk).
  ShuffleElement times(const LaurentPoly& c) const;

  friend ShuffleElement operator+(const ShuffleElement& a, const ShuffleElement& b);
  friend ShuffleElement operator-(const ShuffleElement& a, const ShuffleElement& b);
  friend bool operator==(const ShuffleElement&, const ShuffleElement&) = default;

 private:
  ShuffleElement(int arity, LaurentPoly poly) : arity_(arity), poly_(std::move(poly)) {}
  friend ShuffleElement shuffle(const ShuffleElement&, const ShuffleElement&);
  friend ShuffleElement shuffle_full_sym(const ShuffleElement&, const ShuffleElement&);

  int arity_ = 0;
  LaurentPoly poly_;
};

/// Integer list [d1,...,dk] standing for z^{d1} * z^{d2} * ... * z^{dk}.
class GeneratorWord {
 public:
  GeneratorWord() = default;
  GeneratorWord(std::initializer_list<int> exps) : exps_(exps) {}
  explicit GeneratorWord(std::vector<int> exps) : exps_(std::move(exps)) {}

  int arity() const { return static_cast<int>(exps_.size()); }
  const std::vector<int>& exponents() const { return exps_; }
  int operator[](std::size_t i) const { return exps_[i]; }
  auto begin() const { return exps_.begin(); }
  auto end() const { return exps_.end(); }

  friend auto operator<=>(const GeneratorWord&, const GeneratorWord&) = default;
  friend bool operator==(const GeneratorWord&, const GeneratorWord&) = default;

 private:
  std::vector<int> exps_;
};

/// "[d1,d2,...]"
std::string to_string(const GeneratorWord& w);

/// z_a - z_b
LaurentPoly z_difference(int a, int b);
/// prod_{i<j} (z_i - z_j) over z1..zn.
LaurentPoly vandermonde(int n);

/// (z_i - q z_j)(z_j - q1 z_i)(z_j - q2 z_i), the numerator of omega(z_i, z_j).
LaurentPoly omega_numerator(int i, int j);
/// omega(z_i, z_j) = omega_numerator(i, j) / (z_i - z_j).
RationalFunction omega(int i, int j);

/// Full orbit sum over S_k acting on z1..zk.
LaurentPoly sym(const LaurentPoly& p, int arity);

/// Shuffle product V_k x V_l -> V_{k+l}.
///
/// Sums over the C(k+l, k) ways of splitting {1..k+l} into the two blocks;
/// this already absorbs the 1/(k! l!) normalization. Every term is put over
/// the Vandermonde denominator and a single exact division clears it.
ShuffleElement shuffle(const ShuffleElement& p, const ShuffleElement& q);

/// Same product computed by antisymmetrizing over all of S_{k+l} and dividing
/// by k! l!. Factorial cost; kept as a cross-check of the block-split route.
ShuffleElement shuffle_full_sym(const ShuffleElement& p, const ShuffleElement& q);

/// Left fold of shuffle over the letters of w; the empty word gives 1 in V_0.
ShuffleElement shuffle_word(const GeneratorWord& w);

/// Memoizing front end to shuffle_word. Prefix expansions are cached so words
/// sharing a prefix reuse work. Safe to share between threads.
class WordExpander {
 public:
  const ShuffleElement& expand(const GeneratorWord& w);
  std::size_t cached() const;

 private:
  mutable std::mutex mutex_;
  std::map<GeneratorWord, ShuffleElement> cache_;
};

}  // namespace shuffle
