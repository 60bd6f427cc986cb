#include "shuffle/shuffle.hpp"

#include <algorithm>
#include <numeric>

#include "shuffle/errors.hpp"

namespace shuffle {

namespace {

void check_total_arity(int n) {
  if (n > kMaxArity) {
    throw ArityMismatch("shuffle result arity " + std::to_string(n) + " exceeds the supported maximum " +
                        std::to_string(kMaxArity));
  }
}

// Exact quotient f / (z_i - z_j) on unordered term lists. Terms sharing every
// exponent except the split of deg_i + deg_j form a chain; along each chain
// c_e = g_{e-1} - g_e, so g is recovered top-down in one pass.
std::vector<LaurentPoly::Term> divide_by_difference(std::vector<LaurentPoly::Term>&& f, int i, int j) {
  const Variable vi = Variable::z(i);
  const Variable vj = Variable::z(j);
  struct Entry {
    Monomial key;
    Monomial::Exponent e;
    std::uint32_t index;
  };
  std::vector<Entry> entries;
  entries.reserve(f.size());
  for (std::uint32_t n = 0; n < f.size(); ++n) {
    const Monomial& m = f[n].mono;
    Monomial key = m;
    key.set(vj, m[vi] + m[vj]);
    key.set(vi, 0);
    entries.push_back({key, m[vi], n});
  }
  // any total order groups the chains
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    for (int s = 0; s < kNumSlots; ++s) {
      if (a.key.slot(s) != b.key.slot(s)) return a.key.slot(s) < b.key.slot(s);
    }
    return a.e > b.e;
  });

  std::vector<LaurentPoly::Term> out;
  out.reserve(entries.size() * 2);
  Rational g;
  for (std::size_t a = 0; a < entries.size();) {
    std::size_t b = a;
    while (b < entries.size() && entries[b].key == entries[a].key) ++b;
    const Monomial& key = entries[a].key;
    const Monomial::Exponent sum = key[vj];
    g = 0;
    std::size_t next = a;
    for (Monomial::Exponent e = entries[a].e; e > entries[b - 1].e; --e) {
      if (entries[next].e == e) g += f[entries[next++].index].coef;
      if (sgn(g) != 0) {
        Monomial m = key;
        m.set(vi, e - 1);
        m.set(vj, sum - e);
        out.push_back({m, g});
      }
    }
    if (sgn(g + f[entries[b - 1].index].coef) != 0) {
      throw NotDivisible("shuffle numerator is not divisible by z" + std::to_string(i) + " - z" + std::to_string(j));
    }
    a = b;
  }
  return out;
}

Rational factorial(int n) {
  Rational f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

ShuffleElement ShuffleElement::make(int arity, LaurentPoly poly) {
  if (arity < 0 || arity > kMaxArity) throw ArityMismatch("arity " + std::to_string(arity) + " out of range");
  if (poly.max_z_index() > arity) {
    throw ArityMismatch("polynomial uses z" + std::to_string(poly.max_z_index()) + " but arity is " +
                        std::to_string(arity));
  }
  if (!is_symmetric(poly, arity)) {
    throw NotSymmetric(to_string(poly) + " is not symmetric in z1..z" + std::to_string(arity));
  }
  return ShuffleElement(arity, std::move(poly));
}

ShuffleElement ShuffleElement::letter(int d) { return ShuffleElement(1, LaurentPoly::z(1, d)); }

ShuffleElement ShuffleElement::one(int arity) { return make(arity, 1); }

ShuffleElement ShuffleElement::times(const LaurentPoly& c) const {
  if (!is_symmetric(c, arity_)) {
    throw NotSymmetric(to_string(c) + " is not an element of V_" + std::to_string(arity_));
  }
  return ShuffleElement(arity_, c * poly_);
}

ShuffleElement operator+(const ShuffleElement& a, const ShuffleElement& b) {
  if (a.arity_ != b.arity_) {
    throw ArityMismatch("cannot add elements of arity " + std::to_string(a.arity_) + " and " +
                        std::to_string(b.arity_));
  }
  return ShuffleElement(a.arity_, a.poly_ + b.poly_);
}

ShuffleElement operator-(const ShuffleElement& a, const ShuffleElement& b) {
  if (a.arity_ != b.arity_) {
    throw ArityMismatch("cannot subtract elements of arity " + std::to_string(a.arity_) + " and " +
                        std::to_string(b.arity_));
  }
  return ShuffleElement(a.arity_, a.poly_ - b.poly_);
}

std::string to_string(const GeneratorWord& w) {
  std::string s = "[";
  for (int i = 0; i < w.arity(); ++i) {
    if (i) s += ',';
    s += std::to_string(w[i]);
  }
  return s + "]";
}

LaurentPoly z_difference(int a, int b) { return LaurentPoly::z(a) - LaurentPoly::z(b); }

LaurentPoly vandermonde(int n) {
  LaurentPoly v = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) v *= z_difference(i, j);
  }
  return v;
}

LaurentPoly omega_numerator(int i, int j) {
  const LaurentPoly zi = LaurentPoly::z(i);
  const LaurentPoly zj = LaurentPoly::z(j);
  return (zi - LaurentPoly::q() * zj) * (zj - LaurentPoly::q1() * zi) * (zj - LaurentPoly::q2() * zi);
}

RationalFunction omega(int i, int j) {
  if (i == j) throw std::invalid_argument("omega needs two distinct indices");
  return {omega_numerator(i, j), z_difference(i, j)};
}

LaurentPoly sym(const LaurentPoly& p, int arity) {
  if (p.max_z_index() > arity) throw ArityMismatch("sym: polynomial uses a z index above the arity");
  std::vector<int> sigma(arity);
  std::iota(sigma.begin(), sigma.end(), 1);
  LaurentPoly total;
  do {
    total += relabel_z(p, sigma);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return total;
}

ShuffleElement shuffle(const ShuffleElement& p, const ShuffleElement& q) {
  if (p.arity() == 0) return ShuffleElement(q.arity(), p.poly() * q.poly());
  if (q.arity() == 0) return ShuffleElement(p.arity(), p.poly() * q.poly());
  const int k = p.arity();
  const int l = q.arity();
  const int n = k + l;
  check_total_arity(n);

  // choose[i] marks the positions that receive the variables of p
  std::vector<bool> choose(n, false);
  std::fill(choose.begin(), choose.begin() + k, true);
  LaurentPoly numerator;
  do {
    std::vector<int> left;
    std::vector<int> right;
    for (int i = 0; i < n; ++i) (choose[i] ? left : right).push_back(i + 1);

    LaurentPoly kernel = 1;
    bool negate = false;
    for (int i : left) {
      for (int j : right) {
        kernel *= omega_numerator(i, j);
        if (i > j) negate = !negate;
      }
    }
    // complete the cross-pair denominator to the full Vandermonde
    for (const auto* block : {&left, &right}) {
      for (std::size_t a = 0; a < block->size(); ++a) {
        for (std::size_t b = a + 1; b < block->size(); ++b) kernel *= z_difference((*block)[a], (*block)[b]);
      }
    }
    LaurentPoly term = relabel_z(p.poly(), left) * (relabel_z(q.poly(), right) * kernel);
    if (negate) {
      numerator -= term;
    } else {
      numerator += term;
    }
  } while (std::prev_permutation(choose.begin(), choose.end()));

  // one linear factor at a time: each step touches a single remainder term
  std::vector<LaurentPoly::Term> terms = numerator.terms();
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) terms = divide_by_difference(std::move(terms), i, j);
  }
  return ShuffleElement(n, LaurentPoly::from_terms(std::move(terms)));
}

ShuffleElement shuffle_full_sym(const ShuffleElement& p, const ShuffleElement& q) {
  const int k = p.arity();
  const int l = q.arity();
  const int n = k + l;
  check_total_arity(n);

  std::vector<int> shift(l);
  std::iota(shift.begin(), shift.end(), k + 1);
  LaurentPoly base = p.poly() * relabel_z(q.poly(), shift);
  for (int i = 1; i <= k; ++i) {
    for (int j = k + 1; j <= n; ++j) base *= omega_numerator(i, j);
  }
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      const bool cross = a <= k && b > k;
      if (!cross) base *= z_difference(a, b);
    }
  }
  // sigma(V) = sign(sigma) V, so Sym[base / V] = (sum sign(sigma) sigma(base)) / V
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 1);
  LaurentPoly total;
  do {
    int inversions = 0;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) inversions += sigma[a] > sigma[b];
    }
    LaurentPoly image = relabel_z(base, sigma);
    if (inversions % 2) {
      total -= image;
    } else {
      total += image;
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));

  LaurentPoly result = n == 0 ? total : exact_div(total, vandermonde(n));
  result *= 1 / (factorial(k) * factorial(l));
  return ShuffleElement(n, std::move(result));
}

namespace {

void check_word_arity(const GeneratorWord& w) {
  if (w.arity() > kMaxArity) {
    throw ArityMismatch("word " + to_string(w) + " exceeds the supported arity " + std::to_string(kMaxArity));
  }
}

}  // namespace

ShuffleElement shuffle_word(const GeneratorWord& w) {
  check_word_arity(w);
  if (w.arity() == 0) return ShuffleElement::one(0);
  ShuffleElement acc = ShuffleElement::letter(w[0]);
  for (int i = 1; i < w.arity(); ++i) acc = shuffle(acc, ShuffleElement::letter(w[i]));
  return acc;
}

const ShuffleElement& WordExpander::expand(const GeneratorWord& w) {
  {
    std::lock_guard lock(mutex_);
    auto it = cache_.find(w);
    if (it != cache_.end()) return it->second;
  }
  check_word_arity(w);
  ShuffleElement value;
  if (w.arity() <= 1) {
    value = shuffle_word(w);
  } else {
    std::vector<int> prefix(w.begin(), w.end() - 1);
    const ShuffleElement& head = expand(GeneratorWord(std::move(prefix)));
    value = shuffle(head, ShuffleElement::letter(w[w.arity() - 1]));
  }
  std::lock_guard lock(mutex_);
  // concurrent callers may race to fill the same entry; both values are equal
  return cache_.try_emplace(w, std::move(value)).first->second;
}

std::size_t WordExpander::cached() const {
  std::lock_guard lock(mutex_);
  return cache_.size();
}

}  // namespace shuffle
