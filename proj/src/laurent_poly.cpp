#include "shuffle/laurent_poly.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <unordered_map>

#include "shuffle/errors.hpp"

namespace shuffle {

namespace {

using Accumulator = std::unordered_map<Monomial, Rational, MonomialHash>;

LaurentPoly from_accumulator(Accumulator&& acc) {
  std::vector<LaurentPoly::Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (sgn(c) != 0) terms.push_back({m, std::move(c)});
  }
  return LaurentPoly::from_terms(std::move(terms));
}

bool is_integer(const Rational& x) { return mpz_cmp_ui(x.get_den_mpz_t(), 1) == 0; }

// out = a * b; integer operands skip the gcd canonicalization.
void mul_into(Rational& out, const Rational& a, const Rational& b) {
  if (is_integer(a) && is_integer(b)) {
    mpz_mul(out.get_num_mpz_t(), a.get_num_mpz_t(), b.get_num_mpz_t());
    mpz_set_ui(out.get_den_mpz_t(), 1);
  } else {
    mpq_mul(out.get_mpq_t(), a.get_mpq_t(), b.get_mpq_t());
  }
}

// acc += x (or -= x), same fast path.
void add_into(Rational& acc, const Rational& x, bool subtract = false) {
  if (is_integer(acc) && is_integer(x)) {
    (subtract ? mpz_sub : mpz_add)(acc.get_num_mpz_t(), acc.get_num_mpz_t(), x.get_num_mpz_t());
  } else if (subtract) {
    acc -= x;
  } else {
    acc += x;
  }
}

void accumulate(Accumulator& acc, const LaurentPoly& p, const Monomial& shift, const Rational& scale) {
  Rational tmp;
  for (const auto& t : p.terms()) {
    mul_into(tmp, t.coef, scale);
    add_into(acc[t.mono * shift], tmp);
  }
}

// Largest |coefficient| when every coefficient is an integer that fits in
// 62 bits.
std::optional<std::uint64_t> integer_bound(const LaurentPoly& p) {
  std::uint64_t bound = 0;
  for (const auto& t : p.terms()) {
    if (!is_integer(t.coef) || mpz_sizeinbase(t.coef.get_num_mpz_t(), 2) > 62) return std::nullopt;
    bound = std::max<std::uint64_t>(bound, mpz_getlimbn(t.coef.get_num_mpz_t(), 0));
  }
  return bound;
}

std::int64_t to_int64(const Rational& x) {
  const auto magnitude = static_cast<std::int64_t>(mpz_getlimbn(x.get_num_mpz_t(), 0));
  return sgn(x) < 0 ? -magnitude : magnitude;
}

// Product in machine integers when no partial sum can overflow.
std::optional<LaurentPoly> mul_small_integers(const LaurentPoly& big, const LaurentPoly& small) {
  const auto ba = integer_bound(big);
  const auto bb = ba ? integer_bound(small) : std::nullopt;
  if (!bb) return std::nullopt;
  const unsigned __int128 worst = static_cast<unsigned __int128>(*ba) * *bb * small.size();
  if (worst >= (static_cast<unsigned __int128>(1) << 62)) return std::nullopt;

  std::vector<std::int64_t> big_coef;
  big_coef.reserve(big.size());
  for (const auto& t : big.terms()) big_coef.push_back(to_int64(t.coef));
  std::unordered_map<Monomial, std::int64_t, MonomialHash> acc;
  acc.reserve(big.size() * 2);
  for (const auto& s : small.terms()) {
    const std::int64_t c = to_int64(s.coef);
    for (std::size_t i = 0; i < big.size(); ++i) acc[big.terms()[i].mono * s.mono] += c * big_coef[i];
  }
  std::vector<LaurentPoly::Term> terms;
  terms.reserve(acc.size());
  for (const auto& [m, c] : acc) {
    if (c != 0) terms.push_back({m, Rational(static_cast<long>(c))});
  }
  return LaurentPoly::from_terms(std::move(terms));
}

// Componentwise minimum of the exponents over all terms.
Monomial min_exponents(const LaurentPoly& p) {
  Monomial m = p.terms().front().mono;
  for (const auto& t : p.terms()) m = Monomial::gcd(m, t.mono);
  return m;
}

}  // namespace

LaurentPoly::LaurentPoly(const Rational& c) {
  if (sgn(c) != 0) terms_.push_back({Monomial{}, c});
}

LaurentPoly LaurentPoly::monomial(const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return {};
  return LaurentPoly(std::vector<Term>{{m, c}});
}

LaurentPoly LaurentPoly::var(Variable v, Monomial::Exponent e) {
  return monomial(Monomial::of(v, e));
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  // sort an index so coefficients are moved once
  std::vector<std::uint32_t> order(terms.size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(),
            [&](std::uint32_t a, std::uint32_t b) { return compare(terms[a].mono, terms[b].mono) < 0; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (std::uint32_t i : order) {
    Term& t = terms[i];
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coef += t.coef;
    } else {
      if (!out.empty() && sgn(out.back().coef) == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && sgn(out.back().coef) == 0) out.pop_back();
  return LaurentPoly(std::move(out));
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_one());
}

Rational LaurentPoly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& x) { return compare(t.mono, x) < 0; });
  if (it != terms_.end() && it->mono == m) return it->coef;
  return 0;
}

int LaurentPoly::max_z_index() const {
  int k = 0;
  for (const auto& t : terms_) k = std::max(k, t.mono.max_z_index());
  return k;
}

std::optional<std::int64_t> LaurentPoly::z_homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  const auto d = terms_.front().mono.z_degree();
  for (const auto& t : terms_) {
    if (t.mono.z_degree() != d) return std::nullopt;
  }
  return d;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() && b != o.terms_.end()) {
    const int c = compare(a->mono, b->mono);
    if (c < 0) {
      out.push_back(std::move(*a++));
    } else if (c > 0) {
      out.push_back(*b++);
    } else {
      Rational s = a->coef + b->coef;
      if (sgn(s) != 0) out.push_back({a->mono, std::move(s)});
      ++a;
      ++b;
    }
  }
  for (; a != terms_.end(); ++a) out.push_back(std::move(*a));
  for (; b != o.terms_.end(); ++b) out.push_back(*b);
  terms_ = std::move(out);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coef *= c;
  return *this;
}

LaurentPoly LaurentPoly::mul_monomial(const Monomial& m, const Rational& c) const {
  if (sgn(c) == 0) return {};
  // multiplying by a monomial preserves the order, so no re-sort is needed
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({t.mono * m, t.coef * c});
  return LaurentPoly(std::move(out));
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() == 1) return b.mul_monomial(a.terms_.front().mono, a.terms_.front().coef);
  if (b.size() == 1) return a.mul_monomial(b.terms_.front().mono, b.terms_.front().coef);
  const LaurentPoly& big = a.size() >= b.size() ? a : b;
  const LaurentPoly& small = a.size() >= b.size() ? b : a;
  if (auto product = mul_small_integers(big, small)) return *std::move(product);
  Accumulator acc;
  acc.reserve(big.size() * 2);
  for (const auto& t : small.terms_) accumulate(acc, big, t.mono, t.coef);
  return from_accumulator(std::move(acc));
}

LaurentPoly LaurentPoly::pow(int e) const {
  if (e < 0) {
    if (!is_monomial()) throw NonInvertibleImage("negative power of a non-monomial");
    const auto& t = terms_.front();
    return monomial(t.mono.inverse(), 1 / t.coef).pow(-e);
  }
  LaurentPoly result = 1;
  LaurentPoly base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

std::optional<LaurentPoly> try_exact_div(const LaurentPoly& p, const LaurentPoly& d) {
  if (d.is_zero()) throw std::domain_error("exact_div by zero");
  if (p.is_zero()) return LaurentPoly{};
  if (d.is_monomial()) {
    const auto& t = d.terms().front();
    return p.mul_monomial(t.mono.inverse(), 1 / t.coef);
  }
  // Shift both operands to ordinary polynomials; the divisor then has no
  // monomial factor, so Laurent divisibility equals polynomial divisibility.
  const Monomial shift_d = min_exponents(d);
  const Monomial shift_p = min_exponents(p);
  const LaurentPoly dd = d.mul_monomial(shift_d.inverse());
  const auto& lead = dd.leading_term();
  const Rational lead_inv = 1 / lead.coef;

  std::map<Monomial, Rational, MonomialLess> rem;
  for (const auto& t : p.terms()) rem.emplace(t.mono / shift_p, t.coef);

  std::vector<LaurentPoly::Term> quotient;
  Rational tmp;
  while (!rem.empty()) {
    auto top = std::prev(rem.end());
    const Monomial qm = top->first / lead.mono;
    if (!qm.is_polynomial()) return std::nullopt;
    Rational qc = top->second * lead_inv;
    rem.erase(top);
    for (auto it = dd.terms().rbegin() + 1; it != dd.terms().rend(); ++it) {
      mul_into(tmp, qc, it->coef);
      auto [slot, inserted] = rem.try_emplace(qm * it->mono, 0);
      add_into(slot->second, tmp, true);
      if (sgn(slot->second) == 0) rem.erase(slot);
    }
    quotient.push_back({qm, std::move(qc)});
  }
  const Monomial back = shift_p / shift_d;
  for (auto& t : quotient) t.mono *= back;
  return LaurentPoly::from_terms(std::move(quotient));
}

LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& d) {
  auto q = try_exact_div(p, d);
  if (!q) throw NotDivisible("(" + to_string(p) + ") is not divisible by (" + to_string(d) + ")");
  return *std::move(q);
}

LaurentPoly substitute(const LaurentPoly& p, const Substitution& images) {
  if (images.empty() || p.is_zero()) return p;
  std::map<std::pair<int, Monomial::Exponent>, LaurentPoly> powers;
  auto power_of = [&](const Variable& v, const LaurentPoly& image, Monomial::Exponent e) -> const LaurentPoly& {
    auto key = std::make_pair(v.slot(), e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    if (e < 0 && !image.is_monomial()) {
      throw NonInvertibleImage(v.name() + " has a negative exponent but its image " + to_string(image) +
                               " is not a monomial");
    }
    return powers.emplace(key, image.pow(e)).first->second;
  };

  Accumulator acc;
  for (const auto& t : p.terms()) {
    Monomial rest = t.mono;
    LaurentPoly factor = LaurentPoly::monomial(Monomial{}, t.coef);
    for (const auto& [v, image] : images) {
      const auto e = t.mono[v];
      if (e == 0) continue;
      rest.set(v, 0);
      factor = factor * power_of(v, image, e);
    }
    accumulate(acc, factor, rest, 1);
  }
  return from_accumulator(std::move(acc));
}

LaurentPoly relabel_z(const LaurentPoly& p, std::span<const int> targets) {
  std::vector<LaurentPoly::Term> out;
  out.reserve(p.size());
  const int k = static_cast<int>(targets.size());
  for (const auto& t : p.terms()) {
    Monomial m = t.mono;
    for (int i = 1; i <= k; ++i) m.set_slot(1 + i, 0);
    for (int i = 1; i <= k; ++i) {
      const auto e = t.mono.slot(1 + i);
      if (e != 0) m.set(Variable::z(targets[i - 1]), m[Variable::z(targets[i - 1])] + e);
    }
    out.push_back({m, t.coef});
  }
  return LaurentPoly::from_terms(std::move(out));
}

LaurentPoly permute_z(const LaurentPoly& p, std::span<const int> sigma) {
  std::vector<bool> seen(sigma.size() + 1, false);
  for (int s : sigma) {
    if (s < 1 || s > static_cast<int>(sigma.size()) || seen[s]) {
      throw std::invalid_argument("permute_z: not a permutation of 1..k");
    }
    seen[s] = true;
  }
  return relabel_z(p, sigma);
}

bool is_symmetric(const LaurentPoly& p, int arity) {
  if (p.max_z_index() > arity) return false;
  std::vector<int> sigma(arity);
  std::iota(sigma.begin(), sigma.end(), 1);
  for (int i = 0; i + 1 < arity; ++i) {
    std::swap(sigma[i], sigma[i + 1]);
    if (relabel_z(p, sigma) != p) return false;
    std::swap(sigma[i], sigma[i + 1]);
  }
  return true;
}

std::string to_string(const Monomial& m) {
  std::string s;
  for (int slot = 0; slot < kNumSlots; ++slot) {
    const auto e = m.slot(slot);
    if (e == 0) continue;
    if (!s.empty()) s += ' ';
    s += Variable::from_slot(slot).name();
    if (e != 1) s += '^' + std::to_string(e);
  }
  return s;
}

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const bool negative = sgn(it->coef) < 0;
    const Rational magnitude = abs(it->coef);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const std::string mono = to_string(it->mono);
    if (magnitude != 1 || mono.empty()) {
      out += magnitude.get_str();
      if (!mono.empty()) out += ' ';
    }
    out += mono;
  }
  return out;
}

}  // namespace shuffle
