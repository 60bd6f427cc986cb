#include "shuffle/monomial.hpp"

#include <algorithm>

#include "shuffle/errors.hpp"

namespace shuffle {

Variable Variable::z(int index) {
  if (index < 1 || index > kMaxArity) {
    throw ArityMismatch("z index " + std::to_string(index) + " outside 1.." +
                        std::to_string(kMaxArity));
  }
  return Variable(Kind::Z, index);
}

Variable Variable::from_slot(int slot) {
  if (slot == 0) return q1();
  if (slot == 1) return q2();
  return z(slot - 1);
}

std::string Variable::name() const {
  switch (kind_) {
    case Kind::Q1:
      return "q1";
    case Kind::Q2:
      return "q2";
    case Kind::Z:
      break;
  }
  return "z" + std::to_string(index_);
}

Monomial Monomial::of(Variable v, Exponent e) {
  Monomial m;
  m.exps_[v.slot()] = e;
  return m;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}


std::int64_t Monomial::z_degree() const {
  std::int64_t d = 0;
  for (int s = 2; s < kNumSlots; ++s) d += exps_[s];
  return d;
}

int Monomial::max_z_index() const {
  for (int s = kNumSlots - 1; s >= 2; --s) {
    if (exps_[s] != 0) return s - 1;
  }
  return 0;
}

bool Monomial::is_polynomial() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e >= 0; });
}

Monomial Monomial::inverse() const {
  Monomial m;
  for (int s = 0; s < kNumSlots; ++s) m.exps_[s] = -exps_[s];
  return m;
}

Monomial& Monomial::operator*=(const Monomial& o) {
  for (int s = 0; s < kNumSlots; ++s) exps_[s] += o.exps_[s];
  return *this;
}

Monomial& Monomial::operator/=(const Monomial& o) {
  for (int s = 0; s < kNumSlots; ++s) exps_[s] -= o.exps_[s];
  return *this;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (int s = 0; s < kNumSlots; ++s) m.exps_[s] = std::min(a.exps_[s], b.exps_[s]);
  return m;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (int s = 0; s < kNumSlots; ++s) m.exps_[s] = std::max(a.exps_[s], b.exps_[s]);
  return m;
}

std::size_t Monomial::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  for (Exponent e : exps_) {
    h ^= static_cast<std::uint32_t>(e);
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}


}  // namespace shuffle
