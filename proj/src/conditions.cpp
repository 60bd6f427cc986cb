#include "shuffle/conditions.hpp"

#include <map>

#include "shuffle/errors.hpp"

namespace shuffle {

namespace {

const LaurentPoly& q() {
  static const LaurentPoly value = LaurentPoly::q();
  return value;
}

// 1 + q1 + q2 - 2q + q1 q + q2 q + q^2, the middle coefficient of g1
LaurentPoly g1_middle() {
  const LaurentPoly q1 = LaurentPoly::q1();
  const LaurentPoly q2 = LaurentPoly::q2();
  return 1 + q1 + q2 - 2 * q() + q1 * q() + q2 * q() + q() * q();
}

LaurentPoly kappa() {
  return (1 - LaurentPoly::q1()) * (1 - LaurentPoly::q2()) * (1 - q());
}

bool vanishes_under(const LaurentPoly& p, const Substitution& s) { return substitute(p, s).is_zero(); }

}  // namespace

LaurentPoly ideal_g1(int m, int n) {
  const LaurentPoly zm = LaurentPoly::z(m);
  const LaurentPoly zn = LaurentPoly::z(n);
  return 2 * q() * zm * zm - g1_middle() * zm * zn + 2 * q() * zn * zn;
}

LaurentPoly ideal_g2(int m, int n) { return kappa() * (LaurentPoly::z(m) + LaurentPoly::z(n)); }

LaurentPoly corollary_factor() {
  return (1 + LaurentPoly::q1()) * (1 + LaurentPoly::q2()) * (1 + q());
}

bool wheel_check(const ShuffleElement& p) {
  if (p.arity() < 3) return true;
  const LaurentPoly z3 = LaurentPoly::z(3);
  const Variable z1 = Variable::z(1);
  const Variable z2 = Variable::z(2);
  return vanishes_under(p.poly(), {{z1, q() * z3}, {z2, LaurentPoly::q2() * z3}}) &&
         vanishes_under(p.poly(), {{z1, q() * z3}, {z2, LaurentPoly::q1() * z3}});
}

bool ideal_wheel_check(const ShuffleElement& p) {
  if (p.arity() < 3) throw ArityTooSmall("ideal wheel conditions need arity >= 3");
  const LaurentPoly z1 = LaurentPoly::z(1);
  const Variable z2 = Variable::z(2);
  const Variable z3 = Variable::z(3);
  return vanishes_under(p.poly(), {{z2, LaurentPoly::q1() * z1}, {z3, q() * z1}}) &&
         vanishes_under(p.poly(), {{z2, LaurentPoly::q2() * z1}, {z3, q() * z1}});
}

OmegaDecomposition omega_decomposition(int m, int n) {
  OmegaDecomposition d{omega_numerator(m, n), ideal_g1(m, n), ideal_g2(m, n)};
  const LaurentPoly lhs = 2 * d.omega_numerator;
  const LaurentPoly rhs = z_difference(m, n) * d.g1 + LaurentPoly::z(m) * LaurentPoly::z(n) * d.g2;
  if (lhs != rhs) throw IdentityViolated("2 omega numerator != (zm - zn) g1 + zm zn g2");
  return d;
}

std::optional<std::pair<LaurentPoly, LaurentPoly>> ideal_cofactors(const LaurentPoly& f) {
  // Reduce f modulo g1 as a Laurent polynomial in z1. The leading (2q) and
  // trailing (2q z2^2) coefficients of g1 are units, so every class has a
  // unique representative r0 + r1 z1.
  const Variable z1v = Variable::z(1);
  std::map<int, LaurentPoly> by_z1;
  for (const auto& t : f.terms()) {
    Monomial rest = t.mono;
    rest.set(z1v, 0);
    by_z1[t.mono[z1v]] += LaurentPoly::monomial(rest, t.coef);
  }
  const LaurentPoly z2 = LaurentPoly::z(2);
  const LaurentPoly c = g1_middle();
  const LaurentPoly two_q_inv = LaurentPoly(Rational(1, 2)) * LaurentPoly::q().pow(-1);
  const LaurentPoly z2_inv = LaurentPoly::z(2, -1);
  auto take = [&](int e) {
    LaurentPoly v = std::move(by_z1[e]);
    by_z1.erase(e);
    return v;
  };
  // z1^2 = (g1 + c z1 z2 - 2q z2^2) / 2q
  while (!by_z1.empty() && by_z1.rbegin()->first >= 2) {
    const int e = by_z1.rbegin()->first;
    const LaurentPoly coef = take(e);
    by_z1[e - 1] += coef * c * z2 * two_q_inv;
    by_z1[e - 2] -= coef * z2 * z2;
  }
  // 1 = (g1 - 2q z1^2 + c z1 z2) / (2q z2^2)
  while (!by_z1.empty() && by_z1.begin()->first < 0) {
    const int e = by_z1.begin()->first;
    const LaurentPoly coef = take(e);
    by_z1[e + 2] -= coef * z2_inv * z2_inv;
    by_z1[e + 1] += coef * c * z2_inv * two_q_inv;
  }
  const LaurentPoly r0 = by_z1[0];
  const LaurentPoly r1 = by_z1[1];

  // Match r0 + r1 z1 against (b0 + b1 z1) g2 mod g1:
  //   r0 = k (b0 z2 - b1 z2^2),  r1 = k (b0 + b1 z2 (1 + c / 2q)),
  // with k = (1-q1)(1-q2)(1-q); eliminating b0 leaves the factor 4q + c,
  // which equals (1+q1)(1+q2)(1+q).
  const LaurentPoly k = kappa();
  auto b1 = try_exact_div(2 * q() * (r1 * z2 - r0), k * corollary_factor() * z2 * z2);
  if (!b1) return std::nullopt;
  auto r0_over_k = try_exact_div(r0, k * z2);
  if (!r0_over_k) return std::nullopt;
  const LaurentPoly b0 = *r0_over_k + *b1 * z2;
  const LaurentPoly b = b0 + *b1 * LaurentPoly::z(1);
  auto a = try_exact_div(f - b * ideal_g2(), ideal_g1());
  if (!a) return std::nullopt;
  return std::make_pair(*std::move(a), b);
}

IdealCertificate ideal_certificate(const ShuffleElement& p) {
  if (p.arity() < 2) throw ArityTooSmall("ideal certificates need arity >= 2");
  auto cof = ideal_cofactors(p.poly());
  if (!cof) throw NotInIdeal(to_string(p.poly()) + " is not in the ideal (g1, g2)");
  return {p, std::move(cof->first), std::move(cof->second)};
}

IdealCertificate ideal_certificate(const GeneratorWord& w, WordExpander* expander) {
  if (w.arity() < 2) throw ArityTooSmall("ideal certificates need arity >= 2, got " + to_string(w));
  WordExpander local;
  WordExpander& ex = expander ? *expander : local;
  IdealCertificate cert = ideal_certificate(ex.expand(w));
  cert.target = w;
  return cert;
}

bool verify_ideal_certificate(const IdealCertificate& c, WordExpander* expander) {
  WordExpander local;
  WordExpander& ex = expander ? *expander : local;
  const LaurentPoly& target = std::holds_alternative<GeneratorWord>(c.target)
                                  ? ex.expand(std::get<GeneratorWord>(c.target)).poly()
                                  : std::get<ShuffleElement>(c.target).poly();
  return c.a * ideal_g1() + c.b * ideal_g2() == target;
}

CorollaryResult corollary_check(const ShuffleElement& p) {
  if (p.arity() < 2) throw ArityTooSmall("the corollary test needs arity >= 2");
  const LaurentPoly image = substitute(p.poly(), {{Variable::z(2), -LaurentPoly::z(1)}});
  auto c = try_exact_div(image, corollary_factor());
  if (!c) return {false, {}};
  return {true, *std::move(c)};
}

}  // namespace shuffle
