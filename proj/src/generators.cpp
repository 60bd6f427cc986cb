#include "shuffle/generators.hpp"

#include <algorithm>
#include <stdexcept>
#include <numeric>

#include "shuffle/errors.hpp"

namespace shuffle {

namespace {

using Combination = std::map<GeneratorWord, LaurentPoly>;

GeneratorWord with_letter_added(const GeneratorWord& w, int position, int n) {
  std::vector<int> e = w.exponents();
  e[position] += n;
  return GeneratorWord(std::move(e));
}

GeneratorWord swap_last_two(const GeneratorWord& w) {
  std::vector<int> e = w.exponents();
  std::swap(e[1], e[2]);
  return GeneratorWord(std::move(e));
}

void add_scaled(Combination& dst, const Combination& src, const LaurentPoly& factor) {
  for (const auto& [word, cof] : src) {
    auto [it, inserted] = dst.try_emplace(word);
    it->second += factor * cof;
    if (it->second.is_zero()) dst.erase(it);
  }
}

LaurentPoly product_power(int arity, int n) {
  LaurentPoly e = elementary_symmetric(arity, arity);
  return e.pow(n);
}

// Solves the power-sum relation for the letter at `position`:
//   u + n e_position = p_n * u - sum_{j != position} (u + n e_j)
std::vector<CertificateTerm> solve_power_sum(const GeneratorWord& u, int n, int position) {
  std::vector<CertificateTerm> terms{{power_sum(n, u.arity()), u}};
  for (int j = 0; j < u.arity(); ++j) {
    if (j != position) terms.push_back({-1, with_letter_added(u, j, n)});
  }
  return terms;
}

class ModuleReducer {
 public:
  ModuleReducer(int arity, const std::vector<GeneratorWord>& basis) : arity_(arity), basis_(basis) {}

  ModuleCertificate reduce(const GeneratorWord& w) {
    if (w.arity() != arity_) {
      throw ArityMismatch("reduce" + std::to_string(arity_) + " expects a word of arity " +
                          std::to_string(arity_) + ", got " + to_string(w));
    }
    std::lock_guard lock(mutex_);
    const Combination comb = reduce_any(w);
    ModuleCertificate cert{w, {}};
    for (const auto& [word, cof] : comb) cert.combination.push_back({cof, word});
    return cert;
  }

 private:
  Combination reduce_any(const GeneratorWord& w) {
    const int lo = *std::min_element(w.begin(), w.end());
    if (lo == 0) return reduce_normalized(w);
    Combination out;
    add_scaled(out, reduce_normalized(act_product_power(w, -lo)), product_power(arity_, lo));
    return out;
  }

  Combination combine(const std::vector<CertificateTerm>& terms) {
    Combination out;
    for (const auto& t : terms) add_scaled(out, reduce_any(t.word), t.cofactor);
    return out;
  }

  // w has minimum letter 0
  Combination reduce_normalized(const GeneratorWord& w) {
    if (auto it = memo_.find(w); it != memo_.end()) return it->second;
    Combination result;
    if (std::find(basis_.begin(), basis_.end(), w) != basis_.end()) {
      result.emplace(w, 1);
    } else if (arity_ == 2) {
      // [a,b] with one letter 0: lower the other letter by one
      const int top = w[0] > w[1] ? 0 : 1;
      result = combine(solve_power_sum(with_letter_added(w, top, -1), 1, top));
    } else {
      result = reduce3_normalized(w);
    }
    memo_.emplace(w, result);
    return result;
  }

  Combination reduce3_normalized(const GeneratorWord& w) {
    const auto& table = base_identities3();
    auto it = std::find_if(table.begin(), table.end(), [&](const WordIdentity& id) { return id.target == w; });
    if (it != table.end()) return combine(it->terms);

    // Every min-zero word with letters in [0,2] is covered above, so here the
    // largest letter is n + 1 >= 3. Each branch lowers max - min.
    const int a = static_cast<int>(std::max_element(w.begin(), w.end()) - w.begin());
    int c = 0;
    while (c == a || w[c] != 0) ++c;
    const int b = 3 - a - c;
    const int n = w[a] - 1;
    if (n < 2) throw std::logic_error("reduce3: word " + to_string(w) + " escaped the base table");
    if (w[b] < n) {
      return combine(solve_power_sum(with_letter_added(w, a, -1), 1, a));
    }
    // w[b] >= n >= 2, so the two branches together cover every w[b]
    return combine(solve_power_sum(with_letter_added(w, c, 1), -1, c));
  }

  int arity_;
  const std::vector<GeneratorWord>& basis_;
  std::mutex mutex_;
  std::map<GeneratorWord, Combination> memo_;
};

}  // namespace

LaurentPoly elementary_symmetric(int j, int arity) {
  if (j < 0 || j > arity) return 0;
  LaurentPoly total;
  std::vector<bool> pick(arity, false);
  std::fill(pick.begin(), pick.begin() + j, true);
  do {
    LaurentPoly term = 1;
    for (int i = 0; i < arity; ++i) {
      if (pick[i]) term *= LaurentPoly::z(i + 1);
    }
    total += term;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return total;
}

LaurentPoly power_sum(int n, int arity) {
  LaurentPoly total;
  for (int i = 1; i <= arity; ++i) total += LaurentPoly::z(i, n);
  return total;
}

GeneratorWord act_product_power(const GeneratorWord& w, int n) {
  std::vector<int> e = w.exponents();
  for (int& d : e) d += n;
  return GeneratorWord(std::move(e));
}

std::vector<GeneratorWord> act_power_sum(const GeneratorWord& w, int n) {
  std::vector<GeneratorWord> out;
  out.reserve(w.arity());
  for (int i = 0; i < w.arity(); ++i) out.push_back(with_letter_added(w, i, n));
  return out;
}

bool verify_lemma(const GeneratorWord& w, int n, LemmaRelation which, WordExpander* expander) {
  WordExpander local;
  WordExpander& ex = expander ? *expander : local;
  const int k = w.arity();
  const LaurentPoly& lhs_word = ex.expand(w).poly();
  if (which == LemmaRelation::ProductPower) {
    return product_power(k, n) * lhs_word == ex.expand(act_product_power(w, n)).poly();
  }
  LaurentPoly rhs;
  for (const auto& v : act_power_sum(w, n)) rhs += ex.expand(v).poly();
  return power_sum(n, k) * lhs_word == rhs;
}

const std::vector<GeneratorWord>& basis2() {
  static const std::vector<GeneratorWord> basis{{0, 0}, {1, 0}};
  return basis;
}

const std::vector<GeneratorWord>& basis3() {
  static const std::vector<GeneratorWord> basis{{0, 0, 0}, {0, 1, 0}, {1, 0, 0}, {1, 1, 0}, {2, 0, 0}, {2, 1, 0}};
  return basis;
}

const std::vector<WordIdentity>& base_identities3() {
  static const std::vector<WordIdentity> table = [] {
    const LaurentPoly e1 = elementary_symmetric(1, 3);
    const LaurentPoly e2 = elementary_symmetric(2, 3);  // (z1^-1 + z2^-1 + z3^-1) z1 z2 z3
    const LaurentPoly e3 = elementary_symmetric(3, 3);
    const LaurentPoly m1 = -1;
    const LaurentPoly me3 = -e3;
    std::vector<WordIdentity> ids{
        {{0, 0, 1}, {{e1, {0, 0, 0}}, {m1, {1, 0, 0}}, {m1, {0, 1, 0}}}},
        {{1, 0, 1}, {{e1, {1, 0, 0}}, {m1, {2, 0, 0}}, {m1, {1, 1, 0}}}},
        {{0, 1, 1}, {{e2, {0, 0, 0}}, {m1, {1, 0, 1}}, {m1, {1, 1, 0}}}},
        {{2, 0, 1}, {{e2, {1, 0, 0}}, {m1, {2, 1, 0}}, {me3, {0, 0, 0}}}},
        {{2, 2, 0}, {{e2, {1, 1, 0}}, {me3, {1, 0, 0}}, {me3, {0, 1, 0}}}},
        {{0, 2, 0}, {{e1, {0, 1, 0}}, {m1, {1, 1, 0}}, {m1, {0, 1, 1}}}},
        {{1, 2, 0}, {{e1, {1, 1, 0}}, {m1, {2, 1, 0}}, {me3, {0, 0, 0}}}},
        {{0, 2, 1}, {{e2, {0, 1, 0}}, {m1, {1, 2, 0}}, {me3, {0, 0, 0}}}},
        {{0, 2, 2}, {{e2, {0, 1, 1}}, {me3, {0, 0, 1}}, {me3, {0, 1, 0}}}},
    };
    // the first four need no swapped copy: their swaps are basis words or themselves
    const std::size_t listed = ids.size();
    for (std::size_t i = 4; i < listed; ++i) {
      WordIdentity swapped{swap_last_two(ids[i].target), {}, true};
      if (swapped.target == ids[i].target) continue;
      for (const auto& t : ids[i].terms) swapped.terms.push_back({t.cofactor, swap_last_two(t.word)});
      ids.push_back(std::move(swapped));
    }
    return ids;
  }();
  return table;
}

ModuleCertificate reduce2(const GeneratorWord& w) {
  static ModuleReducer reducer(2, basis2());
  return reducer.reduce(w);
}

ModuleCertificate reduce3(const GeneratorWord& w) {
  static ModuleReducer reducer(3, basis3());
  return reducer.reduce(w);
}

bool verify_certificate(const ModuleCertificate& c, WordExpander* expander) {
  WordExpander local;
  WordExpander& ex = expander ? *expander : local;
  const int k = c.target.arity();
  LaurentPoly sum;
  for (const auto& t : c.combination) {
    if (t.word.arity() != k || !is_symmetric(t.cofactor, k)) return false;
    sum += t.cofactor * ex.expand(t.word).poly();
  }
  return sum == ex.expand(c.target).poly();
}

int range4(const GeneratorWord& w) {
  if (w.arity() < 4) throw ArityTooSmall("range4 needs at least four letters, got " + to_string(w));
  std::array<int, 4> d{w[0], w[1], w[2], w[3]};
  std::sort(d.begin(), d.end());
  return d[2] + d[3] - d[0] - d[1];
}

int residue_class(const GeneratorWord& w) {
  const int k = w.arity();
  if (k < 1) throw ArityTooSmall("residue_class needs a nonempty word");
  const long long sum = std::accumulate(w.begin(), w.end(), 0LL);
  return static_cast<int>(((sum % k) + k) % k);
}

}  // namespace shuffle
