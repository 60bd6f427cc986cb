#pragma once

#include <array>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "shuffle/shuffle.hpp"

namespace shuffle {

/// One summand of a module certificate: cofactor (an element of V_k) times
/// the expansion of a generator word.
struct CertificateTerm {
  LaurentPoly cofactor;
  GeneratorWord word;
  friend bool operator==(const CertificateTerm&, const CertificateTerm&) = default;
};

/// Claim that shuffle_word(target) = sum cofactor_i * shuffle_word(word_i).
/// Terms are sorted by word and carry nonzero cofactors.
struct ModuleCertificate {
  GeneratorWord target;
  std::vector<CertificateTerm> combination;
};

/// Elementary symmetric polynomial e_j(z1..zk).
LaurentPoly elementary_symmetric(int j, int arity);
/// z1^n + ... + zk^n
LaurentPoly power_sum(int n, int arity);

/// (z1...zk)^n acting on a word shifts every letter by n.
GeneratorWord act_product_power(const GeneratorWord& w, int n);

/// (z1^n + ... + zk^n) acting on a word: the k words with one letter raised
/// by n.
std::vector<GeneratorWord> act_power_sum(const GeneratorWord& w, int n);

enum class LemmaRelation { ProductPower, PowerSum };

/// Expands both sides of the chosen module relation and compares them.
bool verify_lemma(const GeneratorWord& w, int n, LemmaRelation which, WordExpander* expander = nullptr);

/// The two V_2 generators [0,0] and [1,0].
const std::vector<GeneratorWord>& basis2();
/// The six V_3 generators [d1,d2,0], 0 <= d1 <= 2, 0 <= d2 <= 1.
const std::vector<GeneratorWord>& basis3();

/// A linear relation among arity-3 words used by the reduction:
/// target = sum cofactor_i * word_i.
struct WordIdentity {
  GeneratorWord target;
  std::vector<CertificateTerm> terms;
  /// True for the identities obtained by swapping the second and third
  /// letters of a listed one.
  bool swapped_variant = false;
};

/// Reductions of every min-zero word in {0,1,2}^3 outside basis3: nine
/// listed identities followed by their second/third-letter swaps.
const std::vector<WordIdentity>& base_identities3();

ModuleCertificate reduce2(const GeneratorWord& w);
ModuleCertificate reduce3(const GeneratorWord& w);

/// Expands sum cofactor * word and the target and compares exactly; also
/// requires every cofactor to be symmetric and every word to have the
/// target's arity.
bool verify_certificate(const ModuleCertificate& c, WordExpander* expander = nullptr);

/// max over S_4 of d_a + d_b - d_c - d_d on the first four letters.
int range4(const GeneratorWord& w);

/// (d1 + ... + dk) mod k, in [0, k).
int residue_class(const GeneratorWord& w);

}  // namespace shuffle
