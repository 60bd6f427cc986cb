#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "shuffle/shuffle.hpp"

namespace shuffle {

/// Abstract syntax of the expression language.
///
/// Grammar, loosest binding first:
///
///     sum      := product (('+' | '-') product)*
///     product  := juxt ('*' juxt)*              shuffle product
///     juxt     := ['-'] power power*            ordinary multiplication
///     power    := atom ['^' int]
///     atom     := INT ['/' INT] | 'q1' | 'q2' | 'q' | 'z' INT
///               | 'z' ['^' int]                 the letter z1^d of V_1
///               | 'sh' '[' [int (',' int)*] ']' a generator word
///               | '(' sum ')'
///     int      := ['-'] INT
///
/// `q` is shorthand for q1 q2. Scalars (numbers, q's, z_i) act on elements by
/// multiplication; a scalar used as a shuffle operand is read as an element of
/// V_m, m being its largest z index.
struct Expr {
  enum class Kind { Number, Variable, Letter, Word, Negate, Add, Subtract, Multiply, Shuffle, Power };

  Kind kind = Kind::Number;
  std::size_t position = 0;
  Rational number;                 // Number
  std::string name;                // Variable: q1, q2, q or z<i>
  int exponent = 0;                // Letter, Power
  GeneratorWord word;              // Word
  std::vector<std::shared_ptr<const Expr>> children;

  /// Inferred during parse: element of V_arity, or a scalar whose largest z
  /// index is arity.
  bool element = false;
  int arity = 0;
};

using ExprPtr = std::shared_ptr<const Expr>;

/// Throws SyntaxError (with a character offset) or ArityMismatch.
ExprPtr parse(std::string_view text);

/// Evaluates to a canonical element. Throws NotSymmetric if the value (or a
/// scalar shuffle operand) is not symmetric.
ShuffleElement eval(const Expr& e);
ShuffleElement eval(std::string_view text);

/// Evaluates without the symmetry requirement; used for polynomial literals.
LaurentPoly eval_polynomial(std::string_view text);

/// Fully parenthesized source text that parses back to an equivalent tree.
std::string to_string(const Expr& e);

/// Accepts "[0,1,2]", "sh[0,1,2]" or "0,1,2"; "[]" is the empty word.
GeneratorWord parse_word(std::string_view text);

}  // namespace shuffle
