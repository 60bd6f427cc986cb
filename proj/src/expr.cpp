#include "shuffle/expr.hpp"

#include <cctype>
#include <limits>

#include "shuffle/errors.hpp"

namespace shuffle {

namespace {

using Kind = Expr::Kind;

std::shared_ptr<Expr> node(Kind kind, std::size_t position) {
  auto e = std::make_shared<Expr>();
  e->kind = kind;
  e->position = position;
  return e;
}

std::string describe(const Expr& e) {
  return e.element ? "element of arity " + std::to_string(e.arity)
                   : "scalar in z1..z" + std::to_string(e.arity);
}

[[noreturn]] void mismatch(const Expr& a, const Expr& b, std::size_t position, const char* op) {
  throw ArityMismatch("at offset " + std::to_string(position) + ": cannot " + op + " " + describe(a) + " and " +
                      describe(b));
}

// Arity rules for + and - (and for juxtaposition, which follows the same
// pattern): like elements combine, a scalar joins an element whose arity
// covers its z variables.
void infer_linear(Expr& e, const char* op) {
  const Expr& a = *e.children[0];
  const Expr& b = *e.children[1];
  if (a.element && b.element) {
    if (a.arity != b.arity) mismatch(a, b, e.position, op);
    e.element = true;
    e.arity = a.arity;
  } else if (a.element || b.element) {
    const Expr& el = a.element ? a : b;
    const Expr& sc = a.element ? b : a;
    if (sc.arity > el.arity) mismatch(a, b, e.position, op);
    e.element = true;
    e.arity = el.arity;
  } else {
    e.element = false;
    e.arity = std::max(a.arity, b.arity);
  }
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ExprPtr parse_all() {
    auto e = parse_sum();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

  GeneratorWord parse_word_only() {
    skip_ws();
    GeneratorWord w;
    if (consume_keyword("sh")) {
      w = parse_word_body();
    } else if (peek() == '[') {
      w = parse_word_body();
    } else {
      std::vector<int> exps;
      if (pos_ < text_.size()) {
        exps.push_back(parse_int());
        while (consume(',')) exps.push_back(parse_int());
      }
      w = GeneratorWord(std::move(exps));
    }
    skip_ws();
    if (pos_ != text_.size()) fail("trailing characters after word");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw SyntaxError(pos_, message); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool consume(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!consume(c)) fail(std::string("expected '") + c + "'");
  }

  bool consume_keyword(std::string_view kw) {
    skip_ws();
    if (text_.substr(pos_, kw.size()) != kw) return false;
    pos_ += kw.size();
    return true;
  }

  bool starts_atom() {
    const char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'q' || c == 'z' || c == 's' || c == '(';
  }

  long parse_digits() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected a number");
    long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_++] - '0');
      if (v > std::numeric_limits<int>::max()) fail("integer too large");
    }
    return v;
  }

  int parse_int() {
    const bool negative = consume('-');
    const long v = parse_digits();
    return static_cast<int>(negative ? -v : v);
  }

  GeneratorWord parse_word_body() {
    expect('[');
    std::vector<int> exps;
    if (!consume(']')) {
      exps.push_back(parse_int());
      while (consume(',')) exps.push_back(parse_int());
      expect(']');
    }
    if (static_cast<int>(exps.size()) > kMaxArity) fail("word longer than the supported arity");
    return GeneratorWord(std::move(exps));
  }

  ExprPtr parse_sum() {
    auto lhs = parse_product();
    for (;;) {
      const char c = peek();
      if (c != '+' && c != '-') return lhs;
      const std::size_t at = pos_++;
      auto e = node(c == '+' ? Kind::Add : Kind::Subtract, at);
      e->children = {lhs, parse_product()};
      infer_linear(*e, c == '+' ? "add" : "subtract");
      lhs = e;
    }
  }

  ExprPtr parse_product() {
    auto lhs = parse_juxt();
    while (peek() == '*') {
      const std::size_t at = pos_++;
      auto e = node(Kind::Shuffle, at);
      e->children = {lhs, parse_juxt()};
      e->element = true;
      e->arity = e->children[0]->arity + e->children[1]->arity;
      if (e->arity > kMaxArity) {
        throw ArityMismatch("at offset " + std::to_string(at) + ": shuffle product of arity " +
                            std::to_string(e->arity) + " exceeds the supported maximum " + std::to_string(kMaxArity));
      }
      lhs = e;
    }
    return lhs;
  }

  ExprPtr parse_juxt() {
    skip_ws();
    const std::size_t start = pos_;
    const bool negative = consume('-');
    ExprPtr lhs = parse_power();
    while (starts_atom()) {
      const std::size_t at = pos_;
      auto e = node(Kind::Multiply, at);
      e->children = {lhs, parse_power()};
      infer_linear(*e, "multiply");
      lhs = e;
    }
    if (!negative) return lhs;
    auto e = node(Kind::Negate, start);
    e->children = {lhs};
    e->element = lhs->element;
    e->arity = lhs->arity;
    return e;
  }

  ExprPtr parse_power() {
    ExprPtr base = parse_atom();
    if (peek() != '^') return base;
    const std::size_t at = pos_++;
    if (base->element) {
      pos_ = at;
      fail("powers of shuffle elements are not defined; use '*'");
    }
    auto e = node(Kind::Power, at);
    e->exponent = parse_int();
    e->children = {base};
    e->arity = base->arity;
    if (peek() == '^') fail("chained '^' is ambiguous; add parentheses");
    return e;
  }

  ExprPtr parse_atom() {
    const char c = peek();
    const std::size_t at = pos_;
    if (c == '\0') fail("unexpected end of input");
    if (std::isdigit(static_cast<unsigned char>(c))) {
      auto e = node(Kind::Number, at);
      Rational value(parse_digits());
      if (consume('/')) {
        skip_ws();
        const std::size_t den_at = pos_;
        const long den = parse_digits();
        if (den == 0) {
          pos_ = den_at;
          fail("zero denominator");
        }
        value /= Rational(den);
      }
      e->number = value;
      return e;
    }
    if (c == '(') {
      ++pos_;
      auto inner = parse_sum();
      expect(')');
      return inner;
    }
    if (consume_keyword("sh")) {
      auto e = node(Kind::Word, at);
      e->word = parse_word_body();
      e->element = true;
      e->arity = e->word.arity();
      return e;
    }
    if (c == 'q') {
      ++pos_;
      auto e = node(Kind::Variable, at);
      if (pos_ < text_.size() && (text_[pos_] == '1' || text_[pos_] == '2')) {
        e->name = std::string("q") + text_[pos_++];
      } else {
        e->name = "q";
      }
      if (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
        pos_ = at;
        fail("unknown variable; expected q, q1 or q2");
      }
      return e;
    }
    if (c == 'z') {
      ++pos_;
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        const long index = parse_digits();
        if (index < 1 || index > kMaxArity) {
          pos_ = at;
          fail("z index must lie in 1.." + std::to_string(kMaxArity));
        }
        auto e = node(Kind::Variable, at);
        e->name = "z" + std::to_string(index);
        e->arity = static_cast<int>(index);
        return e;
      }
      auto e = node(Kind::Letter, at);
      e->exponent = consume('^') ? parse_int() : 1;
      e->element = true;
      e->arity = 1;
      return e;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

LaurentPoly variable_value(const std::string& name) {
  if (name == "q1") return LaurentPoly::q1();
  if (name == "q2") return LaurentPoly::q2();
  if (name == "q") return LaurentPoly::q();
  return LaurentPoly::z(std::stoi(name.substr(1)));
}

LaurentPoly evaluate(const Expr& e, WordExpander& ex) {
  switch (e.kind) {
    case Kind::Number:
      return e.number;
    case Kind::Variable:
      return variable_value(e.name);
    case Kind::Letter:
      return LaurentPoly::z(1, e.exponent);
    case Kind::Word:
      return ex.expand(e.word).poly();
    case Kind::Negate:
      return -evaluate(*e.children[0], ex);
    case Kind::Add:
      return evaluate(*e.children[0], ex) + evaluate(*e.children[1], ex);
    case Kind::Subtract:
      return evaluate(*e.children[0], ex) - evaluate(*e.children[1], ex);
    case Kind::Multiply:
      return evaluate(*e.children[0], ex) * evaluate(*e.children[1], ex);
    case Kind::Power:
      return evaluate(*e.children[0], ex).pow(e.exponent);
    case Kind::Shuffle: {
      const Expr& a = *e.children[0];
      const Expr& b = *e.children[1];
      const auto lhs = ShuffleElement::make(a.arity, evaluate(a, ex));
      const auto rhs = ShuffleElement::make(b.arity, evaluate(b, ex));
      return shuffle(lhs, rhs).poly();
    }
  }
  throw std::logic_error("unhandled expression kind");
}

}  // namespace

ExprPtr parse(std::string_view text) { return Parser(text).parse_all(); }

ShuffleElement eval(const Expr& e) {
  WordExpander ex;
  return ShuffleElement::make(e.arity, evaluate(e, ex));
}

ShuffleElement eval(std::string_view text) { return eval(*parse(text)); }

LaurentPoly eval_polynomial(std::string_view text) {
  WordExpander ex;
  return evaluate(*parse(text), ex);
}

std::string to_string(const Expr& e) {
  auto child = [&](std::size_t i) { return to_string(*e.children[i]); };
  switch (e.kind) {
    case Kind::Number:
      return e.number.get_den() == 1 ? e.number.get_str() : "(" + e.number.get_str() + ")";
    case Kind::Variable:
      return e.name;
    case Kind::Letter:
      return "z^" + std::to_string(e.exponent);
    case Kind::Word:
      return "sh" + to_string(e.word);
    case Kind::Negate:
      return "(-" + child(0) + ")";
    case Kind::Add:
      return "(" + child(0) + " + " + child(1) + ")";
    case Kind::Subtract:
      return "(" + child(0) + " - " + child(1) + ")";
    case Kind::Multiply:
      return "(" + child(0) + " " + child(1) + ")";
    case Kind::Shuffle:
      return "(" + child(0) + " * " + child(1) + ")";
    case Kind::Power:
      return "(" + child(0) + ")^" + std::to_string(e.exponent);
  }
  throw std::logic_error("unhandled expression kind");
}

GeneratorWord parse_word(std::string_view text) { return Parser(text).parse_word_only(); }

}  // namespace shuffle
