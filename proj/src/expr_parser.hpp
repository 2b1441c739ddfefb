#pragma once

// Recursive-descent reader for ring expressions written in the usual
// inline notation, parameterized by the target algebra:
//
//   expr   := [+|-] term { (+|-) term }
//   term   := factor { ['*'] factor }
//   factor := atom [ '^' (digits | '{' digits '}') ]
//   atom   := number ['/' number] | 'm' | LETTER '_' (digit | '{' list '}') | '(' expr ')'
//
// Algebra must provide: value_type, constant(mpq_class), parameter_m(),
// variable(std::vector<int>), one(), add, sub, mul.

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace chernratio::detail {

template <typename Algebra>
class ExprParser {
 public:
  using Value = typename Algebra::value_type;

  ExprParser(std::string text, char letter, const Algebra& algebra)
      : s_(std::move(text)), letter_(letter), alg_(algebra) {}

  Value parse() {
    Value r = expr();
    if (pos_ != s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("parse error: " + what + " at offset " + std::to_string(pos_) +
                                " in \"" + s_ + "\"");
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  static bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

  Value expr() {
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    Value acc = term();
    if (negate) acc = alg_.sub(alg_.constant(0), acc);
    while (peek() == '+' || peek() == '-') {
      const bool minus = peek() == '-';
      ++pos_;
      Value t = term();
      acc = minus ? alg_.sub(acc, t) : alg_.add(acc, t);
    }
    return acc;
  }

  bool starts_factor() const {
    const char c = peek();
    return digit(c) || c == '(' || c == 'm' || c == letter_;
  }

  Value term() {
    if (!starts_factor()) fail("expected a factor");
    Value acc = factor();
    while (true) {
      if (peek() == '*') {
        ++pos_;
        acc = alg_.mul(acc, factor());
      } else if (starts_factor()) {
        acc = alg_.mul(acc, factor());
      } else {
        return acc;
      }
    }
  }

  unsigned integer() {
    if (!digit(peek())) fail("expected digits");
    unsigned v = 0;
    while (digit(peek())) v = v * 10 + static_cast<unsigned>(s_[pos_++] - '0');
    return v;
  }

  Value factor() {
    Value base = atom();
    if (peek() != '^') return base;
    ++pos_;
    unsigned e = 0;
    if (peek() == '{') {
      ++pos_;
      e = integer();
      if (peek() != '}') fail("expected '}'");
      ++pos_;
    } else {
      e = integer();
    }
    Value result = alg_.one();
    for (unsigned i = 0; i < e; ++i) result = alg_.mul(result, base);
    return result;
  }

  Value atom() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Value inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == 'm') {
      ++pos_;
      return alg_.parameter_m();
    }
    if (c == letter_) {
      ++pos_;
      if (peek() != '_') fail("expected '_' after variable letter");
      ++pos_;
      std::vector<int> idx;
      if (peek() == '{') {
        ++pos_;
        idx.push_back(static_cast<int>(integer()));
        while (peek() == ',') {
          ++pos_;
          idx.push_back(static_cast<int>(integer()));
        }
        if (peek() != '}') fail("expected '}'");
        ++pos_;
      } else {
        if (!digit(peek())) fail("expected index");
        idx.push_back(s_[pos_++] - '0');
      }
      return alg_.variable(idx);
    }
    if (digit(c)) {
      std::string num;
      while (digit(peek())) num.push_back(s_[pos_++]);
      if (peek() == '/') {
        ++pos_;
        std::string den;
        while (digit(peek())) den.push_back(s_[pos_++]);
        if (den.empty()) fail("expected denominator");
        num += "/" + den;
      }
      mpq_class value(num);
      value.canonicalize();
      return alg_.constant(value);
    }
    fail("unexpected character");
  }

  std::string s_;
  char letter_;
  const Algebra& alg_;
  std::size_t pos_ = 0;
};

/// Strips whitespace and maps the Unicode minus sign and sigma (or "\sigma")
/// to ASCII '-' and 's'. Each string in `drop` is removed wherever it occurs.
std::string normalize_expression(std::string_view text, const std::vector<std::string>& drop);

}  // namespace chernratio::detail
