#pragma once

#include <cctype>
#include <string>

#include "forca/polynomial.hpp"

namespace forca {

// Recursive-descent parser for the expression grammar
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := coefficient | variable ('^' nat)? | '(' expr ')' ('^' nat)? | '-' factor
// with integer coefficients, a/b rationals where the denominator is
// invertible, and insignificant whitespace.
template <CoefficientField F>
class PolynomialParser {
 public:
  PolynomialParser(std::string_view text, RingPtr<F> ring)
      : text_(text), ring_(std::move(ring)) {}

  Polynomial<F> parse() {
    Polynomial<F> p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return p;
  }

  typename F::Elem parse_scalar() {
    skip_ws();
    bool negate = false;
    while (peek() == '-' || peek() == '+') {
      if (get() == '-') negate = !negate;
      skip_ws();
    }
    typename F::Elem v = coefficient();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return negate ? ring_->field.neg(v) : v;
  }

 private:
  Polynomial<F> expr() {
    Polynomial<F> acc = term();
    for (;;) {
      skip_ws();
      char c = peek();
      if (c == '+') {
        ++pos_;
        acc = acc + term();
      } else if (c == '-') {
        ++pos_;
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  Polynomial<F> term() {
    Polynomial<F> acc = factor();
    for (;;) {
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  Polynomial<F> factor() {
    skip_ws();
    char c = peek();
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (c == '(') {
      ++pos_;
      Polynomial<F> p = expr();
      skip_ws();
      if (get() != ')') fail("expected ')'");
      return maybe_power(std::move(p));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return maybe_power(Polynomial<F>::constant(ring_, coefficient()));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      std::string name = identifier();
      int idx = ring_->var_index(name);
      if (idx < 0) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return maybe_power(Polynomial<F>::variable(ring_, static_cast<std::size_t>(idx)));
    }
    fail(c == '\0' ? "unexpected end of input" : "unexpected character");
  }

  Polynomial<F> maybe_power(Polynomial<F> base) {
    skip_ws();
    if (peek() != '^') return base;
    ++pos_;
    skip_ws();
    return base.pow(natural());
  }

  typename F::Elem coefficient() {
    long long num = natural_ll();
    skip_ws();
    if (peek() == '/') {
      std::size_t slash = pos_;
      ++pos_;
      skip_ws();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator");
      long long den = natural_ll();
      try {
        return ring_->field.ratio(num, den);
      } catch (const std::domain_error& e) {
        throw ParseError(e.what(), slash);
      }
    }
    return ring_->field.from_int(num);
  }

  std::uint64_t natural() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
    std::uint64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<std::uint64_t>(get() - '0');
      if (v > (1ull << 62)) fail("number too large");
    }
    return v;
  }

  long long natural_ll() { return static_cast<long long>(natural()); }

  std::string identifier() {
    std::string s;
    s.push_back(get());
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')
      s.push_back(get());
    return s;
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char get() { return pos_ < text_.size() ? text_[pos_++] : '\0'; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, pos_);
  }

  std::string_view text_;
  RingPtr<F> ring_;
  std::size_t pos_ = 0;
};

/// Parse `text` as an element of `ring` in canonical sparse form.
template <CoefficientField F>
Polynomial<F> parse_polynomial(std::string_view text, const RingPtr<F>& ring) {
  return PolynomialParser<F>(text, ring).parse();
}

/// Parse a bare field element ("3", "-2", "5/7").
template <CoefficientField F>
typename F::Elem parse_scalar(std::string_view text, const RingPtr<F>& ring) {
  return PolynomialParser<F>(text, ring).parse_scalar();
}

}  // namespace forca
