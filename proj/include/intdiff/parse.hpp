/*
   Copyright 2026 The intdiff Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef INTDIFF_PARSE_HPP
#define INTDIFF_PARSE_HPP

#include <cctype>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "intdiff/element1.hpp"
#include "intdiff/rational.hpp"
#include "intdiff/tensor.hpp"

namespace intdiff {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

/// Recursive-descent parser for
///
///   expr := ['-'] term (('+' | '-') term)*
///   term := pow ('*' pow)*
///   pow  := atom ('^' nat)?
///   atom := ('x' | 'd' | 'I' | 'H') idx? | 'e(' nat ',' nat ')' idx?
///         | rational | '(' expr ')'
///   idx  := '_'? positive integer
///
/// Builder supplies the algebra: value_type, rank(), scalar(Rational),
/// generator(char, factor, pos), eunit(s, t, factor, pos), add, sub, mul,
/// and power(value, k).
template <class Builder>
class Parser {
 public:
  using Value = typename Builder::value_type;

  Parser(std::string_view text, Builder& builder) : text_(text), b_(builder) {}

  Value parse() {
    Value v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool at_digit() const {
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (at_digit()) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Index nat() {
    skip_ws();
    if (!at_digit()) fail("expected a natural number");
    const std::string d = digits();
    if (d.size() > 9) fail("number too large");
    return std::stoll(d);
  }

  std::size_t index() {
    const std::size_t at = pos_;
    bool underscore = false;
    if (pos_ < text_.size() && text_[pos_] == '_') {
      ++pos_;
      underscore = true;
    }
    if (!at_digit()) {
      if (underscore) fail("expected factor index");
      if (b_.rank() != 1) throw ParseError("missing factor index (rank " + std::to_string(b_.rank()) + ")", at);
      return 1;
    }
    const std::string d = digits();
    const auto idx = d.size() > 9 ? 0 : std::stoull(d);
    if (idx < 1 || idx > b_.rank())
      throw ParseError("factor index " + d + " out of range 1.." + std::to_string(b_.rank()), at);
    return static_cast<std::size_t>(idx);
  }

  Value expr() {
    skip_ws();
    Value v = accept('-') ? b_.sub(b_.scalar(Rational(0)), term()) : term();
    for (;;) {
      if (accept('+'))
        v = b_.add(v, term());
      else if (accept('-'))
        v = b_.sub(v, term());
      else
        return v;
    }
  }

  Value term() {
    Value v = power();
    while (accept('*')) v = b_.mul(v, power());
    return v;
  }

  Value power() {
    Value v = atom();
    if (accept('^')) {
      const Index k = nat();
      v = b_.power(v, static_cast<unsigned>(k));
    }
    return v;
  }

  Value atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const std::size_t start = pos_;
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Value v = expr();
      expect(')');
      return v;
    }
    if (at_digit()) {
      std::string lit = digits();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        if (!at_digit()) fail("expected denominator");
        const std::string den = digits();
        if (den.find_first_not_of('0') == std::string::npos) throw ParseError("zero denominator", start);
        lit += "/" + den;
      }
      return b_.scalar(Rational::parse(lit));
    }
    if (c == 'e') {
      ++pos_;
      expect('(');
      const Index s = nat();
      expect(',');
      const Index t = nat();
      expect(')');
      return b_.eunit(s, t, index(), start);
    }
    if (c == 'x' || c == 'd' || c == 'I' || c == 'H') {
      ++pos_;
      return b_.generator(c, index(), start);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  Builder& b_;
  std::size_t pos_ = 0;
};

/// Builds elements of I_n.
class OperatorBuilder {
 public:
  using value_type = ElementN;
  explicit OperatorBuilder(std::size_t rank) : rank_(rank) {}

  std::size_t rank() const { return rank_; }
  ElementN scalar(const Rational& c) const { return ElementN::scalar(rank_, c); }
  ElementN generator(char name, std::size_t factor, std::size_t) const {
    return lift(factor, from_generator(std::string(1, name)), rank_);
  }
  ElementN eunit(Index s, Index t, std::size_t factor, std::size_t) const {
    return lift(factor, Element1::e(s, t), rank_);
  }
  ElementN add(const ElementN& a, const ElementN& b) const { return a + b; }
  ElementN sub(const ElementN& a, const ElementN& b) const { return a - b; }
  ElementN mul(const ElementN& a, const ElementN& b) const { return a * b; }
  ElementN power(const ElementN& a, unsigned k) const {
    ElementN r = ElementN::one(rank_);
    for (unsigned i = 0; i < k; ++i) r = r * a;
    return r;
  }

 private:
  std::size_t rank_;
};

/// Builds polynomials in x_1..x_n.
class PolyBuilder {
 public:
  using value_type = PolyN;
  explicit PolyBuilder(std::size_t rank) : rank_(rank) {}

  std::size_t rank() const { return rank_; }
  PolyN scalar(const Rational& c) const { return PolyN::constant(rank_, c); }
  PolyN generator(char name, std::size_t factor, std::size_t pos) const {
    if (name != 'x') throw ParseError(std::string("'") + name + "' is not a polynomial variable", pos);
    return PolyN::variable(rank_, factor);
  }
  PolyN eunit(Index, Index, std::size_t, std::size_t pos) const {
    throw ParseError("matrix units are not polynomials", pos);
  }
  PolyN add(const PolyN& a, const PolyN& b) const { return a + b; }
  PolyN sub(const PolyN& a, const PolyN& b) const { return a - b; }
  PolyN mul(const PolyN& a, const PolyN& b) const { return a * b; }
  PolyN power(const PolyN& a, unsigned k) const {
    PolyN r = PolyN::constant(rank_, Rational(1));
    for (unsigned i = 0; i < k; ++i) r = r * a;
    return r;
  }

 private:
  std::size_t rank_;
};

/// Parses an operator expression into canonical form.
inline ElementN parse(std::string_view text, std::size_t rank) {
  OperatorBuilder b(rank);
  return Parser<OperatorBuilder>(text, b).parse();
}

inline PolyN parse_poly(std::string_view text, std::size_t rank) {
  PolyBuilder b(rank);
  return Parser<PolyBuilder>(text, b).parse();
}

}  // namespace intdiff

#endif  // INTDIFF_PARSE_HPP
