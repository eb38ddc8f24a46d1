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

#ifndef INTDIFF_HPOLY_HPP
#define INTDIFF_HPOLY_HPP

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include "intdiff/rational.hpp"

namespace intdiff {

/// Univariate polynomial in H over the rationals, stored densely.
///
/// coeffs()[t] is the coefficient of H^t. The highest stored coefficient is
/// never zero; the zero polynomial has no coefficients.
class HPoly {
 public:
  HPoly() = default;
  HPoly(std::initializer_list<Rational> c) : c_(c) { trim(); }
  explicit HPoly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }

  static HPoly constant(const Rational& c) { return HPoly({c}); }
  static HPoly monomial(std::size_t t, const Rational& c = Rational(1)) {
    std::vector<Rational> v(t + 1);
    v[t] = c;
    return HPoly(std::move(v));
  }
  /// H + c
  static HPoly linear(const Rational& c) { return HPoly({c, Rational(1)}); }

  /// H(H+1)...(H+i-1); 1 for i = 0.
  static HPoly rising(unsigned i) {
    HPoly p = constant(1);
    for (unsigned k = 0; k < i; ++k) p *= linear(Rational(static_cast<long>(k)));
    return p;
  }

  /// (H-1)(H-2)...(H-j); the action of x^j d^j written in H.
  static HPoly falling_shifted(unsigned j) {
    HPoly p = constant(1);
    for (unsigned k = 1; k <= j; ++k) p *= linear(Rational(-static_cast<long>(k)));
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t t) const { return t < c_.size() ? c_[t] : Rational(); }
  const Rational& leading() const { return c_.back(); }

  Rational eval(const Rational& h) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * h + *it;
    return acc;
  }

  /// p(H + c)
  HPoly shift(const Rational& c) const {
    if (c.is_zero() || c_.size() <= 1) return *this;
    HPoly acc;
    HPoly step = linear(c);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      acc *= step;
      acc += constant(*it);
    }
    return acc;
  }
  HPoly shift(long c) const { return shift(Rational(c)); }

  HPoly& operator+=(const HPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t t = 0; t < o.c_.size(); ++t) c_[t] += o.c_[t];
    trim();
    return *this;
  }
  HPoly& operator-=(const HPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t t = 0; t < o.c_.size(); ++t) c_[t] -= o.c_[t];
    trim();
    return *this;
  }
  HPoly& operator*=(const Rational& s) {
    if (s.is_zero()) {
      c_.clear();
      return *this;
    }
    for (auto& x : c_) x *= s;
    return *this;
  }
  HPoly& operator*=(const HPoly& o) {
    if (is_zero() || o.is_zero()) {
      c_.clear();
      return *this;
    }
    std::vector<Rational> r(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(r);
    trim();
    return *this;
  }

  friend HPoly operator+(HPoly a, const HPoly& b) { return a += b; }
  friend HPoly operator-(HPoly a, const HPoly& b) { return a -= b; }
  friend HPoly operator*(HPoly a, const HPoly& b) { return a *= b; }
  friend HPoly operator*(const Rational& s, HPoly a) { return a *= s; }
  friend HPoly operator-(HPoly a) { return a *= Rational(-1); }
  friend bool operator==(const HPoly&, const HPoly&) = default;

  /// Long division by a monic divisor: returns {quotient, remainder}.
  std::pair<HPoly, HPoly> divmod_monic(const HPoly& divisor) const {
    if (divisor.is_zero() || !divisor.leading().is_one())
      throw std::invalid_argument("HPoly::divmod_monic: divisor must be monic");
    const int dd = divisor.degree();
    std::vector<Rational> rem = c_;
    if (degree() < dd) return {HPoly(), *this};
    std::vector<Rational> quot(static_cast<std::size_t>(degree() - dd + 1));
    for (int k = degree(); k >= dd; --k) {
      Rational q = rem[static_cast<std::size_t>(k)];
      if (q.is_zero()) continue;
      quot[static_cast<std::size_t>(k - dd)] = q;
      for (int j = 0; j <= dd; ++j)
        rem[static_cast<std::size_t>(k - dd + j)] -= q * divisor.c_[static_cast<std::size_t>(j)];
    }
    rem.resize(static_cast<std::size_t>(dd));
    return {HPoly(std::move(quot)), HPoly(std::move(rem))};
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<Rational> c_;
};

}  // namespace intdiff

#endif  // INTDIFF_HPOLY_HPP
