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

#ifndef INTDIFF_ORACLE_HPP
#define INTDIFF_ORACLE_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "intdiff/element1.hpp"
#include "intdiff/rational.hpp"
#include "intdiff/tensor.hpp"

namespace intdiff {

/// Dense N x N rational matrix of an operator on the first N divided powers
/// x^[s] = x^s / s!. Column s holds the image of x^[s]; rows >= N are dropped.
class TruncMatrix {
 public:
  explicit TruncMatrix(std::size_t n = 0) : n_(n), m_(n * n) {}

  static TruncMatrix identity(std::size_t n) {
    TruncMatrix r(n);
    for (std::size_t i = 0; i < n; ++i) r(i, i) = Rational(1);
    return r;
  }

  std::size_t size() const { return n_; }
  Rational& operator()(std::size_t r, std::size_t c) { return m_[r * n_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return m_[r * n_ + c]; }

  TruncMatrix transposed() const {
    TruncMatrix t(n_);
    for (std::size_t r = 0; r < n_; ++r)
      for (std::size_t c = 0; c < n_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  TruncMatrix& operator+=(const TruncMatrix& o) {
    check(o);
    for (std::size_t k = 0; k < m_.size(); ++k) m_[k] += o.m_[k];
    return *this;
  }
  friend TruncMatrix operator+(TruncMatrix a, const TruncMatrix& b) { return a += b; }
  friend TruncMatrix operator*(const Rational& c, TruncMatrix a) {
    for (auto& v : a.m_) v *= c;
    return a;
  }
  friend TruncMatrix operator*(const TruncMatrix& a, const TruncMatrix& b) {
    a.check(b);
    const std::size_t n = a.n_;
    TruncMatrix r(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const Rational& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j)
          if (!b(k, j).is_zero()) r(i, j) += aik * b(k, j);
      }
    return r;
  }
  friend bool operator==(const TruncMatrix&, const TruncMatrix&) = default;

  /// Kronecker product; index of (i, j) is i * b.size() + j.
  friend TruncMatrix kron(const TruncMatrix& a, const TruncMatrix& b) {
    const std::size_t nb = b.n_;
    TruncMatrix r(a.n_ * nb);
    for (std::size_t i = 0; i < a.n_; ++i)
      for (std::size_t j = 0; j < a.n_; ++j) {
        if (a(i, j).is_zero()) continue;
        for (std::size_t k = 0; k < nb; ++k)
          for (std::size_t l = 0; l < nb; ++l)
            if (!b(k, l).is_zero()) r(i * nb + k, j * nb + l) = a(i, j) * b(k, l);
      }
    return r;
  }

 private:
  void check(const TruncMatrix& o) const {
    if (o.n_ != n_) throw std::invalid_argument("TruncMatrix: size mismatch");
  }

  std::size_t n_;
  std::vector<Rational> m_;
};

namespace oracle {

/// d: x^[s] -> x^[s-1]
inline TruncMatrix derivative_matrix(std::size_t n) {
  TruncMatrix r(n);
  for (std::size_t s = 1; s < n; ++s) r(s - 1, s) = Rational(1);
  return r;
}
/// I: x^[s] -> x^[s+1]
inline TruncMatrix integral_matrix(std::size_t n) {
  TruncMatrix r(n);
  for (std::size_t s = 0; s + 1 < n; ++s) r(s + 1, s) = Rational(1);
  return r;
}
/// H = d x: x^[s] -> (s+1) x^[s]
inline TruncMatrix h_matrix(std::size_t n) {
  TruncMatrix r(n);
  for (std::size_t s = 0; s < n; ++s) r(s, s) = Rational(static_cast<long>(s + 1));
  return r;
}
/// e(i,j): x^[j] -> x^[i]
inline TruncMatrix e_matrix(Index i, Index j, std::size_t n) {
  TruncMatrix r(n);
  if (static_cast<std::size_t>(i) < n && static_cast<std::size_t>(j) < n)
    r(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = Rational(1);
  return r;
}

inline TruncMatrix matrix_power(const TruncMatrix& m, Index k) {
  TruncMatrix r = TruncMatrix::identity(m.size());
  for (Index i = 0; i < k; ++i) r = r * m;
  return r;
}

inline TruncMatrix poly_of_h(const HPoly& b, std::size_t n) {
  TruncMatrix r(n);
  TruncMatrix hp = TruncMatrix::identity(n);
  const TruncMatrix h = h_matrix(n);
  for (std::size_t t = 0; t < b.coeffs().size(); ++t) {
    if (t > 0) hp = hp * h;
    if (!b.coeffs()[t].is_zero()) r += b.coeffs()[t] * hp;
  }
  return r;
}

/// Matrix of a basis atom, composed from the primitive matrices.
inline TruncMatrix atom_matrix(const BasisAtom1& at, std::size_t n) {
  if (at.is_eunit()) return e_matrix(at.a, at.b, n);
  const TruncMatrix hpow = matrix_power(h_matrix(n), at.b);
  if (at.a >= 0) return matrix_power(integral_matrix(n), at.a) * hpow;
  return hpow * matrix_power(derivative_matrix(n), -at.a);
}

}  // namespace oracle

/// Matrix of a in the divided-power basis, truncated to N x N.
inline TruncMatrix to_matrix(const Element1& a, std::size_t n) {
  if (n == 0) throw std::invalid_argument("to_matrix: N must be >= 1");
  TruncMatrix r(n);
  for (const auto& [i, b] : a.graded()) {
    const TruncMatrix pb = oracle::poly_of_h(b, n);
    if (i >= 0)
      r += oracle::matrix_power(oracle::integral_matrix(n), i) * pb;
    else
      r += pb * oracle::matrix_power(oracle::derivative_matrix(n), -i);
  }
  for (const auto& [st, c] : a.fpart()) r += c * oracle::e_matrix(st.first, st.second, n);
  return r;
}

/// Matrix of a rank-n element on the N^n divided-power monomials, built by
/// Kronecker products of the factor matrices.
inline TruncMatrix to_matrix(const ElementN& a, std::size_t n) {
  if (n == 0) throw std::invalid_argument("to_matrix: N must be >= 1");
  std::size_t dim = 1;
  for (std::size_t f = 0; f < a.rank(); ++f) dim *= n;
  TruncMatrix r(dim);
  for (const auto& [key, c] : a.terms()) {
    TruncMatrix m = oracle::atom_matrix(key[0], n);
    for (std::size_t f = 1; f < key.size(); ++f) m = kron(m, oracle::atom_matrix(key[f], n));
    r += c * m;
  }
  return r;
}

/// Matrix of a in the plain monomial basis x^s, built from `apply`.
inline TruncMatrix to_monomial_matrix(const Element1& a, std::size_t n) {
  TruncMatrix r(n);
  for (std::size_t s = 0; s < n; ++s) {
    Poly1 img = apply(a, Poly1{{static_cast<Index>(s), Rational(1)}});
    for (const auto& [e, c] : img)
      if (static_cast<std::size_t>(e) < n) r(static_cast<std::size_t>(e), s) = c;
  }
  return r;
}

/// max(0, largest positive Z-degree in the support of a).
inline Index up_degree(const Element1& a) {
  Index u = 0;
  for (const auto& [i, b] : a.graded()) u = std::max(u, i);
  for (const auto& [st, c] : a.fpart()) u = std::max(u, st.first - st.second);
  return u;
}

/// Checks to_matrix(a*b) against to_matrix(a) * to_matrix(b) on every column s
/// with s + up(a) + up(b) < N, where truncation loses nothing.
inline bool consistent(const Element1& a, const Element1& b, std::size_t n) {
  const Index shift = up_degree(a) + up_degree(b);
  if (static_cast<Index>(n) <= shift)
    throw std::invalid_argument("consistent: empty window for N = " + std::to_string(n));
  const TruncMatrix lhs = to_matrix(a * b, n);
  const TruncMatrix rhs = to_matrix(a, n) * to_matrix(b, n);
  const std::size_t window = n - static_cast<std::size_t>(shift);
  for (std::size_t s = 0; s < window; ++s)
    for (std::size_t r = 0; r < n; ++r)
      if (lhs(r, s) != rhs(r, s)) return false;
  return true;
}

using SparseVector = std::map<std::size_t, Rational>;

/// Incremental fraction-free row echelon form over the integers.
///
/// Rows are scaled to primitive integer vectors; elimination uses
/// cross-multiplication followed by content removal.
class RankAccumulator {
 public:
  /// Returns true if the row increased the rank.
  bool add(const SparseVector& row) {
    IntRow r = to_int_row(row);
    while (!r.empty()) {
      auto lead = r.begin();
      auto piv = pivots_.find(lead->first);
      if (piv == pivots_.end()) {
        pivots_.emplace(lead->first, std::move(r));
        return true;
      }
      const mpz_class a = piv->second.begin()->second;  // pivot lead
      const mpz_class b = lead->second;
      IntRow next;
      for (const auto& [c, v] : r) {
        mpz_class nv = a * v;
        if (nv != 0) next.emplace(c, std::move(nv));
      }
      for (const auto& [c, v] : piv->second) {
        mpz_class& slot = next[c];
        slot -= b * v;
        if (slot == 0) next.erase(c);
      }
      make_primitive(next);
      r = std::move(next);
    }
    return false;
  }

  std::size_t rank() const { return pivots_.size(); }

 private:
  using IntRow = std::map<std::size_t, mpz_class>;

  static IntRow to_int_row(const SparseVector& row) {
    mpz_class l = 1;
    for (const auto& [c, v] : row)
      if (!v.is_zero()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.denominator().get_mpz_t());
    IntRow r;
    for (const auto& [c, v] : row)
      if (!v.is_zero()) r.emplace(c, v.numerator() * (l / v.denominator()));
    make_primitive(r);
    return r;
  }

  static void make_primitive(IntRow& r) {
    mpz_class g = 0;
    for (const auto& [c, v] : r) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g > 1)
      for (auto& [c, v] : r) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  }

  std::map<std::size_t, IntRow> pivots_;
};

/// Rank over Q of a list of sparse rational vectors.
inline std::size_t exact_rank(const std::vector<SparseVector>& rows) {
  RankAccumulator acc;
  for (const auto& r : rows) acc.add(r);
  return acc.rank();
}

}  // namespace intdiff

#endif  // INTDIFF_ORACLE_HPP
