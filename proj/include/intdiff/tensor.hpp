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

#ifndef INTDIFF_TENSOR_HPP
#define INTDIFF_TENSOR_HPP

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "intdiff/element1.hpp"
#include "intdiff/rational.hpp"

namespace intdiff {

class RankMismatch : public std::invalid_argument {
 public:
  RankMismatch(std::size_t a, std::size_t b)
      : std::invalid_argument("rank mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

using AtomTuple = std::vector<BasisAtom1>;

/// Element of I_n = I_1 (x) ... (x) I_1, as a sparse combination of tensor
/// products of I_1 basis atoms.
class ElementN {
 public:
  using Terms = std::map<AtomTuple, Rational>;

  explicit ElementN(std::size_t rank = 1) : rank_(rank) {
    if (rank == 0) throw std::invalid_argument("ElementN: rank must be >= 1");
  }

  static ElementN scalar(std::size_t rank, const Rational& c) {
    ElementN r(rank);
    r.add_term(AtomTuple(rank, BasisAtom1::identity()), c);
    return r;
  }
  static ElementN one(std::size_t rank) { return scalar(rank, Rational(1)); }

  /// a (x) b (x) ...
  static ElementN tensor(const std::vector<Element1>& factors) {
    ElementN r(factors.size());
    std::vector<std::vector<std::pair<BasisAtom1, Rational>>> expanded;
    for (const auto& f : factors) expanded.push_back(f.terms());
    AtomTuple key(factors.size());
    auto rec = [&](auto&& self, std::size_t f, const Rational& c) -> void {
      if (f == factors.size()) {
        r.add_term(key, c);
        return;
      }
      for (const auto& [at, v] : expanded[f]) {
        key[f] = at;
        self(self, f + 1, c * v);
      }
    };
    rec(rec, 0, Rational(1));
    return r;
  }

  std::size_t rank() const { return rank_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const AtomTuple& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational() : it->second;
  }

  void add_term(const AtomTuple& key, const Rational& c) {
    if (key.size() != rank_) throw RankMismatch(rank_, key.size());
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// Rank-1 elements as Element1.
  Element1 as_element1() const {
    if (rank_ != 1) throw RankMismatch(1, rank_);
    Element1 r;
    for (const auto& [k, c] : terms_) r += Element1::atom(k[0], c);
    return r;
  }

  ElementN& operator+=(const ElementN& o) {
    check(o);
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  ElementN& operator-=(const ElementN& o) {
    check(o);
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  friend ElementN operator+(ElementN a, const ElementN& b) { return a += b; }
  friend ElementN operator-(ElementN a, const ElementN& b) { return a -= b; }
  friend ElementN operator-(const ElementN& a) { return Rational(-1) * a; }
  friend ElementN operator*(const Rational& c, const ElementN& a) {
    ElementN r(a.rank_);
    if (c.is_zero()) return r;
    for (const auto& [k, v] : a.terms_) r.terms_.emplace(k, c * v);
    return r;
  }

  /// Factor-wise product: (a1 (x) a2)(b1 (x) b2) = a1 b1 (x) a2 b2.
  friend ElementN operator*(const ElementN& a, const ElementN& b) {
    a.check(b);
    const std::size_t n = a.rank_;
    ElementN out(n);
    std::map<std::pair<BasisAtom1, BasisAtom1>, std::vector<std::pair<BasisAtom1, Rational>>>
        cache;
    auto product = [&cache](const BasisAtom1& l, const BasisAtom1& r)
        -> const std::vector<std::pair<BasisAtom1, Rational>>& {
      auto it = cache.find({l, r});
      if (it == cache.end()) it = cache.emplace(std::make_pair(l, r), atom_mul(l, r).terms()).first;
      return it->second;
    };
    std::vector<const std::vector<std::pair<BasisAtom1, Rational>>*> factors(n);
    AtomTuple key(n);
    for (const auto& [ka, ca] : a.terms_) {
      for (const auto& [kb, cb] : b.terms_) {
        bool vanishes = false;
        for (std::size_t f = 0; f < n && !vanishes; ++f) {
          factors[f] = &product(ka[f], kb[f]);
          vanishes = factors[f]->empty();
        }
        if (vanishes) continue;
        auto rec = [&](auto&& self, std::size_t f, const Rational& c) -> void {
          if (f == n) {
            out.add_term(key, c);
            return;
          }
          for (const auto& [at, v] : *factors[f]) {
            key[f] = at;
            self(self, f + 1, c * v);
          }
        };
        rec(rec, 0, ca * cb);
      }
    }
    return out;
  }

  friend bool operator==(const ElementN&, const ElementN&) = default;

 private:
  void check(const ElementN& o) const {
    if (o.rank_ != rank_) throw RankMismatch(rank_, o.rank_);
  }

  std::size_t rank_;
  Terms terms_;
};

inline ElementN mul_n(const ElementN& a, const ElementN& b) { return a * b; }
inline ElementN add_n(const ElementN& a, const ElementN& b) { return a + b; }
inline ElementN scale_n(const Rational& c, const ElementN& a) { return c * a; }

/// Places a in tensor slot `factor` (1-based) of a rank-n element.
inline ElementN lift(std::size_t factor, const Element1& a, std::size_t n) {
  if (factor < 1 || factor > n)
    throw std::out_of_range("lift: factor " + std::to_string(factor) + " not in 1.." +
                            std::to_string(n));
  std::vector<Element1> fs(n, Element1::one());
  fs[factor - 1] = a;
  return ElementN::tensor(fs);
}

/// Polynomial in x_1..x_n: exponent vector -> coefficient.
class PolyN {
 public:
  using Terms = std::map<std::vector<Index>, Rational>;

  explicit PolyN(std::size_t rank = 1) : rank_(rank) {}

  static PolyN constant(std::size_t rank, const Rational& c) {
    PolyN p(rank);
    p.add_term(std::vector<Index>(rank, 0), c);
    return p;
  }
  /// x_var (1-based)
  static PolyN variable(std::size_t rank, std::size_t var) {
    if (var < 1 || var > rank) throw std::out_of_range("variable index out of range");
    PolyN p(rank);
    std::vector<Index> e(rank, 0);
    e[var - 1] = 1;
    p.add_term(e, Rational(1));
    return p;
  }

  std::size_t rank() const { return rank_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const std::vector<Index>& exps, const Rational& c) {
    if (exps.size() != rank_) throw RankMismatch(rank_, exps.size());
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(exps, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  PolyN& operator+=(const PolyN& o) {
    if (o.rank_ != rank_) throw RankMismatch(rank_, o.rank_);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  PolyN& operator-=(const PolyN& o) { return *this += Rational(-1) * o; }
  friend PolyN operator+(PolyN a, const PolyN& b) { return a += b; }
  friend PolyN operator-(PolyN a, const PolyN& b) { return a -= b; }
  friend PolyN operator-(const PolyN& a) { return Rational(-1) * a; }
  friend PolyN operator*(const Rational& c, const PolyN& a) {
    PolyN r(a.rank_);
    for (const auto& [e, v] : a.terms_) r.add_term(e, c * v);
    return r;
  }
  friend PolyN operator*(const PolyN& a, const PolyN& b) {
    if (a.rank_ != b.rank_) throw RankMismatch(a.rank_, b.rank_);
    PolyN r(a.rank_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        std::vector<Index> e(ea);
        for (std::size_t k = 0; k < e.size(); ++k) e[k] += eb[k];
        r.add_term(e, ca * cb);
      }
    return r;
  }
  friend bool operator==(const PolyN&, const PolyN&) = default;

 private:
  std::size_t rank_;
  Terms terms_;
};

/// Factor i of a acts on the variable x_i.
inline PolyN apply_n(const ElementN& a, const PolyN& p) {
  if (a.rank() != p.rank()) throw RankMismatch(a.rank(), p.rank());
  PolyN out(p.rank());
  for (const auto& [key, c] : a.terms()) {
    for (const auto& [exps, pc] : p.terms()) {
      std::vector<Index> img(exps.size());
      Rational coeff = c * pc;
      for (std::size_t f = 0; f < key.size() && !coeff.is_zero(); ++f) {
        auto [e, v] = atom_apply(key[f], exps[f]);
        img[f] = e;
        coeff *= v;
      }
      out.add_term(img, coeff);
    }
  }
  return out;
}

}  // namespace intdiff

#endif  // INTDIFF_TENSOR_HPP
