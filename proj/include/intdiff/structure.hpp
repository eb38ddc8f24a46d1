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

#ifndef INTDIFF_STRUCTURE_HPP
#define INTDIFF_STRUCTURE_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "intdiff/element1.hpp"
#include "intdiff/oracle.hpp"
#include "intdiff/rational.hpp"
#include "intdiff/tensor.hpp"

namespace intdiff {

// ---------------------------------------------------------------------------
// I_1 = A_1 + F + L

struct SplitTriple {
  Element1 a_part;  // span of x^i d^j
  Element1 f_part;  // span of e(k,l)
  Element1 l_part;  // span of I^s H^t, 0 <= t < s
};

/// Decomposes a along I_1 = A_1 (+) F (+) L.
///
/// Degree <= 0 parts lie in A_1. In degree i > 0 the coefficient b is divided
/// by H(H+1)...(H+i-1): the quotient q gives x^i q(H) in A_1 (as
/// x^i = I^i H(H+1)...(H+i-1)) and the remainder stays in L.
inline SplitTriple split(const Element1& a) {
  SplitTriple r;
  for (const auto& [i, b] : a.graded()) {
    if (i <= 0) {
      r.a_part.add_graded(i, b);
      continue;
    }
    const HPoly phi = HPoly::rising(static_cast<unsigned>(i));
    auto [q, rem] = b.divmod_monic(phi);
    r.a_part.add_graded(i, phi * q);
    r.l_part.add_graded(i, rem);
  }
  for (const auto& [st, c] : a.fpart()) r.f_part.add_e(st.first, st.second, c);
  return r;
}

inline bool in_f_span(const Element1& a) { return a.graded().empty(); }

inline bool in_l_span(const Element1& a) {
  if (!a.fpart().empty()) return false;
  for (const auto& [i, b] : a.graded())
    if (i <= 0 || b.degree() >= i) return false;
  return true;
}

inline bool in_a_span(const Element1& a) {
  if (!a.fpart().empty()) return false;
  for (const auto& [i, b] : a.graded()) {
    if (i <= 0) continue;
    if (!b.divmod_monic(HPoly::rising(static_cast<unsigned>(i))).second.is_zero()) return false;
  }
  return true;
}

/// Canonical form of the Weyl monomial x^i d^j.
inline Element1 weyl_monomial(Index i, Index j) {
  const Index k = i - j;
  if (k >= 0)
    return Element1::graded_part(
        k, HPoly::rising(static_cast<unsigned>(k)) * HPoly::falling_shifted(static_cast<unsigned>(j)));
  return Element1::graded_part(k, HPoly::falling_shifted(static_cast<unsigned>(i)));
}

/// Coordinates of an element of A_1 in the basis x^i d^j.
inline std::map<std::pair<Index, Index>, Rational> weyl_coordinates(const Element1& a) {
  if (!in_a_span(a)) throw std::invalid_argument("weyl_coordinates: element not in A_1");
  std::map<std::pair<Index, Index>, Rational> out;
  for (const auto& [k, b0] : a.graded()) {
    HPoly b = b0;
    // x^i d^j (i - j = k) has a monic H-coefficient of degree i.
    while (!b.is_zero()) {
      const Index xi = b.degree();
      const Index dj = xi - k;
      const Rational c = b.leading();
      out[{xi, dj}] = c;
      b -= c * weyl_monomial(xi, dj).graded_at(k);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// The A/F/L basis and the socle filtration of I_n

enum class Label : std::uint8_t { A, F, L };

inline char label_char(Label l) { return l == Label::A ? 'A' : (l == Label::F ? 'F' : 'L'); }

/// Basis element of I_1 adapted to A_1 (+) F (+) L:
///   A: x^a d^b,  F: e(a,b),  L: I^a H^b with b < a.
struct NewAtom {
  Label label = Label::A;
  Index a = 0;
  Index b = 0;
  friend auto operator<=>(const NewAtom&, const NewAtom&) = default;
};

/// Coordinates of an element of I_1 in the A/F/L basis.
inline std::vector<std::pair<NewAtom, Rational>> to_new_basis(const Element1& e) {
  std::vector<std::pair<NewAtom, Rational>> out;
  const SplitTriple s = split(e);
  for (const auto& [ij, c] : weyl_coordinates(s.a_part))
    out.push_back({NewAtom{Label::A, ij.first, ij.second}, c});
  for (const auto& [st, c] : s.f_part.fpart()) out.push_back({NewAtom{Label::F, st.first, st.second}, c});
  for (const auto& [i, b] : s.l_part.graded())
    for (std::size_t t = 0; t < b.coeffs().size(); ++t)
      if (!b.coeffs()[t].is_zero())
        out.push_back({NewAtom{Label::L, i, static_cast<Index>(t)}, b.coeffs()[t]});
  return out;
}

/// Rewrites rank-n elements in the tensor A/F/L basis. Keeps a per-instance
/// cache of atom conversions.
class NewBasisConverter {
 public:
  using Terms = std::map<std::vector<NewAtom>, Rational>;

  Terms convert(const ElementN& a) {
    Terms out;
    const std::size_t n = a.rank();
    std::vector<NewAtom> key(n);
    std::vector<const std::vector<std::pair<NewAtom, Rational>>*> fs(n);
    for (const auto& [atoms, c] : a.terms()) {
      for (std::size_t f = 0; f < n; ++f) fs[f] = &atom(atoms[f]);
      auto rec = [&](auto&& self, std::size_t f, const Rational& v) -> void {
        if (f == n) {
          auto& slot = out[key];
          slot += v;
          if (slot.is_zero()) out.erase(key);
          return;
        }
        for (const auto& [na, w] : *fs[f]) {
          key[f] = na;
          self(self, f + 1, v * w);
        }
      };
      rec(rec, 0, c);
    }
    return out;
  }

 private:
  const std::vector<std::pair<NewAtom, Rational>>& atom(const BasisAtom1& at) {
    auto it = cache_.find(at);
    if (it == cache_.end()) it = cache_.emplace(at, to_new_basis(Element1::atom(at))).first;
    return it->second;
  }

  std::map<BasisAtom1, std::vector<std::pair<NewAtom, Rational>>> cache_;
};

using CensusLabel = std::vector<Label>;

/// Label tuples carrying a nonzero component of a in the tensor A/F/L basis.
inline std::set<CensusLabel> census(const ElementN& a) {
  NewBasisConverter conv;
  std::set<CensusLabel> out;
  for (const auto& [key, c] : conv.convert(a)) {
    CensusLabel l;
    for (const auto& na : key) l.push_back(na.label);
    out.insert(std::move(l));
  }
  return out;
}

/// Least m with a in soc^m: the largest number of L-labelled factors over
/// the support of a in the tensor A/F/L basis.
inline Index socle_level(const ElementN& a) {
  if (a.is_zero()) throw std::invalid_argument("socle_level: zero element");
  Index level = 0;
  for (const auto& labels : census(a))
    level = std::max<Index>(level, std::count(labels.begin(), labels.end(), Label::L));
  return level;
}

inline bool socle_member(const ElementN& a, Index m) {
  return a.is_zero() || socle_level(a) <= m;
}

/// For each i <= i_max, the dimension of the image of
/// span{I^j H^t : 1 <= j <= i+1, t <= 2j+1} in I_1 / (A_1 + F).
inline std::vector<std::size_t> q_dims(std::size_t i_max) {
  std::vector<std::size_t> dims;
  RankAccumulator acc;
  std::map<std::pair<Index, Index>, std::size_t> columns;
  for (std::size_t i = 0; i <= i_max; ++i) {
    const Index j = static_cast<Index>(i) + 1;
    for (Index t = 0; t <= 2 * j + 1; ++t) {
      const Element1 l = split(Element1::atom(BasisAtom1::graded(j, t))).l_part;
      SparseVector row;
      for (const auto& [at, c] : l.terms())
        row[columns.try_emplace({at.a, at.b}, columns.size()).first->second] = c;
      acc.add(row);
    }
    dims.push_back(acc.rank());
  }
  return dims;
}

// ---------------------------------------------------------------------------
// Kernel of right multiplication by H_1 - H_2 in I_2

struct KernelWitness {
  bool annihilates = false;    // e(i,j)(1) e(k,j)(2) * (H_1 - H_2) == 0
  bool off_diagonal = false;   // e(i,j)(1) e(k,j')(2) * (H_1 - H_2) != 0; true when j == j'
};

inline ElementN h1_minus_h2() { return lift(1, Element1::h(), 2) - lift(2, Element1::h(), 2); }

inline KernelWitness kernel_witness_check(Index i, Index j, Index k, Index jp) {
  const ElementN diff = h1_minus_h2();
  KernelWitness w;
  w.annihilates = (ElementN::tensor({Element1::e(i, j), Element1::e(k, j)}) * diff).is_zero();
  w.off_diagonal =
      j == jp || !(ElementN::tensor({Element1::e(i, j), Element1::e(k, jp)}) * diff).is_zero();
  return w;
}

// ---------------------------------------------------------------------------
// B_n = tensor power of B_1

/// Element of B_n; a key lists, per factor, (k, t) for H^t d^k.
class BnElement {
 public:
  using Key = std::vector<std::pair<Index, Index>>;
  using Terms = std::map<Key, Rational>;

  explicit BnElement(std::size_t rank = 1) : rank_(rank) {}

  std::size_t rank() const { return rank_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Key& key, const Rational& c) {
    if (key.size() != rank_) throw RankMismatch(rank_, key.size());
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  BnElement& operator+=(const BnElement& o) {
    if (o.rank_ != rank_) throw RankMismatch(rank_, o.rank_);
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  friend BnElement operator+(BnElement a, const BnElement& b) { return a += b; }

  friend BnElement operator*(const BnElement& u, const BnElement& v) {
    if (u.rank_ != v.rank_) throw RankMismatch(u.rank_, v.rank_);
    const std::size_t n = u.rank_;
    BnElement out(n);
    std::vector<std::vector<std::pair<std::pair<Index, Index>, Rational>>> fs(n);
    Key key(n);
    for (const auto& [ku, cu] : u.terms_)
      for (const auto& [kv, cv] : v.terms_) {
        for (std::size_t f = 0; f < n; ++f) {
          const B1Element p =
              B1Element::monomial(ku[f].first, HPoly::monomial(static_cast<std::size_t>(ku[f].second))) *
              B1Element::monomial(kv[f].first, HPoly::monomial(static_cast<std::size_t>(kv[f].second)));
          fs[f] = expand(p);
        }
        auto rec = [&](auto&& self, std::size_t f, const Rational& c) -> void {
          if (f == n) {
            out.add_term(key, c);
            return;
          }
          for (const auto& [kt, w] : fs[f]) {
            key[f] = kt;
            self(self, f + 1, c * w);
          }
        };
        rec(rec, 0, cu * cv);
      }
    return out;
  }

  friend bool operator==(const BnElement&, const BnElement&) = default;

  static std::vector<std::pair<std::pair<Index, Index>, Rational>> expand(const B1Element& p) {
    std::vector<std::pair<std::pair<Index, Index>, Rational>> out;
    for (const auto& [k, poly] : p.terms())
      for (std::size_t t = 0; t < poly.coeffs().size(); ++t)
        if (!poly.coeffs()[t].is_zero()) out.push_back({{k, static_cast<Index>(t)}, poly.coeffs()[t]});
    return out;
  }

 private:
  std::size_t rank_;
  Terms terms_;
};

/// Image in B_n = I_n / (sum of F(i) (x) I_n(other factors)).
inline BnElement project_bn(const ElementN& a) {
  const std::size_t n = a.rank();
  BnElement out(n);
  BnElement::Key key(n);
  for (const auto& [atoms, c] : a.terms()) {
    if (std::any_of(atoms.begin(), atoms.end(), [](const BasisAtom1& at) { return at.is_eunit(); }))
      continue;
    std::vector<std::vector<std::pair<std::pair<Index, Index>, Rational>>> fs;
    for (const auto& at : atoms) fs.push_back(BnElement::expand(project_b1(Element1::atom(at))));
    auto rec = [&](auto&& self, std::size_t f, const Rational& v) -> void {
      if (f == n) {
        out.add_term(key, v);
        return;
      }
      for (const auto& [kt, w] : fs[f]) {
        key[f] = kt;
        self(self, f + 1, v * w);
      }
    };
    rec(rec, 0, c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Bernstein filtration of the A_1-bimodule generated by a finite set

class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Largest i_max accepted by bimodule_filtration_dims.
inline constexpr std::size_t kMaxFiltrationIndex = 16;

/// dim V_i for V_i = span{x^a d^b g x^c d^d : g in generators, a+b+c+d <= i}.
inline std::vector<std::size_t> bimodule_filtration_dims(const std::vector<Element1>& generators,
                                                         std::size_t i_max) {
  if (i_max > kMaxFiltrationIndex)
    throw ResourceLimit("bimodule_filtration_dims: i_max " + std::to_string(i_max) +
                        " exceeds limit " + std::to_string(kMaxFiltrationIndex));
  for (const auto& g : generators)
    if (g.is_zero()) throw std::invalid_argument("bimodule_filtration_dims: zero generator");

  const auto im = static_cast<Index>(i_max);
  // words[a][b] = x^a d^b
  std::vector<std::vector<Element1>> words(i_max + 1);
  for (Index a = 0; a <= im; ++a)
    for (Index b = 0; a + b <= im; ++b) words[static_cast<std::size_t>(a)].push_back(weyl_monomial(a, b));

  std::map<BasisAtom1, std::size_t> columns;
  RankAccumulator acc;
  auto add = [&](const Element1& v) {
    SparseVector row;
    for (const auto& [at, c] : v.terms()) row[columns.try_emplace(at, columns.size()).first->second] = c;
    acc.add(row);
  };

  std::vector<std::vector<std::vector<Element1>>> right(generators.size());
  for (std::size_t g = 0; g < generators.size(); ++g) {
    right[g].resize(i_max + 1);
    for (Index c = 0; c <= im; ++c)
      for (Index d = 0; c + d <= im; ++d)
        right[g][static_cast<std::size_t>(c)].push_back(generators[g] * words[static_cast<std::size_t>(c)][static_cast<std::size_t>(d)]);
  }

  std::vector<std::size_t> dims;
  for (Index i = 0; i <= im; ++i) {
    for (std::size_t g = 0; g < generators.size(); ++g)
      for (Index a = 0; a <= i; ++a)
        for (Index b = 0; a + b <= i; ++b)
          for (Index c = 0; a + b + c <= i; ++c) {
            const Index d = i - a - b - c;
            add(words[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] *
                right[g][static_cast<std::size_t>(c)][static_cast<std::size_t>(d)]);
          }
    dims.push_back(acc.rank());
  }
  return dims;
}

struct MultiplicityReport {
  bool conclusive = false;
  std::size_t degree = 0;
  /// Stabilised k-th difference for degree k >= 1; empty for degree 0.
  std::optional<long> leading_difference;
  std::size_t stable_from = 0;
};

/// Number of consecutive equal values required to call a difference stable.
inline constexpr std::size_t kStableWindow = 4;

/// Growth degree and leading finite difference of an eventually polynomial
/// dimension sequence.
inline MultiplicityReport multiplicity_report(const std::vector<std::size_t>& dims) {
  MultiplicityReport rep;
  std::vector<long> diff(dims.begin(), dims.end());
  for (std::size_t k = 0; k < dims.size(); ++k) {
    // diff[m] is the k-th difference at index m + k
    if (diff.size() >= kStableWindow) {
      std::size_t start = diff.size() - 1;
      while (start > 0 && diff[start - 1] == diff.back()) --start;
      if (diff.size() - start >= kStableWindow) {
        rep.conclusive = true;
        rep.degree = k;
        if (k > 0) rep.leading_difference = diff.back();
        rep.stable_from = start + k;
        return rep;
      }
    }
    if (diff.size() < 2) break;
    std::vector<long> next(diff.size() - 1);
    for (std::size_t m = 0; m + 1 < diff.size(); ++m) next[m] = diff[m + 1] - diff[m];
    diff = std::move(next);
  }
  return rep;
}

}  // namespace intdiff

#endif  // INTDIFF_STRUCTURE_HPP
