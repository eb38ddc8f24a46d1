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

#ifndef INTDIFF_ELEMENT1_HPP
#define INTDIFF_ELEMENT1_HPP

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "intdiff/hpoly.hpp"
#include "intdiff/rational.hpp"

namespace intdiff {

using Index = std::int64_t;

/// One element of the standard basis of I_1.
///
/// A graded atom (degree i, H-power t) stands for
///   I^i * H^t  when i > 0,
///   H^t        when i = 0,
///   H^t * d^-i when i < 0,
/// and an e-atom (s, t) stands for the matrix unit e(s,t).
struct BasisAtom1 {
  enum class Kind : std::uint8_t { Graded, Eunit };

  Kind kind = Kind::Graded;
  Index a = 0;  // degree, or row index s
  Index b = 0;  // H-power, or column index t

  static constexpr BasisAtom1 graded(Index degree, Index hpow) {
    return {Kind::Graded, degree, hpow};
  }
  static constexpr BasisAtom1 eunit(Index s, Index t) { return {Kind::Eunit, s, t}; }
  static constexpr BasisAtom1 identity() { return graded(0, 0); }

  bool is_graded() const { return kind == Kind::Graded; }
  bool is_eunit() const { return kind == Kind::Eunit; }
  /// Z-degree: i for graded atoms, s - t for e(s,t).
  Index z_degree() const { return is_graded() ? a : a - b; }

  friend auto operator<=>(const BasisAtom1&, const BasisAtom1&) = default;
};

/// Polynomial in one variable x: exponent -> nonzero coefficient.
class Poly1 {
 public:
  using Terms = std::map<Index, Rational>;

  Poly1() = default;
  Poly1(std::initializer_list<std::pair<const Index, Rational>> terms) {
    for (const auto& [e, c] : terms) add(e, c);
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Terms::const_iterator begin() const { return terms_.begin(); }
  Terms::const_iterator end() const { return terms_.end(); }

  void add(Index e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend bool operator==(const Poly1&, const Poly1&) = default;

 private:
  Terms terms_;
};

/// Element of I_1 in canonical form.
///
/// graded()[i] holds b_i, the K[H] coefficient of the degree-i part (see
/// BasisAtom1 for the side on which H sits); fpart()[{s,t}] is the
/// coefficient of e(s,t). No stored polynomial or coefficient is zero, so two
/// elements are equal as operators iff they compare equal.
class Element1 {
 public:
  using Graded = std::map<Index, HPoly>;
  using FPart = std::map<std::pair<Index, Index>, Rational>;

  Element1() = default;

  static Element1 scalar(const Rational& c) {
    Element1 r;
    r.add_graded(0, HPoly::constant(c));
    return r;
  }
  static Element1 one() { return scalar(Rational(1)); }
  static Element1 atom(const BasisAtom1& at, const Rational& c = Rational(1)) {
    Element1 r;
    if (at.is_graded()) {
      r.add_graded(at.a, HPoly::monomial(static_cast<std::size_t>(at.b), c));
    } else {
      if (at.a < 0 || at.b < 0) throw std::invalid_argument("e(s,t) needs s,t >= 0");
      r.add_e(at.a, at.b, c);
    }
    return r;
  }
  /// b(H) placed in degree i.
  static Element1 graded_part(Index i, const HPoly& b) {
    Element1 r;
    r.add_graded(i, b);
    return r;
  }
  static Element1 e(Index s, Index t, const Rational& c = Rational(1)) {
    return atom(BasisAtom1::eunit(s, t), c);
  }
  static Element1 integral(Index power = 1) { return graded_part(power, HPoly::constant(1)); }
  static Element1 derivative(Index power = 1) { return graded_part(-power, HPoly::constant(1)); }
  static Element1 h() { return graded_part(0, HPoly::monomial(1)); }
  /// x = I*H
  static Element1 x() { return graded_part(1, HPoly::monomial(1)); }

  const Graded& graded() const { return graded_; }
  const FPart& fpart() const { return fpart_; }
  bool is_zero() const { return graded_.empty() && fpart_.empty(); }

  HPoly graded_at(Index i) const {
    auto it = graded_.find(i);
    return it == graded_.end() ? HPoly() : it->second;
  }
  Rational e_coeff(Index s, Index t) const {
    auto it = fpart_.find({s, t});
    return it == fpart_.end() ? Rational() : it->second;
  }

  void add_graded(Index i, const HPoly& b) {
    if (b.is_zero()) return;
    auto [it, inserted] = graded_.try_emplace(i, b);
    if (!inserted) {
      it->second += b;
      if (it->second.is_zero()) graded_.erase(it);
    }
  }
  void add_e(Index s, Index t, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = fpart_.try_emplace({s, t}, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) fpart_.erase(it);
    }
  }

  /// Expansion over basis atoms, in canonical print order.
  std::vector<std::pair<BasisAtom1, Rational>> terms() const {
    std::vector<std::pair<BasisAtom1, Rational>> out;
    for (const auto& [i, b] : graded_)
      for (std::size_t t = 0; t < b.coeffs().size(); ++t)
        if (!b.coeffs()[t].is_zero())
          out.emplace_back(BasisAtom1::graded(i, static_cast<Index>(t)), b.coeffs()[t]);
    for (const auto& [st, c] : fpart_) out.emplace_back(BasisAtom1::eunit(st.first, st.second), c);
    return out;
  }

  Element1& operator+=(const Element1& o) {
    for (const auto& [i, b] : o.graded_) add_graded(i, b);
    for (const auto& [st, c] : o.fpart_) add_e(st.first, st.second, c);
    return *this;
  }
  Element1& operator-=(const Element1& o) { return *this += Rational(-1) * o; }

  friend Element1 operator+(Element1 a, const Element1& b) { return a += b; }
  friend Element1 operator-(Element1 a, const Element1& b) { return a -= b; }
  friend Element1 operator-(const Element1& a) { return Rational(-1) * a; }
  friend Element1 operator*(const Rational& c, const Element1& a) {
    Element1 r;
    if (c.is_zero()) return r;
    for (const auto& [i, b] : a.graded_) r.graded_.emplace(i, c * b);
    for (const auto& [st, v] : a.fpart_) r.fpart_.emplace(st, c * v);
    return r;
  }
  friend inline Element1 operator*(const Element1& a, const Element1& b);
  Element1& operator*=(const Element1& o) { return *this = *this * o; }

  friend bool operator==(const Element1&, const Element1&) = default;

 private:
  Graded graded_;
  FPart fpart_;
};

namespace detail {

// Product of two graded parts, accumulated into out.
inline void mul_graded(Index i, const HPoly& p, Index j, const HPoly& q, Element1& out) {
  if (i >= 0 && j >= 0) {
    // I^i p(H) I^j q(H) = I^(i+j) p(H+j) q(H)
    out.add_graded(i + j, p.shift(j) * q);
  } else if (i <= 0 && j <= 0) {
    // p(H) d^m q(H) d^n = p(H) q(H+m) d^(m+n)
    out.add_graded(i + j, p * q.shift(-i));
  } else if (i < 0) {
    // p(H) d^m I^a q(H), with d^m I^a = v_(a-m)
    const Index m = -i, a = j;
    if (a >= m)
      out.add_graded(a - m, p.shift(a - m) * q);
    else
      out.add_graded(a - m, p * q.shift(m - a));
  } else {
    // I^a r(H) d^m = (I^a d^m) r(H-m), and
    // I^a d^m = v_(a-m) - sum_{u < min(a,m)} e(u + max(a-m,0), u + max(m-a,0)).
    const Index a = i, m = -j;
    const HPoly r = p * q;
    if (a >= m)
      out.add_graded(a - m, r.shift(-m));
    else
      out.add_graded(a - m, r.shift(-a));
    const Index lo = std::min(a, m);
    const Index rs = std::max<Index>(a - m, 0), cs = std::max<Index>(m - a, 0);
    for (Index u = 0; u < lo; ++u) {
      const Index col = u + cs;
      out.add_e(u + rs, col, -r.eval(Rational(col + 1 - m)));
    }
  }
}

// graded part times e(s,t)
inline void mul_graded_e(Index i, const HPoly& p, Index s, Index t, const Rational& c,
                         Element1& out) {
  if (i >= 0) {
    out.add_e(s + i, t, c * p.eval(Rational(s + 1)));
  } else if (s + i >= 0) {
    out.add_e(s + i, t, c * p.eval(Rational(s + i + 1)));
  }
}

// e(s,t) times graded part
inline void mul_e_graded(Index s, Index t, const Rational& c, Index j, const HPoly& q,
                         Element1& out) {
  if (j >= 0) {
    if (t >= j) out.add_e(s, t - j, c * q.eval(Rational(t - j + 1)));
  } else {
    out.add_e(s, t - j, c * q.eval(Rational(t + 1)));
  }
}

}  // namespace detail

inline Element1 operator*(const Element1& a, const Element1& b) {
  Element1 out;
  for (const auto& [i, p] : a.graded_) {
    for (const auto& [j, q] : b.graded_) detail::mul_graded(i, p, j, q, out);
    for (const auto& [st, c] : b.fpart_) detail::mul_graded_e(i, p, st.first, st.second, c, out);
  }
  for (const auto& [st, c] : a.fpart_) {
    for (const auto& [j, q] : b.graded_) detail::mul_e_graded(st.first, st.second, c, j, q, out);
    for (const auto& [uv, d] : b.fpart_)
      if (st.second == uv.first) out.add_e(st.first, uv.second, c * d);
  }
  return out;
}

inline Element1 mul(const Element1& a, const Element1& b) { return a * b; }

/// Canonical form of the product of two basis atoms.
inline Element1 atom_mul(const BasisAtom1& left, const BasisAtom1& right) {
  return Element1::atom(left) * Element1::atom(right);
}

inline Element1 power(const Element1& a, unsigned k) {
  Element1 r = Element1::one();
  for (unsigned i = 0; i < k; ++i) r = r * a;
  return r;
}

/// Generator by name: "x", "d", "I", "H". Matrix units use Element1::e.
inline Element1 from_generator(std::string_view name) {
  if (name == "x") return Element1::x();
  if (name == "d") return Element1::derivative();
  if (name == "I") return Element1::integral();
  if (name == "H") return Element1::h();
  throw std::invalid_argument("unknown generator: " + std::string(name));
}

/// Action of a basis atom on x^s: returns {exponent, coefficient}, or a zero
/// coefficient when the image vanishes.
inline std::pair<Index, Rational> atom_apply(const BasisAtom1& at, Index s) {
  if (at.is_eunit()) {
    if (at.b != s) return {0, Rational()};
    return {at.a, factorial(static_cast<unsigned>(s)) / factorial(static_cast<unsigned>(at.a))};
  }
  const Index i = at.a;
  if (i >= 0) {
    // I^i H^t x^s = (s+1)^t s!/(s+i)! x^(s+i)
    Rational h = Rational(s + 1);
    Rational c = factorial(static_cast<unsigned>(s)) / factorial(static_cast<unsigned>(s + i));
    for (Index k = 0; k < at.b; ++k) c *= h;
    return {s + i, c};
  }
  const Index m = -i;
  if (s < m) return {0, Rational()};
  Rational h = Rational(s - m + 1);
  Rational c = factorial(static_cast<unsigned>(s)) / factorial(static_cast<unsigned>(s - m));
  for (Index k = 0; k < at.b; ++k) c *= h;
  return {s - m, c};
}

/// Image of a polynomial in x under a.
inline Poly1 apply(const Element1& a, const Poly1& p) {
  Poly1 out;
  auto add = [&out](Index e, const Rational& c) { out.add(e, c); };
  for (const auto& [s, pc] : p) {
    if (pc.is_zero()) continue;
    for (const auto& [i, b] : a.graded()) {
      if (i >= 0) {
        Rational c = b.eval(Rational(s + 1)) * factorial(static_cast<unsigned>(s)) /
                     factorial(static_cast<unsigned>(s + i));
        add(s + i, pc * c);
      } else if (s >= -i) {
        Rational c = b.eval(Rational(s + i + 1)) * factorial(static_cast<unsigned>(s)) /
                     factorial(static_cast<unsigned>(s + i));
        add(s + i, pc * c);
      }
    }
    for (const auto& [st, c] : a.fpart())
      if (st.second == s)
        add(st.first, pc * c * factorial(static_cast<unsigned>(s)) /
                          factorial(static_cast<unsigned>(st.first)));
  }
  return out;
}

/// Smallest n with the F-part inside span{e(i,j) : i,j <= n}; -1 if no F-part.
inline Index fdegree(const Element1& a) {
  Index d = -1;
  for (const auto& [st, c] : a.fpart()) d = std::max({d, st.first, st.second});
  return d;
}

/// Homogeneous component of Z-degree i.
inline Element1 grade_component(const Element1& a, Index i) {
  Element1 r;
  r.add_graded(i, a.graded_at(i));
  for (const auto& [st, c] : a.fpart())
    if (st.first - st.second == i) r.add_e(st.first, st.second, c);
  return r;
}

/// Transpose with respect to the divided-power basis x^s/s!.
///
/// d and I swap, H and e(s,t) -> e(t,s) are fixed; on canonical forms this
/// sends the degree-i part b(H) to degree -i with the same b.
inline Element1 transpose(const Element1& a) {
  Element1 r;
  for (const auto& [i, b] : a.graded()) r.add_graded(-i, b);
  for (const auto& [st, c] : a.fpart()) r.add_e(st.second, st.first, c);
  return r;
}

/// Element of the skew Laurent polynomial ring B_1 = K[H][d, d^-1; H -> H+1].
///
/// terms()[k] = p means p(H) d^k.
class B1Element {
 public:
  using Terms = std::map<Index, HPoly>;

  B1Element() = default;
  static B1Element monomial(Index k, const HPoly& p) {
    B1Element r;
    r.add(k, p);
    return r;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(Index k, Index t) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational() : it->second.coeff(static_cast<std::size_t>(t));
  }

  void add(Index k, const HPoly& p) {
    if (p.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, p);
    if (!inserted) {
      it->second += p;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  B1Element& operator+=(const B1Element& o) {
    for (const auto& [k, p] : o.terms_) add(k, p);
    return *this;
  }
  friend B1Element operator+(B1Element a, const B1Element& b) { return a += b; }
  friend B1Element operator*(const Rational& c, const B1Element& a) {
    B1Element r;
    for (const auto& [k, p] : a.terms_) r.add(k, c * p);
    return r;
  }
  friend B1Element operator-(B1Element a, const B1Element& b) { return a += Rational(-1) * b; }

  /// (p d^k)(q d^l) = p q(H+k) d^(k+l)
  friend B1Element operator*(const B1Element& u, const B1Element& v) {
    B1Element r;
    for (const auto& [k, p] : u.terms_)
      for (const auto& [l, q] : v.terms_) r.add(k + l, p * q.shift(k));
    return r;
  }
  friend bool operator==(const B1Element&, const B1Element&) = default;

 private:
  Terms terms_;
};

inline B1Element b1_mul(const B1Element& u, const B1Element& v) { return u * v; }

/// Image in B_1 = I_1 / F; I maps to d^-1.
inline B1Element project_b1(const Element1& a) {
  B1Element r;
  for (const auto& [i, b] : a.graded()) r.add(-i, i > 0 ? b.shift(-i) : b);
  return r;
}

}  // namespace intdiff

#endif  // INTDIFF_ELEMENT1_HPP
