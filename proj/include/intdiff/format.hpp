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

#ifndef INTDIFF_FORMAT_HPP
#define INTDIFF_FORMAT_HPP

#include <cstddef>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "intdiff/element1.hpp"
#include "intdiff/oracle.hpp"
#include "intdiff/structure.hpp"
#include "intdiff/tensor.hpp"

namespace intdiff {

namespace detail {

inline std::string power_suffix(Index k) { return k == 1 ? "" : "^" + std::to_string(k); }

inline std::string factor_suffix(std::size_t factor, std::size_t rank) {
  return rank > 1 ? std::to_string(factor) : "";
}

/// Joins (monomial, coefficient) pairs as "c*m + ... - ..."; an empty
/// monomial stands for 1.
inline std::string join_terms(const std::vector<std::pair<std::string, Rational>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [mono, c] : terms) {
    const bool neg = c.sign() < 0;
    const Rational mag = neg ? -c : c;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    if (mono.empty())
      out += mag.str();
    else if (mag.is_one())
      out += mono;
    else
      out += mag.str() + "*" + mono;
  }
  return out;
}

}  // namespace detail

/// Text form of a basis atom in tensor slot `factor` of a rank-`rank`
/// element; empty for the identity.
inline std::string atom_text(const BasisAtom1& at, std::size_t factor = 1, std::size_t rank = 1) {
  const std::string sfx = detail::factor_suffix(factor, rank);
  if (at.is_eunit()) {
    std::string s = "e(" + std::to_string(at.a) + "," + std::to_string(at.b) + ")";
    return rank > 1 ? s + "_" + sfx : s;
  }
  std::vector<std::string> parts;
  const std::string h = at.b == 0 ? "" : "H" + sfx + detail::power_suffix(at.b);
  if (at.a > 0) {
    parts.push_back("I" + sfx + detail::power_suffix(at.a));
    if (!h.empty()) parts.push_back(h);
  } else {
    if (!h.empty()) parts.push_back(h);
    if (at.a < 0) parts.push_back("d" + sfx + detail::power_suffix(-at.a));
  }
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : "*") + p;
  return out;
}

inline std::string to_text(const Element1& a) {
  std::vector<std::pair<std::string, Rational>> terms;
  for (const auto& [at, c] : a.terms()) terms.emplace_back(atom_text(at), c);
  return detail::join_terms(terms);
}

inline std::string to_text(const ElementN& a) {
  std::vector<std::pair<std::string, Rational>> terms;
  for (const auto& [key, c] : a.terms()) {
    std::string mono;
    for (std::size_t f = 0; f < key.size(); ++f) {
      const std::string s = atom_text(key[f], f + 1, a.rank());
      if (!s.empty()) mono += (mono.empty() ? "" : "*") + s;
    }
    terms.emplace_back(mono, c);
  }
  return detail::join_terms(terms);
}

inline std::string to_text(const Poly1& p) {
  std::vector<std::pair<std::string, Rational>> terms;
  for (const auto& [e, c] : p) terms.emplace_back(e == 0 ? "" : "x" + detail::power_suffix(e), c);
  return detail::join_terms(terms);
}

inline std::string to_text(const PolyN& p) {
  std::vector<std::pair<std::string, Rational>> terms;
  for (const auto& [exps, c] : p.terms()) {
    std::string mono;
    for (std::size_t f = 0; f < exps.size(); ++f) {
      if (exps[f] == 0) continue;
      mono += (mono.empty() ? "" : "*") + std::string("x") + detail::factor_suffix(f + 1, p.rank()) +
              detail::power_suffix(exps[f]);
    }
    terms.emplace_back(mono, c);
  }
  return detail::join_terms(terms);
}

namespace detail {
inline std::string b1_atom(Index k, Index t, std::size_t factor, std::size_t rank) {
  const std::string sfx = factor_suffix(factor, rank);
  std::string out = t == 0 ? "" : "H" + sfx + power_suffix(t);
  if (k != 0) out += (out.empty() ? "" : "*") + std::string("d") + sfx + power_suffix(k);
  return out;
}
}  // namespace detail

inline std::string to_text(const B1Element& u) {
  std::vector<std::pair<std::string, Rational>> terms;
  for (const auto& [k, p] : u.terms())
    for (std::size_t t = 0; t < p.coeffs().size(); ++t)
      if (!p.coeffs()[t].is_zero())
        terms.emplace_back(detail::b1_atom(k, static_cast<Index>(t), 1, 1), p.coeffs()[t]);
  return detail::join_terms(terms);
}

inline std::string to_text(const BnElement& u) {
  std::vector<std::pair<std::string, Rational>> terms;
  for (const auto& [key, c] : u.terms()) {
    std::string mono;
    for (std::size_t f = 0; f < key.size(); ++f) {
      const std::string s = detail::b1_atom(key[f].first, key[f].second, f + 1, u.rank());
      if (!s.empty()) mono += (mono.empty() ? "" : "*") + s;
    }
    terms.emplace_back(mono, c);
  }
  return detail::join_terms(terms);
}

/// A_1 element written over x^i d^j.
inline std::string weyl_text(const Element1& a_part) {
  std::vector<std::pair<std::string, Rational>> terms;
  for (const auto& [ij, c] : weyl_coordinates(a_part)) {
    std::string mono;
    if (ij.first > 0) mono = "x" + detail::power_suffix(ij.first);
    if (ij.second > 0) mono += (mono.empty() ? "" : "*") + std::string("d") + detail::power_suffix(ij.second);
    terms.emplace_back(mono, c);
  }
  return detail::join_terms(terms);
}

inline std::string to_text(const TruncMatrix& m) {
  std::string out;
  for (std::size_t r = 0; r < m.size(); ++r) {
    for (std::size_t c = 0; c < m.size(); ++c) out += (c ? " " : "") + m(r, c).str();
    out += "\n";
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Element1& a) { return os << to_text(a); }
inline std::ostream& operator<<(std::ostream& os, const ElementN& a) { return os << to_text(a); }
inline std::ostream& operator<<(std::ostream& os, const B1Element& a) { return os << to_text(a); }
inline std::ostream& operator<<(std::ostream& os, const BnElement& a) { return os << to_text(a); }
inline std::ostream& operator<<(std::ostream& os, const PolyN& p) { return os << to_text(p); }

// ---------------------------------------------------------------------------
// JSON. Rationals are always "p/q" strings.

inline nlohmann::json to_json(const Element1& a) {
  nlohmann::json graded = nlohmann::json::array();
  for (const auto& [i, b] : a.graded()) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : b.coeffs()) coeffs.push_back(c.pq());
    graded.push_back({{"degree", i}, {"coeffs", coeffs}});
  }
  nlohmann::json fpart = nlohmann::json::array();
  for (const auto& [st, c] : a.fpart()) fpart.push_back({{"s", st.first}, {"t", st.second}, {"coeff", c.pq()}});
  return {{"rank", 1}, {"graded", graded}, {"fpart", fpart}};
}

inline nlohmann::json atom_json(const BasisAtom1& at) {
  if (at.is_eunit()) return {{"kind", "e"}, {"s", at.a}, {"t", at.b}};
  return {{"kind", "graded"}, {"degree", at.a}, {"hpow", at.b}};
}

/// Rank 1 uses the Element1 layout; higher ranks list tensor terms.
inline nlohmann::json to_json(const ElementN& a) {
  if (a.rank() == 1) return to_json(a.as_element1());
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [key, c] : a.terms()) {
    nlohmann::json factors = nlohmann::json::array();
    for (const auto& at : key) factors.push_back(atom_json(at));
    terms.push_back({{"factors", factors}, {"coeff", c.pq()}});
  }
  return {{"rank", a.rank()}, {"terms", terms}};
}

inline nlohmann::json to_json(const TruncMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < m.size(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < m.size(); ++c) row.push_back(m(r, c).pq());
    rows.push_back(row);
  }
  return rows;
}

inline nlohmann::json to_json(const PolyN& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"exponents", e}, {"coeff", c.pq()}});
  return {{"rank", p.rank()}, {"terms", terms}};
}

inline nlohmann::json to_json(const BnElement& u) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [key, c] : u.terms()) {
    nlohmann::json factors = nlohmann::json::array();
    for (const auto& [k, t] : key) factors.push_back({{"dpow", k}, {"hpow", t}});
    terms.push_back({{"factors", factors}, {"coeff", c.pq()}});
  }
  return {{"rank", u.rank()}, {"terms", terms}};
}

}  // namespace intdiff

#endif  // INTDIFF_FORMAT_HPP
