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

#ifndef INTDIFF_RANDOM_HPP
#define INTDIFF_RANDOM_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "intdiff/element1.hpp"
#include "intdiff/tensor.hpp"

namespace intdiff {

/// Bounds for seeded random elements. The defaults keep every element's
/// positive Z-degree at most 5, so truncation windows at N = 24 are valid for
/// products of two samples.
struct RandomBounds {
  Index min_grade = -3;
  Index max_grade = 3;
  std::size_t max_hdeg = 3;
  Index max_findex = 5;
  int max_coeff = 9;
  std::size_t max_graded_parts = 3;
  std::size_t max_f_terms = 3;
};

class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed, RandomBounds bounds = {})
      : rng_(seed), bounds_(bounds) {}

  const RandomBounds& bounds() const { return bounds_; }

  Rational coefficient() {
    std::uniform_int_distribution<int> d(1, bounds_.max_coeff);
    std::bernoulli_distribution neg(0.5);
    int v = d(rng_);
    return Rational(neg(rng_) ? -v : v);
  }

  Index uniform(Index lo, Index hi) { return std::uniform_int_distribution<Index>(lo, hi)(rng_); }

  Element1 element1() {
    Element1 r;
    const auto parts = static_cast<std::size_t>(uniform(0, static_cast<Index>(bounds_.max_graded_parts)));
    std::set<Index> grades;
    while (grades.size() < parts) grades.insert(uniform(bounds_.min_grade, bounds_.max_grade));
    for (Index g : grades) {
      const auto deg = static_cast<std::size_t>(uniform(0, static_cast<Index>(bounds_.max_hdeg)));
      std::vector<Rational> c;
      for (std::size_t t = 0; t <= deg; ++t) c.push_back(coefficient());
      r.add_graded(g, HPoly(std::move(c)));
    }
    const auto fterms = uniform(0, static_cast<Index>(bounds_.max_f_terms));
    for (Index k = 0; k < fterms; ++k)
      r.add_e(uniform(0, bounds_.max_findex), uniform(0, bounds_.max_findex), coefficient());
    return r;
  }

  Element1 nonzero_element1() {
    Element1 r;
    while (r.is_zero()) r = element1();
    return r;
  }

  Poly1 poly1(Index max_exp = 6) {
    Poly1 p;
    const Index terms = uniform(1, 4);
    for (Index k = 0; k < terms; ++k) p.add(uniform(0, max_exp), coefficient());
    return p;
  }

  /// Sum of 1..terms tensor products of random factors.
  ElementN elementN(std::size_t n, Index terms = 2) {
    ElementN r(n);
    const Index k = uniform(1, terms);
    for (Index t = 0; t < k; ++t) {
      std::vector<Element1> fs;
      for (std::size_t f = 0; f < n; ++f) fs.push_back(nonzero_element1());
      r += ElementN::tensor(fs);
    }
    return r;
  }

  PolyN polyN(std::size_t n, Index max_exp = 4) {
    PolyN p(n);
    const Index terms = uniform(1, 4);
    for (Index k = 0; k < terms; ++k) {
      std::vector<Index> e(n);
      for (auto& x : e) x = uniform(0, max_exp);
      p.add_term(e, coefficient());
    }
    return p;
  }

  /// Product of up to max_len generators x_i, d_i of A_n.
  ElementN weyl_word(std::size_t n, Index max_len = 3) {
    ElementN w = ElementN::one(n);
    const Index len = uniform(0, max_len);
    for (Index k = 0; k < len; ++k) {
      const auto f = static_cast<std::size_t>(uniform(1, static_cast<Index>(n)));
      const Element1 g = uniform(0, 1) == 0 ? Element1::x() : Element1::derivative();
      w = w * lift(f, g, n);
    }
    return w;
  }

 private:
  std::mt19937_64 rng_;
  RandomBounds bounds_;
};

}  // namespace intdiff

#endif  // INTDIFF_RANDOM_HPP
