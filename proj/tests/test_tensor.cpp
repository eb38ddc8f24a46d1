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

#include <gtest/gtest.h>

#include "intdiff/format.hpp"
#include "intdiff/oracle.hpp"
#include "intdiff/random.hpp"
#include "intdiff/tensor.hpp"

namespace {

using namespace intdiff;

RandomBounds small_bounds() {
  RandomBounds b;
  b.max_graded_parts = 2;
  b.max_hdeg = 2;
  b.max_f_terms = 2;
  return b;
}

TEST(Lift, Embedding) {
  const ElementN d1 = lift(1, Element1::derivative(), 2);
  EXPECT_EQ(d1.terms().size(), 1u);
  EXPECT_EQ(d1.coeff({BasisAtom1::graded(-1, 0), BasisAtom1::identity()}), Rational(1));
  const ElementN e2 = lift(2, Element1::e(0, 0), 2);
  EXPECT_EQ(e2.coeff({BasisAtom1::identity(), BasisAtom1::eunit(0, 0)}), Rational(1));
  EXPECT_THROW(lift(0, Element1::h(), 2), std::out_of_range);
  EXPECT_THROW(lift(3, Element1::h(), 2), std::out_of_range);
}

TEST(Lift, DistinctFactorsCommute) {
  const ElementN a = lift(1, Element1::derivative(), 2), b = lift(2, Element1::x(), 2);
  EXPECT_EQ(a * b, b * a);
  RandomSource rnd(3, small_bounds());
  for (int k = 0; k < 50; ++k) {
    const ElementN u = lift(1, rnd.element1(), 2), v = lift(2, rnd.element1(), 2);
    ASSERT_EQ(u * v, v * u);
  }
}

TEST(MulN, Examples) {
  EXPECT_EQ(lift(1, Element1::derivative(), 2) * lift(1, Element1::integral(), 2), ElementN::one(2));
  EXPECT_EQ(lift(1, Element1::h(), 2) * lift(2, Element1::h(), 2),
            ElementN::tensor({Element1::h(), Element1::h()}));
  const ElementN e = ElementN::tensor({Element1::e(0, 0), Element1::e(0, 0)});
  const ElementN diff = lift(1, Element1::h(), 2) - lift(2, Element1::h(), 2);
  EXPECT_TRUE((e * diff).is_zero());
}

TEST(MulN, RankMismatch) {
  EXPECT_THROW(ElementN::one(1) * ElementN::one(2), RankMismatch);
  EXPECT_THROW(ElementN::one(1) + ElementN::one(2), RankMismatch);
  EXPECT_THROW(apply_n(ElementN::one(2), PolyN(1)), RankMismatch);
}

TEST(MulN, RankOneAgreesWithElement1) {
  RandomSource rnd(8);
  for (int k = 0; k < 100; ++k) {
    const Element1 a = rnd.element1(), b = rnd.element1();
    const ElementN an = ElementN::tensor({a}), bn = ElementN::tensor({b});
    ASSERT_EQ((an * bn).as_element1(), a * b);
    ASSERT_EQ((an + bn).as_element1(), a + b);
  }
}

TEST(MulN, RingAxiomsRankTwo) {
  RandomSource rnd(13, small_bounds());
  for (int k = 0; k < 30; ++k) {
    const ElementN a = rnd.elementN(2), b = rnd.elementN(2), c = rnd.elementN(2);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(ElementN::one(2) * a, a);
    ASSERT_EQ(a * ElementN::one(2), a);
  }
}

TEST(MulN, MatchesKroneckerOracle) {
  RandomSource rnd(19, small_bounds());
  const std::size_t n = 12;
  for (int k = 0; k < 5; ++k) {
    const ElementN a = rnd.elementN(2, 1), b = rnd.elementN(2, 1);
    const TruncMatrix lhs = to_matrix(a * b, n), rhs = to_matrix(a, n) * to_matrix(b, n);
    // columns (s1, s2) with both indices inside the lossless window
    const std::size_t w = n - 10;
    for (std::size_t s1 = 0; s1 < w; ++s1)
      for (std::size_t s2 = 0; s2 < w; ++s2)
        for (std::size_t r = 0; r < n * n; ++r) ASSERT_EQ(lhs(r, s1 * n + s2), rhs(r, s1 * n + s2));
  }
}

TEST(ApplyN, Examples) {
  PolyN x1x2(2);
  x1x2.add_term({1, 1}, Rational(1));
  EXPECT_EQ(apply_n(ElementN::tensor({Element1::derivative(), Element1::derivative()}), x1x2),
            PolyN::constant(2, Rational(1)));
  EXPECT_EQ(apply_n(lift(1, Element1::integral(), 2), PolyN::variable(2, 2)), x1x2);

  PolyN p(2);
  p.add_term({2, 0}, Rational(1));
  p.add_term({0, 1}, Rational(1));
  // oracle: e(0,0) kills every positive power of x1 (divided-power matrix
  // column s has a single entry at row 0 only for s = 0)
  const TruncMatrix e00 = to_matrix(Element1::e(0, 0), 4);
  ASSERT_TRUE(e00(0, 2).is_zero());
  ASSERT_EQ(e00(0, 0), Rational(1));
  EXPECT_EQ(apply_n(lift(1, Element1::e(0, 0), 2), p), PolyN::variable(2, 2));
}

TEST(ApplyN, RepresentationProperty) {
  RandomSource rnd(29, small_bounds());
  for (int k = 0; k < 40; ++k) {
    const ElementN a = rnd.elementN(2), b = rnd.elementN(2);
    const PolyN p = rnd.polyN(2);
    ASSERT_EQ(apply_n(a * b, p), apply_n(a, apply_n(b, p)));
  }
}

TEST(ApplyN, RankThreeAction) {
  const ElementN a = ElementN::tensor({Element1::x(), Element1::derivative(), Element1::e(1, 0)});
  PolyN p(3);
  p.add_term({0, 2, 0}, Rational(3));
  PolyN expected(3);
  expected.add_term({1, 1, 1}, Rational(6));
  EXPECT_EQ(apply_n(a, p), expected);
}

}  // namespace
