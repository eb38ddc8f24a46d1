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

#include <algorithm>
#include <random>

#include "intdiff/oracle.hpp"
#include "intdiff/random.hpp"
#include "intdiff/structure.hpp"

namespace {

using namespace intdiff;

TEST(ToMatrix, Examples) {
  const TruncMatrix e12 = to_matrix(Element1::e(1, 2), 4);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) EXPECT_EQ(e12(r, c), Rational(r == 1 && c == 2 ? 1 : 0));
  EXPECT_EQ(to_matrix(Element1::one(), 7), TruncMatrix::identity(7));
  const TruncMatrix h = to_matrix(Element1::h(), 3);
  EXPECT_EQ(h, oracle::h_matrix(3));
  EXPECT_EQ(h(0, 0), Rational(1));
  EXPECT_EQ(h(1, 1), Rational(2));
  EXPECT_EQ(h(2, 2), Rational(3));
  EXPECT_THROW(to_matrix(Element1::one(), 0), std::invalid_argument);
}

TEST(ToMatrix, HIsDerivativeOfX) {
  // H = d x on divided powers: x x^[s] = (s+1) x^[s+1]
  const std::size_t n = 10;
  TruncMatrix xm(n);
  for (std::size_t s = 0; s + 1 < n; ++s) xm(s + 1, s) = Rational(static_cast<long>(s + 1));
  const TruncMatrix dx = oracle::derivative_matrix(n) * xm;
  for (std::size_t s = 0; s + 1 < n; ++s)
    for (std::size_t r = 0; r < n; ++r) EXPECT_EQ(dx(r, s), to_matrix(Element1::h(), n)(r, s));
}

TEST(ToMatrix, Linear) {
  RandomSource rnd(2);
  for (int k = 0; k < 30; ++k) {
    const Element1 a = rnd.element1(), b = rnd.element1();
    const Rational c = rnd.coefficient();
    EXPECT_EQ(to_matrix(a + c * b, 12), to_matrix(a, 12) + c * to_matrix(b, 12));
  }
}

TEST(ToMatrix, TransposeIsMatrixTranspose) {
  RandomSource rnd(4);
  for (int k = 0; k < 30; ++k) {
    const Element1 a = rnd.element1();
    EXPECT_EQ(to_matrix(transpose(a), 16), to_matrix(a, 16).transposed());
  }
}

TEST(ToMatrix, MonomialConventionOfMatrixUnits) {
  const std::size_t n = 10;
  for (Index i = 0; i <= 8; ++i)
    for (Index j = 0; j <= 8; ++j) {
      const TruncMatrix m = to_monomial_matrix(Element1::e(i, j), n);
      const Rational scale = factorial(static_cast<unsigned>(j)) / factorial(static_cast<unsigned>(i));
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
          ASSERT_EQ(m(r, c), (static_cast<Index>(r) == i && static_cast<Index>(c) == j) ? scale : Rational(0));
    }
}

TEST(Consistent, Examples) {
  EXPECT_TRUE(consistent(Element1::derivative(), Element1::integral(), 8));
  const TruncMatrix di = to_matrix(Element1::derivative(), 8) * to_matrix(Element1::integral(), 8);
  for (std::size_t s = 0; s < 7; ++s)
    for (std::size_t r = 0; r < 8; ++r) EXPECT_EQ(di(r, s), Rational(r == s ? 1 : 0));

  EXPECT_TRUE(consistent(Element1::integral(), Element1::derivative(), 8));
  const TruncMatrix id = to_matrix(Element1::integral(), 8) * to_matrix(Element1::derivative(), 8);
  for (std::size_t s = 0; s < 7; ++s)
    for (std::size_t r = 0; r < 8; ++r) EXPECT_EQ(id(r, s), Rational(r == s && s != 0 ? 1 : 0));
}

TEST(Consistent, EmptyWindow) {
  EXPECT_THROW(consistent(Element1::integral(3), Element1::integral(2), 5), std::invalid_argument);
  EXPECT_EQ(up_degree(Element1::e(5, 0) + Element1::derivative()), 5);
}

TEST(Consistent, RandomPairs) {
  RandomSource rnd(0);
  for (int k = 0; k < 100; ++k) ASSERT_TRUE(consistent(rnd.element1(), rnd.element1(), 24));
}

TEST(ExactRank, Examples) {
  EXPECT_EQ(exact_rank({{{0, Rational(1)}}, {{1, Rational(1)}}, {{0, Rational(1)}, {1, Rational(1)}}}), 2u);
  EXPECT_EQ(exact_rank({}), 0u);
  EXPECT_EQ(exact_rank({{}, {{3, Rational(0)}}}), 0u);
}

TEST(ExactRank, MatrixUnitSpan) {
  std::map<BasisAtom1, std::size_t> cols;
  std::vector<SparseVector> rows;
  for (Index a = 0; a <= 3; ++a)
    for (Index d = 0; a + d <= 3; ++d) {
      const Element1 v = weyl_monomial(a, 0) * Element1::e(0, 0) * weyl_monomial(0, d);
      SparseVector row;
      for (const auto& [at, c] : v.terms()) row[cols.try_emplace(at, cols.size()).first->second] = c;
      rows.push_back(row);
    }
  EXPECT_EQ(exact_rank(rows), 10u);
}

TEST(ExactRank, InvariantUnderPermutationAndScaling) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> val(-3, 3), col(0, 7);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<SparseVector> rows(6);
    for (auto& r : rows)
      for (int k = 0; k < 4; ++k) r[static_cast<std::size_t>(col(rng))] = Rational(val(rng), 1 + (val(rng) + 3));
    // dependent row
    SparseVector sum;
    for (const auto& [c, v] : rows[0]) sum[c] += v;
    for (const auto& [c, v] : rows[1]) sum[c] += Rational(2) * v;
    rows.push_back(sum);
    const std::size_t base = exact_rank(rows);
    EXPECT_LE(base, 6u);
    auto shuffled = rows;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    for (auto& r : shuffled)
      for (auto& [c, v] : r) v *= Rational(-7, 3);
    EXPECT_EQ(exact_rank(shuffled), base);
  }
}

}  // namespace
