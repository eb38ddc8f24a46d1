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

#include "intdiff/element1.hpp"
#include "intdiff/format.hpp"
#include "intdiff/oracle.hpp"
#include "intdiff/random.hpp"

namespace {

using namespace intdiff;

const Element1 kD = Element1::derivative();
const Element1 kI = Element1::integral();
const Element1 kH = Element1::h();
const Element1 kX = Element1::x();
const Element1 kOne = Element1::one();

// Expected values below marked "oracle" are confirmed against products of
// truncated primitive matrices, never against the rewrite rules.
bool oracle_agrees(const Element1& product, const std::vector<Element1>& factors,
                   std::size_t n = 16) {
  TruncMatrix m = TruncMatrix::identity(n);
  Index shift = 0;
  for (const auto& f : factors) {
    m = m * to_matrix(f, n);
    shift += up_degree(f);
  }
  const TruncMatrix p = to_matrix(product, n);
  for (std::size_t s = 0; s + static_cast<std::size_t>(shift) < n; ++s)
    for (std::size_t r = 0; r < n; ++r)
      if (p(r, s) != m(r, s)) return false;
  return true;
}

TEST(AtomMul, DerivativeTimesIntegral) {
  EXPECT_EQ(atom_mul(BasisAtom1::graded(-1, 0), BasisAtom1::graded(1, 0)), kOne);
}

TEST(AtomMul, IntegralTimesDerivative) {
  EXPECT_EQ(atom_mul(BasisAtom1::graded(1, 0), BasisAtom1::graded(-1, 0)),
            kOne - Element1::e(0, 0));
}

TEST(AtomMul, TelescopingSquares) {
  const Element1 expected = kOne - Element1::e(0, 0) - Element1::e(1, 1);
  ASSERT_TRUE(oracle_agrees(expected, {Element1::integral(2), Element1::derivative(2)}));
  EXPECT_EQ(atom_mul(BasisAtom1::graded(2, 0), BasisAtom1::graded(-2, 0)), expected);
}

TEST(AtomMul, MatrixUnits) {
  EXPECT_EQ(atom_mul(BasisAtom1::eunit(0, 1), BasisAtom1::eunit(1, 2)), Element1::e(0, 2));
  EXPECT_TRUE(atom_mul(BasisAtom1::eunit(0, 1), BasisAtom1::eunit(2, 2)).is_zero());
}

TEST(AtomMul, AllSmallAtomPairsMatchOracle) {
  std::vector<BasisAtom1> atoms;
  for (Index i = -3; i <= 3; ++i)
    for (Index t = 0; t <= 2; ++t) atoms.push_back(BasisAtom1::graded(i, t));
  for (Index s = 0; s <= 3; ++s)
    for (Index t = 0; t <= 3; ++t) atoms.push_back(BasisAtom1::eunit(s, t));
  for (const auto& l : atoms)
    for (const auto& r : atoms)
      ASSERT_TRUE(oracle_agrees(atom_mul(l, r), {Element1::atom(l), Element1::atom(r)}))
          << atom_text(l) << " * " << atom_text(r);
}

TEST(Mul, XTimesDerivative) {
  const Element1 expected = kH - kOne;
  ASSERT_TRUE(oracle_agrees(expected, {kX, kD}));
  const Element1 got = kX * kD;
  EXPECT_EQ(got, expected);
  EXPECT_EQ(got.graded().size(), 1u);
  EXPECT_EQ(got.graded().begin()->first, 0);
}

TEST(Mul, HOnDiagonalUnit) { EXPECT_EQ(kH * Element1::e(2, 2), Rational(3) * Element1::e(2, 2)); }

TEST(Mul, MatrixUnitTimesDerivativeShiftsColumn) {
  // e(i,j) d = e(i,j+1); checked against the oracle for a grid of indices.
  for (Index i = 0; i <= 4; ++i)
    for (Index j = 0; j <= 4; ++j) {
      ASSERT_TRUE(oracle_agrees(Element1::e(i, j + 1), {Element1::e(i, j), kD}));
      EXPECT_EQ(Element1::e(i, j) * kD, Element1::e(i, j + 1));
    }
}

TEST(Mul, AdditiveInverse) {
  RandomSource rnd(11);
  for (int k = 0; k < 50; ++k) {
    const Element1 a = rnd.element1();
    EXPECT_TRUE((a + Rational(-1) * a).is_zero());
  }
}

TEST(Generators, Names) {
  EXPECT_EQ(from_generator("x"), kI * kH);
  EXPECT_EQ(from_generator("H"), kH);
  EXPECT_EQ(from_generator("d"), kD);
  EXPECT_EQ(from_generator("I"), kI);
  EXPECT_EQ(Element1::e(2, 3).fpart().at({2, 3}), Rational(1));
  EXPECT_THROW(from_generator("y"), std::invalid_argument);
  EXPECT_THROW(Element1::e(-1, 0), std::invalid_argument);
}

TEST(Relations, DefiningRelations) {
  EXPECT_EQ(kD * kI, kOne);
  EXPECT_EQ(kH * kI - kI * kH, kI);
  EXPECT_EQ(kH * kD - kD * kH, -kD);
  const Element1 e00 = kOne - kI * kD;
  EXPECT_EQ(kH * e00, e00);
  EXPECT_EQ(e00 * kH, e00);
  EXPECT_EQ(e00, Element1::e(0, 0));
}

TEST(Relations, MatrixUnitsFromIntegralsAndDerivatives) {
  for (Index i = 0; i <= 4; ++i)
    for (Index j = 0; j <= 4; ++j) {
      const Element1 def = power(kI, static_cast<unsigned>(i)) * power(kD, static_cast<unsigned>(j)) -
                           power(kI, static_cast<unsigned>(i + 1)) * power(kD, static_cast<unsigned>(j + 1));
      EXPECT_EQ(def, Element1::e(i, j));
    }
}

TEST(Apply, Examples) {
  EXPECT_EQ(apply(kI, Poly1{{2, Rational(1)}}), (Poly1{{3, Rational(1, 3)}}));
  EXPECT_EQ(apply(Element1::e(1, 2), Poly1{{2, Rational(1)}}), (Poly1{{1, Rational(2)}}));
  // H = d x: multiply x^3 by x, then differentiate.
  const Poly1 xx3 = apply(kX, Poly1{{3, Rational(1)}});
  ASSERT_EQ(xx3, (Poly1{{4, Rational(1)}}));
  EXPECT_EQ(apply(kD, xx3), (Poly1{{3, Rational(4)}}));
  EXPECT_EQ(apply(kH, Poly1{{3, Rational(1)}}), (Poly1{{3, Rational(4)}}));
}

TEST(Apply, RepresentationProperty) {
  RandomSource rnd(5);
  for (int k = 0; k < 200; ++k) {
    const Element1 a = rnd.element1(), b = rnd.element1();
    const Poly1 p = rnd.poly1();
    ASSERT_EQ(apply(a * b, p), apply(a, apply(b, p)));
  }
}

TEST(FDegree, Examples) {
  EXPECT_EQ(fdegree(Element1::derivative(3)), -1);
  EXPECT_EQ(fdegree(Element1::e(0, 0) + Element1::e(2, 3)), 3);
  const Element1 e00 = kOne - kI * kD;
  {
    const std::size_t n = 12;
    const TruncMatrix m = TruncMatrix::identity(n) + Rational(-1) * (to_matrix(kI, n) * to_matrix(kD, n));
    ASSERT_EQ(m, to_matrix(Element1::e(0, 0), n));
  }
  EXPECT_EQ(fdegree(e00), 0);
}

TEST(Grading, Components) {
  EXPECT_EQ(grade_component(kX + kD, 1), kI * kH);
  EXPECT_EQ(grade_component(Element1::e(2, 1), 1), Element1::e(2, 1));
  EXPECT_TRUE(grade_component(Element1::e(2, 1), 0).is_zero());
}

TEST(Grading, ConvolutionIdentity) {
  RandomSource rnd(17);
  for (int k = 0; k < 100; ++k) {
    const Element1 a = rnd.element1(), b = rnd.element1();
    const Element1 ab = a * b;
    Element1 total;
    for (Index g = -12; g <= 12; ++g) {
      Element1 conv;
      for (Index i = -6; i <= 6; ++i)
        conv += grade_component(a, i) * grade_component(b, g - i);
      ASSERT_EQ(grade_component(ab, g), conv);
      total += grade_component(ab, g);
    }
    EXPECT_EQ(total, ab);
  }
}

TEST(Transpose, Examples) {
  for (const Element1& a : {kD, Element1::e(1, 2), kH}) {
    const std::size_t n = 8;
    EXPECT_EQ(to_matrix(transpose(a), n), to_matrix(a, n).transposed());
  }
  EXPECT_EQ(transpose(kD), kI);
  EXPECT_EQ(transpose(Element1::e(1, 2)), Element1::e(2, 1));
  EXPECT_EQ(transpose(kH), kH);
}

TEST(Transpose, InvolutiveAntiAutomorphism) {
  RandomSource rnd(23);
  for (int k = 0; k < 200; ++k) {
    const Element1 a = rnd.element1(), b = rnd.element1();
    ASSERT_EQ(transpose(transpose(a)), a);
    ASSERT_EQ(transpose(a * b), transpose(b) * transpose(a));
  }
}

TEST(Quotient, Examples) {
  EXPECT_TRUE(project_b1(Element1::e(5, 7)).is_zero());
  const B1Element dinv = project_b1(kI);
  EXPECT_EQ(dinv, B1Element::monomial(-1, HPoly::constant(1)));
  EXPECT_EQ(project_b1(kD) * dinv, B1Element::monomial(0, HPoly::constant(1)));
  const B1Element d = B1Element::monomial(1, HPoly::constant(1));
  const B1Element h = B1Element::monomial(0, HPoly::monomial(1));
  EXPECT_EQ(b1_mul(d, h), B1Element::monomial(1, HPoly::linear(Rational(1))));
}

TEST(Quotient, HomomorphismAndKernel) {
  RandomSource rnd(31);
  for (int k = 0; k < 200; ++k) {
    const Element1 a = rnd.element1(), b = rnd.element1();
    ASSERT_EQ(project_b1(a * b), project_b1(a) * project_b1(b));
    ASSERT_EQ(project_b1(a).is_zero(), a.graded().empty());
  }
}

TEST(CanonicalForm, MatricesSeparateDistinctElements) {
  RandomSource rnd(41);
  for (int k = 0; k < 100; ++k) {
    const Element1 a = rnd.element1(), b = rnd.element1();
    const std::size_t n = 24;
    EXPECT_EQ(a == b, to_matrix(a, n) == to_matrix(b, n));
    EXPECT_EQ(to_matrix(a - a, n), TruncMatrix(n));
    // idempotent under re-normalisation through the unit
    EXPECT_EQ(a * kOne, a);
    EXPECT_EQ(kOne * a, a);
  }
}

TEST(RingAxioms, RandomSamples) {
  RandomSource rnd(0);
  for (int k = 0; k < 150; ++k) {
    const Element1 a = rnd.element1(), b = rnd.element1(), c = rnd.element1();
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ((a + b) * c, a * c + b * c);
  }
}

}  // namespace
