// Copyright 2026 The ufpath Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ufp/rational.h"

#include <gtest/gtest.h>

#include "fixtures.h"
#include "ufp/errors.h"

namespace ufp {
namespace {

TEST(RationalTest, ParsesFractionsAndIntegers) {
  EXPECT_EQ(ParseRational("3/2"), Rational(3, 2));
  EXPECT_EQ(ParseRational("-4/6"), Rational(-2, 3));
  EXPECT_EQ(ParseRational("+7"), Rational(7));
  EXPECT_EQ(ParseRational("0"), Rational(0));
}

TEST(RationalTest, RejectsMalformedText) {
  EXPECT_THROW(ParseRational(""), InputError);
  EXPECT_THROW(ParseRational("1/0"), InputError);
  EXPECT_THROW(ParseRational("1.5"), InputError);
  EXPECT_THROW(ParseRational("a/2"), InputError);
  EXPECT_THROW(ParseRational("1/-2"), InputError);
}

TEST(RationalTest, FormatsCanonicalAndFraction) {
  EXPECT_EQ(ToString(Rational(17)), "17");
  EXPECT_EQ(ToString(Rational(-3, 2)), "-3/2");
  EXPECT_EQ(ToFractionString(Rational(17)), "17/1");
  EXPECT_EQ(ToFractionString(testing::Frac(6, 4)), "3/2");
}

TEST(RationalTest, FloorAndCeilRoundTowardInfinities) {
  EXPECT_EQ(Floor(Rational(7, 2)), 3);
  EXPECT_EQ(Ceil(Rational(7, 2)), 4);
  EXPECT_EQ(Floor(Rational(-7, 2)), -4);
  EXPECT_EQ(Ceil(Rational(-7, 2)), -3);
  EXPECT_EQ(Floor(Rational(5)), 5);
  EXPECT_EQ(Ceil(Rational(5)), 5);
}

TEST(RationalTest, PowBinomialAndConversions) {
  EXPECT_EQ(Pow(Rational(1, 2), 3), Rational(1, 8));
  EXPECT_EQ(Pow(Rational(5), 0), Rational(1));
  EXPECT_EQ(Binomial(10, 3), 120);
  EXPECT_TRUE(IsInteger(testing::Frac(4, 2)));
  EXPECT_FALSE(IsInteger(Rational(1, 2)));
  EXPECT_EQ(ToInt64(BigInt(42)), 42);
  BigInt huge;
  mpz_ui_pow_ui(huge.get_mpz_t(), 10, 30);
  EXPECT_THROW(ToInt64(huge), PreconditionError);
}

}  // namespace
}  // namespace ufp
