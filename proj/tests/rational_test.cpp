#include "mwgames/rational.hpp"

#include <gtest/gtest.h>

namespace mwgames {
namespace {

TEST(RationalTest, StoredInLowestTermsWithPositiveDenominator) {
  Rational r(2, -4);
  EXPECT_EQ(r.numerator(), -1);
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(r.to_string(), "-1/2");
  EXPECT_EQ(Rational(6, 3).to_string(), "2");
}

TEST(RationalTest, ParsesIntegersFractionsAndDecimals) {
  EXPECT_EQ(Rational::parse("7"), Rational(7));
  EXPECT_EQ(Rational::parse("-1/2"), Rational(-1, 2));
  EXPECT_EQ(Rational::parse("2/4"), Rational(1, 2));
  EXPECT_EQ(Rational::parse("0.25"), Rational(1, 4));
  EXPECT_EQ(Rational::parse("-1.5"), Rational(-3, 2));
  EXPECT_EQ(Rational::parse(" +3 "), Rational(3));
  EXPECT_EQ(Rational::parse(".5"), Rational(1, 2));
}

TEST(RationalTest, RejectsMalformedText) {
  for (const char* bad : {"", "-", "1/0", "1/", "/2", "a", "1.2.3", "1/2/3", "1e3", "0x10"}) {
    EXPECT_THROW(Rational::parse(bad), std::invalid_argument) << bad;
  }
}

TEST(RationalTest, ArithmeticIsExact) {
  Rational third(1, 3);
  EXPECT_EQ(third + third + third, Rational(1));
  EXPECT_EQ(Rational(1, 2) * Rational(2, 3), third);
  EXPECT_EQ(Rational(1, 2) / Rational(1, 4), Rational(2));
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
  EXPECT_LT(Rational(-1, 2), Rational(1, 3));
}

TEST(RationalTest, SnapFindsSmallestDenominator) {
  Rational r;
  ASSERT_TRUE(Rational::snap(0.25 + 1e-12, 64, 1e-9, &r));
  EXPECT_EQ(r, Rational(1, 4));
  ASSERT_TRUE(Rational::snap(1.0 / 9.0, 64, 1e-9, &r));
  EXPECT_EQ(r, Rational(1, 9));
  EXPECT_FALSE(Rational::snap(0.123456789, 64, 1e-9, &r));
}

TEST(RationalTest, FromDoubleIsExact) {
  EXPECT_EQ(Rational::from_double(0.375), Rational(3, 8));
  EXPECT_EQ(Rational::from_double(-6.0), Rational(-6));
  EXPECT_EQ(Rational::from_double(0.1).to_double(), 0.1);
}

}  // namespace
}  // namespace mwgames
