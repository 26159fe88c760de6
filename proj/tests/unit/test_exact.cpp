#include "walshnet/exact.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

using namespace walshnet;

TEST(Exact, BinomialOutOfRangeIsZero) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(5, 6), 0);
  EXPECT_EQ(binomial(5, -1), 0);
  EXPECT_EQ(binomial(0, 0), 1);
}

TEST(Exact, PowersAndFactorial) {
  EXPECT_EQ(ipow(3, 4), 81);
  EXPECT_EQ(rpow(ratio(2, 3), -2), ratio(9, 4));
  EXPECT_EQ(rpow(ratio(-1, 2), 3), ratio(-1, 8));
  EXPECT_EQ(factorial(6), 720);
  EXPECT_THROW(rpow(Rational(0), -1), std::domain_error);
}

TEST(Exact, RatioIsCanonical) {
  const Rational half = ratio(5, 10);
  EXPECT_EQ(half.get_num(), 1);
  EXPECT_EQ(half.get_den(), 2);
  EXPECT_TRUE(2 * half == 1);
  EXPECT_EQ(ratio(3, -6), ratio(-1, 2));
  EXPECT_THROW(ratio(1, 0), std::domain_error);
}

TEST(Exact, ParseRational) {
  EXPECT_EQ(parse_rational("3/4"), ratio(3, 4));
  EXPECT_EQ(parse_rational("6/8"), ratio(3, 4));
  EXPECT_EQ(parse_rational("-2"), -2);
  EXPECT_EQ(parse_rational("0.15"), ratio(3, 20));
  EXPECT_EQ(parse_rational("-1.5e-3"), ratio(-3, 2000));
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
}

TEST(Exact, DoubleRoundTrip) {
  for (double v : {0.0, 0.15, -3.75, 1e-300, 12345.678}) {
    const Rational r = from_double(v);
    EXPECT_EQ(to_double(r), v);
  }
  EXPECT_EQ(to_string(ratio(-6, 4)), "-3/2");
  EXPECT_EQ(to_string(Rational(7)), "7");
}

TEST(Exact, PolynomialArithmetic) {
  // (1 + x)(1 - x) = 1 - x^2
  const RationalPolynomial a({1, 1}), b({1, -1});
  const RationalPolynomial prod = a * b;
  EXPECT_EQ(prod, RationalPolynomial({1, 0, -1}));
  EXPECT_EQ(prod(ratio(1, 2)), ratio(3, 4));
  EXPECT_EQ(prod.derivative(), RationalPolynomial({0, -2}));
  EXPECT_EQ((a + b), RationalPolynomial({2}));
  EXPECT_EQ(a - a, RationalPolynomial());
  EXPECT_EQ((a * b).degree(), 2);
}
