#include "walshnet/digits.hpp"
#include "walshnet/errors.hpp"
#include "walshnet/oracles.hpp"

#include <gtest/gtest.h>

#include <map>
#include <random>

using namespace walshnet;

namespace {

DigitPoint point1(int base, std::vector<Digit> digits) { return DigitPoint(base, {std::move(digits)}); }

}  // namespace

TEST(Digits, FirstDigitsDiffer) {
  const auto x = point1(2, {0, 0, 0, 0}), y = point1(2, {1, 0, 0, 0});
  const GammaValue g = gamma_scalar(x.coordinate(0), y.coordinate(0));
  EXPECT_FALSE(g.saturated());
  EXPECT_EQ(g.value(), 0);
}

TEST(Digits, QuarterAndThreeEighths) {
  const auto x = point1(2, {0, 1, 0, 0}), y = point1(2, {0, 1, 1, 0});
  EXPECT_EQ(gamma_scalar(x.coordinate(0), y.coordinate(0)), GammaValue::finite(2));
  EXPECT_EQ(oracle::gamma_by_floor(2, 4, x.scaled_coordinate(0), y.scaled_coordinate(0)), 2);
}

TEST(Digits, IdenticalCoordinatesSaturate) {
  const auto x = point1(3, {2, 1, 0});
  const GammaValue g = gamma_scalar(x.coordinate(0), x.coordinate(0));
  EXPECT_TRUE(g.saturated());
  EXPECT_EQ(g, GammaValue::at_least_precision(3));
}

TEST(Digits, MismatchedInputsThrow) {
  const auto x = point1(2, {0, 1}), y = point1(3, {0, 1}), z = point1(2, {0, 1, 0});
  EXPECT_THROW(gamma_scalar(x.coordinate(0), y.coordinate(0)), ConfigError);
  EXPECT_THROW(gamma_scalar(x.coordinate(0), z.coordinate(0)), ConfigError);
  const DigitPoint two(2, {{0, 1}, {1, 1}});
  EXPECT_THROW(gamma_vector(x, two), ConfigError);
}

TEST(Digits, InvalidPointsRejected) {
  EXPECT_THROW(point1(2, {0, 2}), ConfigError);
  EXPECT_THROW(DigitPoint(2, {{0, 1}, {1}}), ConfigError);
  EXPECT_THROW(DigitPoint(2, 2, 2, {0, 1, 1}), ConfigError);
}

TEST(Digits, GammaVectorExamples) {
  const DigitPoint x(2, {{0, 0, 0, 0}, {0, 0, 0, 0}});
  const DigitPoint y(2, {{1, 0, 0, 0}, {1, 0, 0, 0}});
  const GammaVector g = gamma_vector(x, y);
  EXPECT_EQ(g.values(), (std::vector<int>{0, 0}));
  EXPECT_EQ(g.total, 0);
  EXPECT_FALSE(g.saturated);

  const DigitPoint u(2, {{0, 1, 0, 0}, {0, 0, 0, 0}});
  const DigitPoint v(2, {{0, 1, 1, 0}, {1, 0, 0, 0}});
  const GammaVector h = gamma_vector(u, v);
  EXPECT_EQ(h.values(), (std::vector<int>{2, 0}));
  EXPECT_EQ(h.total, 2);

  EXPECT_TRUE(gamma_vector(u, u).saturated);
}

TEST(Digits, RegionVolumes) {
  EXPECT_EQ(volume_C(2, std::vector<int>{1, 1}), ratio(1, 4));
  EXPECT_EQ(volume_D(2, std::vector<int>{0, 0}), ratio(1, 4));
  EXPECT_EQ(volume_C(5, std::vector<int>{0, 0, 0}), 1);
  EXPECT_EQ(volume_D(3, std::vector<int>{1}), ratio(2, 9));
  EXPECT_THROW(volume_C(2, std::vector<int>{-1}), ConfigError);
}

TEST(Digits, RegionMembership) {
  const DigitPoint u(2, {{0, 1, 0, 0}, {0, 0, 0, 0}});
  const DigitPoint v(2, {{0, 1, 1, 0}, {1, 0, 0, 0}});
  const GammaVector g = gamma_vector(u, v);
  EXPECT_TRUE(in_region_D(g, std::vector<int>{2, 0}));
  EXPECT_FALSE(in_region_D(g, std::vector<int>{1, 0}));
  for (int a = 0; a <= 2; ++a) EXPECT_TRUE(in_region_C(g, std::vector<int>{a, 0}));
  EXPECT_FALSE(in_region_C(g, std::vector<int>{3, 0}));
  EXPECT_FALSE(in_region_C(g, std::vector<int>{0, 1}));
  const GammaVector same = gamma_vector(u, u);
  EXPECT_TRUE(in_region_C(same, std::vector<int>{9, 9}));
  EXPECT_FALSE(in_region_D(same, std::vector<int>{4, 4}));
}

TEST(Digits, GammaSymmetricAndMatchesFloorOracle) {
  std::mt19937_64 rng(3);
  for (int b : {2, 3, 5, 7}) {
    std::uniform_int_distribution<int> d(0, b - 1);
    for (int trial = 0; trial < 300; ++trial) {
      std::vector<std::vector<Digit>> xc(2, std::vector<Digit>(5)), yc(2, std::vector<Digit>(5));
      for (int j = 0; j < 2; ++j)
        for (int p = 0; p < 5; ++p) {
          xc[j][p] = static_cast<Digit>(d(rng));
          // Bias towards shared prefixes so that large gammas occur.
          yc[j][p] = rng() % 3 ? xc[j][p] : static_cast<Digit>(d(rng));
        }
      const DigitPoint x(b, xc), y(b, yc);
      const GammaVector g = gamma_vector(x, y);
      EXPECT_EQ(g, gamma_vector(y, x));
      for (int j = 0; j < 2; ++j)
        EXPECT_EQ(g.components[j].value(),
                  oracle::gamma_by_floor(b, 5, x.scaled_coordinate(j), y.scaled_coordinate(j)));
      // D_i membership implies C_k membership for every k <= i.
      if (!g.saturated) {
        const auto i = g.values();
        for (int a = 0; a <= i[0]; ++a)
          for (int c = 0; c <= i[1]; ++c) EXPECT_TRUE(in_region_C(g, std::vector<int>{a, c}));
      }
    }
  }
}

TEST(Digits, VolumeLawByExhaustiveEnumeration) {
  for (int b : {2, 3}) {
    const int P = 3;
    const int side = b * b * b;
    std::map<int, long> counts;
    for (int x = 0; x < side; ++x)
      for (int y = 0; y < side; ++y) {
        const auto px = point1(b, {Digit(x / (b * b)), Digit(x / b % b), Digit(x % b)});
        const auto py = point1(b, {Digit(y / (b * b)), Digit(y / b % b), Digit(y % b)});
        const GammaValue g = gamma_scalar(px.coordinate(0), py.coordinate(0));
        if (!g.saturated()) ++counts[g.value()];
      }
    for (int i = 0; i < P; ++i) {
      const Rational fraction = ratio(counts[i], static_cast<long>(side) * side);
      EXPECT_EQ(fraction, volume_D(b, std::vector<int>{i})) << "b=" << b << " i=" << i;
    }
  }
}

TEST(Digits, DigitStringsRoundTrip) {
  const auto d = coordinate_from_string(16, "0af3");
  EXPECT_EQ(d, (std::vector<Digit>{0, 10, 15, 3}));
  const DigitPoint p(16, {d});
  EXPECT_EQ(coordinate_to_string(p.coordinate(0)), "0af3");
  EXPECT_THROW(coordinate_from_string(2, "012"), std::exception);
  EXPECT_DOUBLE_EQ(point1(2, {1, 1}).to_double(0), 0.75);
}

TEST(Digits, ExactPrecisionCap) {
  EXPECT_EQ(max_exact_precision(2), 63);
  EXPECT_TRUE(is_prime(53));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(51));
}
