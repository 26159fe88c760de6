#include "walshnet/errors.hpp"
#include "walshnet/walsh.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace walshnet;

namespace {

DigitPoint point1(int base, std::vector<Digit> digits) { return DigitPoint(base, {std::move(digits)}); }

// All b^K cells of [0,1) as K-digit points.
std::vector<DigitPoint> cells(int base, int K) {
  std::vector<DigitPoint> out;
  int side = 1;
  for (int i = 0; i < K; ++i) side *= base;
  for (int c = 0; c < side; ++c) {
    std::vector<Digit> d(K);
    for (int p = K - 1, v = c; p >= 0; --p, v /= base) d[p] = static_cast<Digit>(v % base);
    out.push_back(point1(base, d));
  }
  return out;
}

}  // namespace

TEST(Walsh, DigitLengths) {
  EXPECT_EQ(digit_length(0, 2), 0);
  EXPECT_EQ(digit_length(1, 2), 1);
  EXPECT_EQ(digit_length(3, 2), 2);
  EXPECT_EQ(digit_length(9, 3), 3);
  const WalshIndex l(2, {2, 0, 5});
  EXPECT_EQ(l.digit_lengths(), (std::vector<int>{2, 0, 3}));
  EXPECT_EQ(l.support(), (std::vector<int>{1, 0, 1}));
  EXPECT_EQ(l.support_size(), 2);
  EXPECT_EQ(l.total_length(), 5);
  EXPECT_FALSE(l.is_zero());
  EXPECT_TRUE(WalshIndex(3, {0, 0}).is_zero());
}

TEST(Walsh, ScalarExponents) {
  EXPECT_EQ(wal_exponent(0, point1(2, {1, 0}).coordinate(0)), 0);
  EXPECT_EQ(wal_exponent(1, point1(2, {1, 1}).coordinate(0)), 1);
  EXPECT_EQ(wal_exponent(1, point1(3, {2}).coordinate(0)), 2);
  EXPECT_EQ(wal_eval(WalshIndex(2, {1}), point1(2, {1, 1})), std::complex<double>(-1.0, 0.0));
}

TEST(Walsh, ProductOverCoordinates) {
  const DigitPoint x(2, {{1, 1}, {1, 0}});
  EXPECT_EQ(wal_eval(WalshIndex(2, {1, 1}), x), std::complex<double>(1.0, 0.0));
  EXPECT_EQ(wal_eval(WalshIndex(2, {0, 0}), x), std::complex<double>(1.0, 0.0));
}

TEST(Walsh, InsufficientPrecisionNamesDigits) {
  try {
    wal_exponent(4, point1(2, {1, 0}).coordinate(0));
    FAIL() << "expected PrecisionError";
  } catch (const PrecisionError& e) {
    EXPECT_EQ(e.required_digits(), 3);
    EXPECT_NE(std::string(e.what()).find("3 digits"), std::string::npos);
  }
  EXPECT_THROW(wal_exponent(WalshIndex(2, {1}), DigitPoint(2, {{0}, {1}})), ConfigError);
}

TEST(Walsh, ProductAndConjugateRules) {
  std::mt19937_64 rng(5);
  for (int b : {2, 3, 5}) {
    std::uniform_int_distribution<std::uint64_t> idx(0, 200);
    std::uniform_int_distribution<int> dig(0, b - 1);
    for (int trial = 0; trial < 100; ++trial) {
      const std::uint64_t k = idx(rng), l = idx(rng);
      std::vector<Digit> d(8);
      for (auto& v : d) v = static_cast<Digit>(dig(rng));
      const auto x = point1(b, d).coordinate(0);
      EXPECT_EQ((wal_exponent(k, x) + wal_exponent(l, x)) % b, wal_exponent(digit_add(k, l, b), x));
      EXPECT_EQ(((wal_exponent(k, x) - wal_exponent(l, x)) % b + b) % b, wal_exponent(digit_sub(k, l, b), x));
    }
  }
}

TEST(Walsh, OrthonormalOnDyadicCells) {
  const auto grid = cells(2, 3);
  for (std::uint64_t k = 0; k < 8; ++k)
    for (std::uint64_t l = 0; l < 8; ++l) {
      std::complex<double> acc;
      for (const auto& x : grid) acc += wal_eval(WalshIndex(2, {k}), x) * std::conj(wal_eval(WalshIndex(2, {l}), x));
      EXPECT_EQ(acc / 8.0, std::complex<double>(k == l ? 1.0 : 0.0, 0.0));
    }
}

TEST(Walsh, ParsevalOnCells) {
  DecaySpec spec;
  spec.kind = DecayKind::per_index;
  spec.x = 0.3;
  spec.k_max = 2;
  spec.seed = 4;
  for (int b : {2, 3}) {
    const WalshPolynomial f = random_decay_polynomial(b, 1, spec);
    double mean_sq = 0;
    const auto grid = cells(b, 2);
    for (const auto& x : grid) mean_sq += std::norm(f(x));
    mean_sq /= static_cast<double>(grid.size());
    const double mass = to_double(f.nonconstant_mass()) + std::norm(f.integral());
    EXPECT_NEAR(mean_sq, mass, 1e-12);
  }
}

TEST(Walsh, ShellEnumeration) {
  const auto one = enumerate_L_k(2, std::vector<int>{1});
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].components(), (std::vector<std::uint64_t>{1}));

  const auto two = enumerate_L_k(2, std::vector<int>{2, 1});
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0].components(), (std::vector<std::uint64_t>{2, 1}));
  EXPECT_EQ(two[1].components(), (std::vector<std::uint64_t>{3, 1}));
  EXPECT_EQ(L_k_size(2, std::vector<int>{2, 1}), 2);

  const auto three = enumerate_L_k(3, std::vector<int>{1, 0});
  ASSERT_EQ(three.size(), 2u);
  EXPECT_EQ(three[1].components(), (std::vector<std::uint64_t>{2, 0}));
}

TEST(Walsh, ShellsPartitionIndices) {
  for (int b : {2, 3}) {
    std::set<std::vector<std::uint64_t>> seen;
    for (int k0 = 0; k0 <= 3; ++k0)
      for (int k1 = 0; k1 <= 3; ++k1)
        for (const auto& l : enumerate_L_k(b, std::vector<int>{k0, k1})) EXPECT_TRUE(seen.insert(l.components()).second);
    const std::uint64_t side = static_cast<std::uint64_t>(b * b * b);
    EXPECT_EQ(seen.size(), side * side);
    for (std::uint64_t a = 0; a < side; ++a)
      for (std::uint64_t c = 0; c < side; ++c) EXPECT_TRUE(seen.count({a, c}));
  }
}

TEST(Walsh, PerIndexConstantWhenKMaxIsZero) {
  DecaySpec spec;
  spec.kind = DecayKind::per_index;
  spec.k_max = 0;
  spec.alpha = 4.0;
  const WalshPolynomial f = random_decay_polynomial(2, 2, spec);
  ASSERT_EQ(f.terms().size(), 1u);
  EXPECT_NEAR(std::abs(f.integral()), 2.0, 1e-15);
  EXPECT_EQ(f.nonconstant_mass(), 0);
}

TEST(Walsh, PerIndexAndPerShellAgreeOnShellWeight) {
  DecaySpec idx;
  idx.kind = DecayKind::per_index;
  idx.x = 0.25;
  idx.k_max = 1;
  DecaySpec shell = idx;
  shell.kind = DecayKind::per_shell;
  shell.a = ratio(1, 2);
  const auto fi = random_decay_polynomial(2, 1, idx).shell_masses();
  const auto fs = random_decay_polynomial(2, 1, shell).shell_masses();
  EXPECT_NEAR(to_double(fi.at({1})), 0.25, 1e-15);
  EXPECT_NEAR(to_double(fs.at({1})), 0.25, 1e-15);
}

TEST(Walsh, PerShellPreservesShellTotals) {
  DecaySpec spec;
  spec.a = ratio(2, 3);
  spec.x = 0.2;
  spec.alpha = 1.5;
  spec.k_max = 7;
  spec.seed = 11;
  const WalshPolynomial f = random_decay_polynomial(3, 2, spec);
  for (const auto& [k, mass] : f.shell_masses()) {
    const int r = (k[0] > 0) + (k[1] > 0);
    const double expected = std::pow(2.0 / 3.0, r) * std::pow(0.6, k[0] + k[1]) * 1.5;
    EXPECT_NEAR(to_double(mass), expected, 1e-13 * std::max(1.0, expected));
  }
  // Large shells are capped at 256 indices.
  std::map<std::vector<int>, int> per_shell;
  for (const auto& t : f.terms()) ++per_shell[t.index.digit_lengths()];
  for (const auto& [k, count] : per_shell) EXPECT_LE(count, static_cast<int>(kShellSupportCap));
  EXPECT_EQ(per_shell.at({4, 3}), static_cast<int>(kShellSupportCap));
}

TEST(Walsh, DecayDeterministicAndValidated) {
  DecaySpec spec;
  spec.seed = 99;
  const auto a = random_decay_polynomial(2, 2, spec), b = random_decay_polynomial(2, 2, spec);
  EXPECT_EQ(a.to_json(), b.to_json());
  DecaySpec bad = spec;
  bad.x = 0.5;
  EXPECT_THROW(random_decay_polynomial(2, 2, bad), ConfigError);
  bad = spec;
  bad.a = 2;
  EXPECT_THROW(random_decay_polynomial(2, 2, bad), ConfigError);
  bad = spec;
  bad.alpha = 0;
  EXPECT_THROW(random_decay_polynomial(2, 2, bad), ConfigError);
  EXPECT_THROW(parse_decay_kind("bogus"), ConfigError);
  EXPECT_EQ(parse_decay_kind("per-index"), DecayKind::per_index);
}

TEST(Walsh, PolynomialJsonRoundTrip) {
  WalshPolynomial f(3, 2);
  f.add(WalshIndex(3, {1, 2}), {0.5, -0.25});
  f.add(WalshIndex(3, {0, 0}), {1.0, 0.0});
  f.add(WalshIndex(3, {1, 2}), {0.5, 0.0});
  f.metadata()["note"] = "test";
  EXPECT_EQ(f.terms().size(), 2u);
  EXPECT_EQ(f.coefficient(WalshIndex(3, {1, 2})), std::complex<double>(1.0, -0.25));
  const WalshPolynomial g = WalshPolynomial::from_json(f.to_json());
  EXPECT_EQ(g.to_json(), f.to_json());
  EXPECT_EQ(g.max_digit_length(), 1);
  EXPECT_THROW(WalshPolynomial::from_json("{\"base\": 2}"), FormatError);
  EXPECT_THROW(f.add(WalshIndex(2, {1, 1}), 1.0), ConfigError);
}
