#include "walshnet/covkernel.hpp"
#include "walshnet/nets.hpp"
#include "walshnet/oracles.hpp"
#include "walshnet/verify.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace walshnet;

TEST(Verify, AllSuitesPass) {
  const VerifyReport r = verify_all();
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.suites.size(), 4u);
  for (const auto& s : r.suites) {
    EXPECT_GT(s.checks, 0) << s.name;
    for (const auto& f : s.failures) ADD_FAILURE() << s.name << ": " << f.identity << " " << f.detail;
  }
}

TEST(Verify, FlippedPsiSignIsCaught) {
  VerifyOptions opts = default_verify_options();
  opts.psi = [](int b, int s, int r, int c) { return -Psi(b, s, r, c); };
  opts.suites = {"covkernel"};
  const VerifyReport r = verify_all(opts);
  ASSERT_FALSE(r.passed());
  ASSERT_EQ(r.suites.size(), 1u);
  EXPECT_FALSE(r.suites[0].failures.front().identity.empty());
  EXPECT_NE(r.to_json().find("\"passed\": false"), std::string::npos);
}

TEST(Oracles, FloorGamma) {
  EXPECT_EQ(oracle::gamma_by_floor(2, 4, 4, 6), 2);
  EXPECT_EQ(oracle::gamma_by_floor(2, 4, 0, 8), 0);
  EXPECT_EQ(oracle::gamma_by_floor(3, 3, 5, 5), 3);
}

TEST(Oracles, BoxCounts) {
  const PointSet p = generate_points(faure_matrices(2, 2, 2), 2, 2);
  const auto c = oracle::box_counts(p, {1, 1});
  EXPECT_EQ(c, (std::vector<std::uint64_t>{1, 1, 1, 1}));
}

TEST(Oracles, IncBetaByIntegration) {
  EXPECT_EQ(oracle::inc_beta_by_integration(1, 2, ratio(1, 4)), ratio(7, 16));
  EXPECT_EQ(oracle::inc_beta_by_integration(3, 3, ratio(1, 2)), ratio(1, 2));
}

TEST(Oracles, HypergeometricSeries) {
  // 2F1(1,1;2;z) = -log(1-z)/z.
  EXPECT_NEAR(static_cast<double>(oracle::hyp2f1_series(1, 1, 2, 0.5L)), 2 * std::log(2.0), 1e-15);
}

TEST(Oracles, PsiOnRegion) {
  const PairProfile p = closed_form_profile(2, 2, 2);
  EXPECT_EQ(oracle::psi_on_region(p, {0, 0}), ratio(4, 3));
  EXPECT_EQ(oracle::psi_on_region(p, {1, 0}), ratio(8, 3));
}
