#include "walshnet/errors.hpp"
#include "walshnet/nets.hpp"
#include "walshnet/oracles.hpp"
#include "walshnet/pointset_io.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

using namespace walshnet;

TEST(Nets, FaureBase2Dimension1IsIdentity) {
  const GeneratingMatrices g = faure_matrices(2, 2, 1);
  EXPECT_EQ(g.matrix(0), (std::vector<Digit>{1, 0, 0, 1}));
  const PointSet p = generate_points(g, 2, 2);
  std::set<double> xs;
  for (const auto& pt : p) xs.insert(pt.to_double(0));
  EXPECT_EQ(xs, (std::set<double>{0.0, 0.25, 0.5, 0.75}));
  // Index i = a_0 + 2 a_1 maps to digits (a_0, a_1): 0, 1/2, 1/4, 3/4 in index order.
  EXPECT_DOUBLE_EQ(p[1].to_double(0), 0.5);
  EXPECT_DOUBLE_EQ(p[2].to_double(0), 0.25);
  EXPECT_TRUE(verify_net(p, 0).passed);
}

TEST(Nets, FaureBase3SingleDigit) {
  const GeneratingMatrices g = faure_matrices(3, 1, 3);
  for (int j = 0; j < 3; ++j) EXPECT_EQ(g.matrix(j), (std::vector<Digit>{1}));
  const PointSet p = generate_points(g, 3, 1);
  const NetReport r = verify_net(p, 0);
  EXPECT_TRUE(r.passed);
  EXPECT_TRUE(oracle::is_net_by_boxes(p, 0));
}

TEST(Nets, UnsupportedAndInvalidConstructions) {
  EXPECT_THROW(faure_matrices(2, 1, 3), UnsupportedConstruction);
  EXPECT_THROW(faure_matrices(4, 2, 2), ConfigError);
  EXPECT_THROW(faure_matrices(2, 2, 0), ConfigError);
}

TEST(Nets, ReversalCoordinateGivesOneMoreDimension) {
  for (int b : {2, 3})
    for (int m = 1; m <= 5; ++m) {
      const PointSet p = generate_points(faure_reversal_matrices(b, m, b + 1), b, m);
      EXPECT_EQ(p.dimension(), b + 1);
      EXPECT_TRUE(verify_net(p, 0).passed) << b << " " << m;
      EXPECT_TRUE(oracle::is_net_by_boxes(p, 0));
      // The prepended coordinate is i / b^m.
      for (std::size_t i = 0; i < p.size(); ++i) EXPECT_DOUBLE_EQ(p[i].to_double(0), i / std::pow(b, m));
    }
  EXPECT_EQ(faure_reversal_matrices(3, 2, 2).matrix(1), faure_matrices(3, 2, 2).matrix(1));
  EXPECT_THROW(faure_reversal_matrices(2, 2, 4), UnsupportedConstruction);
}

TEST(Nets, SinglePointWhenMIsZero) {
  const PointSet p = generate_points(faure_matrices(2, 0, 2), 2, 0);
  ASSERT_EQ(p.size(), 1u);
  EXPECT_DOUBLE_EQ(p[0].to_double(0), 0.0);
  EXPECT_DOUBLE_EQ(p[0].to_double(1), 0.0);
}

TEST(Nets, FaureNetsAreZeroNets) {
  for (int b : {2, 3, 5, 7}) {
    for (int m = 0; m <= 6; ++m) {
      if (std::pow(b, m) > 20000) continue;
      for (int s = 1; s <= std::min(b, 4); ++s) {
        const PointSet p = generate_points(faure_matrices(b, m, s), b, m);
        EXPECT_TRUE(verify_net(p, 0).passed) << b << " " << m << " " << s;
        EXPECT_EQ(verify_net(p, 0).passed, oracle::is_net_by_boxes(p, 0));
        // One-dimensional projections are (0,m,1)-nets.
        for (int j = 0; j < s; ++j) {
          std::vector<DigitPoint> proj;
          for (const auto& pt : p) proj.emplace_back(b, std::vector<std::vector<Digit>>{
                                                           std::vector<Digit>(pt.coordinate(j).digits.begin(),
                                                                              pt.coordinate(j).digits.end())});
          EXPECT_TRUE(verify_net(PointSet(b, m, 1, 0, proj), 0).passed);
        }
      }
    }
  }
}

TEST(Nets, ParallelMatchesSerialVerification) {
  const PointSet p = generate_points(faure_matrices(5, 4, 4), 5, 4);
  const NetReport a = verify_net(p, 0), b = serial::verify_net(p, 0);
  EXPECT_EQ(a.passed, b.passed);
  EXPECT_EQ(a.checked_shapes, b.checked_shapes);
}

TEST(Nets, CorruptedPointIsCaughtWithWitness) {
  const PointSet p = generate_points(faure_matrices(2, 2, 2), 2, 2);
  std::vector<DigitPoint> pts = p.points();
  pts[0] = pts[1];
  const PointSet bad(2, 2, 2, 0, pts);
  const NetReport r = verify_net(bad, 0);
  ASSERT_FALSE(r.passed);
  ASSERT_TRUE(r.first_violation.has_value());
  EXPECT_NE(r.first_violation->count, r.first_violation->expected);
  EXPECT_EQ(r.to_json().find("\"passed\": false") != std::string::npos, true);
  EXPECT_EQ(serial::verify_net(bad, 0).first_violation->k, r.first_violation->k);
  EXPECT_FALSE(oracle::is_net_by_boxes(bad, 0));
}

TEST(Nets, TEqualsMChecksOnlyTheCount) {
  const PointSet p = generate_points(faure_matrices(2, 2, 2), 2, 2);
  std::vector<DigitPoint> pts(4, p[0]);
  const NetReport r = verify_net(PointSet(2, 2, 2, 2, pts), 2);
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.checked_shapes, 1);
}

TEST(Nets, GenerationIsDeterministic) {
  const auto g = faure_matrices(3, 3, 3);
  EXPECT_EQ(generate_points(g, 3, 3), generate_points(g, 3, 3));
}

TEST(Nets, PointSetValidation) {
  const PointSet p = generate_points(faure_matrices(2, 2, 2), 2, 2);
  std::vector<DigitPoint> three(p.begin(), p.begin() + 3);
  EXPECT_THROW(PointSet(2, 2, 2, 0, three), ConfigError);
}

TEST(Nets, ShapeEnumeration) {
  const auto shapes = enumerate_shapes(2, 2);
  EXPECT_EQ(shapes.size(), 6u);
  EXPECT_TRUE(std::is_sorted(shapes.begin(), shapes.end()));
  EXPECT_EQ(enumerate_shapes(3, 0).size(), 1u);
}

TEST(PointSetIO, RoundTrip) {
  const PointSet p = generate_points(faure_matrices(3, 2, 3, 4), 3, 2);
  const std::string text = format_point_set(p);
  EXPECT_EQ(parse_point_set(text), p);
  EXPECT_EQ(text.substr(0, text.find('\n')), "3 2 3 0 4");
}

TEST(PointSetIO, CommentsAndConcatenation) {
  const PointSet a = generate_points(faure_matrices(2, 1, 2), 2, 1);
  const PointSet b = generate_points(faure_matrices(2, 2, 2), 2, 2);
  std::stringstream ss("# two sets\n\n" + format_point_set(a) + "# next\n" + format_point_set(b));
  const auto sets = read_point_sets(ss);
  ASSERT_EQ(sets.size(), 2u);
  EXPECT_EQ(sets[0], a);
  EXPECT_EQ(sets[1], b);
}

TEST(PointSetIO, MalformedInputs) {
  EXPECT_THROW(parse_point_set("2 2 2 0 2\n00 00\n"), FormatError);          // too few points
  EXPECT_THROW(parse_point_set("2 1 1 0 2\n00\n02\n"), FormatError);         // bad digit
  EXPECT_THROW(parse_point_set("2 1 1 0 2\n00\n1\n"), std::exception);       // ragged precision
  EXPECT_THROW(parse_point_set("banana"), FormatError);
  EXPECT_THROW(load_point_set("/nonexistent/file.txt"), FormatError);
  EXPECT_EQ(parse_digit_point(2, "01 10").to_doubles(), (std::vector<double>{0.25, 0.5}));
}
