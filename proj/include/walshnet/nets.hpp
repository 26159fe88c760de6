#pragma once

// Digital (0,m,s)-nets in prime base b and exhaustive (t,m,s) equidistribution checks.

#include "walshnet/digits.hpp"

#include <optional>
#include <string>
#include <vector>

namespace walshnet {

/// s generating matrices of size P x m over Z_b, row-major.
class GeneratingMatrices {
public:
  GeneratingMatrices(int base, int m, int precision, std::vector<std::vector<Digit>> matrices);

  int base() const { return base_; }
  int m() const { return m_; }
  int precision() const { return precision_; }
  int dimension() const { return static_cast<int>(matrices_.size()); }

  Digit entry(int j, int row, int col) const { return matrices_[j][static_cast<std::size_t>(row) * m_ + col]; }
  const std::vector<Digit>& matrix(int j) const { return matrices_[j]; }

private:
  int base_;
  int m_;
  int precision_;
  std::vector<std::vector<Digit>> matrices_;
};

/// b^m points of [0,1)^s sharing base and precision, with the t value the producer claims.
class PointSet {
public:
  PointSet(int base, int m, int dimension, int claimed_t, std::vector<DigitPoint> points);

  int base() const { return base_; }
  int m() const { return m_; }
  int dimension() const { return dimension_; }
  int claimed_t() const { return claimed_t_; }
  int precision() const { return precision_; }
  std::size_t size() const { return points_.size(); }

  const DigitPoint& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<DigitPoint>& points() const { return points_; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  bool operator==(const PointSet&) const = default;

private:
  int base_;
  int m_;
  int dimension_;
  int claimed_t_;
  int precision_;
  std::vector<DigitPoint> points_;
};

/// Faure construction: matrix j is the (j-1)-th power of the upper-triangular Pascal
/// matrix mod b. Requires b prime and 1 <= s <= b. `precision` defaults to m rows.
GeneratingMatrices faure_matrices(int base, int m, int s, int precision = 0);

/// Faure matrices with the digit-reversal matrix (the coordinate i/b^m) prepended when
/// s = b + 1, which gives a (0,m,b+1)-net; otherwise identical to faure_matrices.
GeneratingMatrices faure_reversal_matrices(int base, int m, int s, int precision = 0);

/// Point i gets coordinate-j digits C_j * (base-b digit vector of i) mod b.
PointSet generate_points(const GeneratingMatrices& matrices, int base, int m);

struct NetViolation {
  std::vector<int> k;         // interval shape
  std::vector<long> interval; // a_j of the offending box
  long count = 0;
  long expected = 0;
};

struct NetReport {
  bool passed = true;
  int t = 0;
  long checked_shapes = 0;
  std::optional<NetViolation> first_violation;

  std::string to_json() const;
};

/// All k in N^s with k_1 + ... + k_s <= max_total, in lexicographic order.
std::vector<std::vector<int>> enumerate_shapes(int s, int max_total);

/// Counts points in every elementary k-interval for |k| <= m - t. The first
/// violation (in enumerate_shapes order) is reported. Parallel over shapes.
NetReport verify_net(const PointSet& points, int t);

namespace serial {
NetReport verify_net(const PointSet& points, int t);
}  // namespace serial

}  // namespace walshnet
