#include "walshnet/nets.hpp"

#include "walshnet/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <limits>

namespace walshnet {

namespace {

constexpr long kMaxPoints = 1L << 26;

long checked_power(int base, int exponent) {
  long n = 1;
  for (int i = 0; i < exponent; ++i) {
    n *= base;
    if (n > kMaxPoints) throw ConfigError("b^m exceeds the supported point count (2^26)");
  }
  return n;
}

}  // namespace

GeneratingMatrices::GeneratingMatrices(int base, int m, int precision, std::vector<std::vector<Digit>> matrices)
    : base_(base), m_(m), precision_(precision), matrices_(std::move(matrices)) {
  if (!is_prime(base)) throw ConfigError("base " + std::to_string(base) + " is not prime");
  if (m < 0 || precision < 0) throw ConfigError("m and precision must be non-negative");
  if (matrices_.empty()) throw ConfigError("need at least one generating matrix");
  for (const auto& mat : matrices_) {
    if (mat.size() != static_cast<std::size_t>(precision) * m) throw ConfigError("generating matrix has wrong size");
    for (Digit d : mat)
      if (d >= base) throw ConfigError("generating matrix entry out of range");
  }
}

PointSet::PointSet(int base, int m, int dimension, int claimed_t, std::vector<DigitPoint> points)
    : base_(base), m_(m), dimension_(dimension), claimed_t_(claimed_t), points_(std::move(points)) {
  if (m < 0) throw ConfigError("m must be non-negative");
  if (claimed_t < 0 || claimed_t > std::max(m, 0)) throw ConfigError("claimed t must lie in [0, m]");
  const long n = checked_power(base, m);
  if (static_cast<long>(points_.size()) != n)
    throw ConfigError("point set holds " + std::to_string(points_.size()) + " points, expected b^m = " + std::to_string(n));
  precision_ = points_.front().precision();
  for (const auto& p : points_) {
    if (p.base() != base || p.dimension() != dimension || p.precision() != precision_)
      throw ConfigError("points must share base, dimension and precision");
  }
}

GeneratingMatrices faure_matrices(int base, int m, int s, int precision) {
  if (!is_prime(base)) throw ConfigError("base " + std::to_string(base) + " is not prime");
  if (s < 1) throw ConfigError("dimension must be at least one");
  if (s > base) throw UnsupportedConstruction("Faure nets need s <= b (got s=" + std::to_string(s) + ", b=" + std::to_string(base) + ")");
  if (precision == 0) precision = m;
  if (precision < m) throw ConfigError("precision must be at least m");
  std::vector<std::vector<Digit>> mats;
  for (int j = 0; j < s; ++j) {
    std::vector<Digit> mat(static_cast<std::size_t>(precision) * m, 0);
    for (int row = 0; row < precision; ++row) {
      for (int col = row; col < m; ++col) {
        // C(col,row) * j^(col-row) mod b; 0^0 = 1 gives the identity for j = 0.
        BigInt v = binomial(col, row) * ipow(j, static_cast<unsigned long>(col - row));
        mat[static_cast<std::size_t>(row) * m + col] = static_cast<Digit>(mpz_fdiv_ui(v.get_mpz_t(), base));
      }
    }
    mats.push_back(std::move(mat));
  }
  return GeneratingMatrices(base, m, precision, std::move(mats));
}

GeneratingMatrices faure_reversal_matrices(int base, int m, int s, int precision) {
  if (s != base + 1) return faure_matrices(base, m, s, precision);
  const GeneratingMatrices f = faure_matrices(base, m, base, precision);
  std::vector<std::vector<Digit>> mats;
  for (int j = 0; j < base; ++j) mats.push_back(f.matrix(j));
  // Digit p of i/b^m is digit m-1-p of i.
  std::vector<Digit> reversal(static_cast<std::size_t>(f.precision()) * m, 0);
  for (int row = 0; row < m; ++row) reversal[static_cast<std::size_t>(row) * m + (m - 1 - row)] = 1;
  mats.insert(mats.begin(), std::move(reversal));
  return GeneratingMatrices(base, m, f.precision(), std::move(mats));
}

PointSet generate_points(const GeneratingMatrices& g, int base, int m) {
  if (g.base() != base || g.m() != m) throw ConfigError("generating matrices do not match (b, m)");
  const long n = checked_power(base, m);
  const int s = g.dimension();
  const int precision = std::max(g.precision(), 1);
  std::vector<DigitPoint> points;
  points.reserve(n);
  std::vector<int> index_digits(m);
  for (long i = 0; i < n; ++i) {
    long rest = i;
    for (int c = 0; c < m; ++c) {
      index_digits[c] = static_cast<int>(rest % base);
      rest /= base;
    }
    std::vector<Digit> digits(static_cast<std::size_t>(s) * precision, 0);
    for (int j = 0; j < s; ++j) {
      for (int row = 0; row < g.precision(); ++row) {
        int acc = 0;
        for (int c = 0; c < m; ++c) acc += g.entry(j, row, c) * index_digits[c];
        digits[static_cast<std::size_t>(j) * precision + row] = static_cast<Digit>(acc % base);
      }
    }
    points.emplace_back(base, s, precision, std::move(digits));
  }
  return PointSet(base, m, s, 0, std::move(points));
}

namespace {

void extend_shapes(std::vector<int>& k, int j, int remaining, std::vector<std::vector<int>>& out) {
  if (j == static_cast<int>(k.size())) {
    out.push_back(k);
    return;
  }
  for (int v = 0; v <= remaining; ++v) {
    k[j] = v;
    extend_shapes(k, j + 1, remaining - v, out);
  }
  k[j] = 0;
}

}  // namespace

std::vector<std::vector<int>> enumerate_shapes(int s, int max_total) {
  std::vector<std::vector<int>> out;
  if (max_total < 0) return out;
  std::vector<int> k(s, 0);
  extend_shapes(k, 0, max_total, out);
  return out;
}

namespace {

std::optional<NetViolation> check_shape(const PointSet& points, const std::vector<int>& k) {
  const int b = points.base();
  int total = 0;
  for (int v : k) {
    if (v > points.precision())
      throw PrecisionError("elementary interval needs " + std::to_string(v) + " digits", v);
    total += v;
  }
  const long cells = checked_power(b, total);
  const long expected = checked_power(b, points.m() - total);
  std::vector<long> counts(cells, 0);
  for (const auto& p : points) {
    long key = 0;
    for (int j = 0; j < points.dimension(); ++j)
      for (int d = 0; d < k[j]; ++d) key = key * b + p.digit(j, d);
    ++counts[key];
  }
  for (long key = 0; key < cells; ++key) {
    if (counts[key] == expected) continue;
    NetViolation v;
    v.k = k;
    v.count = counts[key];
    v.expected = expected;
    v.interval.assign(k.size(), 0);
    long rest = key;
    for (int j = static_cast<int>(k.size()) - 1; j >= 0; --j) {
      long width = checked_power(b, k[j]);
      v.interval[j] = rest % width;
      rest /= width;
    }
    return v;
  }
  return std::nullopt;
}

NetReport make_report(int t, long checked, std::optional<NetViolation> violation) {
  NetReport r;
  r.t = t;
  r.checked_shapes = checked;
  r.passed = !violation.has_value();
  r.first_violation = std::move(violation);
  return r;
}

}  // namespace

NetReport serial::verify_net(const PointSet& points, int t) {
  auto shapes = enumerate_shapes(points.dimension(), points.m() - t);
  for (const auto& k : shapes)
    if (auto v = check_shape(points, k)) return make_report(t, static_cast<long>(shapes.size()), std::move(v));
  return make_report(t, static_cast<long>(shapes.size()), std::nullopt);
}

NetReport verify_net(const PointSet& points, int t) {
  auto shapes = enumerate_shapes(points.dimension(), points.m() - t);
  const long count = static_cast<long>(shapes.size());
  std::vector<std::optional<NetViolation>> found(shapes.size());
  long first_bad = std::numeric_limits<long>::max();
  bool precision_failure = false;
#pragma omp parallel for schedule(dynamic) reduction(min : first_bad) reduction(|| : precision_failure)
  for (long i = 0; i < count; ++i) {
    try {
      found[i] = check_shape(points, shapes[i]);
      if (found[i]) first_bad = std::min(first_bad, i);
    } catch (const PrecisionError&) {
      precision_failure = true;
    }
  }
  // Exceptions cannot cross the parallel region; rerun serially to surface them.
  if (precision_failure) return serial::verify_net(points, t);
  if (first_bad == std::numeric_limits<long>::max()) return make_report(t, count, std::nullopt);
  return make_report(t, count, std::move(found[first_bad]));
}

std::string NetReport::to_json() const {
  nlohmann::json j;
  j["passed"] = passed;
  j["t"] = t;
  j["checked_shapes"] = checked_shapes;
  if (first_violation) {
    j["violation"] = {{"k", first_violation->k},
                      {"interval", first_violation->interval},
                      {"count", first_violation->count},
                      {"expected", first_violation->expected}};
  } else {
    j["violation"] = nullptr;
  }
  return j.dump(2);
}

}  // namespace walshnet
