#pragma once

// Reference computations that reach the same quantities as the library by a
// different route. Slow by design; used by the tests and the verify suite.

#include "walshnet/counting.hpp"
#include "walshnet/exact.hpp"
#include "walshnet/nets.hpp"
#include "walshnet/walsh.hpp"

#include <cstdint>
#include <vector>

namespace walshnet::oracle {

/// max{ i <= P : floor(b^i x) == floor(b^i y) } from the integer coordinates x*b^P.
int gamma_by_floor(int base, int precision, std::int64_t x_scaled, std::int64_t y_scaled);

/// Points per elementary box of shape k, indexed in mixed radix over the box corners
/// floor(b^k_j x_j); computed from scaled integer coordinates.
std::vector<std::uint64_t> box_counts(const PointSet& points, const std::vector<int>& k);

/// True when every box of every shape with |k| = m - t holds b^t points.
bool is_net_by_boxes(const PointSet& points, int t);

/// I_x(a, b) as the exact integral of t^(a-1) (1-t)^(b-1) over [0, x] divided by the one over [0, 1].
Rational inc_beta_by_integration(long a, long b, const Rational& x);

/// 2F1(a, b; c; z) by its power series in long double, |z| < 1.
long double hyp2f1_series(long double a, long double b, long double c, long double z);

/// N(i) b^(s+|i|) / (n(n-1)(b-1)^s), recomputed from the raw counts.
Rational psi_on_region(const PairProfile& profile, const std::vector<int>& i);

struct GaussianRational {
  Rational re, im;
  bool operator==(const GaussianRational&) const = default;
};

/// Exact double integral of (psi(x,y) - 1) f(x) conj(f(y)) over [0,1)^(2s), summing
/// cell pairs of the b^-K digit grid where f is constant. Base 2 only, so that every
/// Walsh value is +-1 and the result stays rational.
GaussianRational covariance_by_grid(const WalshPolynomial& f, const PairProfile& profile);

/// Same grid sum with f = 1: the total mass of psi, which must be 1.
Rational pdf_mass_by_grid(const PairProfile& profile, int resolution);

}  // namespace walshnet::oracle
