#pragma once

// Exact base-b digit representation of points in [0,1)^s, the common-prefix
// function gamma_b and the C_k / D_i pair regions.

#include "walshnet/exact.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace walshnet {

using Digit = std::uint8_t;

constexpr int kMaxBase = 36;

bool is_prime(int n);

/// Largest P with b^P <= 2^63, so one coordinate fits a signed 64-bit integer.
int max_exact_precision(int base);

/// One coordinate of a DigitPoint: digits xi_1, xi_2, ... of sum xi_j b^-j.
struct CoordinateView {
  int base;
  std::span<const Digit> digits;

  int precision() const { return static_cast<int>(digits.size()); }
};

/// A point of [0,1)^s stored as s arrays of P base-b digits. Immutable.
class DigitPoint {
public:
  DigitPoint() = default;

  /// coords[j] holds the P digits of coordinate j; all must share the same length.
  DigitPoint(int base, std::vector<std::vector<Digit>> coords);

  /// Row-major s*P digit buffer.
  DigitPoint(int base, int dimension, int precision, std::vector<Digit> digits);

  int base() const { return base_; }
  int dimension() const { return dimension_; }
  int precision() const { return precision_; }

  CoordinateView coordinate(int j) const {
    return {base_, std::span<const Digit>(digits_).subspan(static_cast<std::size_t>(j) * precision_, precision_)};
  }
  Digit digit(int j, int position) const { return digits_[static_cast<std::size_t>(j) * precision_ + position]; }
  std::span<const Digit> raw() const { return digits_; }

  double to_double(int j) const;
  std::vector<double> to_doubles() const;

  /// Coordinate j as the integer sum xi_d b^(P-d); requires P <= max_exact_precision(b).
  std::int64_t scaled_coordinate(int j) const;

  bool operator==(const DigitPoint&) const = default;

private:
  int base_ = 2;
  int dimension_ = 0;
  int precision_ = 0;
  std::vector<Digit> digits_;
};

/// Exact number of leading common digits, or "agrees on all P stored digits".
class GammaValue {
public:
  static GammaValue finite(int value) { return GammaValue(value, false); }
  static GammaValue at_least_precision(int precision) { return GammaValue(precision, true); }

  /// True when the two coordinates agree on every stored digit (the i = infinity case).
  bool saturated() const { return saturated_; }
  /// The common-prefix length; for a saturated value this is the precision P.
  int value() const { return value_; }

  bool operator==(const GammaValue&) const = default;

private:
  GammaValue(int value, bool saturated) : value_(value), saturated_(saturated) {}

  int value_;
  bool saturated_;
};

struct GammaVector {
  std::vector<GammaValue> components;
  /// Sum of the components; meaningless when `saturated` is set.
  int total = 0;
  bool saturated = false;

  std::vector<int> values() const;
  bool operator==(const GammaVector&) const = default;
};

GammaValue gamma_scalar(CoordinateView x, CoordinateView y);
GammaVector gamma_vector(const DigitPoint& x, const DigitPoint& y);

/// (x, y) in C_k: gamma >= k componentwise. Saturated components satisfy every k.
bool in_region_C(const GammaVector& gamma, std::span<const int> k);
/// (x, y) in D_i: gamma == i componentwise. Saturated pairs lie in no D_i.
bool in_region_D(const GammaVector& gamma, std::span<const int> i);

/// vol(C_k^s) = b^-k.
Rational volume_C(int base, std::span<const int> k);
/// vol(D_i^s) = (b-1)^s / b^(s+i).
Rational volume_D(int base, std::span<const int> i);

/// Digit string of one coordinate ("0-9a-z").
std::string coordinate_to_string(CoordinateView coordinate);
std::vector<Digit> coordinate_from_string(int base, const std::string& text);

char digit_char(Digit d);

}  // namespace walshnet
