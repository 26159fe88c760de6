#include "walshnet/digits.hpp"

#include "walshnet/errors.hpp"

#include <cmath>
#include <limits>

namespace walshnet {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

int max_exact_precision(int base) {
  int p = 0;
  unsigned __int128 acc = 1;
  const unsigned __int128 limit = static_cast<unsigned __int128>(1) << 63;
  while (acc * static_cast<unsigned>(base) <= limit) {
    acc *= static_cast<unsigned>(base);
    ++p;
  }
  return p;
}

namespace {

void check_base(int base) {
  if (base < 2 || base > kMaxBase) throw ConfigError("base must lie in [2, 36], got " + std::to_string(base));
}

}  // namespace

DigitPoint::DigitPoint(int base, std::vector<std::vector<Digit>> coords)
    : base_(base), dimension_(static_cast<int>(coords.size())) {
  check_base(base);
  if (coords.empty()) throw ConfigError("a point needs at least one coordinate");
  precision_ = static_cast<int>(coords.front().size());
  if (precision_ < 1) throw ConfigError("precision must be at least one digit");
  digits_.reserve(coords.size() * precision_);
  for (const auto& c : coords) {
    if (static_cast<int>(c.size()) != precision_) throw ConfigError("coordinates must share one precision");
    for (Digit d : c) {
      if (d >= base) throw ConfigError("digit " + std::to_string(d) + " out of range for base " + std::to_string(base));
      digits_.push_back(d);
    }
  }
}

DigitPoint::DigitPoint(int base, int dimension, int precision, std::vector<Digit> digits)
    : base_(base), dimension_(dimension), precision_(precision), digits_(std::move(digits)) {
  check_base(base);
  if (dimension < 1 || precision < 1) throw ConfigError("dimension and precision must be positive");
  if (digits_.size() != static_cast<std::size_t>(dimension) * precision)
    throw ConfigError("digit buffer size does not match dimension * precision");
  for (Digit d : digits_)
    if (d >= base) throw ConfigError("digit out of range for base " + std::to_string(base));
}

double DigitPoint::to_double(int j) const {
  double acc = 0.0;
  for (int p = precision_ - 1; p >= 0; --p) acc = (acc + digit(j, p)) / base_;
  return acc;
}

std::vector<double> DigitPoint::to_doubles() const {
  std::vector<double> out(dimension_);
  for (int j = 0; j < dimension_; ++j) out[j] = to_double(j);
  return out;
}

std::int64_t DigitPoint::scaled_coordinate(int j) const {
  if (precision_ > max_exact_precision(base_))
    throw PrecisionError("coordinate does not fit 64-bit integer arithmetic", max_exact_precision(base_));
  std::int64_t acc = 0;
  for (int p = 0; p < precision_; ++p) acc = acc * base_ + digit(j, p);
  return acc;
}

std::vector<int> GammaVector::values() const {
  std::vector<int> out;
  out.reserve(components.size());
  for (const auto& g : components) out.push_back(g.value());
  return out;
}

GammaValue gamma_scalar(CoordinateView x, CoordinateView y) {
  if (x.base != y.base) throw ConfigError("gamma: mismatched bases");
  if (x.precision() != y.precision()) throw ConfigError("gamma: mismatched precision");
  for (int i = 0; i < x.precision(); ++i)
    if (x.digits[i] != y.digits[i]) return GammaValue::finite(i);
  return GammaValue::at_least_precision(x.precision());
}

GammaVector gamma_vector(const DigitPoint& x, const DigitPoint& y) {
  if (x.dimension() != y.dimension()) throw ConfigError("gamma: dimension mismatch");
  GammaVector out;
  out.components.reserve(x.dimension());
  for (int j = 0; j < x.dimension(); ++j) {
    GammaValue g = gamma_scalar(x.coordinate(j), y.coordinate(j));
    out.saturated = out.saturated || g.saturated();
    out.total += g.value();
    out.components.push_back(g);
  }
  return out;
}

bool in_region_C(const GammaVector& gamma, std::span<const int> k) {
  if (k.size() != gamma.components.size()) throw ConfigError("region: dimension mismatch");
  for (std::size_t j = 0; j < k.size(); ++j) {
    const auto& g = gamma.components[j];
    if (!g.saturated() && g.value() < k[j]) return false;
  }
  return true;
}

bool in_region_D(const GammaVector& gamma, std::span<const int> i) {
  if (i.size() != gamma.components.size()) throw ConfigError("region: dimension mismatch");
  if (gamma.saturated) return false;
  for (std::size_t j = 0; j < i.size(); ++j)
    if (gamma.components[j].value() != i[j]) return false;
  return true;
}

Rational volume_C(int base, std::span<const int> k) {
  long total = 0;
  for (int v : k) {
    if (v < 0) throw ConfigError("region index components must be non-negative");
    total += v;
  }
  return Rational(BigInt(1), ipow(base, total));
}

Rational volume_D(int base, std::span<const int> i) {
  long total = 0;
  for (int v : i) {
    if (v < 0) throw ConfigError("region index components must be non-negative");
    total += v;
  }
  const auto s = static_cast<unsigned long>(i.size());
  Rational out(ipow(base - 1, s), ipow(base, s + total));
  out.canonicalize();
  return out;
}

char digit_char(Digit d) { return d < 10 ? static_cast<char>('0' + d) : static_cast<char>('a' + d - 10); }

std::string coordinate_to_string(CoordinateView coordinate) {
  std::string out;
  out.reserve(coordinate.digits.size());
  for (Digit d : coordinate.digits) out.push_back(digit_char(d));
  return out;
}

std::vector<Digit> coordinate_from_string(int base, const std::string& text) {
  std::vector<Digit> out;
  out.reserve(text.size());
  for (char c : text) {
    int d;
    if (c >= '0' && c <= '9') d = c - '0';
    else if (c >= 'a' && c <= 'z') d = c - 'a' + 10;
    else if (c >= 'A' && c <= 'Z') d = c - 'A' + 10;
    else throw FormatError(std::string("invalid digit character '") + c + "'");
    if (d >= base) throw FormatError(std::string("digit '") + c + "' out of range for base " + std::to_string(base));
    out.push_back(static_cast<Digit>(d));
  }
  return out;
}

}  // namespace walshnet
