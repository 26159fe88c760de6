#pragma once

// Base-b Walsh functions. Values are carried as exponents in Z_b (wal = w^e,
// w = exp(2 pi i / b)) and only turned into complex numbers when summed.

#include "walshnet/digits.hpp"
#include "walshnet/exact.hpp"

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace walshnet {

/// Number of base-b digits of l; zero for l = 0.
int digit_length(std::uint64_t l, int base);

/// Digitwise (l + k) mod b and (l - k) mod b.
std::uint64_t digit_add(std::uint64_t k, std::uint64_t l, int base);
std::uint64_t digit_sub(std::uint64_t k, std::uint64_t l, int base);

/// l in N^s with its digit-length vector k and support vector r.
class WalshIndex {
public:
  WalshIndex() = default;
  WalshIndex(int base, std::vector<std::uint64_t> components);

  int base() const { return base_; }
  int dimension() const { return static_cast<int>(l_.size()); }
  const std::vector<std::uint64_t>& components() const { return l_; }
  const std::vector<int>& digit_lengths() const { return k_; }
  /// r_j = 1 iff l_j > 0.
  std::vector<int> support() const;
  int support_size() const { return r_; }
  int total_length() const { return k_total_; }
  bool is_zero() const { return r_ == 0; }

  auto operator<=>(const WalshIndex& other) const { return l_ <=> other.l_; }
  bool operator==(const WalshIndex& other) const { return l_ == other.l_; }

private:
  int base_ = 2;
  std::vector<std::uint64_t> l_;
  std::vector<int> k_;
  int r_ = 0;
  int k_total_ = 0;
};

/// lambda_0 xi_1 + lambda_1 xi_2 + ... mod b. Throws PrecisionError when x has
/// fewer digits than l.
int wal_exponent(std::uint64_t l, CoordinateView x);
int wal_exponent(const WalshIndex& l, const DigitPoint& x);

std::complex<double> root_of_unity(int base, int exponent);
std::complex<double> wal_eval(const WalshIndex& l, const DigitPoint& x);

/// All l with floor(b^(k_j - 1)) <= l_j < b^(k_j); |L_k| = ((b-1)/b)^r b^k.
std::vector<WalshIndex> enumerate_L_k(int base, std::span<const int> k);
BigInt L_k_size(int base, std::span<const int> k);

struct WalshTerm {
  WalshIndex index;
  std::complex<double> coefficient;
};

/// Finite Walsh series sum_l c_l wal_l.
class WalshPolynomial {
public:
  WalshPolynomial(int base, int dimension);

  int base() const { return base_; }
  int dimension() const { return dimension_; }
  const std::vector<WalshTerm>& terms() const { return terms_; }
  std::map<std::string, std::string>& metadata() { return metadata_; }
  const std::map<std::string, std::string>& metadata() const { return metadata_; }

  /// Adds to the coefficient of l (merging duplicates).
  void add(const WalshIndex& l, std::complex<double> coefficient);
  std::complex<double> coefficient(const WalshIndex& l) const;

  /// f-hat(0), the integral of f.
  std::complex<double> integral() const;
  /// Largest digit length over all terms (the digits needed to evaluate f).
  int max_digit_length() const;

  std::complex<double> operator()(const DigitPoint& x) const;

  /// sigma_k^2 for every populated shell k, exact from the stored doubles.
  std::map<std::vector<int>, Rational> shell_masses() const;
  /// sum over l != 0 of |f-hat(l)|^2, exact.
  Rational nonconstant_mass() const;

  std::string to_json() const;
  static WalshPolynomial from_json(const std::string& text);

private:
  int base_;
  int dimension_;
  std::vector<WalshTerm> terms_;
  std::map<WalshIndex, std::size_t> position_;
  std::map<std::string, std::string> metadata_;
};

enum class DecayKind { per_index, per_shell };

struct DecaySpec {
  DecayKind kind = DecayKind::per_shell;
  Rational a = Rational(1, 2);
  double x = 0.1;
  double alpha = 1.0;
  int k_max = 4;
  std::uint64_t seed = 0;
};

constexpr std::size_t kShellSupportCap = 256;

/// per_index: |f-hat(l)|^2 = x^k alpha for every l with k <= k_max, uniform phases.
/// per_shell: sigma_k^2 = a^r (b x)^k alpha spread evenly over L_k, or over a
/// random subset of kShellSupportCap indices when L_k is larger.
WalshPolynomial random_decay_polynomial(int base, int s, const DecaySpec& spec);

DecayKind parse_decay_kind(const std::string& text);
std::string to_string(DecayKind kind);

}  // namespace walshnet
