#pragma once

// Exact integer and rational arithmetic shared by every module.

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace walshnet {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Binomial coefficient C(n, k); zero when k < 0 or k > n.
BigInt binomial(long n, long k);

/// Integer power with a non-negative exponent.
BigInt ipow(const BigInt& base, unsigned long exponent);
Rational rpow(const Rational& base, long exponent);

BigInt factorial(unsigned long n);

/// p/q in lowest terms. mpq_class(p, q) alone is not canonicalized, and GMP
/// comparisons assume canonical operands.
Rational ratio(const BigInt& p, const BigInt& q);

/// Parses "p/q", an integer, or a finite decimal such as "0.15" or "-1.5e-3"
/// into an exact rational. Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" (or "p" when the denominator is one).
std::string to_string(const Rational& value);

double to_double(const Rational& value);

/// Exact rational value of a finite double.
Rational from_double(double value);

/// Dense polynomial with rational coefficients, lowest degree first.
class RationalPolynomial {
public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coefficients);

  static RationalPolynomial monomial(const Rational& coefficient, std::size_t degree);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  int degree() const;

  Rational operator()(const Rational& x) const;

  RationalPolynomial derivative() const;
  RationalPolynomial operator+(const RationalPolynomial& other) const;
  RationalPolynomial operator-(const RationalPolynomial& other) const;
  RationalPolynomial operator*(const RationalPolynomial& other) const;
  RationalPolynomial operator*(const Rational& scalar) const;

  bool operator==(const RationalPolynomial& other) const;

private:
  void trim();

  std::vector<Rational> coeffs_;
};

}  // namespace walshnet
