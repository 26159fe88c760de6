#include "walshnet/exact.hpp"

#include <cctype>
#include <stdexcept>

namespace walshnet {

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

BigInt ipow(const BigInt& base, unsigned long exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

Rational rpow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw std::domain_error("rpow: zero raised to a negative power");
    return rpow(Rational(1) / base, -exponent);
  }
  Rational out(ipow(base.get_num(), static_cast<unsigned long>(exponent)),
               ipow(base.get_den(), static_cast<unsigned long>(exponent)));
  out.canonicalize();
  return out;
}

Rational ratio(const BigInt& p, const BigInt& q) {
  if (q == 0) throw std::domain_error("ratio: zero denominator");
  Rational out(p, q);
  out.canonicalize();
  return out;
}

BigInt factorial(unsigned long n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

namespace {

BigInt parse_digits(std::string_view digits, std::string_view whole) {
  if (digits.empty()) throw std::invalid_argument("malformed number: '" + std::string(whole) + "'");
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("malformed number: '" + std::string(whole) + "'");
  }
  return BigInt(std::string(digits), 10);
}

Rational parse_decimal(std::string_view text) {
  bool negative = false;
  std::string_view rest = text;
  if (!rest.empty() && (rest.front() == '-' || rest.front() == '+')) {
    negative = rest.front() == '-';
    rest.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = rest.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = rest.substr(e + 1);
    bool exp_negative = false;
    if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
      exp_negative = exp_text.front() == '-';
      exp_text.remove_prefix(1);
    }
    exponent = parse_digits(exp_text, text).get_si();
    if (exp_negative) exponent = -exponent;
    rest = rest.substr(0, e);
  }
  std::string mantissa;
  if (auto dot = rest.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = rest.substr(0, dot);
    std::string_view frac_part = rest.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) parse_digits("", text);
    mantissa = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<long>(frac_part.size());
  } else {
    mantissa = std::string(rest);
  }
  Rational out(parse_digits(mantissa, text));
  out *= rpow(Rational(10), exponent);
  return negative ? Rational(-out) : out;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Rational num = parse_decimal(text.substr(0, slash));
    Rational den = parse_decimal(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return num / den;
  }
  return parse_decimal(text);
}

std::string to_string(const Rational& value) { return value.get_str(); }

double to_double(const Rational& value) { return value.get_d(); }

Rational from_double(double value) {
  Rational out;
  mpq_set_d(out.get_mpq_t(), value);
  return out;
}

RationalPolynomial::RationalPolynomial(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

RationalPolynomial RationalPolynomial::monomial(const Rational& coefficient, std::size_t degree) {
  std::vector<Rational> c(degree + 1);
  c[degree] = coefficient;
  return RationalPolynomial(std::move(c));
}

int RationalPolynomial::degree() const { return static_cast<int>(coeffs_.size()) - 1; }

Rational RationalPolynomial::operator()(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RationalPolynomial RationalPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> c(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = coeffs_[i] * static_cast<long>(i);
  return RationalPolynomial(std::move(c));
}

RationalPolynomial RationalPolynomial::operator+(const RationalPolynomial& other) const {
  std::vector<Rational> c(std::max(coeffs_.size(), other.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) c[i] += other.coeffs_[i];
  return RationalPolynomial(std::move(c));
}

RationalPolynomial RationalPolynomial::operator-(const RationalPolynomial& other) const {
  return *this + other * Rational(-1);
}

RationalPolynomial RationalPolynomial::operator*(const RationalPolynomial& other) const {
  if (coeffs_.empty() || other.coeffs_.empty()) return {};
  std::vector<Rational> c(coeffs_.size() + other.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * other.coeffs_[j];
  return RationalPolynomial(std::move(c));
}

RationalPolynomial RationalPolynomial::operator*(const Rational& scalar) const {
  std::vector<Rational> c = coeffs_;
  for (auto& v : c) v *= scalar;
  return RationalPolynomial(std::move(c));
}

bool RationalPolynomial::operator==(const RationalPolynomial& other) const {
  return coeffs_ == other.coeffs_;
}

void RationalPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

}  // namespace walshnet
