#include "walshnet/covkernel.hpp"

#include "walshnet/errors.hpp"

namespace walshnet {

Rational Psi(int base, int /*s*/, int r, int c) {
  if (r < 1 || c < 0) throw ConfigError("Psi needs r >= 1 and c >= 0");
  BigInt sum = 0;
  for (int i = 0; i <= r - 1 - c; ++i) sum += ipow(-base, static_cast<unsigned long>(i)) * binomial(r - 1, i);
  return -rpow(Rational(1 - base), 1 - r) * Rational(sum);
}

Rational psi_hat_general(int base, std::uint64_t n, const WalshIndex& l, const MCounter& M) {
  if (l.is_zero()) throw ConfigError("psi-hat(0) is the constant term 1, not a covariance coefficient");
  if (n < 2) throw ConfigError("psi-hat needs at least two points");
  const auto& k = l.digit_lengths();
  const std::vector<int> r = l.support();
  const int s = l.dimension();
  std::vector<int> shifted(s);
  Rational sum;
  // Subsets e of supp(l), encoded as bit masks over the support coordinates.
  for (unsigned mask = 0; mask < (1u << s); ++mask) {
    int weight = 0;
    bool inside = true;
    for (int j = 0; j < s; ++j) {
      const int e = (mask >> j) & 1u;
      inside = inside && e <= r[j];
      weight += e;
      shifted[j] = k[j] - e;
    }
    if (!inside) continue;
    const Rational term = ratio(M(shifted), ipow(base, static_cast<unsigned long>(weight)));
    if (weight % 2) sum -= term;
    else sum += term;
  }
  const BigInt nn = static_cast<unsigned long>(n);
  return sum * rpow(Rational(base, base - 1), l.support_size()) / Rational(nn * (nn - 1));
}

Rational psi_hat_general(const PairProfile& profile, const WalshIndex& l) {
  return psi_hat_general(profile.base(), profile.points(), l,
                         [&profile](std::span<const int> k) { return profile.M(k); });
}

Rational psi_hat_general_closed_form(int base, int m, const WalshIndex& l) {
  const std::uint64_t n = ipow(base, static_cast<unsigned long>(m)).get_ui();
  return psi_hat_general(base, n, l, [base, m](std::span<const int> k) { return M_closed_form(base, m, k); });
}

Rational psi_hat_zero_t(int base, int m, int r, int c) {
  if (m < 1) throw ConfigError("psi-hat needs at least two points (m >= 1)");
  return Psi(base, 0, r, c) / Rational(ipow(base, static_cast<unsigned long>(m)) - 1);
}

Rational psi_hat_zero_t(int base, int m, const WalshIndex& l) {
  if (l.is_zero()) throw ConfigError("psi-hat(0) is the constant term 1, not a covariance coefficient");
  return psi_hat_zero_t(base, m, l.support_size(), excess(m, l.total_length()));
}

namespace {

Rational magnitude_squared(std::complex<double> c) {
  const Rational re = from_double(c.real());
  const Rational im = from_double(c.imag());
  return re * re + im * im;
}

}  // namespace

Rational coefficient_covariance(const WalshPolynomial& f, int m) {
  Rational total;
  for (const auto& t : f.terms()) {
    if (t.index.is_zero()) continue;
    total += magnitude_squared(t.coefficient) * psi_hat_zero_t(f.base(), m, t.index);
  }
  return total;
}

Rational coefficient_covariance(const WalshPolynomial& f, const PairProfile& profile) {
  Rational total;
  for (const auto& t : f.terms()) {
    if (t.index.is_zero()) continue;
    total += magnitude_squared(t.coefficient) * psi_hat_general(profile, t.index);
  }
  return total;
}

CovPolynomial::CovPolynomial(int base, int m, int s, Rational a, std::vector<Rational> coefficients)
    : base_(base), m_(m), s_(s), a_(std::move(a)), coeffs_(std::move(coefficients)) {}

RationalPolynomial CovPolynomial::in_x() const {
  std::vector<Rational> c(coeffs_.size());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) c[k] = coeffs_[k] * Rational(ipow(base_, k));
  return RationalPolynomial(std::move(c));
}

Rational CovPolynomial::operator()(const Rational& x) const {
  const Rational u = x * base_;
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * u + *it;
  return acc;
}

CovPolynomial cov_polynomial(int base, int m, int s, const Rational& a) {
  if (base < 2 || m < 1 || s < 1) throw ConfigError("cov_polynomial needs b >= 2, m >= 1, s >= 1");
  if (a < 0 || a > 1) throw ConfigError("decay parameter a must lie in [0, 1]");
  std::vector<Rational> coeffs(static_cast<std::size_t>(m + s), Rational(0));
  for (int k = 1; k <= m + s - 1; ++k) {
    Rational c;
    for (int r = 1; r <= std::min(s, k); ++r)
      c += Rational(binomial(s, r) * binomial(k - 1, r - 1)) * rpow(a, r) * Psi(base, s, r, excess(m, k));
    coeffs[k] = c;
  }
  return CovPolynomial(base, m, s, a, std::move(coeffs));
}

Rational inc_beta(long a, long b, const Rational& x) {
  if (a < 1 || b < 1) throw ConfigError("inc_beta needs integer parameters a, b >= 1");
  const long n = a + b - 1;
  const Rational y = 1 - x;
  Rational sum;
  for (long j = a; j <= n; ++j) sum += Rational(binomial(n, j)) * rpow(x, j) * rpow(y, n - j);
  return sum;
}

Rational inc_beta_derivative_form(long a, long b, const Rational& x) {
  if (a < 1 || b < 1) throw ConfigError("inc_beta needs integer parameters a, b >= 1");
  const long n = a + b - 1;
  // ((1-x)^n - 1)/x = sum_{i=1}^{n} C(n,i) (-1)^i x^(i-1)
  std::vector<Rational> c(static_cast<std::size_t>(n));
  for (long i = 1; i <= n; ++i) c[i - 1] = Rational(binomial(n, i) * (i % 2 ? -1 : 1));
  RationalPolynomial p(std::move(c));
  for (long d = 0; d < a - 1; ++d) p = p.derivative();
  return rpow(-x, a) / Rational(factorial(static_cast<unsigned long>(a - 1))) * p(x);
}

Rational q_s(int base, int m, int s, const Rational& x) {
  if (m < 1 || s < 0) throw ConfigError("q_s needs m >= 1 and s >= 0");
  const Rational first = 1 - Rational(ipow(base, static_cast<unsigned long>(m))) * inc_beta(m, s + 1, x);
  const Rational y = 1 - base * x;
  // I_y(s+1, m) = O(y^(s+1)), so the second term tends to zero as y -> 0.
  if (y == 0) return first;
  return first - rpow((1 - x) / y, s) * inc_beta(s + 1, m, y);
}

BigInt q_s_scaled(int base, int m, int s, const BigInt& p, const BigInt& q) {
  if (m < 1 || s < 0) throw ConfigError("q_s needs m >= 1 and s >= 0");
  if (q <= 0) throw ConfigError("q_s_scaled needs a positive denominator");
  const long n = m + s;
  const BigInt qp = q - p;
  const BigInt bp = base * p;
  const BigInt y = q - bp;
  BigInt first = 0;
  for (long j = m; j <= n; ++j)
    first += binomial(n, j) * ipow(p, static_cast<unsigned long>(j)) * ipow(qp, static_cast<unsigned long>(n - j));
  BigInt second = 0;
  for (long j = s + 1; j <= n; ++j)
    second += binomial(n, j) * ipow(y, static_cast<unsigned long>(j - s)) * ipow(bp, static_cast<unsigned long>(n - j));
  return ipow(q, static_cast<unsigned long>(n)) - ipow(base, static_cast<unsigned long>(m)) * first -
         ipow(qp, static_cast<unsigned long>(s)) * second;
}

Rational delta_s(int base, int m, int s, const Rational& x) {
  if (s < 1 || m < 1) throw ConfigError("delta_s needs s >= 1 and m >= 1");
  const Rational u = base * x;
  Rational sum;
  for (int i = 0; i < m; ++i) sum += Rational(binomial(i + s - 1, s - 1)) * rpow(u, i);
  return x * (base - 1) * rpow(1 - x, s - 1) * sum;
}

Rational delta_part1(int base, int m, int s, const Rational& x) {
  return Rational(ipow(base, static_cast<unsigned long>(m)) * binomial(m + s - 1, s)) * rpow(x, m) * rpow(1 - x, s);
}

Rational delta_small(int base, int m, int s, const Rational& x) {
  const Rational u = base * x;
  Rational sum;
  for (int i = 0; i < m; ++i) sum += Rational(binomial(i + s, s)) * rpow(u, i);
  return rpow(1 - x, s) * (1 - u) * sum;
}

Rational recurrence_residual(int base, int m, int s, const Rational& x, std::span<const Rational, 4> c) {
  const Rational b = base;
  const Rational bx = b * x;
  const Rational x1 = x - 1;
  const Rational c3 = Rational(s + 2) * (bx - 1);
  const Rational c2 = Rational(m) * (bx - 1) * x1 + b * s * x * (x - 2) + bx * (x - 3) - Rational(s) * (2 * x - 3) -
                      3 * x + 5;
  const Rational c1 = -x1 * (b * m * x + b * s * x + bx + Rational(m) * x - 2 * m + Rational(s) * x - 3 * s + x - 4);
  const Rational c0 = x1 * x1 * (m + s + 1);
  return c3 * c[3] + c2 * c[2] + c1 * c[1] + c0 * c[0];
}

Rational hyp2f1_via_beta(long a, long b, const Rational& z) {
  if (z == 0 || z == 1) throw ConfigError("hyp2f1_via_beta needs z outside {0, 1}");
  // B(a, b) = (a-1)! (b-1)! / (a+b-1)!
  const Rational complete = ratio(factorial(a - 1) * factorial(b - 1), factorial(a + b - 1));
  const Rational incomplete = inc_beta(a, b, z) * complete;
  return Rational(a) * incomplete / (rpow(z, a) * rpow(1 - z, b));
}

Rational recmain_eval(int base, int m, int s, const Rational& x) {
  if (m < 1 || s < 1) throw ConfigError("recmain_eval needs m, s >= 1");
  if (x <= 0 || x >= 1) throw ConfigError("recmain_eval needs 0 < x < 1; use q_s at the endpoints");
  if (base * x == 1) throw ConfigError("recmain_eval is singular at x = 1/b; use q_s there");
  const Rational bx = base * x;
  const Rational bxm = rpow(bx, m);
  const Rational xm = rpow(x, m);
  const Rational lift = rpow((x - 1) / (bx - 1), s);
  // Gamma(m+s+1) / (Gamma(m) Gamma(s+2))
  const Rational gamma_ratio = ratio(factorial(m + s), factorial(m - 1) * factorial(s + 1));
  const Rational hyp_x = gamma_ratio * rpow(1 - x, s + 1) * hyp2f1_via_beta(s + 1, m, 1 - x);
  const Rational hyp_bx = gamma_ratio * rpow(1 - bx, s + 1) * hyp2f1_via_beta(s + 1, m, 1 - bx);

  const Rational line1 = (1 - bxm) - (1 - bxm) * lift;
  const Rational line2 = bxm * ((xm - 1) / xm + hyp_x);
  const Rational line3 = bxm * lift * ((1 - bxm) / bxm - hyp_bx);
  return line1 + line2 + line3;
}

}  // namespace walshnet
