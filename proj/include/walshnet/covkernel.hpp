#pragma once

// Walsh coefficients of the joint pdf, the covariance polynomial under shell
// decay, and the incomplete-beta closed form Q_s with the pieces of its
// nonpositivity argument. Everything here is exact rational arithmetic.

#include "walshnet/counting.hpp"
#include "walshnet/exact.hpp"
#include "walshnet/walsh.hpp"

#include <array>
#include <functional>
#include <span>
#include <vector>

namespace walshnet {

/// c_m(k) = max(k - m, 0).
inline int excess(int m, int k) { return k > m ? k - m : 0; }

/// Psi_b^s(r, c) = -(1-b)^(1-r) sum_{i=0}^{r-1-c} (-b)^i C(r-1, i); zero once c >= r.
/// Does not depend on s; the argument is kept to mirror the shell bookkeeping.
Rational Psi(int base, int s, int r, int c);

using MCounter = std::function<BigInt(std::span<const int>)>;

/// psi-hat(l) for a scrambled (t,m,s)-net from its pair counts:
///   1/(n(n-1)) (b/(b-1))^r sum_{e <= supp(l)} (-1)^|e| b^-|e| M(k - e).
/// Throws ConfigError for l = 0 (that coefficient is the constant 1).
Rational psi_hat_general(int base, std::uint64_t n, const WalshIndex& l, const MCounter& M);
Rational psi_hat_general(const PairProfile& profile, const WalshIndex& l);
/// Same, with M from the (0,m,s)-net closed form.
Rational psi_hat_general_closed_form(int base, int m, const WalshIndex& l);

/// psi-hat for a scrambled (0,m,s)-net: Psi_b(r, c) / (b^m - 1).
Rational psi_hat_zero_t(int base, int m, int r, int c);
Rational psi_hat_zero_t(int base, int m, const WalshIndex& l);

/// sum_{l != 0} |f-hat(l)|^2 psi-hat(l) for a scrambled (0,m,s)-net, exact in the stored doubles.
Rational coefficient_covariance(const WalshPolynomial& f, int m);
/// Same, for an arbitrary pair profile (general t).
Rational coefficient_covariance(const WalshPolynomial& f, const PairProfile& profile);

/// (b^m - 1)/alpha * cov under sigma_k^2 = a^r (bx)^k alpha, as a polynomial in u = bx:
///   sum_{k=1}^{m+s-1} ( sum_r C(s,r) C(k-1,r-1) a^r Psi_b(r, c_m(k)) ) u^k.
class CovPolynomial {
public:
  CovPolynomial(int base, int m, int s, Rational a, std::vector<Rational> coefficients);

  int base() const { return base_; }
  int m() const { return m_; }
  int s() const { return s_; }
  const Rational& a() const { return a_; }

  /// Coefficient of (bx)^k, k = 0 .. m+s-1 (the k = 0 entry is zero).
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// The same polynomial expanded in powers of x.
  RationalPolynomial in_x() const;

  Rational operator()(const Rational& x) const;

private:
  int base_, m_, s_;
  Rational a_;
  std::vector<Rational> coeffs_;
};

CovPolynomial cov_polynomial(int base, int m, int s, const Rational& a);

/// Regularized incomplete beta I_x(a, b) for integers a, b >= 1 via the binomial sum
/// sum_{j=a}^{a+b-1} C(a+b-1, j) x^j (1-x)^(a+b-1-j); any rational x (polynomial continuation).
Rational inc_beta(long a, long b, const Rational& x);

/// I_x(a, b) = (-x)^a/(a-1)! * D^(a-1)[((1-x)^(a+b-1) - 1)/x], evaluated by differentiating
/// the exact polynomial.
Rational inc_beta_derivative_form(long a, long b, const Rational& x);

/// Q_s(b,m,x) = 1 - b^m I_x(m, s+1) - ((1-x)/(1-bx))^s I_{1-bx}(s+1, m).
/// At x = 1/b the second term vanishes (removable singularity). s >= 0, m >= 1.
Rational q_s(int base, int m, int s, const Rational& x);

/// q^(m+s) Q_s(p/q) as an integer, with (1-bx)^s cancelled termwise. Same sign as Q_s for q > 0.
BigInt q_s_scaled(int base, int m, int s, const BigInt& p, const BigInt& q);

/// Q_{s-1} - Q_s = x (b-1) (1-x)^(s-1) sum_{i=0}^{m-1} C(i+s-1, s-1) (bx)^i, s >= 1.
Rational delta_s(int base, int m, int s, const Rational& x);
/// b^m (I_x(m, s+1) - I_x(m, s)) = b^m C(m+s-1, s) x^m (1-x)^s.
Rational delta_part1(int base, int m, int s, const Rational& x);
/// (1-x)^s I_{1-bx}(s+1, m) / (1-bx)^s = (1-x)^s (1-bx) sum_{i=0}^{m-1} C(i+s, s) (bx)^i.
Rational delta_small(int base, int m, int s, const Rational& x);

/// Left side of the fourth-order recurrence in s satisfied by the a = (b-1)/b covariance
/// polynomial; values = (c[s], c[s+1], c[s+2], c[s+3]) evaluated at x.
Rational recurrence_residual(int base, int m, int s, const Rational& x, std::span<const Rational, 4> values);

/// 2F1(a+b, 1; a+1; z) = a B_z(a,b) / (z^a (1-z)^b) for integer a, b >= 1, 0 < z < 1.
Rational hyp2f1_via_beta(long a, long b, const Rational& z);

/// The hypergeometric-form solution of the recurrence, each 2F1 realised through
/// hyp2f1_via_beta. Requires 0 < x < 1 and x != 1/b; throws ConfigError otherwise.
Rational recmain_eval(int base, int m, int s, const Rational& x);

}  // namespace walshnet
