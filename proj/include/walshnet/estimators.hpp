#pragma once

// Sample-mean estimators over scrambled nets and the replication harness that
// checks the RQMC variance split against its analytic terms.

#include "walshnet/exact.hpp"
#include "walshnet/nets.hpp"
#include "walshnet/walsh.hpp"

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace walshnet {

/// (1/n) sum f(P_i). Throws PrecisionError when the points carry too few digits for f.
std::complex<double> estimate(const PointSet& points, const WalshPolynomial& f);

struct ExperimentConfig {
  int base = 2;
  int m = 4;
  int s = 2;
  int replications = 1000;
  std::uint64_t seed = 0;
  /// Digits per scrambled coordinate; 0 picks max(m, digits needed by f).
  int precision = 0;
  /// Exactly one of these describes f.
  std::optional<WalshPolynomial> polynomial;
  std::optional<DecaySpec> decay;

  /// Schema:
  ///   {"b": 2, "m": 4, "s": 2, "replications": 20000, "seed": 1, "precision": 0,
  ///    "function": {"decay": {"kind": "per-shell", "a": "1/2", "x": 0.15, "alpha": 1, "k_max": 5, "seed": 7}}}
  /// or "function": {"polynomial": <WalshPolynomial JSON>}. k_max defaults to m+s-1.
  static ExperimentConfig from_json(const std::string& text);
  std::string to_json() const;

  WalshPolynomial build_function() const;
};

struct ExperimentReport {
  int base = 0, m = 0, s = 0;
  std::uint64_t n = 0;
  int replications = 0;
  int precision = 0;

  std::complex<double> integral;
  std::complex<double> mean;
  double mean_se = 0;

  /// mean over replications of |I_hat - I|^2.
  double empirical_variance = 0;
  double variance_se = 0;
  /// sum_{l != 0} |f-hat(l)|^2 / n.
  Rational mc_variance;

  /// Per-replication average of (f(U_i) - I) conj(f(U_j) - I) over ordered pairs i != j.
  double empirical_covariance = 0;
  double covariance_se = 0;
  /// sum_{l != 0} |f-hat(l)|^2 psi-hat(l).
  Rational analytic_covariance;
  /// cov_polynomial(x) alpha / (b^m - 1) for per-shell decay functions.
  std::optional<Rational> predicted_covariance;

  std::vector<std::complex<double>> estimates;
  std::vector<double> pair_covariances;

  std::string to_json() const;
  /// replication,re,im,pair_cov
  std::string trace_csv() const;
};

ExperimentReport run_experiment(const ExperimentConfig& cfg);

namespace serial {
ExperimentReport run_experiment(const ExperimentConfig& cfg);
}  // namespace serial

struct IdentityResidual {
  double residual = 0;
  double standard_error = 0;
};

/// var_emp - var_MC - (n-1)/n cov_emp, with the standard error of the per-replication residuals.
IdentityResidual variance_identity_check(const ExperimentReport& report);

/// Var(I_hat) for f on the scrambled version of `points`, from pair gammas of the unscrambled set:
/// each coordinate contributes 1 when k_j <= gamma_j, -1/(b-1) when k_j = gamma_j + 1, else 0.
Rational analytic_rqmc_variance(const WalshPolynomial& f, const PointSet& points);

/// analytic_rqmc_variance - (var_MC + (n-1)/n sum |f-hat|^2 psi-hat); zero for a (0,m,s)-net.
Rational variance_identity_analytic(const WalshPolynomial& f, const PointSet& points);

}  // namespace walshnet
