#include "walshnet/estimators.hpp"

#include "walshnet/counting.hpp"
#include "walshnet/covkernel.hpp"
#include "walshnet/errors.hpp"
#include "walshnet/scramble.hpp"

#include <nlohmann/json.hpp>

#include <cmath>

namespace walshnet {

std::complex<double> estimate(const PointSet& points, const WalshPolynomial& f) {
  if (points.base() != f.base() || points.dimension() != f.dimension())
    throw ConfigError("point set and function disagree on base or dimension");
  if (points.size() == 0) throw ConfigError("cannot estimate from an empty point set");
  std::complex<double> sum;
  for (const auto& p : points) sum += f(p);
  return sum / static_cast<double>(points.size());
}

namespace {

using nlohmann::json;

Rational rational_field(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_number()) return from_double(j.get<double>());
  throw ConfigError("expected a rational number (\"p/q\" string or number)");
}

}  // namespace

ExperimentConfig ExperimentConfig::from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed experiment config: ") + e.what());
  }
  try {
    ExperimentConfig cfg;
    cfg.base = j.at("b").get<int>();
    cfg.m = j.at("m").get<int>();
    cfg.s = j.at("s").get<int>();
    cfg.replications = j.value("replications", cfg.replications);
    cfg.seed = j.value("seed", cfg.seed);
    cfg.precision = j.value("precision", 0);
    const json& fn = j.at("function");
    if (fn.contains("polynomial") == fn.contains("decay"))
      throw ConfigError("function needs exactly one of \"polynomial\" or \"decay\"");
    if (fn.contains("polynomial")) {
      cfg.polynomial = WalshPolynomial::from_json(fn["polynomial"].dump());
    } else {
      const json& d = fn["decay"];
      DecaySpec spec;
      spec.kind = parse_decay_kind(d.value("kind", std::string("per-shell")));
      if (d.contains("a")) spec.a = rational_field(d["a"]);
      spec.x = d.value("x", spec.x);
      spec.alpha = d.value("alpha", spec.alpha);
      spec.k_max = d.value("k_max", cfg.m + cfg.s - 1);
      spec.seed = d.value("seed", cfg.seed);
      cfg.decay = spec;
    }
    if (!is_prime(cfg.base)) throw ConfigError("b must be prime");
    if (cfg.m < 0 || cfg.s < 1) throw ConfigError("need m >= 0 and s >= 1");
    if (cfg.replications < 2) throw ConfigError("replications must be at least 2");
    if (cfg.precision < 0) throw ConfigError("precision must be non-negative");
    return cfg;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("invalid experiment config: ") + e.what());
  }
}

std::string ExperimentConfig::to_json() const {
  json j{{"b", base}, {"m", m}, {"s", s}, {"replications", replications}, {"seed", seed}, {"precision", precision}};
  if (polynomial) j["function"]["polynomial"] = json::parse(polynomial->to_json());
  if (decay) {
    j["function"]["decay"] = {{"kind", walshnet::to_string(decay->kind)}, {"a", walshnet::to_string(decay->a)},
                              {"x", decay->x}, {"alpha", decay->alpha}, {"k_max", decay->k_max},
                              {"seed", decay->seed}};
  }
  return j.dump(2);
}

WalshPolynomial ExperimentConfig::build_function() const {
  if (polynomial.has_value() == decay.has_value())
    throw ConfigError("experiment needs exactly one function description");
  if (polynomial) {
    if (polynomial->base() != base || polynomial->dimension() != s)
      throw ConfigError("function base/dimension does not match the experiment");
    return *polynomial;
  }
  return random_decay_polynomial(base, s, *decay);
}

namespace {

struct Setup {
  PointSet net;
  WalshPolynomial f;
  int precision;
};

Setup prepare(const ExperimentConfig& cfg) {
  if (cfg.replications < 2) throw ConfigError("replications must be at least 2");
  WalshPolynomial f = cfg.build_function();
  const int precision = cfg.precision > 0 ? cfg.precision : std::max({cfg.m, f.max_digit_length(), 1});
  if (precision < f.max_digit_length())
    throw PrecisionError("precision " + std::to_string(precision) + " is below the function's digit length",
                         f.max_digit_length());
  PointSet net = generate_points(faure_matrices(cfg.base, cfg.m, cfg.s), cfg.base, cfg.m);
  return {std::move(net), std::move(f), precision};
}

struct Replication {
  std::complex<double> estimate;
  double pair_covariance;
};

Replication run_one(const Setup& setup, std::uint64_t seed, int r, std::complex<double> integral) {
  const PointSet scrambled = owen_scramble(setup.net, {seed, static_cast<std::uint64_t>(r)}, setup.precision);
  std::complex<double> sum;
  double squares = 0;
  for (const auto& p : scrambled) {
    const std::complex<double> g = setup.f(p) - integral;
    sum += g;
    squares += std::norm(g);
  }
  const double n = static_cast<double>(scrambled.size());
  // Sum over ordered pairs i != j of g_i conj(g_j) = |sum g|^2 - sum |g|^2.
  return {sum / n + integral, (std::norm(sum) - squares) / (n * (n - 1))};
}

double mean_of(const std::vector<double>& v) {
  double acc = 0;
  for (double x : v) acc += x;
  return acc / static_cast<double>(v.size());
}

double standard_error(const std::vector<double>& v, double mean) {
  double acc = 0;
  for (double x : v) acc += (x - mean) * (x - mean);
  return std::sqrt(acc / static_cast<double>(v.size() - 1) / static_cast<double>(v.size()));
}

ExperimentReport summarize(const ExperimentConfig& cfg, const Setup& setup, std::vector<Replication> reps) {
  ExperimentReport out;
  out.base = cfg.base;
  out.m = cfg.m;
  out.s = cfg.s;
  out.n = setup.net.size();
  out.replications = cfg.replications;
  out.precision = setup.precision;
  out.integral = setup.f.integral();

  std::vector<double> sq, re, im;
  for (const auto& r : reps) {
    out.estimates.push_back(r.estimate);
    out.pair_covariances.push_back(r.pair_covariance);
    sq.push_back(std::norm(r.estimate - out.integral));
    re.push_back(r.estimate.real());
    im.push_back(r.estimate.imag());
  }
  out.mean = {mean_of(re), mean_of(im)};
  const double se_re = standard_error(re, out.mean.real());
  const double se_im = standard_error(im, out.mean.imag());
  out.mean_se = std::sqrt(se_re * se_re + se_im * se_im);
  out.empirical_variance = mean_of(sq);
  out.variance_se = standard_error(sq, out.empirical_variance);
  out.empirical_covariance = mean_of(out.pair_covariances);
  out.covariance_se = standard_error(out.pair_covariances, out.empirical_covariance);

  out.mc_variance = setup.f.nonconstant_mass() / Rational(static_cast<unsigned long>(out.n));
  out.analytic_covariance = coefficient_covariance(setup.f, cfg.m);
  if (cfg.decay && cfg.decay->kind == DecayKind::per_shell) {
    const Rational x = from_double(cfg.decay->x);
    out.predicted_covariance = cov_polynomial(cfg.base, cfg.m, cfg.s, cfg.decay->a)(x) *
                               from_double(cfg.decay->alpha) /
                               Rational(ipow(cfg.base, static_cast<unsigned long>(cfg.m)) - 1);
  }
  return out;
}

}  // namespace

ExperimentReport run_experiment(const ExperimentConfig& cfg) {
  const Setup setup = prepare(cfg);
  const std::complex<double> integral = setup.f.integral();
  std::vector<Replication> reps(static_cast<std::size_t>(cfg.replications));
  // Each replication writes its own slot; aggregation below runs in index order,
  // so the report does not depend on the thread count.
#pragma omp parallel for schedule(dynamic, 64)
  for (int r = 0; r < cfg.replications; ++r) reps[r] = run_one(setup, cfg.seed, r, integral);
  return summarize(cfg, setup, std::move(reps));
}

ExperimentReport serial::run_experiment(const ExperimentConfig& cfg) {
  const Setup setup = prepare(cfg);
  const std::complex<double> integral = setup.f.integral();
  std::vector<Replication> reps;
  reps.reserve(static_cast<std::size_t>(cfg.replications));
  for (int r = 0; r < cfg.replications; ++r) reps.push_back(run_one(setup, cfg.seed, r, integral));
  return summarize(cfg, setup, std::move(reps));
}

std::string ExperimentReport::to_json() const {
  const IdentityResidual id = variance_identity_check(*this);
  json j{{"b", base},
         {"m", m},
         {"s", s},
         {"n", n},
         {"replications", replications},
         {"precision", precision},
         {"integral", {integral.real(), integral.imag()}},
         {"mean", {mean.real(), mean.imag()}},
         {"mean_se", mean_se},
         {"empirical_variance", empirical_variance},
         {"variance_se", variance_se},
         {"mc_variance", to_double(mc_variance)},
         {"mc_variance_exact", walshnet::to_string(mc_variance)},
         {"empirical_covariance", empirical_covariance},
         {"covariance_se", covariance_se},
         {"analytic_covariance", to_double(analytic_covariance)},
         {"analytic_covariance_exact", walshnet::to_string(analytic_covariance)},
         {"identity_residual", id.residual},
         {"identity_residual_se", id.standard_error}};
  if (predicted_covariance) {
    j["predicted_covariance"] = to_double(*predicted_covariance);
    j["predicted_covariance_exact"] = walshnet::to_string(*predicted_covariance);
  }
  return j.dump(2);
}

std::string ExperimentReport::trace_csv() const {
  std::string out = "replication,re,im,pair_cov\n";
  char line[128];
  for (std::size_t r = 0; r < estimates.size(); ++r) {
    std::snprintf(line, sizeof line, "%zu,%.17g,%.17g,%.17g\n", r, estimates[r].real(), estimates[r].imag(),
                  pair_covariances[r]);
    out += line;
  }
  return out;
}

IdentityResidual variance_identity_check(const ExperimentReport& report) {
  const std::size_t R = report.estimates.size();
  if (R < 2 || report.pair_covariances.size() != R) throw ConfigError("report carries too few replications");
  const double n = static_cast<double>(report.n);
  const double mc = to_double(report.mc_variance);
  std::vector<double> d(R);
  for (std::size_t r = 0; r < R; ++r)
    d[r] = std::norm(report.estimates[r] - report.integral) - mc - (n - 1) / n * report.pair_covariances[r];
  const double mean = mean_of(d);
  return {mean, standard_error(d, mean)};
}

Rational analytic_rqmc_variance(const WalshPolynomial& f, const PointSet& points) {
  if (points.base() != f.base() || points.dimension() != f.dimension())
    throw ConfigError("point set and function disagree on base or dimension");
  const PairProfile profile = profile_bruteforce(points);
  if (profile.saturated_pairs() > 0)
    throw PrecisionError("some pairs agree on every stored digit; regenerate with more precision",
                         points.precision() + 1);
  const int b = f.base();
  const Rational partial(-1, b - 1);
  const BigInt n = static_cast<unsigned long>(points.size());
  Rational total;
  for (const auto& t : f.terms()) {
    if (t.index.is_zero()) continue;
    const auto& k = t.index.digit_lengths();
    Rational pairs;
    for (const auto& [g, count] : profile.n_counts()) {
      Rational factor = 1;
      for (std::size_t j = 0; j < k.size() && factor != 0; ++j) {
        if (k[j] <= g[j]) continue;
        factor *= k[j] == g[j] + 1 ? partial : Rational(0);
      }
      pairs += factor * Rational(static_cast<unsigned long>(count));
    }
    const Rational re = from_double(t.coefficient.real()), im = from_double(t.coefficient.imag());
    total += (re * re + im * im) * (Rational(n) + pairs);
  }
  return total / Rational(n * n);
}

Rational variance_identity_analytic(const WalshPolynomial& f, const PointSet& points) {
  const Rational n = static_cast<unsigned long>(points.size());
  const PairProfile profile = profile_bruteforce(points);
  const Rational mc = f.nonconstant_mass() / n;
  return analytic_rqmc_variance(f, points) - mc - (n - 1) / n * coefficient_covariance(f, profile);
}

}  // namespace walshnet
