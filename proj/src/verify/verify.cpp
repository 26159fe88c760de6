#include "walshnet/verify.hpp"

#include "walshnet/counting.hpp"
#include "walshnet/covkernel.hpp"
#include "walshnet/nets.hpp"
#include "walshnet/oracles.hpp"
#include "walshnet/scramble.hpp"
#include "walshnet/walsh.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <complex>
#include <random>

namespace walshnet {

VerifyOptions default_verify_options() {
  VerifyOptions o;
  o.psi = [](int b, int s, int r, int c) { return Psi(b, s, r, c); };
  return o;
}

bool VerifyReport::passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.passed(); });
}

std::string VerifyReport::to_json() const {
  nlohmann::json j;
  j["passed"] = passed();
  auto& arr = j["suites"] = nlohmann::json::array();
  for (const auto& s : suites) {
    nlohmann::json fails = nlohmann::json::array();
    for (const auto& f : s.failures) fails.push_back({{"identity", f.identity}, {"detail", f.detail}});
    arr.push_back({{"name", s.name}, {"passed", s.passed()}, {"checks", s.checks}, {"seconds", s.seconds},
                   {"failures", fails}});
  }
  return j.dump(2);
}

namespace {

// Records one check; keeps only the first few failures per identity.
class Recorder {
public:
  explicit Recorder(SuiteResult& r) : r_(r) {}
  void check(bool ok, const std::string& identity, const std::string& detail) {
    ++r_.checks;
    if (ok) return;
    if (std::count_if(r_.failures.begin(), r_.failures.end(),
                      [&](const IdentityFailure& f) { return f.identity == identity; }) < 3)
      r_.failures.push_back({identity, detail});
  }

private:
  SuiteResult& r_;
};

std::string describe(const std::vector<int>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

std::string bms(int b, int m, int s) {
  return "b=" + std::to_string(b) + " m=" + std::to_string(m) + " s=" + std::to_string(s);
}

PointSet scrambled_faure(int b, int m, int s, std::uint64_t seed) {
  const PointSet net = generate_points(faure_matrices(b, m, s), b, m);
  return owen_scramble(net, {seed, 0}, m + 4);
}

void digits_suite(Recorder& rec) {
  for (int b : {2, 3, 5}) {
    for (const auto& k : enumerate_shapes(2, 4)) {
      // sum of vol(D_i) over k <= i <= k + L equals vol(C_k) - tails, exactly.
      const int L = 6;
      Rational sum;
      for (int a = k[0]; a <= k[0] + L; ++a)
        for (int c = k[1]; c <= k[1] + L; ++c) {
          std::vector<int> i{a, c};
          sum += volume_D(b, i);
        }
      const Rational tail = Rational(1) - Rational(1, 1) / Rational(ipow(b, L + 1));
      rec.check(sum == volume_C(b, k) * tail * tail, "sum_{i>=k} vol(D_i) = vol(C_k)",
                "b=" + std::to_string(b) + " k=" + describe(k));
    }
  }
  std::mt19937_64 rng(11);
  for (int b : {2, 3, 7}) {
    const int P = 6;
    std::uniform_int_distribution<int> digit(0, b - 1);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<Digit> x(P), y(P);
      for (int p = 0; p < P; ++p) x[p] = y[p] = static_cast<Digit>(digit(rng));
      const int cut = trial % (P + 1);
      if (cut < P) y[cut] = static_cast<Digit>((y[cut] + 1 + digit(rng) % (b - 1)) % b);
      const DigitPoint px(b, {x}), py(b, {y});
      const GammaValue g = gamma_scalar(px.coordinate(0), py.coordinate(0));
      const int expected = oracle::gamma_by_floor(b, P, px.scaled_coordinate(0), py.scaled_coordinate(0));
      rec.check(g.value() == expected && g.saturated() == (cut == P), "gamma digits = gamma floor",
                "b=" + std::to_string(b) + " trial " + std::to_string(trial));
    }
  }
}

void walsh_suite(Recorder& rec) {
  for (int b : {2, 3}) {
    const int K = b == 2 ? 3 : 2;
    std::vector<DigitPoint> grid;
    const int side = static_cast<int>(ipow(b, K).get_si());
    for (int c = 0; c < side; ++c) {
      std::vector<Digit> d(K);
      for (int p = 0, v = c; p < K; ++p) {
        d[K - 1 - p] = static_cast<Digit>(v % b);
        v /= b;
      }
      grid.emplace_back(b, std::vector<std::vector<Digit>>{d});
    }
    for (int k = 0; k < side; ++k) {
      for (int l = 0; l < side; ++l) {
        const WalshIndex wk(b, {static_cast<std::uint64_t>(k)}), wl(b, {static_cast<std::uint64_t>(l)});
        std::complex<double> inner;
        for (const auto& x : grid) inner += wal_eval(wk, x) * std::conj(wal_eval(wl, x));
        inner /= static_cast<double>(side);
        const double expected = k == l ? 1.0 : 0.0;
        rec.check(std::abs(inner - expected) < 1e-12, "Walsh orthonormality",
                  "b=" + std::to_string(b) + " k=" + std::to_string(k) + " l=" + std::to_string(l));
        const WalshIndex sum(b, {digit_add(static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(l), b)});
        bool product = true;
        for (const auto& x : grid)
          product = product && (wal_exponent(wk, x) + wal_exponent(wl, x)) % b == wal_exponent(sum, x);
        rec.check(product, "wal_k wal_l = wal_{k (+) l}",
                  "b=" + std::to_string(b) + " k=" + std::to_string(k) + " l=" + std::to_string(l));
      }
    }
    for (const auto& k : enumerate_shapes(2, 4)) {
      const auto members = enumerate_L_k(b, k);
      bool right_shell = true;
      for (const auto& l : members) right_shell = right_shell && l.digit_lengths() == k;
      rec.check(right_shell && BigInt(static_cast<unsigned long>(members.size())) == L_k_size(b, k),
                "L_k enumeration", "b=" + std::to_string(b) + " k=" + describe(k));
    }
    for (int K2 = 0; K2 <= 4; ++K2) {
      BigInt total = 0;
      for (int k = 0; k <= K2; ++k) total += L_k_size(b, std::vector<int>{k});
      rec.check(total == ipow(b, K2), "L_k partition of [0, b^K)", "b=" + std::to_string(b) + " K=" + std::to_string(K2));
    }
  }
}

void counting_suite(Recorder& rec) {
  const std::vector<std::array<int, 3>> configs = {{2, 1, 1}, {2, 2, 2}, {2, 3, 2}, {3, 2, 2}, {3, 2, 3}, {5, 2, 3}};
  for (const auto& [b, m, s] : configs) {
    const PointSet net = scrambled_faure(b, m, s, 5);
    const PairProfile profile = profile_bruteforce(net);
    for (const auto& i : enumerate_shapes(s, m + 2))
      rec.check(profile.N(i) == N_closed_form(b, m, i), "N brute force = N closed form", bms(b, m, s) + " i=" + describe(i));
    for (const auto& k : enumerate_shapes(s, m + 2))
      rec.check(profile.M(k) == M_closed_form(b, m, k), "M brute force = M closed form", bms(b, m, s) + " k=" + describe(k));
    rec.check(pdf_total_mass(profile) == 1, "joint pdf integrates to 1", bms(b, m, s));
    rec.check(profile_bruteforce(net) == serial::profile_bruteforce(net), "parallel profile = serial profile", bms(b, m, s));
  }
  const PairProfile small = closed_form_profile(2, 2, 2);
  rec.check(oracle::pdf_mass_by_grid(small, 2) == 1, "joint pdf grid mass = 1", bms(2, 2, 2));
}

void covkernel_suite(Recorder& rec, const VerifyOptions& opt) {
  for (int b : {2, 3, 5}) {
    for (int r = 1; r <= 4; ++r)
      rec.check(opt.psi(b, 3, r, 0) == -1, "Psi(b, r, 0) = -1", "b=" + std::to_string(b) + " r=" + std::to_string(r));
  }
  rec.check(opt.psi(2, 2, 2, 1) == 1, "Psi(2, 2, 1) = 1", "");
  rec.check(opt.psi(3, 3, 3, 1) == Rational(5, 4), "Psi(3, 3, 1) = 5/4", "");

  for (int b : {2, 3}) {
    for (int m = 1; m <= 3; ++m) {
      for (int s = 1; s <= 3; ++s) {
        const PairProfile profile = closed_form_profile(b, m, s);
        for (const auto& k : enumerate_shapes(s, m + 3)) {
          if (L_k_size(b, k) > 64) continue;
          for (const auto& l : enumerate_L_k(b, k)) {
            if (l.is_zero()) continue;
            const Rational zero_t = opt.psi(b, s, l.support_size(), excess(m, l.total_length())) /
                                    Rational(ipow(b, static_cast<unsigned long>(m)) - 1);
            rec.check(zero_t == psi_hat_general(profile, l), "psi-hat zero-t = psi-hat general",
                      bms(b, m, s) + " k=" + describe(k));
            break;  // psi-hat depends on l only through (k, r)
          }
        }
      }
    }
  }

  for (int b : {2, 3}) {
    for (int m = 1; m <= 5; ++m) {
      for (int s = 1; s + m <= 8; ++s) {
        const CovPolynomial p = cov_polynomial(b, m, s, Rational(b - 1, b));
        for (int j = 0; j <= 10; ++j) {
          const Rational x = ratio(j, 10);
          rec.check(p(x) == q_s(b, m, s, x), "covariance polynomial = Q_s at a=(b-1)/b", bms(b, m, s) + " x=" + to_string(x));
          if (j > 0 && j < 10 && b * x != 1)
            rec.check(recmain_eval(b, m, s, x) == q_s(b, m, s, x), "hypergeometric form = Q_s", bms(b, m, s));
          rec.check(delta_s(b, m, s, x) == q_s(b, m, s - 1, x) - q_s(b, m, s, x), "Q_{s-1} - Q_s = Delta_s", bms(b, m, s));
        }
      }
    }
  }
  for (int b : {2, 3}) {
    for (int m = 1; m <= 4; ++m) {
      for (int s = 1; s <= 6; ++s) {
        const Rational x(2, 7);
        const std::array<Rational, 4> c = {q_s(b, m, s, x), q_s(b, m, s + 1, x), q_s(b, m, s + 2, x), q_s(b, m, s + 3, x)};
        rec.check(recurrence_residual(b, m, s, x, c) == 0, "fourth-order recurrence in s", bms(b, m, s));
      }
    }
  }
  for (long a = 1; a <= 6; ++a)
    for (long bb = 1; bb <= 6; ++bb) {
      const Rational x(3, 8);
      const Rational v = inc_beta(a, bb, x);
      rec.check(v == inc_beta_derivative_form(a, bb, x), "incomplete beta, derivative form", "a=" + std::to_string(a));
      rec.check(v == oracle::inc_beta_by_integration(a, bb, x), "incomplete beta, integral form", "a=" + std::to_string(a));
    }
}

template <class F>
SuiteResult timed(const std::string& name, F&& body) {
  SuiteResult r;
  r.name = name;
  Recorder rec(r);
  const auto start = std::chrono::steady_clock::now();
  try {
    body(rec);
  } catch (const std::exception& e) {
    rec.check(false, "suite raised an exception", e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace

VerifyReport verify_all(const VerifyOptions& options) {
  VerifyOptions opt = options;
  if (!opt.psi) opt.psi = default_verify_options().psi;
  auto wanted = [&](const std::string& name) {
    return opt.suites.empty() || std::find(opt.suites.begin(), opt.suites.end(), name) != opt.suites.end();
  };
  VerifyReport report;
  if (wanted("digits")) report.suites.push_back(timed("digits", digits_suite));
  if (wanted("walsh")) report.suites.push_back(timed("walsh", walsh_suite));
  if (wanted("counting")) report.suites.push_back(timed("counting", counting_suite));
  if (wanted("covkernel"))
    report.suites.push_back(timed("covkernel", [&](Recorder& rec) { covkernel_suite(rec, opt); }));
  return report;
}

}  // namespace walshnet
