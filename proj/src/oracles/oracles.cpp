#include "walshnet/oracles.hpp"

#include "walshnet/errors.hpp"

#include <cmath>
#include <map>

namespace walshnet::oracle {

namespace {

std::int64_t pow_int(int base, int e) {
  std::int64_t out = 1;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

}  // namespace

int gamma_by_floor(int base, int precision, std::int64_t x_scaled, std::int64_t y_scaled) {
  int g = 0;
  // floor(b^i x) is x_scaled / b^(P - i).
  for (int i = 1; i <= precision; ++i) {
    const std::int64_t d = pow_int(base, precision - i);
    if (x_scaled / d != y_scaled / d) break;
    g = i;
  }
  return g;
}

std::vector<std::uint64_t> box_counts(const PointSet& points, const std::vector<int>& k) {
  const int b = points.base();
  const int P = points.precision();
  std::size_t boxes = 1;
  for (int kj : k) {
    if (kj > P) throw PrecisionError("box shape is finer than the stored digits", kj);
    boxes *= static_cast<std::size_t>(pow_int(b, kj));
  }
  std::vector<std::uint64_t> counts(boxes, 0);
  for (const auto& p : points) {
    std::size_t index = 0;
    for (int j = 0; j < points.dimension(); ++j) {
      const std::int64_t corner = p.scaled_coordinate(j) / pow_int(b, P - k[j]);
      index = index * static_cast<std::size_t>(pow_int(b, k[j])) + static_cast<std::size_t>(corner);
    }
    ++counts[index];
  }
  return counts;
}

bool is_net_by_boxes(const PointSet& points, int t) {
  const int m = points.m();
  const std::uint64_t expected = static_cast<std::uint64_t>(pow_int(points.base(), t));
  for (const auto& k : enumerate_shapes(points.dimension(), m - t)) {
    int total = 0;
    for (int v : k) total += v;
    if (total != m - t) continue;
    for (auto c : box_counts(points, k))
      if (c != expected) return false;
  }
  return true;
}

namespace {

// Coefficients of t^(a-1) (1-t)^(b-1), then the antiderivative evaluated at x.
Rational beta_integral(long a, long b, const Rational& x) {
  Rational acc;
  for (long j = 0; j <= b - 1; ++j) {
    const long power = a + j;
    const Rational term = ratio(binomial(b - 1, j), power) * rpow(x, power);
    if (j % 2) acc -= term;
    else acc += term;
  }
  return acc;
}

}  // namespace

Rational inc_beta_by_integration(long a, long b, const Rational& x) {
  if (a < 1 || b < 1) throw ConfigError("integer beta parameters must be positive");
  return beta_integral(a, b, x) / beta_integral(a, b, Rational(1));
}

long double hyp2f1_series(long double a, long double b, long double c, long double z) {
  if (!(std::fabs(z) < 1.0L)) throw ConfigError("hypergeometric series needs |z| < 1");
  long double term = 1.0L, sum = 1.0L;
  for (int n = 0; n < 100000; ++n) {
    term *= (a + n) * (b + n) / ((c + n) * (n + 1)) * z;
    sum += term;
    if (std::fabs(term) <= 1e-21L * std::fabs(sum)) break;
  }
  return sum;
}

Rational psi_on_region(const PairProfile& profile, const std::vector<int>& i) {
  const int b = profile.base();
  const int s = profile.dimension();
  auto it = profile.n_counts().find(i);
  if (it == profile.n_counts().end()) return 0;
  int total = 0;
  for (int v : i) total += v;
  const BigInt n = static_cast<unsigned long>(profile.points());
  BigInt num = static_cast<unsigned long>(it->second);
  num *= ipow(b, static_cast<unsigned long>(s + total));
  Rational out(num, n * (n - 1) * ipow(b - 1, static_cast<unsigned long>(s)));
  out.canonicalize();
  return out;
}

namespace {

// Per coordinate, a pair of grid cells is either distinct (state = common prefix length)
// or identical (state = -1, gamma >= K with geometric tail).
int cell_state(int base, int K, std::int64_t cx, std::int64_t cy) {
  if (cx == cy) return -1;
  int g = 0;
  for (int p = 1; p <= K; ++p) {
    const std::int64_t d = pow_int(base, K - p);
    if (cx / d != cy / d) break;
    g = p;
  }
  return g;
}

// Average of psi over a cell pair with the given per-coordinate states.
Rational mean_psi(const PairProfile& profile, int K, const std::vector<int>& state) {
  const int b = profile.base();
  Rational acc;
  for (const auto& [i, count] : profile.n_counts()) {
    Rational weight = 1;
    for (std::size_t j = 0; j < state.size() && weight != 0; ++j) {
      if (state[j] >= 0) {
        if (i[j] != state[j]) weight = 0;
      } else if (i[j] < K) {
        weight = 0;
      } else {
        // P(gamma = i) = (b-1)/b^(i-K+1) for two uniform points of one cell.
        weight *= Rational(b - 1, 1) / Rational(ipow(b, static_cast<unsigned long>(i[j] - K + 1)));
      }
    }
    if (weight != 0) acc += weight * psi_on_region(profile, i);
  }
  return acc;
}

struct Grid {
  int K;
  std::int64_t side;
  std::int64_t cells;
};

Grid make_grid(int base, int s, int K) {
  const std::int64_t side = pow_int(base, K);
  std::int64_t cells = 1;
  for (int j = 0; j < s; ++j) cells *= side;
  if (cells > (1 << 12)) throw ConfigError("digit grid too large for the covariance oracle");
  return {K, side, cells};
}

std::vector<std::int64_t> cell_coords(std::int64_t cell, int s, std::int64_t side) {
  std::vector<std::int64_t> c(s);
  for (int j = s - 1; j >= 0; --j) {
    c[j] = cell % side;
    cell /= side;
  }
  return c;
}

// Sum over cell pairs, grouped by state tuple, of w(cx) * conj(w(cy)).
template <class Weight, class Acc>
void accumulate_pairs(const PairProfile& profile, const Grid& g, const std::vector<Weight>& w, Acc&& add) {
  const int s = profile.dimension();
  std::vector<std::vector<std::int64_t>> coords;
  for (std::int64_t c = 0; c < g.cells; ++c) coords.push_back(cell_coords(c, s, g.side));
  std::vector<int> state(s);
  for (std::int64_t x = 0; x < g.cells; ++x) {
    for (std::int64_t y = 0; y < g.cells; ++y) {
      for (int j = 0; j < s; ++j) state[j] = cell_state(profile.base(), g.K, coords[x][j], coords[y][j]);
      add(state, w[x], w[y]);
    }
  }
}

}  // namespace

Rational pdf_mass_by_grid(const PairProfile& profile, int resolution) {
  const Grid g = make_grid(profile.base(), profile.dimension(), resolution);
  std::map<std::vector<int>, BigInt> pairs;
  std::vector<int> ones(static_cast<std::size_t>(g.cells), 1);
  accumulate_pairs(profile, g, ones, [&](const std::vector<int>& st, int, int) { pairs[st] += 1; });
  Rational total;
  for (const auto& [st, count] : pairs) total += mean_psi(profile, g.K, st) * Rational(count);
  return total / Rational(ipow(profile.base(), static_cast<unsigned long>(2 * profile.dimension() * g.K)));
}

GaussianRational covariance_by_grid(const WalshPolynomial& f, const PairProfile& profile) {
  if (f.base() != 2 || profile.base() != 2) throw ConfigError("the grid covariance oracle is exact only in base 2");
  if (f.dimension() != profile.dimension()) throw ConfigError("function and profile dimensions differ");
  const int s = f.dimension();
  const Grid g = make_grid(2, s, std::max(f.max_digit_length(), 1));

  // Coefficients are dyadic rationals; bring them to one denominator D so that
  // cell values are Gaussian integers.
  std::vector<Rational> re, im;
  BigInt D = 1;
  for (const auto& t : f.terms()) {
    re.push_back(from_double(t.coefficient.real()));
    im.push_back(from_double(t.coefficient.imag()));
    mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), re.back().get_den_mpz_t());
    mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), im.back().get_den_mpz_t());
  }
  struct GaussInt {
    BigInt re, im;
  };
  std::vector<GaussInt> value(static_cast<std::size_t>(g.cells));
  for (std::int64_t c = 0; c < g.cells; ++c) {
    const auto x = cell_coords(c, s, g.side);
    GaussInt v{0, 0};
    for (std::size_t t = 0; t < f.terms().size(); ++t) {
      int parity = 0;
      for (int j = 0; j < s; ++j) {
        std::uint64_t l = f.terms()[t].index.components()[j];
        // Digit p of l pairs with digit p+1 of x.
        for (int p = 0; l > 0; ++p, l >>= 1)
          if (l & 1u) parity ^= static_cast<int>((x[j] >> (g.K - 1 - p)) & 1);
      }
      const BigInt r = re[t].get_num() * (D / re[t].get_den());
      const BigInt i = im[t].get_num() * (D / im[t].get_den());
      if (parity) {
        v.re -= r;
        v.im -= i;
      } else {
        v.re += r;
        v.im += i;
      }
    }
    value[c] = v;
  }

  std::map<std::vector<int>, GaussInt> grouped;
  accumulate_pairs(profile, g, value, [&](const std::vector<int>& st, const GaussInt& a, const GaussInt& b) {
    // a * conj(b)
    auto& slot = grouped[st];
    slot.re += a.re * b.re + a.im * b.im;
    slot.im += a.im * b.re - a.re * b.im;
  });

  GaussianRational total;
  for (const auto& [st, sum] : grouped) {
    const Rational w = mean_psi(profile, g.K, st);
    total.re += w * Rational(sum.re);
    total.im += w * Rational(sum.im);
  }
  const Rational scale = Rational(1) / Rational(D * D * ipow(2, static_cast<unsigned long>(2 * s * g.K)));
  total.re *= scale;
  total.im *= scale;
  // Subtract |f-hat(0)|^2, the integral of 1 * f(x) conj(f(y)).
  const auto zero = f.integral();
  const Rational zr = from_double(zero.real()), zi = from_double(zero.imag());
  total.re -= zr * zr + zi * zi;
  return total;
}

}  // namespace walshnet::oracle
