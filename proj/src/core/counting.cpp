#include "walshnet/counting.hpp"

#include "walshnet/errors.hpp"

#include <nlohmann/json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace walshnet {

PairProfile::PairProfile(int base, int m, int dimension, std::uint64_t points,
                         std::map<std::vector<int>, std::uint64_t> n_counts, std::uint64_t saturated_pairs)
    : base_(base), m_(m), dimension_(dimension), n_(points), counts_(std::move(n_counts)), saturated_(saturated_pairs) {
  for (auto it = counts_.begin(); it != counts_.end();) {
    if (it->first.size() != static_cast<std::size_t>(dimension)) throw ConfigError("profile key has wrong dimension");
    it = it->second == 0 ? counts_.erase(it) : std::next(it);
  }
}

BigInt PairProfile::N(std::span<const int> i) const {
  for (int v : i)
    if (v < 0) return 0;
  auto it = counts_.find(std::vector<int>(i.begin(), i.end()));
  return it == counts_.end() ? BigInt(0) : BigInt(static_cast<unsigned long>(it->second));
}

BigInt PairProfile::M(std::span<const int> k) const {
  BigInt total = 0;
  for (const auto& [i, count] : counts_) {
    bool dominates = true;
    for (std::size_t j = 0; j < i.size(); ++j) dominates = dominates && i[j] >= std::max(k[j], 0);
    if (dominates) total += static_cast<unsigned long>(count);
  }
  return total;
}

std::string PairProfile::to_json() const {
  nlohmann::json j;
  j["base"] = base_;
  j["m"] = m_;
  j["s"] = dimension_;
  j["n"] = n_;
  j["saturated_pairs"] = saturated_;
  auto& entries = j["N"] = nlohmann::json::array();
  std::uint64_t total = 0;
  for (const auto& [i, count] : counts_) {
    entries.push_back({{"i", i}, {"count", count}});
    total += count;
  }
  j["total_pairs"] = total;
  return j.dump(2);
}

namespace {

void count_from(const PointSet& points, std::size_t l, std::map<std::vector<int>, std::uint64_t>& counts,
                std::uint64_t& saturated) {
  const int s = points.dimension();
  const int cap = points.precision();
  std::vector<int> key(s);
  const auto& x = points[l];
  for (std::size_t j = 0; j < points.size(); ++j) {
    if (j == l) continue;
    const auto& y = points[j];
    bool any_saturated = false;
    for (int c = 0; c < s; ++c) {
      auto xc = x.coordinate(c), yc = y.coordinate(c);
      int g = 0;
      while (g < cap && xc.digits[g] == yc.digits[g]) ++g;
      any_saturated = any_saturated || g == cap;
      key[c] = g;
    }
    if (any_saturated) ++saturated;
    ++counts[key];
  }
}

}  // namespace

PairProfile serial::profile_bruteforce(const PointSet& points) {
  std::map<std::vector<int>, std::uint64_t> counts;
  std::uint64_t saturated = 0;
  for (std::size_t l = 0; l < points.size(); ++l) count_from(points, l, counts, saturated);
  return PairProfile(points.base(), points.m(), points.dimension(), points.size(), std::move(counts), saturated);
}

PairProfile profile_bruteforce(const PointSet& points) {
  std::map<std::vector<int>, std::uint64_t> counts;
  std::uint64_t saturated = 0;
  const long n = static_cast<long>(points.size());
#pragma omp parallel
  {
    std::map<std::vector<int>, std::uint64_t> local;
    std::uint64_t local_saturated = 0;
#pragma omp for schedule(dynamic, 16) nowait
    for (long l = 0; l < n; ++l) count_from(points, static_cast<std::size_t>(l), local, local_saturated);
#pragma omp critical(walshnet_profile_merge)
    {
      for (const auto& [k, v] : local) counts[k] += v;
      saturated += local_saturated;
    }
  }
  return PairProfile(points.base(), points.m(), points.dimension(), points.size(), std::move(counts), saturated);
}

BigInt M_closed_form(int base, int m, std::span<const int> k) {
  long total = 0;
  for (int v : k) total += std::max(v, 0);
  if (total > m) return 0;
  const BigInt n = ipow(base, static_cast<unsigned long>(m));
  return n * (ipow(base, static_cast<unsigned long>(m - total)) - 1);
}

BigInt N_closed_form(int base, int m, std::span<const int> i) {
  long total = 0;
  for (int v : i) {
    if (v < 0) return 0;
    total += v;
  }
  const long s = static_cast<long>(i.size());
  BigInt acc = 0;
  for (long j = 0; j <= s; ++j) {
    const long e = m - total - j;
    const BigInt term = binomial(s, j) * (e > 0 ? ipow(base, static_cast<unsigned long>(e)) : BigInt(1));
    if (j % 2 == 0) acc += term;
    else acc -= term;
  }
  return ipow(base, static_cast<unsigned long>(m)) * acc;
}

PairProfile closed_form_profile(int base, int m, int s) {
  std::map<std::vector<int>, std::uint64_t> counts;
  for (const auto& i : enumerate_shapes(s, m - 1)) {
    BigInt v = N_closed_form(base, m, i);
    if (v > 0) counts[i] = v.get_ui();
  }
  return PairProfile(base, m, s, ipow(base, static_cast<unsigned long>(m)).get_ui(), std::move(counts));
}

Rational psi_value(const PairProfile& profile, std::span<const int> i) {
  const BigInt n = static_cast<unsigned long>(profile.points());
  if (n < 2) throw ConfigError("the joint pdf needs at least two points");
  long total = 0;
  for (int v : i) total += v;
  const auto s = static_cast<unsigned long>(profile.dimension());
  Rational out(profile.N(i) * ipow(profile.base(), s + static_cast<unsigned long>(total)),
               n * (n - 1) * ipow(profile.base() - 1, s));
  out.canonicalize();
  return out;
}

Rational joint_pdf(const PairProfile& profile, const DigitPoint& x, const DigitPoint& y) {
  if (profile.points() < 2) throw ConfigError("the joint pdf needs at least two points");
  const GammaVector g = gamma_vector(x, y);
  if (g.saturated) return 0;
  return psi_value(profile, g.values());
}

Rational pdf_total_mass(const PairProfile& profile) {
  Rational total;
  for (const auto& [i, count] : profile.n_counts()) total += volume_D(profile.base(), i) * psi_value(profile, i);
  return total;
}

}  // namespace walshnet
