#include "walshnet/scramble.hpp"

#include "walshnet/errors.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace walshnet {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

int default_scramble_precision(int base, int m) {
  return std::min(m + 31, max_exact_precision(base));
}

namespace {

// Image of `digit` under the uniform random permutation of Z_b owned by `node`.
Digit permute(std::uint64_t node, int base, Digit digit) {
  std::array<Digit, kMaxBase> perm;
  std::iota(perm.begin(), perm.begin() + base, Digit{0});
  std::uint64_t state = node;
  for (int i = base - 1; i > 0; --i) {
    state = mix64(state);
    // Lemire-style bounded draw; bias is below 2^-58 for b <= 36.
    auto j = static_cast<int>((static_cast<unsigned __int128>(state) * static_cast<unsigned>(i + 1)) >> 64);
    std::swap(perm[i], perm[j]);
  }
  return perm[digit];
}

}  // namespace

PointSet owen_scramble(const PointSet& points, ScrambleSeed seed, int output_precision) {
  if (output_precision < std::max(points.m(), 1))
    throw ConfigError("output precision must be at least m (and at least one digit)");
  const int b = points.base();
  const int s = points.dimension();
  const int in_precision = points.precision();
  const std::uint64_t root = mix64(mix64(seed.master) ^ mix64(seed.replication + 0x632be59bd9b4e019ULL));
  std::vector<std::uint64_t> coord_roots(s);
  for (int j = 0; j < s; ++j) coord_roots[j] = mix64(root ^ mix64(static_cast<std::uint64_t>(j) + 1));

  std::vector<DigitPoint> out;
  out.reserve(points.size());
  for (const auto& p : points) {
    std::vector<Digit> digits(static_cast<std::size_t>(s) * output_precision);
    for (int j = 0; j < s; ++j) {
      std::uint64_t node = coord_roots[j];
      for (int d = 0; d < output_precision; ++d) {
        const Digit in = d < in_precision ? p.digit(j, d) : Digit{0};
        digits[static_cast<std::size_t>(j) * output_precision + d] = permute(node, b, in);
        // Child node keyed by the input prefix extended with this digit.
        node = mix64(node ^ (0xd1b54a32d192ed03ULL * (static_cast<std::uint64_t>(in) + 1)));
      }
    }
    out.emplace_back(b, s, output_precision, std::move(digits));
  }
  return PointSet(b, points.m(), s, points.claimed_t(), std::move(out));
}

std::vector<PointSet> serial::replicate(const PointSet& points, std::uint64_t seed, int count, int output_precision) {
  if (count < 1) throw ConfigError("replication count must be at least one");
  std::vector<PointSet> out;
  out.reserve(count);
  for (int r = 0; r < count; ++r)
    out.push_back(owen_scramble(points, {seed, static_cast<std::uint64_t>(r)}, output_precision));
  return out;
}

std::vector<PointSet> replicate(const PointSet& points, std::uint64_t seed, int count, int output_precision) {
  if (count < 1) throw ConfigError("replication count must be at least one");
  if (output_precision < std::max(points.m(), 1))
    throw ConfigError("output precision must be at least m (and at least one digit)");
  std::vector<std::optional<PointSet>> slots(count);
#pragma omp parallel for schedule(static)
  for (int r = 0; r < count; ++r)
    slots[r].emplace(owen_scramble(points, {seed, static_cast<std::uint64_t>(r)}, output_precision));
  std::vector<PointSet> out;
  out.reserve(count);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace walshnet
