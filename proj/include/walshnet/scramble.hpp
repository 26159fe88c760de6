#pragma once

// Owen's nested uniform scrambling, seeded per replication.
//
// The permutation applied to digit d of coordinate j depends on (seed,
// replication, j, input digits 1..d-1). Each node permutation is derived on
// demand from a counter-mode hash, so nothing proportional to b^P is stored.
// Input digits past the stored precision are taken as zero, which makes the
// corresponding output digits i.i.d. uniform.

#include "walshnet/nets.hpp"

#include <cstdint>
#include <vector>

namespace walshnet {

struct ScrambleSeed {
  std::uint64_t master = 0;
  std::uint64_t replication = 0;
};

/// m + 31 guard digits, capped at max_exact_precision(b).
int default_scramble_precision(int base, int m);

PointSet owen_scramble(const PointSet& points, ScrambleSeed seed, int output_precision);

/// Replication r uses ScrambleSeed{seed, r}; parallel over replications.
std::vector<PointSet> replicate(const PointSet& points, std::uint64_t seed, int count, int output_precision);

namespace serial {
std::vector<PointSet> replicate(const PointSet& points, std::uint64_t seed, int count, int output_precision);
}  // namespace serial

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

}  // namespace walshnet
