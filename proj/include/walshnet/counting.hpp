#pragma once

// Pair-counting numbers M_b / N_b and the joint pdf of two distinct points
// drawn from a scrambled net. Pairs are ordered, so the counts sum to n(n-1).

#include "walshnet/digits.hpp"
#include "walshnet/exact.hpp"
#include "walshnet/nets.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace walshnet {

class PairProfile {
public:
  PairProfile(int base, int m, int dimension, std::uint64_t points,
              std::map<std::vector<int>, std::uint64_t> n_counts, std::uint64_t saturated_pairs = 0);

  int base() const { return base_; }
  int m() const { return m_; }
  int dimension() const { return dimension_; }
  std::uint64_t points() const { return n_; }
  /// Pairs that agreed on every stored digit in some coordinate; binned at the precision cap.
  std::uint64_t saturated_pairs() const { return saturated_; }

  /// N_b(i); zero for unseen or partly negative i.
  BigInt N(std::span<const int> i) const;
  /// M_b(k) = sum of N_b(i) over i >= max(k, 0).
  BigInt M(std::span<const int> k) const;

  const std::map<std::vector<int>, std::uint64_t>& n_counts() const { return counts_; }

  std::string to_json() const;

  bool operator==(const PairProfile&) const = default;

private:
  int base_;
  int m_;
  int dimension_;
  std::uint64_t n_;
  std::map<std::vector<int>, std::uint64_t> counts_;
  std::uint64_t saturated_;
};

/// Counts every ordered pair of distinct points by gamma_vector. Parallel over the first point.
PairProfile profile_bruteforce(const PointSet& points);

namespace serial {
PairProfile profile_bruteforce(const PointSet& points);
}  // namespace serial

/// b^m (b^(m-k) - 1) for k <= m, else 0; k is clamped at zero first.
BigInt M_closed_form(int base, int m, std::span<const int> k);

/// b^m sum_{j=0}^{s} (-1)^j C(s,j) max(b^(m-i-j), 1); zero for partly negative i.
BigInt N_closed_form(int base, int m, std::span<const int> i);

/// Profile of a scrambled (0,m,s)-net from the closed form (all i with i < m).
PairProfile closed_form_profile(int base, int m, int s);

/// psi on D_i: N(i) / (n(n-1)) * b^(s+i) / (b-1)^s.
Rational psi_value(const PairProfile& profile, std::span<const int> i);

/// Joint pdf at (x, y); zero when the points agree on all stored digits somewhere.
Rational joint_pdf(const PairProfile& profile, const DigitPoint& x, const DigitPoint& y);

/// Integral of psi over [0,1)^{2s}: sum_i vol(D_i) psi_i. One for any valid profile.
Rational pdf_total_mass(const PairProfile& profile);

}  // namespace walshnet
