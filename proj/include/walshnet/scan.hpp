#pragma once

// Parameter sweeps of the covariance polynomial and of Q_s over an x-grid,
// emitted as CSV. Values are evaluated exactly and only rounded on output.

#include "walshnet/exact.hpp"

#include <optional>
#include <string>
#include <vector>

namespace walshnet {

/// lo:hi:step with rational endpoints; the points are lo + i*step up to and including hi.
struct XGrid {
  Rational lo = 0;
  Rational hi = 1;
  Rational step = Rational(1, 100);

  /// Parses "lo:hi:step" (each part as accepted by parse_rational). Throws ConfigError.
  static XGrid parse(const std::string& text);
  std::vector<Rational> points() const;
};

enum class SweepParameter { b, m, s, a };

struct ScanSpec {
  std::string name;
  SweepParameter varying = SweepParameter::b;
  std::vector<Rational> values;
  int b = 2, m = 3, s = 3;
  /// Fixed decay parameter; empty means a = (b-1)/b for each row.
  std::optional<Rational> a;
  XGrid grid;
  /// Multiply by 1/(b^m - 1).
  bool scale = true;
};

/// Presets "3a", "3b", "3c", "4", "5a", "5b", "5c". Throws ConfigError for unknown names.
ScanSpec figure_spec(const std::string& figure);
std::vector<std::string> figure_names();

struct ScanRow {
  int b, m, s;
  Rational a, x, value;
  bool operator==(const ScanRow&) const = default;
};

/// One row per (parameter value, x). Throws ConfigError on an empty sweep or bad grid.
std::vector<ScanRow> figure_scan(const ScanSpec& spec);

namespace serial {
std::vector<ScanRow> figure_scan(const ScanSpec& spec);
}  // namespace serial

/// Leading comment with the fixed parameters, then b,m,s,a,x,value.
std::string scan_csv(const ScanSpec& spec, const std::vector<ScanRow>& rows);

/// True when every row of the sweep uses a = (b-1)/b, where the values are provably <= 0.
bool sign_guaranteed(const ScanSpec& spec);

/// x,value rows of the covariance polynomial, optionally scaled by 1/(b^m - 1).
std::string covpoly_csv(int base, int m, int s, const Rational& a, const XGrid& grid, bool scale);
/// x,value rows of Q_s.
std::string qscan_csv(int base, int m, int s, const XGrid& grid);

struct SignScan {
  long points = 0;
  long violations = 0;
  std::optional<Rational> first_violation;
};

/// Sign of Q_s at x = i/denominator, i = 0..denominator, from the cleared-denominator integer form.
SignScan qs_sign_scan(int base, int m, int s, long denominator);

namespace serial {
SignScan qs_sign_scan(int base, int m, int s, long denominator);
}  // namespace serial

}  // namespace walshnet
