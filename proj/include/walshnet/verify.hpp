#pragma once

// Desk-scale identity suite over digits, walsh, counting and covkernel.

#include "walshnet/exact.hpp"

#include <functional>
#include <string>
#include <vector>

namespace walshnet {

struct VerifyOptions {
  /// Psi(b, s, r, c) as seen by the suite; replaced to check that faults are caught.
  std::function<Rational(int, int, int, int)> psi;
  /// Restrict to these suites (digits, walsh, counting, covkernel); empty runs all.
  std::vector<std::string> suites;
};

VerifyOptions default_verify_options();

struct IdentityFailure {
  std::string identity;
  std::string detail;
};

struct SuiteResult {
  std::string name;
  long checks = 0;
  double seconds = 0;
  std::vector<IdentityFailure> failures;
  bool passed() const { return failures.empty(); }
};

struct VerifyReport {
  std::vector<SuiteResult> suites;
  bool passed() const;
  std::string to_json() const;
};

VerifyReport verify_all(const VerifyOptions& options = default_verify_options());

}  // namespace walshnet
