#pragma once

#include <stdexcept>
#include <string>

namespace walshnet {

/// Inconsistent or out-of-range parameters (mismatched base, non-prime base, bad ranges).
class ConfigError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A construction exists in principle but is not provided (e.g. Faure with s > b).
class UnsupportedConstruction : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Stored digits do not cover the digit length an operation needs.
class PrecisionError : public std::runtime_error {
public:
  PrecisionError(const std::string& what, int required_digits)
      : std::runtime_error(what), required_digits_(required_digits) {}
  int required_digits() const { return required_digits_; }

private:
  int required_digits_;
};

/// Malformed point-set, polynomial or config files.
class FormatError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace walshnet
