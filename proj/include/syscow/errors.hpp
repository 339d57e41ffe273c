#pragma once

#include <stdexcept>
#include <string>

namespace syscow {

/// Bad input: violated precondition, malformed file, non-antisymmetric
/// matrix, dependent columns, and so on. CLI exit code 2.
class ValidationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A configured budget was exhausted (enumeration candidate count,
/// brute-force search size). CLI exit code 3.
class ResourceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A dual norm was requested for a norm family without an exact dual.
class UnsupportedNormError : public ValidationError {
public:
  using ValidationError::ValidationError;
};

} // namespace syscow
