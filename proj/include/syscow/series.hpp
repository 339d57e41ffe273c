#pragma once

#include "syscow/rational.hpp"

#include <string>
#include <vector>

namespace syscow {

/// Univariate power series with exact rational coefficients, truncated at a
/// fixed degree. All arithmetic stays at the truncation degree; products and
/// inverses are exact modulo x^{trunc+1}.
class TruncatedSeries {
public:
  TruncatedSeries(int trunc, RatVec coeffs);

  /// The zero series at the given truncation.
  static TruncatedSeries zero(int trunc);
  /// The constant series c.
  static TruncatedSeries constant(int trunc, const Rat& c);
  /// The monomial c * x^k (zero if k > trunc).
  static TruncatedSeries monomial(int trunc, int k, const Rat& c);

  int trunc() const { return trunc_; }
  const Rat& coeff(int k) const;
  const RatVec& coeffs() const { return coeffs_; }

  TruncatedSeries operator+(const TruncatedSeries& rhs) const;
  TruncatedSeries operator-(const TruncatedSeries& rhs) const;
  TruncatedSeries operator*(const TruncatedSeries& rhs) const;
  TruncatedSeries operator*(const Rat& scalar) const;
  TruncatedSeries operator-() const;
  bool operator==(const TruncatedSeries& rhs) const = default;

  /// Integer power by repeated squaring, exponent >= 0.
  TruncatedSeries pow(int exponent) const;

  /// Multiplicative inverse; requires a nonzero constant term.
  TruncatedSeries inverse() const;

  /// exp of a series with zero constant term (nilpotent at truncation).
  TruncatedSeries exp_nilpotent() const;

  /// "1 - 1/6 x^2 + ..."-style rendering with exact rational coefficients.
  std::string to_string(const std::string& var = "x") const;

private:
  int trunc_;
  RatVec coeffs_; // coeffs_[k] multiplies x^k, size trunc_+1
};

} // namespace syscow
