#include "syscow/series.hpp"

#include "syscow/errors.hpp"

#include <sstream>

namespace syscow {

TruncatedSeries::TruncatedSeries(int trunc, RatVec coeffs)
    : trunc_(trunc), coeffs_(std::move(coeffs)) {
  if (trunc_ < 0) throw ValidationError("series truncation must be >= 0");
  coeffs_.resize(trunc_ + 1, Rat(0));
  for (auto& c : coeffs_) c.canonicalize();
}

TruncatedSeries TruncatedSeries::zero(int trunc) {
  return TruncatedSeries(trunc, {});
}

TruncatedSeries TruncatedSeries::constant(int trunc, const Rat& c) {
  return TruncatedSeries(trunc, {c});
}

TruncatedSeries TruncatedSeries::monomial(int trunc, int k, const Rat& c) {
  if (k < 0) throw ValidationError("monomial degree must be >= 0");
  RatVec coeffs(trunc + 1, Rat(0));
  if (k <= trunc) coeffs[k] = c;
  return TruncatedSeries(trunc, std::move(coeffs));
}

const Rat& TruncatedSeries::coeff(int k) const {
  static const Rat kZero(0);
  if (k < 0 || k > trunc_) return kZero;
  return coeffs_[k];
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& rhs) const {
  if (rhs.trunc_ != trunc_) throw ValidationError("series truncation mismatch");
  RatVec out(coeffs_);
  for (int k = 0; k <= trunc_; ++k) out[k] += rhs.coeffs_[k];
  return TruncatedSeries(trunc_, std::move(out));
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& rhs) const {
  if (rhs.trunc_ != trunc_) throw ValidationError("series truncation mismatch");
  RatVec out(coeffs_);
  for (int k = 0; k <= trunc_; ++k) out[k] -= rhs.coeffs_[k];
  return TruncatedSeries(trunc_, std::move(out));
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& rhs) const {
  if (rhs.trunc_ != trunc_) throw ValidationError("series truncation mismatch");
  RatVec out(trunc_ + 1, Rat(0));
  for (int i = 0; i <= trunc_; ++i) {
    if (coeffs_[i] == 0) continue;
    for (int j = 0; i + j <= trunc_; ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  return TruncatedSeries(trunc_, std::move(out));
}

TruncatedSeries TruncatedSeries::operator*(const Rat& scalar) const {
  RatVec out(coeffs_);
  for (auto& c : out) c *= scalar;
  return TruncatedSeries(trunc_, std::move(out));
}

TruncatedSeries TruncatedSeries::operator-() const {
  return *this * Rat(-1);
}

TruncatedSeries TruncatedSeries::pow(int exponent) const {
  if (exponent < 0) throw ValidationError("series exponent must be >= 0");
  TruncatedSeries result = constant(trunc_, Rat(1));
  TruncatedSeries base = *this;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    base = base * base;
    exponent >>= 1;
  }
  return result;
}

TruncatedSeries TruncatedSeries::inverse() const {
  if (coeffs_[0] == 0)
    throw ValidationError("series with zero constant term has no inverse");
  // Newton-free direct recurrence: b_0 = 1/a_0, b_k = -(sum a_j b_{k-j})/a_0.
  RatVec out(trunc_ + 1, Rat(0));
  out[0] = Rat(1) / coeffs_[0];
  for (int k = 1; k <= trunc_; ++k) {
    Rat acc(0);
    for (int j = 1; j <= k; ++j) acc += coeffs_[j] * out[k - j];
    out[k] = -acc / coeffs_[0];
  }
  return TruncatedSeries(trunc_, std::move(out));
}

TruncatedSeries TruncatedSeries::exp_nilpotent() const {
  if (coeffs_[0] != 0)
    throw ValidationError("exp_nilpotent needs a zero constant term");
  TruncatedSeries result = constant(trunc_, Rat(1));
  TruncatedSeries term = constant(trunc_, Rat(1));
  Rat factorial(1);
  for (int k = 1; k <= trunc_; ++k) {
    term = term * *this;
    factorial *= k;
    result = result + term * (Rat(1) / factorial);
  }
  return result;
}

std::string TruncatedSeries::to_string(const std::string& var) const {
  std::ostringstream out;
  bool first = true;
  for (int k = 0; k <= trunc_; ++k) {
    if (coeffs_[k] == 0) continue;
    Rat c = coeffs_[k];
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    Rat a = abs(c);
    bool unit = (a == 1);
    if (k == 0 || !unit) out << format_rational(a);
    if (k > 0) {
      if (!unit) out << "*";
      out << var;
      if (k > 1) out << "^" << k;
    }
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

} // namespace syscow
