#include "syscow/charclass.hpp"

#include "syscow/errors.hpp"

namespace syscow {

namespace {

/// sinh(u)/u as a series in x with u = x/2:
/// sum_k x^{2k} / (4^k (2k+1)!).
TruncatedSeries sinhc_half(int trunc) {
  RatVec coeffs(trunc + 1, Rat(0));
  Rat term(1); // 1 / (4^k (2k+1)!)
  coeffs[0] = term;
  for (int k = 1; 2 * k <= trunc; ++k) {
    term /= Rat(4) * Rat(2 * k) * Rat(2 * k + 1);
    coeffs[2 * k] = term;
  }
  return TruncatedSeries(trunc, std::move(coeffs));
}

} // namespace

TruncatedSeries ahat_cp(int n) {
  if (n < 1) throw ValidationError("ahat_cp requires n >= 1");
  return sinhc_half(n).inverse().pow(n + 1);
}

TruncatedSeries chern_character_line(long k, int trunc) {
  if (trunc < 0) throw ValidationError("chern_character_line requires trunc >= 0");
  RatVec coeffs(trunc + 1, Rat(0));
  Rat term(1); // k^i / i!
  coeffs[0] = term;
  for (int i = 1; i <= trunc; ++i) {
    term *= Rat(k) / Rat(i);
    coeffs[i] = term;
  }
  return TruncatedSeries(trunc, std::move(coeffs));
}

Rat line_index_cp(int n, long k) {
  TruncatedSeries product = ahat_cp(n) * chern_character_line(k, n);
  Rat value = product.coeff(n);
  value.canonicalize();
  return value;
}

long minimal_admissible_twist(int n) {
  if (n < 1) throw ValidationError("minimal_admissible_twist requires n >= 1");
  if (n % 2 == 0)
    throw ValidationError("CP^n is spin only for odd n; n = " +
                          std::to_string(n) + " is unsupported");
  TruncatedSeries ahat = ahat_cp(n);
  for (long k = 1;; ++k) {
    if ((ahat * chern_character_line(k, n)).coeff(n) != 0) return k;
  }
}

SphereProductAdmissibility sphere_product_admissible(const std::vector<Int>& b) {
  if (b.empty())
    throw ValidationError("sphere_product_admissible requires at least one factor");
  SphereProductAdmissibility out{true, Int(1)};
  for (const Int& bj : b) {
    out.top_coefficient *= bj;
    if (bj == 0) out.admissible = false;
  }
  return out;
}

} // namespace syscow
