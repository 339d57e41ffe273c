#pragma once

#include "syscow/rational.hpp"
#include "syscow/series.hpp"

#include <vector>

namespace syscow {

/// A-hat class of complex projective n-space as a truncated series in the
/// positive integral generator of degree-2 cohomology: (u/sinh u)^{n+1} with
/// u = x/2, truncated at degree n. Only even degrees carry nonzero
/// coefficients.
TruncatedSeries ahat_cp(int n);

/// Chern character of a line bundle with first Chern class k*x:
/// e^{kx} truncated, coefficients k^i / i!.
TruncatedSeries chern_character_line(long k, int trunc);

/// Index-type pairing on CP^n for the twist-k line bundle: the coefficient
/// of x^n in ahat_cp(n) * chern_character_line(k, n). Integer whenever n is
/// odd (the spin case).
Rat line_index_cp(int n, long k);

/// Smallest positive twist k with a nonzero index on CP^n, n odd.
/// Terminates because the index is a degree-n polynomial in k with positive
/// leading coefficient 1/n!.
long minimal_admissible_twist(int n);

struct SphereProductAdmissibility {
  bool admissible;   // true iff every b_j is nonzero
  Int top_coefficient; // product of the b_j, the top Chern-character term
};

/// Admissibility of the line bundle with first Chern class sum_j b_j eta_j
/// on a product of 2-spheres, where eta_j^2 = 0. The top-degree coefficient
/// is exactly the product of the b_j.
SphereProductAdmissibility sphere_product_admissible(const std::vector<Int>& b);

} // namespace syscow
