#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace syscow {

using Rat = mpq_class;
using Int = mpz_class;

using RatVec = std::vector<Rat>;
using RatMat = std::vector<std::vector<Rat>>; // row-major, rectangular
using IntVec = std::vector<Int>;
using IntMat = std::vector<std::vector<Int>>;

/// Parses "p", "-p", or "p/q" into a canonicalized rational.
Rat parse_rational(const std::string& text);

/// Canonical "p" or "p/q" form (q > 0, gcd(p,q) = 1).
std::string format_rational(const Rat& value);

/// Nearest integer; exact ties round towards +infinity (floor(q + 1/2)).
Int nearest_int(const Rat& value);

bool is_integer(const Rat& value);

RatMat rat_identity(int n);
RatMat rat_transpose(const RatMat& m);
RatMat rat_mul(const RatMat& a, const RatMat& b);
RatVec rat_mul_vec(const RatMat& a, const RatVec& x);

Rat rat_det(RatMat m);
int rat_rank(RatMat m);

/// Inverse by Gauss-Jordan. Throws ValidationError on a singular matrix.
RatMat rat_inverse(RatMat m);

int int_rank(const IntMat& m);

} // namespace syscow
