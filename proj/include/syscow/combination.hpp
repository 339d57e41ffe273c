#pragma once

#include "syscow/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace syscow {

/// Columns are the basis vectors v_1, ..., v_n of an n x n integer matrix,
/// linearly independent over the rationals.
struct IntegerBasis {
  int n = 0;
  IntMat columns; // columns[j] is v_{j+1}, each of length n

  /// Validates shape and exact linear independence.
  static IntegerBasis make(IntMat columns);
};

/// An integer combination sum_j coeffs[j] * v_{j+1} whose result has every
/// coordinate nonzero.
struct Combination {
  IntVec coeffs;
  IntVec result;
  Int cost; // sum |coeffs[j]|
};

/// One level of the inductive construction, innermost level first.
struct CombinationStep {
  int depth = 0;                  // subproblem size n at this level
  std::vector<int> column_order;  // original column index per permuted slot
  std::optional<int> l;           // column patched in, 0-based original index
  std::optional<long> c;          // multiplier applied to column l
};

struct CombinationResult {
  Combination combination;
  std::vector<CombinationStep> steps;
};

/// L1-cost ceiling floor((n+1)/2) * ceil((n+1)/2) for the combination
/// produced by find_combination.
Int v_n(int n);

/// Constructive induction: returns an all-nonzero combination with
/// cost <= v_n(n). Exact integer arithmetic throughout.
CombinationResult find_combination(const IntegerBasis& basis);

struct BruteForceOptions {
  // Abort once this many coefficient vectors have been inspected.
  std::uint64_t enumeration_cap = 200'000'000;
};

/// Exhaustive oracle: minimum-cost all-nonzero combination with
/// cost <= budget, ties broken lexicographically on the coefficient vector.
/// Returns nullopt when no combination within budget works.
std::optional<Combination> brute_force_min_cost(const IntegerBasis& basis,
                                                long budget,
                                                const BruteForceOptions& opts = {});

} // namespace syscow
