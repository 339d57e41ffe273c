#include "syscow/combination.hpp"

#include "syscow/errors.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace syscow {

namespace {

struct LabeledColumn {
  IntVec values;
  int original_index;
};

/// Greedy exact independence filter: returns the lexicographically first
/// subset of `take` columns whose projections (first `rows` entries) are
/// linearly independent over Q.
std::vector<int> first_independent_subset(const std::vector<LabeledColumn>& cols,
                                          int rows, int take) {
  std::vector<RatVec> echelon; // reduced row space of accepted projections
  std::vector<int> chosen;
  for (int j = 0; j < static_cast<int>(cols.size()) &&-1 + static_cast<int>(chosen.size()) < take; ++j) {
    RatVec v(rows);
    for (int i = 0; i < rows; ++i) v[i] = Rat(cols[j].values[i]);
    // reduce against the accepted echelon rows
    for (const RatVec& row : echelon) {
      int pivot = -1;
      for (int i = 0; i < rows; ++i)
        if (row[i] != 0) { pivot = i; break; }
      if (pivot >= 0 && v[pivot] != 0) {
        Rat factor = v[pivot] / row[pivot];
        for (int i = 0; i < rows; ++i) v[i] -= factor * row[i];
      }
    }
    bool nonzero = std::any_of(v.begin(), v.end(), [](const Rat& x) { return x != 0; });
    if (nonzero) {
      echelon.push_back(std::move(v));
      chosen.push_back(j);
      if (static_cast<int>(chosen.size()) == take) break;
    }
  }
  if (static_cast<int>(chosen.size()) != take)
    throw ValidationError("basis columns are linearly dependent");
  return chosen;
}

IntVec combine(const std::vector<LabeledColumn>& cols, const IntVec& coeffs, int rows) {
  IntVec v(rows, Int(0));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (coeffs[j] == 0) continue;
    for (int i = 0; i < rows; ++i) v[i] += coeffs[j] * cols[j].values[i];
  }
  return v;
}

/// The induction of the appendix construction. `cols` are m columns of
/// length m; returns coefficients aligned with `cols` and appends one step.
IntVec recurse(const std::vector<LabeledColumn>& cols, int m,
               std::vector<CombinationStep>& steps) {
  CombinationStep step;
  step.depth = m;
  for (const auto& col : cols) step.column_order.push_back(col.original_index);

  if (m == 1) {
    if (cols[0].values[0] == 0)
      throw ValidationError("basis columns are linearly dependent");
    steps.push_back(std::move(step));
    return IntVec{Int(1)};
  }

  std::vector<int> subset = first_independent_subset(cols, m - 1, m - 1);
  std::vector<bool> picked(cols.size(), false);
  for (int j : subset) picked[j] = true;
  int leftover = -1;
  for (int j = 0; j < m; ++j)
    if (!picked[j]) { leftover = j; break; }

  // Permuted order: the chosen subset in relative order, leftover last.
  std::vector<int> order(subset);
  order.push_back(leftover);
  step.column_order.clear();
  for (int j : order) step.column_order.push_back(cols[j].original_index);

  // Subproblem: projections (drop the last coordinate) of the subset columns.
  std::vector<LabeledColumn> sub;
  sub.reserve(m - 1);
  for (int j : subset) {
    LabeledColumn c;
    c.values.assign(cols[j].values.begin(), cols[j].values.end() - 1);
    c.original_index = cols[j].original_index;
    sub.push_back(std::move(c));
  }
  IntVec sub_coeffs = recurse(sub, m - 1, steps);

  // Lift: same coefficients on the full columns; the first m-1 coordinates
  // are nonzero by induction.
  IntVec coeffs(m, Int(0));
  for (int j = 0; j < m - 1; ++j) coeffs[j] = sub_coeffs[j];

  auto coeffs_in_input_order = [&](const IntVec& permuted) {
    IntVec out(m, Int(0));
    for (int slot = 0; slot < m; ++slot) {
      int j = (slot < m - 1) ? subset[slot] : leftover;
      out[j] = permuted[slot];
    }
    return out;
  };

  std::vector<LabeledColumn> permuted_cols;
  for (int j : order) permuted_cols.push_back(cols[j]);
  IntVec v = combine(permuted_cols, coeffs, m);

  if (v[m - 1] != 0) {
    steps.push_back(std::move(step));
    return coeffs_in_input_order(coeffs);
  }

  // Patch the vanishing last coordinate: smallest slot l whose column has a
  // nonzero last coordinate, then scan c = +1, -1, +2, -2, ...
  int l = -1;
  for (int slot = 0; slot < m; ++slot) {
    if (permuted_cols[slot].values[m - 1] != 0) { l = slot; break; }
  }
  if (l < 0) throw ValidationError("basis columns are linearly dependent");

  long half = (m + 1) / 2; // ceil(m/2)
  for (long mag = 1; mag <= half; ++mag) {
    for (long c : {mag, -mag}) {
      IntVec patched(v);
      for (int i = 0; i < m; ++i) patched[i] += Int(c) * permuted_cols[l].values[i];
      bool ok = std::all_of(patched.begin(), patched.end(),
                            [](const Int& x) { return x != 0; });
      if (!ok) continue;
      coeffs[l] += c;
      step.l = permuted_cols[l].original_index;
      step.c = c;
      steps.push_back(std::move(step));
      return coeffs_in_input_order(coeffs);
    }
  }
  // Each coordinate rules out at most one candidate and the scan offers more
  // candidates than coordinates, so this point is unreachable.
  throw std::logic_error("patch scan exhausted; construction invariant broken");
}

/// Number of integer vectors in Z^n with L1 norm exactly c.
Int l1_sphere_count(int n, long c) {
  if (c == 0) return Int(1);
  Int total(0);
  for (int k = 1; k <= std::min<long>(n, c); ++k) {
    Int ways;
    mpz_bin_uiui(ways.get_mpz_t(), n, k); // choose the nonzero slots
    Int comps;
    mpz_bin_uiui(comps.get_mpz_t(), c - 1, k - 1); // positive compositions
    Int signs(1);
    mpz_mul_2exp(signs.get_mpz_t(), signs.get_mpz_t(), k);
    total += ways * comps * signs;
  }
  return total;
}

/// Enumerates coefficient vectors with |a|_1 == remaining in lexicographic
/// order, maintaining the partial combination; returns true on first hit.
bool scan_level(const IntegerBasis& basis, int pos, long remaining,
                IntVec& coeffs, IntVec& partial, Combination& out) {
  int n = basis.n;
  if (pos == n) {
    if (remaining != 0) return false;
    for (const Int& x : partial)
      if (x == 0) return false;
    out.coeffs = coeffs;
    out.result = partial;
    return true;
  }
  if (pos == n - 1) {
    // last slot has its magnitude forced
    for (long t : {-remaining, remaining}) {
      coeffs[pos] = t;
      IntVec saved(partial);
      if (t != 0)
        for (int i = 0; i < n; ++i) partial[i] += Int(t) * basis.columns[pos][i];
      bool hit = scan_level(basis, pos + 1, 0, coeffs, partial, out);
      partial = saved;
      if (hit) return true;
      if (remaining == 0) break; // -0 and +0 coincide
    }
    coeffs[pos] = 0;
    return false;
  }
  for (long t = -remaining; t <= remaining; ++t) {
    coeffs[pos] = t;
    IntVec saved(partial);
    if (t != 0)
      for (int i = 0; i < n; ++i) partial[i] += Int(t) * basis.columns[pos][i];
    bool hit = scan_level(basis, pos + 1, remaining - std::abs(t), coeffs, partial, out);
    partial = saved;
    if (hit) return true;
  }
  coeffs[pos] = 0;
  return false;
}

} // namespace

IntegerBasis IntegerBasis::make(IntMat columns) {
  IntegerBasis basis;
  basis.n = static_cast<int>(columns.size());
  if (basis.n < 1) throw ValidationError("basis needs at least one column");
  for (const auto& col : columns)
    if (static_cast<int>(col.size()) != basis.n)
      throw ValidationError("basis matrix must be square");
  basis.columns = std::move(columns);
  if (int_rank(basis.columns) != basis.n)
    throw ValidationError("basis columns are linearly dependent");
  return basis;
}

Int v_n(int n) {
  if (n < 1) throw ValidationError("v_n requires n >= 1");
  return Int((n + 1) / 2) * Int((n + 2) / 2);
}

CombinationResult find_combination(const IntegerBasis& basis) {
  std::vector<LabeledColumn> cols;
  cols.reserve(basis.n);
  for (int j = 0; j < basis.n; ++j)
    cols.push_back(LabeledColumn{basis.columns[j], j});

  CombinationResult res;
  IntVec coeffs = recurse(cols, basis.n, res.steps);

  res.combination.coeffs = coeffs;
  res.combination.result = combine(cols, coeffs, basis.n);
  res.combination.cost = 0;
  for (const Int& a : coeffs) res.combination.cost += abs(a);

  if (res.combination.cost > v_n(basis.n))
    throw std::logic_error("combination cost exceeds the V_n ceiling");
  for (const Int& x : res.combination.result)
    if (x == 0) throw std::logic_error("combination left a zero coordinate");
  return res;
}

std::optional<Combination> brute_force_min_cost(const IntegerBasis& basis,
                                                long budget,
                                                const BruteForceOptions& opts) {
  if (budget < 1) return std::nullopt;
  Int inspected(0);
  for (long cost = 1; cost <= budget; ++cost) {
    inspected += l1_sphere_count(basis.n, cost);
    if (inspected > Int(opts.enumeration_cap))
      throw ResourceError("brute force enumeration exceeds cap of " +
                          std::to_string(opts.enumeration_cap) +
                          " candidates at cost level " + std::to_string(cost));
    IntVec coeffs(basis.n, Int(0));
    IntVec partial(basis.n, Int(0));
    Combination out;
    if (scan_level(basis, 0, cost, coeffs, partial, out)) {
      out.cost = cost;
      return out;
    }
  }
  return std::nullopt;
}

} // namespace syscow
