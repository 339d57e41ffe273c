#pragma once

#include "syscow/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace syscow {

/// A bound of the form q * pi^s, optionally scaled by named constants that
/// the source material leaves unquantified (c_n of the spin inequality,
/// Banaszczyk-style transference constants). Numeric only when no symbolic
/// factors remain.
struct SymbolicBound {
  Rat rational = Rat(0);
  int pi_power = 0;
  std::vector<std::string> symbolic_factors; // one entry per factor occurrence

  bool is_numeric() const { return symbolic_factors.empty(); }
  /// q * pi^s; nullopt while symbolic factors remain.
  std::optional<double> float_value() const;
  /// Replaces every occurrence of `name` by an exact rational value.
  SymbolicBound substitute(const std::string& name, const Rat& value) const;
  std::string to_string() const;

  bool operator==(const SymbolicBound& rhs) const;
};

struct TraceStep {
  std::string rule;    // registry key used by replay
  std::string formula; // rendered instance of the step
  std::map<std::string, std::string> inputs;
  std::string output;
};

/// Ordered derivation record. Replaying recomputes every step from its
/// recorded inputs and reproduces the final bound bit-exactly.
struct DerivationTrace {
  std::vector<TraceStep> steps;
};

struct BoundReport {
  SymbolicBound bound;
  DerivationTrace trace;
};

struct PipelineConfig {
  /// Upper-bound constant for Gamma_b <= C * b * log b, b >= 3. The source
  /// cites only the growth order; this default is a configuration value,
  /// not a verified constant.
  Rat banaszczyk_constant = Rat(1);
};

/// 4 n (2n - 1) / scal_min: the curvature-side cowaist ceiling for a spin
/// manifold of dimension 2n.
Rat acw_upper_bound(int half_dim, const Rat& scal_min);

/// n(2n - 1): the count of Clifford index pairs p < q among 2n directions;
/// checked against binomial(2n, 2).
long clifford_pair_count(int n);

/// Exact transference constant for b <= 2 (Gamma_1 = 1, Gamma_2 = 3/2);
/// nullopt for larger b, where only the growth order is known.
std::optional<Rat> gamma_exact(int b);

/// stsys_2 <= 2 pi V_n Gamma_n * acw(n, scal). Gamma defaults to the exact
/// value for n <= 2 and stays a symbolic factor otherwise unless supplied.
BoundReport stsys_bound_s2_power(int n, const Rat& scal_min,
                                 std::optional<Rat> gamma_n = std::nullopt);

/// stsys_2 <= 4 pi * acw(3, scal) on CP^3; refuses to emit when the twist-2
/// admissibility index vanishes (it equals 1, recorded in the trace).
BoundReport stsys_bound_cp3(const Rat& scal_min);

/// Kaehler volume: Vol <= (4 pi * acw(3, scal))^3 / 6 on CP^3.
BoundReport kahler_volume_bound_cp3(const Rat& scal_min);

/// Vol <= (2 pi c_n / scal)^n / n! on CP^n with the spin constant c_n kept
/// symbolic; substituting the line-bundle value reproduces the CP^3 chain.
BoundReport kahler_volume_bound_cpn(int n, const Rat& scal_min);

/// stsys_2 <= 2 pi Gamma_{b2} c_m / scal for a 2-essential manifold of
/// dimension 2m with second Betti number b2 (times an enlargeable factor).
BoundReport generic_2essential_bound(int b2, int half_dim, const Rat& scal_min,
                                     const PipelineConfig& config = {});

struct AsymptoticRow {
  int n = 0;
  Int v;                 // V_n
  double gamma = 0.0;    // exact for n = 2, configured C * n * log n after
  double bound = 0.0;    // chain bound at scal = 2n, in absolute terms
  double envelope = 0.0; // K n^4 log n with K = (9/2) pi C
  bool within = false;
};

struct AsymptoticTable {
  std::vector<AsymptoticRow> rows;
  bool all_within = false;
};

/// Tabulates the sphere-power chain bound at scal = 2n for n = 2..n_max and
/// checks the n^4 log n envelope implied by the configured constant.
AsymptoticTable asymptotic_check_s2_power(int n_max,
                                          const PipelineConfig& config = {});

/// Recomputes every trace step from its recorded inputs and returns the
/// final bound; throws ValidationError on any mismatch.
SymbolicBound replay(const DerivationTrace& trace);

} // namespace syscow
