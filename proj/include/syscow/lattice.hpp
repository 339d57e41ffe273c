#pragma once

#include "syscow/norms.hpp"
#include "syscow/rational.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

namespace syscow {

/// Full-rank lattice in R^dim spanned by the columns of an exact rational
/// basis matrix.
struct Lattice {
  int dim = 0;
  RatMat basis; // basis[i][j] = coordinate i of basis vector j

  static Lattice make(RatMat basis);

  /// Standard integer lattice Z^dim.
  static Lattice standard(int dim);

  Eigen::MatrixXd basis_double() const;
  /// Embeds integer coordinates as a floating vector of the ambient space.
  Eigen::VectorXd embed(const IntVec& coords) const;
};

struct MinimaResult {
  std::vector<double> values;    // nondecreasing norms lambda_1..lambda_k
  std::vector<IntVec> witnesses; // integer coordinates w.r.t. the input basis
};

struct MinimaOptions {
  std::uint64_t max_candidates = 100'000'000;
  bool parallel = true;
};

/// Successive minima lambda_1 <= ... <= lambda_k of the lattice under the
/// norm oracle. Enumeration is radius-bounded in the Euclidean metric via
/// the oracle's certified sandwich, so every lattice vector with norm up to
/// lambda_k is inspected. Witnesses realize the minima; ties are broken by
/// the lexicographically smallest integer coordinate vector.
MinimaResult successive_minima(const Lattice& lattice, const NormOracle& norm,
                               int k, const MinimaOptions& opts = {});

/// Basis = inverse transpose of the input basis, exactly; the pairing of
/// input and output basis vectors is the Kronecker delta.
Lattice dual_lattice(const Lattice& lattice);

/// lambda_1(lattice, norm) * lambda_dim(dual lattice, dual norm); the
/// transference product whose supremum over all pairs is Gamma_dim.
double gamma_product(const Lattice& lattice, const NormOracle& norm,
                     const MinimaOptions& opts = {});

struct GammaInstance {
  Lattice lattice;
  NormOracle norm; // polytope gauge with vertices on the unit sphere
};

/// Deterministic random lattice / polytope-norm pair for the transference
/// search and its property tests.
GammaInstance random_gamma_instance(int b, std::uint64_t seed);

struct GammaSearchResult {
  double best = 0.0;
  int best_trial = -1;
  GammaInstance witness;
};

/// Randomized lower-bound search for Gamma_b: the largest transference
/// product over `trials` seeded instances. Deterministic given the seed.
GammaSearchResult gamma_lower_bound_search(int b, int trials, std::uint64_t seed,
                                           const MinimaOptions& opts = {});

/// splitmix64; the project-wide deterministic generator for randomized
/// searches (stable across platforms, unlike distribution wrappers).
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next();
  double uniform();            // [0, 1)
  double normal();             // Box-Muller
  long uniform_int(long lo, long hi); // inclusive
};

} // namespace syscow
