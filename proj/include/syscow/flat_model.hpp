#pragma once

#include "syscow/lattice.hpp"
#include "syscow/rational.hpp"

#include <Eigen/Dense>

#include <optional>
#include <vector>

namespace syscow {

/// Flat torus R^n / Z^n with the constant metric given by a symmetric
/// positive-definite Gram matrix on the universal cover.
struct FlatTorusMetric {
  int n = 0;
  Eigen::MatrixXd gram;

  /// Validates exact symmetry and positive-definiteness (Cholesky succeeds).
  static FlatTorusMetric make(const Eigen::MatrixXd& gram);
};

/// Product of round 2-spheres of the given radii with an optional flat
/// torus factor.
struct ProductModel {
  std::vector<double> sphere_radii;
  std::optional<FlatTorusMetric> torus;

  static ProductModel make(std::vector<double> sphere_radii,
                           std::optional<FlatTorusMetric> torus);
};

/// Integer degree-2 homology class of a sphere-product x torus model:
/// multiples of the sphere classes plus an integer 2-vector on the torus.
struct H2Class {
  IntVec sphere_part;            // length m
  IntMat torus_part;             // n x n antisymmetric integer array

  static H2Class make(IntVec sphere_part, IntMat torus_part);
  static H2Class zero(int m, int n);
};

struct SystoleResult {
  double value = 0.0;
  H2Class witness;
};

/// Smallest stable norm over nonzero integer 2-vector classes of the torus:
/// lambda_1 of the integer bivector lattice under xi -> mass of the metric
/// pushforward of xi. The witness is the realizing integer 2-vector.
SystoleResult torus_stable_2_systole(const FlatTorusMetric& metric,
                                     const MinimaOptions& opts = {});

/// Stable 2-systole of the product model: minimum of the sphere class norms
/// 4 pi r_j^2 and, when the torus factor is present, its stable 2-systole.
/// Mixed sphere-torus classes carry the sum of their pure parts' norms in a
/// product metric and never attain the minimum.
SystoleResult product_model_stsys(const ProductModel& model,
                                  const MinimaOptions& opts = {});

/// Minimum of the stable norm over nonzero integer combinations of sphere
/// classes only: min_j 4 pi r_j^2 for a product metric.
SystoleResult spherical_restricted_systole(const ProductModel& model);

/// Homology pushforward of the l-fold cover of every circle factor: sphere
/// classes are fixed, torus classes scale by l^2.
H2Class covering_pushforward(const H2Class& cls, long l);

/// Stable norm of a single class in the product model, using the documented
/// product rule: pure sphere part sum 4 pi r_j^2 |a_j|, plus the mass of the
/// torus part under the flat metric.
double class_stable_norm(const ProductModel& model, const H2Class& cls);

/// The norm oracle on packed integer 2-vector coordinates used by the torus
/// systole; exposed for tests and the lattice-minima CLI.
NormOracle torus_mass_norm(const FlatTorusMetric& metric);

} // namespace syscow
