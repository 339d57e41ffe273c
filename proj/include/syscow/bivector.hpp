#pragma once

#include <Eigen/Dense>

#include <utility>
#include <vector>

namespace syscow {

enum class Variance { vector, form };

/// Degree-2 element of the exterior algebra over R^n, stored as its
/// antisymmetric coefficient matrix: entry (i, j) with i < j multiplies
/// e_i ^ e_j. The variance tag separates 2-vectors (cycle side) from
/// 2-forms (cohomology side); the arithmetic is shared.
class Bivector {
public:
  Bivector(int dim, Variance variance);

  /// Validates exact antisymmetry (including a zero diagonal).
  static Bivector from_matrix(const Eigen::MatrixXd& coeffs, Variance variance);

  /// Builds from the packed upper triangle in lexicographic (i < j) order.
  static Bivector from_packed(int dim, const Eigen::VectorXd& packed,
                              Variance variance);

  static Bivector simple(int dim, int i, int j, double coefficient,
                         Variance variance);

  int dim() const { return dim_; }
  Variance variance() const { return variance_; }
  const Eigen::MatrixXd& matrix() const { return coeffs_; }

  double coeff(int i, int j) const { return coeffs_(i, j); }
  /// Sets the (i, j) and (j, i) entries together, i != j.
  void set_coeff(int i, int j, double value);

  /// Packed upper triangle, lexicographic (i < j), length dim*(dim-1)/2.
  Eigen::VectorXd packed() const;

  Bivector operator+(const Bivector& rhs) const;
  Bivector operator*(double scalar) const;

  /// Pushforward along a linear map: coefficients become M * C * M^T.
  Bivector transformed(const Eigen::MatrixXd& map) const;

private:
  int dim_;
  Variance variance_;
  Eigen::MatrixXd coeffs_;
};

/// Spectral normal form sum_i lambda_i u_i ^ v_i with lambda_1 >= ... > 0,
/// mutually orthogonal 2-planes, and orthonormal frame pairs (u_i, v_i).
struct CanonicalDecomposition {
  std::vector<double> lambdas;
  std::vector<std::pair<Eigen::VectorXd, Eigen::VectorXd>> planes;

  /// Rebuilds sum lambda_i u_i ^ v_i for verification.
  Eigen::MatrixXd reconstruct(int dim) const;
};

/// Canonical decomposition through the eigendecomposition of -C^2.
/// Near-equal singular values (gap below 1e-12 relative to the largest)
/// are handled inside one multiplicity block so plane extraction stays
/// stable.
CanonicalDecomposition canonical_form(const Bivector& xi);

/// Sum of the canonical singular values; the mass norm of the parallel
/// representative. Zero exactly when xi is zero.
double mass(const Bivector& xi);

/// Largest canonical singular value; the comass of a constant-coefficient
/// 2-form (its sup over unit simple bivectors).
double comass(const Bivector& phi);

/// Duality pairing sum_{i<j} xi_{ij} phi_{ij}.
double pairing(const Bivector& xi, const Bivector& phi);

int packed_dim(int n);
std::pair<int, int> packed_index_to_pair(int n, int index);

} // namespace syscow
