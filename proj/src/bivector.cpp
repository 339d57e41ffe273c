#include "syscow/bivector.hpp"

#include "syscow/errors.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace syscow {

Bivector::Bivector(int dim, Variance variance)
    : dim_(dim), variance_(variance), coeffs_(Eigen::MatrixXd::Zero(dim, dim)) {
  if (dim < 2) throw ValidationError("bivector dimension must be >= 2");
}

Bivector Bivector::from_matrix(const Eigen::MatrixXd& coeffs, Variance variance) {
  if (coeffs.rows() != coeffs.cols())
    throw ValidationError("bivector coefficient matrix must be square");
  Bivector out(static_cast<int>(coeffs.rows()), variance);
  for (int i = 0; i < coeffs.rows(); ++i) {
    if (coeffs(i, i) != 0.0)
      throw ValidationError("bivector coefficient matrix has a nonzero diagonal");
    for (int j = i + 1; j < coeffs.cols(); ++j)
      if (coeffs(i, j) != -coeffs(j, i))
        throw ValidationError("bivector coefficient matrix is not antisymmetric");
  }
  out.coeffs_ = coeffs;
  return out;
}

Bivector Bivector::from_packed(int dim, const Eigen::VectorXd& packed,
                               Variance variance) {
  Bivector out(dim, variance);
  if (packed.size() != packed_dim(dim))
    throw ValidationError("packed bivector has the wrong length");
  int idx = 0;
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) out.set_coeff(i, j, packed(idx++));
  return out;
}

Bivector Bivector::simple(int dim, int i, int j, double coefficient,
                          Variance variance) {
  Bivector out(dim, variance);
  out.set_coeff(i, j, coefficient);
  return out;
}

void Bivector::set_coeff(int i, int j, double value) {
  if (i == j || i < 0 || j < 0 || i >= dim_ || j >= dim_)
    throw ValidationError("bivector coefficient index out of range");
  coeffs_(i, j) = value;
  coeffs_(j, i) = -value;
}

Eigen::VectorXd Bivector::packed() const {
  Eigen::VectorXd out(packed_dim(dim_));
  int idx = 0;
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j) out(idx++) = coeffs_(i, j);
  return out;
}

Bivector Bivector::operator+(const Bivector& rhs) const {
  if (rhs.dim_ != dim_) throw ValidationError("bivector dimension mismatch");
  Bivector out(dim_, variance_);
  out.coeffs_ = coeffs_ + rhs.coeffs_;
  return out;
}

Bivector Bivector::operator*(double scalar) const {
  Bivector out(dim_, variance_);
  out.coeffs_ = coeffs_ * scalar;
  return out;
}

Bivector Bivector::transformed(const Eigen::MatrixXd& map) const {
  if (map.rows() != map.cols() || map.rows() != dim_)
    throw ValidationError("bivector transform must be square of matching size");
  Bivector out(dim_, variance_);
  Eigen::MatrixXd m = map * coeffs_ * map.transpose();
  out.coeffs_ = 0.5 * (m - m.transpose()); // scrub float asymmetry
  return out;
}

Eigen::MatrixXd CanonicalDecomposition::reconstruct(int dim) const {
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(dim, dim);
  for (std::size_t k = 0; k < lambdas.size(); ++k) {
    const auto& [u, v] = planes[k];
    out += lambdas[k] * (u * v.transpose() - v * u.transpose());
  }
  return out;
}

CanonicalDecomposition canonical_form(const Bivector& xi) {
  const int n = xi.dim();
  const Eigen::MatrixXd& a = xi.matrix();

  // -A^2 is symmetric positive semidefinite with eigenvalues lambda_i^2,
  // each nonzero one of even multiplicity.
  Eigen::MatrixXd s = -(a * a);
  s = 0.5 * (s + s.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(s);
  if (es.info() != Eigen::Success)
    throw ValidationError("eigendecomposition failed");

  Eigen::VectorXd evals = es.eigenvalues(); // ascending
  Eigen::MatrixXd evecs = es.eigenvectors();

  const double scale = std::sqrt(std::max(evals(n - 1), 0.0));
  const double zero_tol = std::max(1e-12, 1e-12 * scale);
  const double gap_tol = std::max(1e-12, 1e-12 * scale);

  CanonicalDecomposition out;
  int hi = n - 1;
  while (hi >= 0) {
    double lambda = std::sqrt(std::max(evals(hi), 0.0));
    if (lambda <= zero_tol) break; // remaining eigenvalues are the kernel
    // group near-equal singular values into one multiplicity block
    int lo = hi;
    while (lo - 1 >= 0) {
      double next = std::sqrt(std::max(evals(lo - 1), 0.0));
      if (lambda - next <= gap_tol)
        --lo;
      else
        break;
    }
    int block = hi - lo + 1; // even: invariant subspace of dimension 2r
    Eigen::MatrixXd basis = evecs.middleCols(lo, block);
    // Inside the block A acts as lambda times a complex structure: pick u,
    // set v = A u / |A u|, record the plane, deflate, repeat.
    while (basis.cols() >= 2) {
      Eigen::VectorXd u = basis.col(0);
      u.normalize();
      Eigen::VectorXd w = a * u;
      double lam = w.norm();
      if (lam <= zero_tol) break;
      w /= lam;
      // A u = -lam v for the plane contribution lam * w ^ u
      out.lambdas.push_back(lam);
      out.planes.emplace_back(w, u);
      // deflate span(u, w) out of the block basis
      Eigen::MatrixXd next(basis.rows(), basis.cols() - 2);
      int kept = 0;
      for (int c = 0; c < basis.cols() && kept < next.cols(); ++c) {
        Eigen::VectorXd col = basis.col(c);
        col -= u * u.dot(col) + w * w.dot(col);
        for (int k = 0; k < kept; ++k) col -= next.col(k) * next.col(k).dot(col);
        double norm = col.norm();
        if (norm > 1e-8) next.col(kept++) = col / norm;
      }
      if (kept != next.cols())
        throw ValidationError("canonical form deflation lost rank");
      basis = std::move(next);
    }
    hi = lo - 1;
  }

  // largest first, stable under exact ties
  std::vector<std::size_t> order(out.lambdas.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t p, std::size_t q) {
    return out.lambdas[p] > out.lambdas[q];
  });
  CanonicalDecomposition sorted;
  for (std::size_t k : order) {
    sorted.lambdas.push_back(out.lambdas[k]);
    sorted.planes.push_back(out.planes[k]);
  }
  return sorted;
}

double mass(const Bivector& xi) {
  CanonicalDecomposition d = canonical_form(xi);
  double sum = 0.0;
  for (double l : d.lambdas) sum += l;
  return sum;
}

double comass(const Bivector& phi) {
  CanonicalDecomposition d = canonical_form(phi);
  return d.lambdas.empty() ? 0.0 : d.lambdas.front();
}

double pairing(const Bivector& xi, const Bivector& phi) {
  if (xi.dim() != phi.dim())
    throw ValidationError("pairing requires equal dimensions");
  double sum = 0.0;
  for (int i = 0; i < xi.dim(); ++i)
    for (int j = i + 1; j < xi.dim(); ++j) sum += xi.coeff(i, j) * phi.coeff(i, j);
  return sum;
}

int packed_dim(int n) { return n * (n - 1) / 2; }

std::pair<int, int> packed_index_to_pair(int n, int index) {
  int idx = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (idx++ == index) return {i, j};
  throw ValidationError("packed index out of range");
}

} // namespace syscow
