#include "syscow/flat_model.hpp"

#include "syscow/bivector.hpp"
#include "syscow/errors.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <numbers>

namespace syscow {

namespace {

constexpr double kFourPi = 4.0 * std::numbers::pi;

Eigen::MatrixXd isometry_factor(const Eigen::MatrixXd& gram) {
  Eigen::LLT<Eigen::MatrixXd> llt(gram);
  if (llt.info() != Eigen::Success)
    throw ValidationError("torus gram matrix is not positive definite");
  // G = L L^T, so x -> L^T x is an isometry onto Euclidean space.
  return Eigen::MatrixXd(llt.matrixL()).transpose();
}

} // namespace

FlatTorusMetric FlatTorusMetric::make(const Eigen::MatrixXd& gram) {
  FlatTorusMetric out;
  out.n = static_cast<int>(gram.rows());
  if (out.n < 2) throw ValidationError("torus dimension must be >= 2");
  if (gram.cols() != gram.rows())
    throw ValidationError("torus gram matrix must be square");
  for (int i = 0; i < out.n; ++i)
    for (int j = i + 1; j < out.n; ++j)
      if (gram(i, j) != gram(j, i))
        throw ValidationError("torus gram matrix must be symmetric");
  isometry_factor(gram); // positive definiteness check
  out.gram = gram;
  return out;
}

ProductModel ProductModel::make(std::vector<double> sphere_radii,
                                std::optional<FlatTorusMetric> torus) {
  for (double r : sphere_radii)
    if (!(r > 0.0)) throw ValidationError("sphere radii must be positive");
  if (sphere_radii.empty() && !torus.has_value())
    throw ValidationError("product model needs at least one factor");
  return ProductModel{std::move(sphere_radii), std::move(torus)};
}

H2Class H2Class::make(IntVec sphere_part, IntMat torus_part) {
  const int n = static_cast<int>(torus_part.size());
  for (const auto& row : torus_part)
    if (static_cast<int>(row.size()) != n)
      throw ValidationError("torus class array must be square");
  for (int i = 0; i < n; ++i) {
    if (torus_part[i][i] != 0)
      throw ValidationError("torus class array has a nonzero diagonal");
    for (int j = i + 1; j < n; ++j)
      if (torus_part[i][j] != -torus_part[j][i])
        throw ValidationError("torus class array is not antisymmetric");
  }
  return H2Class{std::move(sphere_part), std::move(torus_part)};
}

H2Class H2Class::zero(int m, int n) {
  return H2Class{IntVec(m, Int(0)), IntMat(n, IntVec(n, Int(0)))};
}

NormOracle torus_mass_norm(const FlatTorusMetric& metric) {
  const int n = metric.n;
  const Eigen::MatrixXd map = isometry_factor(metric.gram);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(metric.gram);
  const double gmin = es.eigenvalues().minCoeff();
  const double gmax = es.eigenvalues().maxCoeff();

  NormOracle oracle;
  oracle.dim = packed_dim(n);
  oracle.kind = "custom";
  oracle.bivector_n = n;
  oracle.eval = [n, map](const Eigen::VectorXd& x) {
    Bivector xi = Bivector::from_packed(n, x, Variance::vector);
    return mass(xi.transformed(map));
  };
  // mass of the pushforward vs the Euclidean coefficient norm: the exterior
  // square of the isometry factor has singular values in [gmin, gmax].
  oracle.lo = gmin * (1.0 - 1e-9);
  oracle.hi = std::sqrt(static_cast<double>(n / 2)) * gmax * (1.0 + 1e-9);
  return oracle;
}

SystoleResult torus_stable_2_systole(const FlatTorusMetric& metric,
                                     const MinimaOptions& opts) {
  const int n = metric.n;
  Lattice coefficients = Lattice::standard(packed_dim(n));
  NormOracle oracle = torus_mass_norm(metric);
  MinimaResult minima = successive_minima(coefficients, oracle, 1, opts);

  IntMat torus_part(n, IntVec(n, Int(0)));
  const IntVec& packed = minima.witnesses[0];
  int idx = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      torus_part[i][j] = packed[idx];
      torus_part[j][i] = -packed[idx];
      ++idx;
    }
  return SystoleResult{minima.values[0], H2Class{IntVec{}, std::move(torus_part)}};
}

SystoleResult product_model_stsys(const ProductModel& model,
                                  const MinimaOptions& opts) {
  const int m = static_cast<int>(model.sphere_radii.size());
  const int n = model.torus ? model.torus->n : 0;

  SystoleResult best;
  best.value = std::numeric_limits<double>::infinity();
  for (int j = 0; j < m; ++j) {
    double area = kFourPi * model.sphere_radii[j] * model.sphere_radii[j];
    if (area < best.value) {
      best.value = area;
      best.witness = H2Class::zero(m, n);
      best.witness.sphere_part[j] = 1;
    }
  }
  if (model.torus) {
    SystoleResult torus = torus_stable_2_systole(*model.torus, opts);
    if (torus.value < best.value) {
      best.value = torus.value;
      best.witness = H2Class{IntVec(m, Int(0)), torus.witness.torus_part};
    }
  }
  return best;
}

SystoleResult spherical_restricted_systole(const ProductModel& model) {
  const int m = static_cast<int>(model.sphere_radii.size());
  if (m < 1)
    throw ValidationError("spherical systole needs at least one sphere class");
  const int n = model.torus ? model.torus->n : 0;

  SystoleResult best;
  best.value = std::numeric_limits<double>::infinity();
  for (int j = 0; j < m; ++j) {
    double area = kFourPi * model.sphere_radii[j] * model.sphere_radii[j];
    if (area < best.value) {
      best.value = area;
      best.witness = H2Class::zero(m, n);
      best.witness.sphere_part[j] = 1;
    }
  }
  return best;
}

H2Class covering_pushforward(const H2Class& cls, long l) {
  if (l < 1) throw ValidationError("covering degree must be >= 1");
  H2Class out = cls;
  const Int factor = Int(l) * Int(l);
  for (auto& row : out.torus_part)
    for (auto& entry : row) entry *= factor;
  return out;
}

double class_stable_norm(const ProductModel& model, const H2Class& cls) {
  const int m = static_cast<int>(model.sphere_radii.size());
  if (static_cast<int>(cls.sphere_part.size()) != m)
    throw ValidationError("class sphere part does not match the model");

  double total = 0.0;
  for (int j = 0; j < m; ++j)
    total += kFourPi * model.sphere_radii[j] * model.sphere_radii[j] *
             std::abs(cls.sphere_part[j].get_d());

  const int n = static_cast<int>(cls.torus_part.size());
  bool torus_nonzero = false;
  for (const auto& row : cls.torus_part)
    for (const auto& entry : row)
      if (entry != 0) torus_nonzero = true;
  if (torus_nonzero) {
    if (!model.torus || model.torus->n != n)
      throw ValidationError("class torus part does not match the model");
    Bivector xi(n, Variance::vector);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        xi.set_coeff(i, j, cls.torus_part[i][j].get_d());
    total += mass(xi.transformed(isometry_factor(model.torus->gram)));
  }
  return total;
}

} // namespace syscow
