#include "syscow/norms.hpp"

#include "syscow/bivector.hpp"
#include "syscow/errors.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <limits>
#include <memory>

namespace syscow {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// conservative slack on float-derived sandwich constants
constexpr double kLoSlack = 1.0 - 1e-9;
constexpr double kHiSlack = 1.0 + 1e-9;

void check_dim(const NormOracle& norm, const Eigen::VectorXd& x) {
  if (x.size() != norm.dim)
    throw ValidationError("norm argument has the wrong dimension");
}

Eigen::VectorXd ones_if_empty(Eigen::VectorXd w, int dim) {
  if (w.size() == 0) return Eigen::VectorXd::Ones(dim);
  return w;
}

/// Precomputed invertible d-subsets of the vertex columns, used to evaluate
/// the polytope gauge as min_S |V_S^{-1} x|_1. Every subset value is the
/// cost of a feasible representation and some basic subset attains the
/// optimum, so the minimum is exact.
struct GaugeTable {
  std::vector<Eigen::MatrixXd> inverses;

  explicit GaugeTable(const Eigen::MatrixXd& vertices) {
    const int d = static_cast<int>(vertices.rows());
    const int m = static_cast<int>(vertices.cols());
    std::vector<int> subset(d);
    std::function<void(int, int)> rec = [&](int pos, int next) {
      if (pos == d) {
        Eigen::MatrixXd sub(d, d);
        for (int j = 0; j < d; ++j) sub.col(j) = vertices.col(subset[j]);
        Eigen::FullPivLU<Eigen::MatrixXd> lu(sub);
        if (lu.isInvertible()) inverses.push_back(lu.inverse());
        return;
      }
      for (int j = next; j <= m - (d - pos); ++j) {
        subset[pos] = j;
        rec(pos + 1, j + 1);
      }
    };
    rec(0, 0);
    if (inverses.empty())
      throw ValidationError("polytope vertices do not span the space");
  }

  double gauge(const Eigen::VectorXd& x) const {
    double best = kInf;
    for (const auto& inv : inverses) {
      double cost = (inv * x).lpNorm<1>();
      best = std::min(best, cost);
    }
    return best;
  }
};

double smallest_singular_value(const Eigen::MatrixXd& m) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  return svd.singularValues().minCoeff();
}

} // namespace

NormOracle euclidean_norm(int dim) {
  if (dim < 1) throw ValidationError("norm dimension must be >= 1");
  NormOracle n;
  n.dim = dim;
  n.kind = "euclidean";
  n.eval = [](const Eigen::VectorXd& x) { return x.norm(); };
  n.lo = 1.0;
  n.hi = 1.0;
  n.dual_eval = n.eval;
  return n;
}

NormOracle l1_norm(int dim) { return weighted_lp_norm(dim, 1.0); }

NormOracle linf_norm(int dim) { return weighted_lp_norm(dim, kInf); }

NormOracle weighted_lp_norm(int dim, double p, Eigen::VectorXd weights) {
  if (dim < 1) throw ValidationError("norm dimension must be >= 1");
  if (!(p >= 1.0)) throw ValidationError("lp exponent must satisfy p >= 1");
  Eigen::VectorXd w = ones_if_empty(std::move(weights), dim);
  if (w.size() != dim || w.minCoeff() <= 0.0)
    throw ValidationError("lp weights must be positive and match the dimension");

  NormOracle n;
  n.dim = dim;
  n.kind = (p == 1.0 && w.isOnes())    ? "l1"
           : (p == kInf && w.isOnes()) ? "linf"
                                       : "lp";
  n.p = p;
  n.weights = w;

  const double wmin = w.minCoeff(), wmax = w.maxCoeff();
  if (p == kInf) {
    n.eval = [w](const Eigen::VectorXd& x) {
      return (w.array() * x.array().abs()).maxCoeff();
    };
    n.lo = wmin / std::sqrt(static_cast<double>(dim)) * kLoSlack;
    n.hi = wmax * kHiSlack;
    n.dual_eval = [w](const Eigen::VectorXd& y) {
      return (y.array().abs() / w.array()).sum();
    };
  } else {
    n.eval = [w, p](const Eigen::VectorXd& x) {
      return std::pow((w.array() * x.array().abs().pow(p)).sum(), 1.0 / p);
    };
    // |x|_p vs |x|_2 over R^dim: the dimension factor sits on one side of
    // p = 2 only, and weights scale by w^{1/p}.
    const double dim_pow = std::pow(static_cast<double>(dim), 1.0 / p - 0.5);
    n.lo = std::pow(wmin, 1.0 / p) * std::min(1.0, dim_pow) * kLoSlack;
    n.hi = std::pow(wmax, 1.0 / p) * std::max(1.0, dim_pow) * kHiSlack;
    if (p == 1.0) {
      n.dual_eval = [w](const Eigen::VectorXd& y) {
        return (y.array().abs() / w.array()).maxCoeff();
      };
    } else {
      const double q = p / (p - 1.0);
      Eigen::VectorXd dw = w.array().pow(-q / p);
      n.dual_eval = [dw, q](const Eigen::VectorXd& y) {
        return std::pow((dw.array() * y.array().abs().pow(q)).sum(), 1.0 / q);
      };
    }
  }
  return n;
}

NormOracle polytope_norm(const Eigen::MatrixXd& vertices) {
  const int d = static_cast<int>(vertices.rows());
  const int m = static_cast<int>(vertices.cols());
  if (d < 1 || m < d)
    throw ValidationError("polytope norm needs at least dim spanning vertices");

  auto table = std::make_shared<GaugeTable>(vertices);
  const double smin = smallest_singular_value(vertices);
  if (smin <= 0.0)
    throw ValidationError("polytope vertices do not span the space");
  const double vmax = vertices.colwise().norm().maxCoeff();

  NormOracle n;
  n.dim = d;
  n.kind = "polytope";
  n.vertices = vertices;
  n.eval = [table](const Eigen::VectorXd& x) { return table->gauge(x); };
  n.lo = (1.0 / vmax) * kLoSlack;
  n.hi = std::sqrt(static_cast<double>(m)) / smin * kHiSlack;
  Eigen::MatrixXd vt = vertices.transpose();
  n.dual_eval = [vt](const Eigen::VectorXd& y) {
    return (vt * y).cwiseAbs().maxCoeff();
  };
  return n;
}

NormOracle polytope_support_norm(const Eigen::MatrixXd& vertices) {
  const int d = static_cast<int>(vertices.rows());
  const int m = static_cast<int>(vertices.cols());
  if (d < 1 || m < d)
    throw ValidationError("polytope norm needs at least dim spanning vertices");

  const double smin = smallest_singular_value(vertices);
  if (smin <= 0.0)
    throw ValidationError("polytope vertices do not span the space");
  const double vmax = vertices.colwise().norm().maxCoeff();

  NormOracle n;
  n.dim = d;
  n.kind = "polytope_dual";
  n.vertices = vertices;
  Eigen::MatrixXd vt = vertices.transpose();
  n.eval = [vt](const Eigen::VectorXd& x) {
    return (vt * x).cwiseAbs().maxCoeff();
  };
  n.lo = smin / std::sqrt(static_cast<double>(m)) * kLoSlack;
  n.hi = vmax * kHiSlack;
  auto table = std::make_shared<GaugeTable>(vertices);
  n.dual_eval = [table](const Eigen::VectorXd& y) { return table->gauge(y); };
  return n;
}

NormOracle mass_norm(int n) {
  if (n < 2) throw ValidationError("mass norm needs n >= 2");
  const int d = packed_dim(n);
  const double planes = static_cast<double>(n / 2);
  NormOracle out;
  out.dim = d;
  out.kind = "mass";
  out.bivector_n = n;
  out.eval = [n](const Eigen::VectorXd& x) {
    return mass(Bivector::from_packed(n, x, Variance::vector));
  };
  out.lo = 1.0 * kLoSlack;
  out.hi = std::sqrt(planes) * kHiSlack;
  out.dual_eval = [n](const Eigen::VectorXd& y) {
    return comass(Bivector::from_packed(n, y, Variance::form));
  };
  return out;
}

NormOracle comass_norm(int n) {
  if (n < 2) throw ValidationError("comass norm needs n >= 2");
  const int d = packed_dim(n);
  const double planes = static_cast<double>(n / 2);
  NormOracle out;
  out.dim = d;
  out.kind = "comass";
  out.bivector_n = n;
  out.eval = [n](const Eigen::VectorXd& x) {
    return comass(Bivector::from_packed(n, x, Variance::form));
  };
  out.lo = (1.0 / std::sqrt(planes)) * kLoSlack;
  out.hi = 1.0 * kHiSlack;
  out.dual_eval = [n](const Eigen::VectorXd& y) {
    return mass(Bivector::from_packed(n, y, Variance::vector));
  };
  return out;
}

NormOracle custom_norm(int dim, std::function<double(const Eigen::VectorXd&)> eval,
                       double lo, double hi,
                       std::function<double(const Eigen::VectorXd&)> dual_eval) {
  if (dim < 1) throw ValidationError("norm dimension must be >= 1");
  if (!(lo > 0.0) || !(hi >= lo))
    throw ValidationError("sandwich constants need 0 < lo <= hi");
  NormOracle n;
  n.dim = dim;
  n.kind = "custom";
  n.eval = std::move(eval);
  n.lo = lo;
  n.hi = hi;
  n.dual_eval = std::move(dual_eval);
  return n;
}

double dual_norm(const NormOracle& norm, const Eigen::VectorXd& y) {
  check_dim(norm, y);
  if (!norm.has_dual())
    throw UnsupportedNormError("norm '" + norm.kind +
                               "' has no exact dual evaluator");
  return norm.dual_eval(y);
}

NormOracle dual_oracle(const NormOracle& norm) {
  if (!norm.has_dual())
    throw UnsupportedNormError("norm '" + norm.kind +
                               "' has no exact dual evaluator");
  if (norm.kind == "euclidean") return euclidean_norm(norm.dim);
  if (norm.kind == "polytope") return polytope_support_norm(norm.vertices);
  if (norm.kind == "polytope_dual") return polytope_norm(norm.vertices);
  if (norm.kind == "mass") return comass_norm(norm.bivector_n);
  if (norm.kind == "comass") return mass_norm(norm.bivector_n);
  if (norm.kind == "l1" || norm.kind == "linf" || norm.kind == "lp") {
    Eigen::VectorXd w = ones_if_empty(norm.weights, norm.dim);
    if (norm.p == kInf) {
      return weighted_lp_norm(norm.dim, 1.0, w.cwiseInverse());
    }
    if (norm.p == 1.0) {
      return weighted_lp_norm(norm.dim, kInf, w.cwiseInverse());
    }
    const double q = norm.p / (norm.p - 1.0);
    Eigen::VectorXd dw = w.array().pow(-q / norm.p);
    return weighted_lp_norm(norm.dim, q, dw);
  }
  // custom with an explicit dual evaluator: swap the roles
  NormOracle out;
  out.dim = norm.dim;
  out.kind = "custom";
  out.eval = norm.dual_eval;
  out.lo = 1.0 / norm.hi;
  out.hi = 1.0 / norm.lo;
  out.dual_eval = norm.eval;
  return out;
}

} // namespace syscow
