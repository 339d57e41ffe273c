#pragma once

#include <Eigen/Dense>

#include <functional>
#include <string>
#include <vector>

namespace syscow {

/// A norm on R^dim given by an evaluator plus certified equivalence
/// constants lo * |x|_2 <= eval(x) <= hi * |x|_2. Built-in families carry an
/// exact dual evaluator; arbitrary oracles may leave it empty, in which case
/// dual_norm refuses rather than approximate.
struct NormOracle {
  int dim = 0;
  std::string kind; // euclidean | l1 | linf | lp | polytope | polytope_dual
                    // | mass | comass | custom
  std::function<double(const Eigen::VectorXd&)> eval;
  double lo = 0.0;
  double hi = 0.0;
  std::function<double(const Eigen::VectorXd&)> dual_eval;

  // family parameters, kept for serialization and dual construction
  double p = 0.0;                 // lp exponent; infinity() for the sup norm
  Eigen::VectorXd weights;        // lp weights; empty means all ones
  Eigen::MatrixXd vertices;       // polytope vertices as columns
  int bivector_n = 0;             // mass/comass: underlying space dimension

  bool has_dual() const { return static_cast<bool>(dual_eval); }
};

NormOracle euclidean_norm(int dim);
NormOracle l1_norm(int dim);
NormOracle linf_norm(int dim);

/// (sum_i w_i |x_i|^p)^{1/p}; p in [1, inf], weights positive (empty = ones).
/// p = infinity means max_i w_i |x_i|.
NormOracle weighted_lp_norm(int dim, double p, Eigen::VectorXd weights = {});

/// Gauge of the symmetric polytope conv{+-v_i} (columns of `vertices`).
/// Evaluated exactly as the minimum over invertible vertex subsets of the
/// L1 cost of the subset representation; the dual is the vertex support
/// function max_i |<v_i, y>|.
NormOracle polytope_norm(const Eigen::MatrixXd& vertices);

/// max_i |<v_i, x>| over the columns of `vertices`; dual of polytope_norm.
NormOracle polytope_support_norm(const Eigen::MatrixXd& vertices);

/// Mass norm on packed bivector coefficients over R^n (dim = n(n-1)/2).
NormOracle mass_norm(int n);
/// Comass norm on packed bivector coefficients over R^n; dual of mass.
NormOracle comass_norm(int n);

/// Oracle without a known dual; sandwich constants must still be certified
/// by the caller.
NormOracle custom_norm(int dim, std::function<double(const Eigen::VectorXd&)> eval,
                       double lo, double hi,
                       std::function<double(const Eigen::VectorXd&)> dual_eval = {});

/// sup{<x, y> : eval(x) <= 1}. Throws UnsupportedNormError when the oracle
/// has no exact dual.
double dual_norm(const NormOracle& norm, const Eigen::VectorXd& y);

/// The dual norm as a first-class oracle (kind, parameters, and sandwich
/// constants all swapped). Throws UnsupportedNormError without a dual.
NormOracle dual_oracle(const NormOracle& norm);

} // namespace syscow
