#include "syscow/enumeration.hpp"

#include "syscow/errors.hpp"

#include <Eigen/Cholesky>

#include <atomic>
#include <cmath>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace syscow {

namespace {

/// Upper-triangular factor R with B^T B = R^T R, so |B a|_2 = |R a|_2.
Eigen::MatrixXd cholesky_factor(const Eigen::MatrixXd& basis, double radius) {
  Eigen::MatrixXd gram = basis.transpose() * basis;
  gram = 0.5 * (gram + gram.transpose());
  Eigen::LLT<Eigen::MatrixXd> llt(gram);
  if (llt.info() != Eigen::Success)
    throw ValidationError("enumeration basis is singular or ill-conditioned at radius " +
                          std::to_string(radius));
  return llt.matrixU();
}

struct Walker {
  const Eigen::MatrixXd& r;       // upper-triangular factor
  double radius_sq;
  std::uint64_t budget;
  double radius;
  std::vector<IntCoords>& out;
  std::uint64_t emitted = 0;
  IntCoords current;

  Walker(const Eigen::MatrixXd& r_, double radius_, std::uint64_t budget_,
         std::vector<IntCoords>& out_)
      : r(r_), radius_sq(radius_ * radius_ * (1.0 + 1e-12)), budget(budget_),
        radius(radius_), out(out_), current(r_.rows(), 0) {}

  void emit() {
    bool nonzero = false;
    for (long c : current)
      if (c != 0) { nonzero = true; break; }
    if (!nonzero) return;
    if (++emitted > budget)
      throw ResourceError("enumeration budget exceeded at radius " +
                          std::to_string(radius));
    out.push_back(current);
  }

  // level runs from dim-1 down to -1; offsets[i] = sum_{j>i} R_ij a_j,
  // used = |R a|^2 restricted to the processed tail levels.
  void descend(int level, double used, const Eigen::VectorXd& offsets) {
    if (level < 0) {
      emit();
      return;
    }
    const double rii = r(level, level);
    const double center = -offsets(level) / rii;
    const double room = std::sqrt(std::max(radius_sq - used, 0.0)) / std::abs(rii);
    const long lo = static_cast<long>(std::ceil(center - room - 1e-12));
    const long hi = static_cast<long>(std::floor(center + room + 1e-12));
    for (long a = lo; a <= hi; ++a) {
      step(level, used, offsets, a);
    }
  }

  void step(int level, double used, const Eigen::VectorXd& offsets, long a) {
    const double term = offsets(level) + r(level, level) * static_cast<double>(a);
    const double next_used = used + term * term;
    if (next_used > radius_sq) return;
    current[level] = a;
    Eigen::VectorXd next_offsets = offsets;
    for (int i = 0; i < level; ++i)
      next_offsets(i) += r(i, level) * static_cast<double>(a);
    descend(level - 1, next_used, next_offsets);
    current[level] = 0;
  }
};

} // namespace

std::vector<IntCoords> enumerate_in_ball_serial(const Eigen::MatrixXd& basis,
                                                double radius,
                                                const EnumerationOptions& opts) {
  if (basis.rows() != basis.cols() || basis.rows() < 1)
    throw ValidationError("enumeration basis must be square");
  if (!(radius >= 0.0)) throw ValidationError("enumeration radius must be >= 0");
  const int dim = static_cast<int>(basis.rows());
  Eigen::MatrixXd r = cholesky_factor(basis, radius);

  std::vector<IntCoords> out;
  Walker walker(r, radius, opts.max_candidates, out);
  walker.descend(dim - 1, 0.0, Eigen::VectorXd::Zero(dim));
  return out;
}

std::vector<IntCoords> enumerate_in_ball_parallel(const Eigen::MatrixXd& basis,
                                                  double radius,
                                                  const EnumerationOptions& opts) {
#ifndef _OPENMP
  return enumerate_in_ball_serial(basis, radius, opts);
#else
  if (basis.rows() != basis.cols() || basis.rows() < 1)
    throw ValidationError("enumeration basis must be square");
  if (!(radius >= 0.0)) throw ValidationError("enumeration radius must be >= 0");
  const int dim = static_cast<int>(basis.rows());
  if (dim == 1) return enumerate_in_ball_serial(basis, radius, opts);

  Eigen::MatrixXd r = cholesky_factor(basis, radius);
  const int top = dim - 1;
  const double rtt = r(top, top);
  const long bound = static_cast<long>(std::floor(radius / std::abs(rtt) + 1e-12));

  const int slices = static_cast<int>(2 * bound + 1);
  std::vector<std::vector<IntCoords>> slice_out(slices);
  std::atomic<std::uint64_t> total_emitted{0};
  std::atomic<bool> over_budget{false};

#pragma omp parallel for schedule(dynamic)
  for (int s = 0; s < slices; ++s) {
    if (over_budget.load(std::memory_order_relaxed)) continue;
    const long a = static_cast<long>(s) - bound;
    std::vector<IntCoords>& local = slice_out[s];
    Walker walker(r, radius, opts.max_candidates, local);
    try {
      walker.step(top, 0.0, Eigen::VectorXd::Zero(dim), a);
    } catch (const ResourceError&) {
      over_budget.store(true, std::memory_order_relaxed);
      continue;
    }
    std::uint64_t seen =
        total_emitted.fetch_add(walker.emitted, std::memory_order_relaxed) +
        walker.emitted;
    if (seen > opts.max_candidates)
      over_budget.store(true, std::memory_order_relaxed);
  }

  if (over_budget.load())
    throw ResourceError("enumeration budget exceeded at radius " +
                        std::to_string(radius));

  std::vector<IntCoords> out;
  for (auto& slice : slice_out)
    out.insert(out.end(), slice.begin(), slice.end());
  return out;
#endif
}

} // namespace syscow
