#include "syscow/lattice.hpp"

#include "syscow/enumeration.hpp"
#include "syscow/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace syscow {

namespace {

/// Exact pairwise size reduction: repeatedly replace b_i by
/// b_i - round(<b_i, b_j> / <b_j, b_j>) b_j until stable, tracking the
/// unimodular transform T with B_reduced = B * T. Shrinks the enumeration
/// radius; the lattice itself is unchanged.
void size_reduce(RatMat& basis, IntMat& transform) {
  const int d = static_cast<int>(basis.size());
  transform.assign(d, IntVec(d, Int(0)));
  for (int j = 0; j < d; ++j) transform[j][j] = 1;

  auto column = [&](int j) {
    RatVec col(d);
    for (int i = 0; i < d; ++i) col[i] = basis[i][j];
    return col;
  };
  auto dot = [&](const RatVec& a, const RatVec& b) {
    Rat s(0);
    for (int i = 0; i < d; ++i) s += a[i] * b[i];
    return s;
  };

  bool changed = true;
  int rounds = 0;
  while (changed && rounds++ < 64) {
    changed = false;
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        if (i == j) continue;
        RatVec bi = column(i), bj = column(j);
        Rat denom = dot(bj, bj);
        if (denom == 0) throw ValidationError("lattice basis is singular");
        Int mu = nearest_int(dot(bi, bj) / denom);
        if (mu == 0) continue;
        // b_i -= mu * b_j, column op mirrored on the transform
        for (int r = 0; r < d; ++r) basis[r][i] -= Rat(mu) * basis[r][j];
        for (int r = 0; r < d; ++r) transform[r][i] -= mu * transform[r][j];
        changed = true;
      }
    }
  }
}

bool lex_less(const IntVec& a, const IntVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

struct Candidate {
  double value;
  IntVec coords; // w.r.t. the input basis, sign-canonicalized
};

} // namespace

Lattice Lattice::make(RatMat basis) {
  Lattice out;
  out.dim = static_cast<int>(basis.size());
  if (out.dim < 1) throw ValidationError("lattice dimension must be >= 1");
  for (const auto& row : basis)
    if (static_cast<int>(row.size()) != out.dim)
      throw ValidationError("lattice basis must be square");
  if (rat_det(basis) == 0)
    throw ValidationError("lattice basis has zero determinant");
  out.basis = std::move(basis);
  return out;
}

Lattice Lattice::standard(int dim) { return make(rat_identity(dim)); }

Eigen::MatrixXd Lattice::basis_double() const {
  Eigen::MatrixXd b(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) b(i, j) = basis[i][j].get_d();
  return b;
}

Eigen::VectorXd Lattice::embed(const IntVec& coords) const {
  if (static_cast<int>(coords.size()) != dim)
    throw ValidationError("coordinate vector has the wrong length");
  Eigen::VectorXd v = Eigen::VectorXd::Zero(dim);
  for (int j = 0; j < dim; ++j) {
    double c = coords[j].get_d();
    for (int i = 0; i < dim; ++i) v(i) += basis[i][j].get_d() * c;
  }
  return v;
}

MinimaResult successive_minima(const Lattice& lattice, const NormOracle& norm,
                               int k, const MinimaOptions& opts) {
  if (k < 1 || k > lattice.dim)
    throw ValidationError("successive minima index k must lie in [1, dim]");
  if (norm.dim != lattice.dim)
    throw ValidationError("norm dimension does not match the lattice");
  if (!(norm.lo > 0.0))
    throw ValidationError("norm oracle needs a positive lower sandwich constant");

  RatMat reduced = lattice.basis;
  IntMat transform;
  size_reduce(reduced, transform);

  Eigen::MatrixXd bd(lattice.dim, lattice.dim);
  for (int i = 0; i < lattice.dim; ++i)
    for (int j = 0; j < lattice.dim; ++j) bd(i, j) = reduced[i][j].get_d();

  // Upper bound for lambda_k: the k-th smallest norm among the (independent)
  // reduced basis vectors. Every vector with norm below it has Euclidean
  // length at most bound / lo, which caps the enumeration radius.
  std::vector<double> basis_norms(lattice.dim);
  for (int j = 0; j < lattice.dim; ++j) basis_norms[j] = norm.eval(bd.col(j));
  std::vector<double> sorted_norms(basis_norms);
  std::sort(sorted_norms.begin(), sorted_norms.end());
  const double upper = sorted_norms[k - 1];
  const double radius = upper / norm.lo * (1.0 + 1e-9);

  EnumerationOptions eopts;
  eopts.max_candidates = opts.max_candidates;
  std::vector<IntCoords> raw =
      opts.parallel ? enumerate_in_ball_parallel(bd, radius, eopts)
                    : enumerate_in_ball_serial(bd, radius, eopts);

  std::vector<Candidate> candidates;
  candidates.reserve(raw.size());
  for (const IntCoords& a : raw) {
    IntVec orig(lattice.dim, Int(0));
    for (int i = 0; i < lattice.dim; ++i)
      for (int j = 0; j < lattice.dim; ++j)
        if (a[j] != 0) orig[i] += transform[i][j] * static_cast<long>(a[j]);
    int sign = 0;
    for (int i = 0; i < lattice.dim && sign == 0; ++i)
      sign = sgn(orig[i]);
    if (sign == 0) continue;
    Eigen::VectorXd v(lattice.dim);
    for (int i = 0; i < lattice.dim; ++i) v(i) = 0.0;
    for (int j = 0; j < lattice.dim; ++j)
      if (a[j] != 0) v += bd.col(j) * static_cast<double>(a[j]);
    if (sign < 0) {
      for (auto& c : orig) c = -c;
      v = -v;
    }
    candidates.push_back(Candidate{norm.eval(v), std::move(orig)});
  }

  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate& a, const Candidate& b) {
              if (a.value != b.value) return a.value < b.value;
              return lex_less(a.coords, b.coords);
            });
  candidates.erase(std::unique(candidates.begin(), candidates.end(),
                               [](const Candidate& a, const Candidate& b) {
                                 return a.coords == b.coords;
                               }),
                   candidates.end());

  // Greedy independent selection with exact rank bookkeeping.
  MinimaResult result;
  std::vector<RatVec> echelon;
  for (const Candidate& cand : candidates) {
    if (static_cast<int>(result.values.size()) == k) break;
    RatVec v(lattice.dim);
    for (int i = 0; i < lattice.dim; ++i) v[i] = Rat(cand.coords[i]);
    for (const RatVec& row : echelon) {
      int pivot = -1;
      for (int i = 0; i < lattice.dim; ++i)
        if (row[i] != 0) { pivot = i; break; }
      if (pivot >= 0 && v[pivot] != 0) {
        Rat factor = v[pivot] / row[pivot];
        for (int i = 0; i < lattice.dim; ++i) v[i] -= factor * row[i];
      }
    }
    bool nonzero = false;
    for (const Rat& x : v)
      if (x != 0) { nonzero = true; break; }
    if (!nonzero) continue;
    echelon.push_back(std::move(v));
    result.values.push_back(cand.value);
    result.witnesses.push_back(cand.coords);
  }

  if (static_cast<int>(result.values.size()) < k)
    throw ResourceError("enumeration at radius " + std::to_string(radius) +
                        " produced fewer than k independent vectors");
  return result;
}

Lattice dual_lattice(const Lattice& lattice) {
  return Lattice::make(rat_transpose(rat_inverse(lattice.basis)));
}

double gamma_product(const Lattice& lattice, const NormOracle& norm,
                     const MinimaOptions& opts) {
  MinimaResult primal = successive_minima(lattice, norm, 1, opts);
  Lattice dual = dual_lattice(lattice);
  NormOracle dnorm = dual_oracle(norm);
  MinimaResult dual_minima = successive_minima(dual, dnorm, lattice.dim, opts);
  return primal.values[0] * dual_minima.values.back();
}

std::uint64_t SplitMix64::next() {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double SplitMix64::uniform() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double SplitMix64::normal() {
  double u1 = uniform();
  double u2 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

long SplitMix64::uniform_int(long lo, long hi) {
  return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
}

GammaInstance random_gamma_instance(int b, std::uint64_t seed) {
  if (b < 1) throw ValidationError("gamma instance dimension must be >= 1");
  SplitMix64 rng(seed);

  // small integer basis, rejection-sampled to be nonsingular
  RatMat basis;
  for (;;) {
    basis.assign(b, RatVec(b, Rat(0)));
    for (int i = 0; i < b; ++i)
      for (int j = 0; j < b; ++j) basis[i][j] = Rat(rng.uniform_int(-4, 4));
    if (rat_det(basis) != 0) break;
  }

  // symmetric polytope norm with unit-sphere vertices (exact dual family)
  const int vertex_count = b + 1 + static_cast<int>(rng.next() % (b + 2));
  Eigen::MatrixXd vertices(b, vertex_count);
  for (;;) {
    for (int c = 0; c < vertex_count; ++c) {
      Eigen::VectorXd v(b);
      double norm2 = 0.0;
      do {
        for (int i = 0; i < b; ++i) v(i) = rng.normal();
        norm2 = v.norm();
      } while (norm2 < 1e-9);
      vertices.col(c) = v / norm2;
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(vertices);
    if (svd.singularValues().minCoeff() > 0.2 / std::sqrt(static_cast<double>(b)))
      break; // well-spread vertices keep the gauge conditioned
  }

  return GammaInstance{Lattice::make(std::move(basis)), polytope_norm(vertices)};
}

GammaSearchResult gamma_lower_bound_search(int b, int trials, std::uint64_t seed,
                                           const MinimaOptions& opts) {
  if (trials < 1) throw ValidationError("gamma search needs at least one trial");
  GammaSearchResult best;
  const std::uint64_t base = SplitMix64(seed).next();
  for (int t = 0; t < trials; ++t) {
    std::uint64_t trial_seed =
        base ^ (static_cast<std::uint64_t>(t) * 0x9e3779b97f4a7c15ULL);
    GammaInstance inst = random_gamma_instance(b, trial_seed);
    double value = gamma_product(inst.lattice, inst.norm, opts);
    if (value > best.best) {
      best.best = value;
      best.best_trial = t;
      best.witness = inst;
    }
  }
  return best;
}

} // namespace syscow
