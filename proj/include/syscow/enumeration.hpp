#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

namespace syscow {

using IntCoords = std::vector<long>;

struct EnumerationOptions {
  /// Abort with ResourceError past this many emitted candidates.
  std::uint64_t max_candidates = 100'000'000;
};

/// All nonzero integer coordinate vectors a with |basis * a|_2 <= radius.
/// Both signs of each vector are emitted; callers canonicalize. `basis`
/// holds the lattice basis as columns and must be nonsingular.
///
/// Serial reference implementation: one depth-first Fincke-Pohst pass over
/// the Cholesky factor of the Gram matrix. Kept as the ground truth the
/// parallel kernel is tested and benchmarked against.
std::vector<IntCoords> enumerate_in_ball_serial(const Eigen::MatrixXd& basis,
                                                double radius,
                                                const EnumerationOptions& opts = {});

/// OpenMP kernel: the top-level coefficient range is partitioned across
/// threads, each running the serial recursion below its slice. The merged
/// candidate set is identical to the serial one up to order; callers sort
/// with a deterministic tie-break, so results do not depend on the
/// schedule. Falls back to the serial pass without OpenMP.
std::vector<IntCoords> enumerate_in_ball_parallel(const Eigen::MatrixXd& basis,
                                                  double radius,
                                                  const EnumerationOptions& opts = {});

} // namespace syscow
