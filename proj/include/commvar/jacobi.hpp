#pragma once

#include <vector>

#include "commvar/numkit.hpp"

namespace commvar {

/// Outcome of a joint Jacobi run. `q` is unitary and Q^H H_k Q is as diagonal as
/// the sweeps could make it; `off` is the remaining sqrt(sum_k off(Q^H H_k Q)^2).
struct JacobiResult {
  Matrix q;
  std::vector<Matrix> rotated;
  double off = 0.0;
  int sweeps = 0;
  bool converged = false;
};

/// Cyclic Jacobi sweeps minimizing the summed off-diagonal Frobenius energy of a
/// family of Hermitian matrices. Each plane rotation is the exact minimizer for its
/// (p, q) pair: the dominant eigenvector of the 3x3 Gram matrix of the pair's
/// Pauli coordinates. Real symmetric input stays real (rotations are real).
///
/// Starts from `start` (the identity when empty). Converged means a full sweep made
/// no rotation larger than machine precision or off <= target.
JacobiResult joint_jacobi(std::vector<Matrix> hermitians, const Matrix& start, double target,
                          int max_sweeps);

/// sqrt(sum of squared moduli of off-diagonal entries).
double off_diagonal_norm(const Matrix& m);

}  // namespace commvar
