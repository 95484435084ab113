#pragma once

#include "commvar/commodel.hpp"
#include "commvar/rankstrata.hpp"

namespace commvar {

/// X -> (iX - Id)(iX + Id)^{-1}: a unitary, complex-symmetric matrix. Throws NotSymmetric.
Matrix real_cayley(const Matrix& x, const Tolerances& tol = {});
/// Inverse of real_cayley: Re(-i cayley_inv(A)).
Matrix real_cayley_inv(const Matrix& a, const Tolerances& tol = {});

/// Joint diagonalization of a real symmetric tuple with Q in SO(s); if the block frames
/// give det -1 the last column is negated.
struct RealDiagonalization {
  Matrix q;  // real entries
  std::vector<EigenBlock> blocks;
  double residual = 0.0;  // max_k off(Q^T X_k Q)
};

RealDiagonalization joint_diagonalize_real(const CommutingTuple& t, const Tolerances& tol = {});

using RealSplit = TraceSplit;

/// trace_split for real symmetric tuples; tau holds tr(X_i)/s.
RealSplit real_trace_split(const CommutingTuple& x);

/// Real stratum chart of a tuple of complex-symmetric unitaries whose eigenspaces are
/// complexified real subspaces: real frame f of F, real symmetric commuting X with
/// real_cayley(X_i) = f^T A_i f. Throws NotRealizable if some A_i is not symmetric or
/// some eigenblock projector is not real, WrongStratum as subquotient_chart.
SubquotientChart real_stratum_chart(const CommutingTuple& t, const Tolerances& tol = {});

/// The complex chart underlying a real one: X -> iX, same frame.
SubquotientChart complexify(const SubquotientChart& real_chart);

/// Id + f (real_cayley(X_i) - Id) f^T.
CommutingTuple reconstruct_real(const SubquotientChart& c, const std::optional<UniverseBasis>& ambient = {});

}  // namespace commvar
