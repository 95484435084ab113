#pragma once

#include <optional>
#include <string>
#include <vector>

#include "commvar/gammaconf.hpp"
#include "commvar/numkit.hpp"
#include "commvar/symuniverse.hpp"

namespace commvar {

enum class TupleKind { unitary, skew_hermitian, real_symmetric };

const char* to_string(TupleKind k);
TupleKind tuple_kind_from_string(const std::string& s);

/// n pairwise commuting s x s matrices of one structural kind. `ambient` is set when
/// the matrices act on a truncated universe rather than an abstract C^s.
struct CommutingTuple {
  TupleKind kind = TupleKind::unitary;
  std::vector<Matrix> mats;
  std::optional<UniverseBasis> ambient;

  std::size_t n() const noexcept { return mats.size(); }
  std::size_t s() const noexcept { return mats.empty() ? (ambient ? ambient->dim() : 0) : mats.front().rows(); }
};

/// Throws ShapeMismatch, NotUnitary / NotSkewHermitian / NotSymmetric or NotCommuting.
void validate(const CommutingTuple& t, const Tolerances& tol);

/// A simultaneous eigenspace and the scalar by which each matrix acts on it.
struct EigenBlock {
  Frame frame;
  std::vector<cplx> values;
};

struct JointDiagonalization {
  Matrix q;                       // columns: block frames concatenated in block order
  std::vector<EigenBlock> blocks; // coarsest decomposition, sorted by leading coordinate
  double residual = 0.0;          // max_k off(Q^H A_k Q)
  bool used_fallback = false;
};

/// Simultaneous diagonalization by joint Jacobi sweeps on the Hermitian components
/// (A = H1 + i H2 for unitary input, X = i H for skew-Hermitian, the matrix itself for
/// real symmetric). If the sweeps stall above the residual budget of
/// 1e-8 max ||A_k||_F, a random real combination of the components is diagonalized
/// first and the sweeps restart from its eigenvectors.
///
/// Columns are grouped by single-linkage clustering of their value tuples at
/// eps_cluster (max-metric). Each block frame is the subspace_basis of its span, and
/// blocks are ordered by the first universe coordinate they touch, ties by value.
JointDiagonalization joint_diagonalize(const CommutingTuple& t, const Tolerances& tol = {});

/// Orders blocks by leading coordinate, ties broken lexicographically on values.
void sort_blocks(std::vector<EigenBlock>& blocks);

/// The largest subspace on which every A_i - Id is nonsingular: the blocks whose value
/// tuple has no entry within eps_base of 1, frames concatenated in block order.
Frame F_subspace(const CommutingTuple& t, const Tolerances& tol = {});
/// Same as F_subspace, but returning the contributing blocks.
std::vector<EigenBlock> F_blocks(const CommutingTuple& t, const Tolerances& tol = {});

/// Independent route: orthogonal complement of sum_i ker(A_i - Id), each kernel found
/// by hermitian_eig of (A_i - Id)^H (A_i - Id). Resolves eigenvalues to about 1e-7.
Frame F_subspace_via_kernels(const CommutingTuple& t, const Tolerances& tol = {});

/// Representative of the equivalence class: each A_i restricted to F and extended by
/// the identity on the complement.
CommutingTuple canonical_rep(const CommutingTuple& t, const Tolerances& tol = {});

/// max_i ||rep(a)_i - rep(b)_i||_F between canonical representatives.
double class_distance(const CommutingTuple& a, const CommutingTuple& b, const Tolerances& tol = {});
bool equivalent(const CommutingTuple& a, const CommutingTuple& b, const Tolerances& tol = {});

/// phi_n: A_j acts on V_i by x_ij and as the identity off the labels.
CommutingTuple config_to_commuting(const Configuration& c);

/// Inverse of phi_n: each eigenblock whose value tuple avoids 1 becomes a label.
/// Requires t.ambient.
Configuration commuting_to_config(const CommutingTuple& t, const Tolerances& tol = {});

/// sigma.[(A_1..A_n)]: component j is sigma_* A_{sigma^{-1}(j)} sigma_*^{-1}. This is the
/// left action matching (sigma.x)_j = x_{sigma^{-1}(j)} on sphere coordinates.
CommutingTuple sigma_action_tuple(const Permutation& sigma, const CommutingTuple& t);

/// The basepoint-class tuple: n identities on the universe.
CommutingTuple identity_tuple(const UniverseBasis& u, std::size_t n);

}  // namespace commvar
