#pragma once

#include <cstdint>
#include <vector>

#include "commvar/commodel.hpp"

namespace commvar {

/// Partition of s into the dimensions of the simultaneous eigenspaces, descending.
struct DecompType {
  std::vector<int> parts;

  int s() const;
  int k() const { return static_cast<int>(parts.size()); }
  bool operator==(const DecompType&) const = default;
};

/// Sorts parts descending; throws InvalidArgument on a non-positive part or an empty list.
DecompType make_type(std::vector<int> parts);

DecompType decomposition_type(const CommutingTuple& t, const Tolerances& tol = {});

/// k > 1.
bool is_complete_type(const DecompType& d);

enum class Field { complex, real };

/// Dimension of the fixed space of the block group U(n_1) x ... x U(n_k) (or the
/// O-blocks) acting on traceless n-tuples: n (k - 1) for both fields.
int fixed_subspace_dim(const DecompType& d, int n, Field field);

/// Brute-force count of the same dimension: numeric null space of g X g^H - X = 0 for a
/// few sampled block-group elements g, plus tr X = 0, over all n-tuples of
/// skew-Hermitian (complex) or symmetric (real) s x s matrices.
int fixed_subspace_dim_numeric(const DecompType& d, int n, Field field, std::uint64_t seed = 1);

/// T / sqrt(sum ||X_i||_F^2). Throws ZeroTuple when the norm is below eps_struct.
CommutingTuple unit_normalize(const CommutingTuple& t, const Tolerances& tol = {});

/// (g X_1 g^H, ..., g X_n g^H) for diagonal traceless imaginary X of unit total norm.
CommutingTuple flag_map(const Matrix& g, const CommutingTuple& x, const Tolerances& tol = {});

/// A point of the flag-map domain: an ordered orthonormal basis g of lines and the
/// diagonal tuple x. Canonical form: diagonal value tuples sorted descending
/// (lexicographic on imaginary parts), g's columns permuted along, each column phase
/// normalized so its first entry above 1e-8 in modulus is real positive.
struct FlagClass {
  Matrix g;
  CommutingTuple x{TupleKind::skew_hermitian, {}, std::nullopt};
};

FlagClass canonicalize_flag(const Matrix& g, const CommutingTuple& x);

/// Preimage of a unit traceless skew-Hermitian tuple: joint diagonalization gives g and
/// the diagonal values, returned in canonical form. Requires simple joint spectrum.
FlagClass flag_preimage(const CommutingTuple& target, const Tolerances& tol = {});

/// Distance between canonical classes: max of value-tuple differences and of column
/// projector differences.
double flag_class_distance(const FlagClass& a, const FlagClass& b);

}  // namespace commvar
