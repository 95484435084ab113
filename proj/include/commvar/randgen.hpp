#pragma once

#include <cstdint>
#include <vector>

#include "commvar/commodel.hpp"
#include "commvar/gammaconf.hpp"
#include "commvar/rng.hpp"

namespace commvar {

/// Exactly commuting tuple Q diag(d_k) Q^H: eigenvalues on the unit circle (unitary),
/// on iR (skew-Hermitian) or on R (real symmetric, Q orthogonal). Deterministic in seed.
CommutingTuple gen_random_commuting(std::uint64_t seed, std::size_t n, std::size_t s, TupleKind kind);

/// Like gen_random_commuting but with simultaneous eigenspaces of the prescribed
/// dimensions (parts), value tuples pairwise separated by at least 0.1 in max-metric.
/// With traceless = true (skew/symmetric only) every matrix has zero trace.
CommutingTuple random_commuting_with_blocks(SplitMix64& rng, std::size_t n, const std::vector<int>& parts,
                                            TupleKind kind, bool traceless = false);

/// Random point of S^n with every coordinate at angle in [margin, 2 pi - margin].
SpherePoint random_point(SplitMix64& rng, std::size_t n, double margin = 0.2);

/// Canonical random configuration: `labels` labels of total dimension `rank` on a
/// Haar-random orthonormal family, points pairwise at least 0.05 apart. With
/// real = true the frames are real.
Configuration random_configuration(SplitMix64& rng, const UniverseBasis& u, int rank, int labels,
                                   bool real = false);

/// Random composition of `total` into `parts` positive integers.
std::vector<int> random_composition(SplitMix64& rng, int total, int parts);

/// Random n-tuple (n = u.n()) of commuting unitaries on the universe whose F-subspace
/// has dimension exactly `rank`; the other eigenvalue tuples contain an exact 1.
/// `labels` distinct value tuples avoid 1, their multiplicities summing to `rank`.
CommutingTuple random_unitary_of_rank(SplitMix64& rng, const UniverseBasis& u, int rank, int labels);

}  // namespace commvar
