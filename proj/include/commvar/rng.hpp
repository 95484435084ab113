#pragma once

#include <cstdint>
#include <vector>

#include "commvar/numkit.hpp"

namespace commvar {

/// SplitMix64. State advances by 0x9E3779B97F4A7C15; output mixing uses the
/// multipliers 0xBF58476D1CE4E5B9 and 0x94D049BB133111EB with shifts 30, 27, 31.
/// Uniform doubles take the top 53 bits; normals use the Box-Muller cosine branch
/// on (1 - u1, u2). Every stream in the project is derived from this generator so
/// seeded outputs are portable.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  double uniform();                              // [0, 1)
  double uniform(double lo, double hi);
  std::uint64_t below(std::uint64_t bound);      // [0, bound)
  double normal();
  cplx complex_normal();                         // (re, im) each N(0, 1/2)
  cplx unit_phase();

 private:
  std::uint64_t state_;
};

/// Independent per-trial seed: SplitMix64(base + 0x9E3779B97F4A7C15 * (index + 1)).next().
std::uint64_t trial_seed(std::uint64_t base, std::uint64_t index);

/// Haar-distributed unitary: Gram-Schmidt QR of a complex Gaussian matrix, with the
/// R-diagonal phases folded back into Q.
Matrix haar_unitary(SplitMix64& rng, std::size_t n);
/// Haar-distributed orthogonal matrix (real entries).
Matrix haar_orthogonal(SplitMix64& rng, std::size_t n);

/// Random permutation of {0..n-1} (Fisher-Yates).
std::vector<int> random_permutation(SplitMix64& rng, int n);

}  // namespace commvar
