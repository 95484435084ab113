#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "commvar/numkit.hpp"

namespace commvar {

using MultiIndex = std::vector<int>;

/// A permutation of {0, ..., n-1}; perm[i] is the image of i.
using Permutation = std::vector<int>;

Permutation identity_permutation(int n);
Permutation compose(const Permutation& sigma, const Permutation& tau);  // sigma after tau
Permutation inverse(const Permutation& sigma);
/// sigma x tau acting on {0..n+m-1}: sigma on the first n letters, tau on the last m.
Permutation block_sum(const Permutation& sigma, const Permutation& tau);
/// The block swap chi_{n,m}: sends i < n to m + i and n + j to j.
Permutation block_swap(int n, int m);
bool is_permutation(const Permutation& p);

/// Monomial basis of Sym^{<=D}(C^n), ordered by degree, then lexicographically
/// descending within a degree (x1^d first). The constant monomial is index 0.
///
/// The inner product is the permanent one: <e^a, e^a> = a! = prod a_i!, distinct
/// monomials orthogonal. Coordinates elsewhere in the project always refer to the
/// orthonormalized basis e^a / sqrt(a!), so the canonical isometries below are
/// plain index maps.
class UniverseBasis {
 public:
  UniverseBasis() = default;
  UniverseBasis(int n, int max_degree);

  int n() const noexcept { return n_; }
  int max_degree() const noexcept { return d_; }
  std::size_t dim() const noexcept { return monomials_.size(); }
  const std::vector<MultiIndex>& monomials() const noexcept { return monomials_; }
  const MultiIndex& monomial(std::size_t i) const { return monomials_.at(i); }
  std::optional<std::size_t> index_of(const MultiIndex& alpha) const;

  /// a! = <e^a, e^a>.
  static double norm_squared(const MultiIndex& alpha);
  static int degree(const MultiIndex& alpha);

  bool operator==(const UniverseBasis& o) const { return n_ == o.n_ && d_ == o.d_; }

 private:
  int n_ = 0;
  int d_ = 0;
  std::vector<MultiIndex> monomials_;
  std::map<MultiIndex, std::size_t> index_;
};

std::uint64_t binomial(int n, int k);

/// The isometry psi_{n,m}: Sym(C^n) (x) Sym(C^m) -> Sym(C^{n+m}) on the truncated
/// bases, e^a (x) e^b -> e^(a,b). The source index of e^a (x) e^b is a * dim(V) + b.
class PsiEmbedding {
 public:
  /// Target truncation defaults to D_u + D_v; a smaller bound leaves some source
  /// basis vectors unrepresentable.
  PsiEmbedding(const UniverseBasis& u, const UniverseBasis& v, std::optional<int> target_degree = {});

  const UniverseBasis& source_left() const noexcept { return u_; }
  const UniverseBasis& source_right() const noexcept { return v_; }
  const UniverseBasis& target() const noexcept { return w_; }

  /// Target index of e^a (x) e^b, or nullopt when (a, b) exceeds the target degree.
  std::optional<std::size_t> image(std::size_t a, std::size_t b) const;

  /// Applies psi to a vector of U (x) V coordinates. Throws TruncationOverflow if a
  /// coefficient above 1e-12 sits on an unrepresentable basis vector.
  std::vector<cplx> apply(std::span<const cplx> tensor_coords) const;
  /// psi(F (x) G) as a frame: columns psi(f_i (x) g_j), ordered i-major.
  Frame apply(const Frame& f, const Frame& g) const;
  /// psi M psi^{-1}, extended by the identity off the image of psi. Throws
  /// TruncationOverflow if M - Id does not vanish on unrepresentable vectors.
  Matrix conjugate(const Matrix& m) const;

 private:
  UniverseBasis u_, v_, w_;
  std::vector<std::optional<std::size_t>> map_;
};

/// sigma_*: e^a -> e^{sigma.a} with (sigma.a)_j = a_{sigma^{-1}(j)}, as an index map
/// on the basis of `u` (result[i] = image index of basis vector i).
std::vector<std::size_t> sigma_star_indices(const Permutation& sigma, const UniverseBasis& u);
/// sigma_* as a permutation matrix on the orthonormalized basis.
Matrix sigma_star(const Permutation& sigma, const UniverseBasis& u);
/// sigma_* applied to the columns of a frame.
Frame sigma_star(const Permutation& sigma, const UniverseBasis& u, const Frame& f);

/// j0: the C.1 summand, i.e. the rank-one frame on the constant monomial.
Frame j0(const UniverseBasis& v);

/// Permanent by Ryser's formula (small matrices only).
cplx permanent(const Matrix& m);

}  // namespace commvar
