#pragma once

#include <optional>
#include <vector>

#include "commvar/numkit.hpp"
#include "commvar/symuniverse.hpp"

namespace commvar {

/// A point of S^n = S(C)^{smash n}: n unit complex coordinates, or the basepoint.
/// Near-basepoint coordinates are kept as given; only canonicalize collapses them.
class SpherePoint {
 public:
  SpherePoint() = default;  // the basepoint
  explicit SpherePoint(std::vector<cplx> coords) : coords_(std::move(coords)) {}
  static SpherePoint basepoint() { return SpherePoint(); }

  bool is_basepoint_symbol() const noexcept { return !coords_.has_value(); }
  /// Basepoint symbol, or some coordinate within eps_base of 1.
  bool is_basepoint(double eps_base) const;
  const std::vector<cplx>& coords() const;
  std::size_t dim() const { return coords_ ? coords_->size() : 0; }

 private:
  std::optional<std::vector<cplx>> coords_;
};

/// Max-metric distance between coordinate vectors; infinite against the basepoint
/// unless both are basepoints.
double point_distance(const SpherePoint& a, const SpherePoint& b);

/// x ^ y under S^n ^ S^m = S^{n+m}: coordinate concatenation, basepoint absorbing.
SpherePoint smash(const SpherePoint& x, const SpherePoint& y);

/// Standard action (sigma.x)_j = x_{sigma^{-1}(j)}; the basepoint is fixed.
SpherePoint act(const Permutation& sigma, const SpherePoint& x);

/// The chart R u {inf} -> S(C), t -> (it - 1)(it + 1)^{-1}, inf -> 1. Both signed
/// infinities map to 1.
cplx sphere_coord(double t);

struct Label {
  Frame frame;
  SpherePoint point;
};

/// Unordered configuration of sphere points labelled by mutually orthogonal
/// subspaces of a truncated universe Sym^{<=D}(C^n). Label order carries no
/// meaning; compare configurations with configuration_distance.
struct Configuration {
  UniverseBasis universe;
  std::vector<Label> labels;
};

/// Coend normal form: drops basepoint-labelled and zero-dimensional labels, merges
/// labels whose points agree within eps_cluster per coordinate (frames concatenated
/// and re-orthonormalized; the merged label keeps the first point). Surviving labels
/// keep the order of first appearance and get the subspace_basis frame of their span.
/// Throws NotOrthogonal if frames of distinct labels are not orthogonal.
Configuration canonicalize(const Configuration& c, const Tolerances& tol = {});

/// Pushes the labels along a based map alpha: <k> -> <l> (alpha[j] in 0..l is the
/// image of label j+1, 0 the basepoint). Returns exactly l labels; label i spans the
/// sum of the V_j with alpha(j) = i and carries their common point (an empty label
/// has the basepoint). Throws IndexOutOfRange for a bad alpha and InvalidArgument if
/// labels sharing an image carry different points.
std::vector<Label> pushforward(const std::vector<int>& alpha, int l, const Configuration& c,
                               const Tolerances& tol = {});

/// canonicalize(pushforward(...)).
Configuration apply_based_map(const std::vector<int>& alpha, int l, const Configuration& c,
                              const Tolerances& tol = {});

/// Sum of label dimensions.
int rank(const Configuration& c);

/// sigma.[(V_i, x_i)] = [(sigma_* V_i, sigma.x_i)].
Configuration sigma_action_config(const Permutation& sigma, const Configuration& c);

/// Sine of the largest principal angle between two subspaces of equal dimension;
/// 1 when the dimensions differ.
double subspace_distance(const Frame& a, const Frame& b);

/// Minimum over label bijections of the maximum matched (point distance + subspace
/// distance). Infinite when universes or label counts differ.
double configuration_distance(const Configuration& a, const Configuration& b);

/// Throws NotOrthogonal unless all label frames are orthonormal and pairwise orthogonal.
void check_orthogonal(const Configuration& c, double eps);

}  // namespace commvar
