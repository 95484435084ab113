#include "commvar/gammaconf.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace commvar {

bool SpherePoint::is_basepoint(double eps_base) const {
  if (!coords_) return true;
  return std::any_of(coords_->begin(), coords_->end(),
                     [&](cplx x) { return std::abs(x - 1.0) <= eps_base; });
}

const std::vector<cplx>& SpherePoint::coords() const {
  if (!coords_) throw Error(ErrorCode::InvalidArgument, "the basepoint has no coordinates");
  return *coords_;
}

double point_distance(const SpherePoint& a, const SpherePoint& b) {
  if (a.is_basepoint_symbol() || b.is_basepoint_symbol())
    return a.is_basepoint_symbol() && b.is_basepoint_symbol() ? 0.0
                                                              : std::numeric_limits<double>::infinity();
  const auto& x = a.coords();
  const auto& y = b.coords();
  if (x.size() != y.size()) return std::numeric_limits<double>::infinity();
  double d = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) d = std::max(d, std::abs(x[i] - y[i]));
  return d;
}

SpherePoint smash(const SpherePoint& x, const SpherePoint& y) {
  if (x.is_basepoint_symbol() || y.is_basepoint_symbol()) return SpherePoint::basepoint();
  std::vector<cplx> c = x.coords();
  c.insert(c.end(), y.coords().begin(), y.coords().end());
  return SpherePoint(std::move(c));
}

SpherePoint act(const Permutation& sigma, const SpherePoint& x) {
  if (x.is_basepoint_symbol()) return x;
  const auto& c = x.coords();
  if (c.size() != sigma.size()) throw Error(ErrorCode::ShapeMismatch, "permutation size vs sphere dimension");
  std::vector<cplx> out(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) out[sigma[k]] = c[k];
  return SpherePoint(std::move(out));
}

cplx sphere_coord(double t) {
  if (std::isinf(t)) return 1.0;
  const cplx it(0.0, t);
  return (it - 1.0) / (it + 1.0);
}

void check_orthogonal(const Configuration& c, double eps) {
  for (std::size_t i = 0; i < c.labels.size(); ++i) {
    const Matrix& a = c.labels[i].frame.basis();
    if (a.rows() != c.universe.dim())
      throw Error(ErrorCode::ShapeMismatch, "label frame does not live in the universe");
    if (distance(a.adjoint() * a, Matrix::identity(a.cols())) > eps)
      throw Error(ErrorCode::NotOrthogonal, "label frame is not orthonormal");
    for (std::size_t j = i + 1; j < c.labels.size(); ++j) {
      const Matrix& b = c.labels[j].frame.basis();
      if (frobenius_norm(a.adjoint() * b) > eps)
        throw Error(ErrorCode::NotOrthogonal, "labels are not mutually orthogonal");
    }
  }
}

Configuration canonicalize(const Configuration& c, const Tolerances& tol) {
  check_orthogonal(c, tol.eps_struct);
  struct Group {
    SpherePoint point;
    std::vector<const Frame*> frames;
    std::size_t dim = 0;
  };
  std::vector<Group> groups;
  for (const auto& lab : c.labels) {
    if (lab.frame.empty() || lab.point.is_basepoint(tol.eps_base)) continue;
    auto it = std::find_if(groups.begin(), groups.end(), [&](const Group& g) {
      return point_distance(g.point, lab.point) < tol.eps_cluster;
    });
    if (it == groups.end()) {
      groups.push_back({lab.point, {&lab.frame}, lab.frame.dim()});
    } else {
      it->frames.push_back(&lab.frame);
      it->dim += lab.frame.dim();
    }
  }
  Configuration out{c.universe, {}};
  for (const auto& g : groups) {
    Matrix p(c.universe.dim(), c.universe.dim());
    for (const Frame* f : g.frames) p += f->projector();
    out.labels.push_back({subspace_basis(p, g.dim), g.point});
  }
  return out;
}

std::vector<Label> pushforward(const std::vector<int>& alpha, int l, const Configuration& c,
                               const Tolerances& tol) {
  if (alpha.size() != c.labels.size())
    throw Error(ErrorCode::IndexOutOfRange, "based map domain does not match the label count");
  std::vector<std::vector<std::size_t>> fibers(l);
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    if (alpha[j] < 0 || alpha[j] > l) throw Error(ErrorCode::IndexOutOfRange, "based map value out of range");
    if (alpha[j] > 0) fibers[alpha[j] - 1].push_back(j);
  }
  std::vector<Label> out;
  for (const auto& fiber : fibers) {
    if (fiber.empty()) {
      out.push_back({Frame(c.universe.dim()), SpherePoint::basepoint()});
      continue;
    }
    const SpherePoint& x = c.labels[fiber.front()].point;
    std::vector<Matrix> cols;
    for (std::size_t j : fiber) {
      if (point_distance(c.labels[j].point, x) >= tol.eps_cluster)
        throw Error(ErrorCode::InvalidArgument, "labels folded together must share a point");
      cols.push_back(c.labels[j].frame.basis());
    }
    out.push_back({orthonormalize(hcat(cols), tol), x});
  }
  return out;
}

Configuration apply_based_map(const std::vector<int>& alpha, int l, const Configuration& c,
                              const Tolerances& tol) {
  return canonicalize(Configuration{c.universe, pushforward(alpha, l, c, tol)}, tol);
}

int rank(const Configuration& c) {
  int r = 0;
  for (const auto& lab : c.labels) r += static_cast<int>(lab.frame.dim());
  return r;
}

Configuration sigma_action_config(const Permutation& sigma, const Configuration& c) {
  Configuration out{c.universe, {}};
  for (const auto& lab : c.labels)
    out.labels.push_back({sigma_star(sigma, c.universe, lab.frame), act(sigma, lab.point)});
  return out;
}

double subspace_distance(const Frame& a, const Frame& b) {
  if (a.dim() != b.dim() || a.ambient_dim() != b.ambient_dim()) return 1.0;
  if (a.dim() == 0) return 0.0;
  // residual of b after projecting onto a; its spectral norm is the sine
  const Matrix r = b.basis() - a.basis() * (a.basis().adjoint() * b.basis());
  const auto eig = hermitian_eig(r.adjoint() * r);
  return std::sqrt(std::clamp(eig.values.back(), 0.0, 1.0));
}

double configuration_distance(const Configuration& a, const Configuration& b) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  if (!(a.universe == b.universe) || a.labels.size() != b.labels.size()) return inf;
  const std::size_t k = a.labels.size();
  if (k > 20) throw Error(ErrorCode::InvalidArgument, "configuration_distance: too many labels");
  std::vector<std::vector<double>> cost(k, std::vector<double>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const double pd = point_distance(a.labels[i].point, b.labels[j].point);
      cost[i][j] = std::isinf(pd) ? inf : pd + subspace_distance(a.labels[i].frame, b.labels[j].frame);
    }
  // bottleneck assignment by subset DP: dp[mask] assigns the first popcount(mask) labels of a
  std::vector<double> dp(std::size_t{1} << k, inf);
  dp[0] = 0.0;
  for (std::size_t mask = 0; mask < dp.size(); ++mask) {
    if (std::isinf(dp[mask])) continue;
    const std::size_t i = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (i == k) continue;
    for (std::size_t j = 0; j < k; ++j) {
      if (mask & (std::size_t{1} << j)) continue;
      const std::size_t next = mask | (std::size_t{1} << j);
      dp[next] = std::min(dp[next], std::max(dp[mask], cost[i][j]));
    }
  }
  return dp.back();
}

}  // namespace commvar
