#include "commvar/commodel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "commvar/jacobi.hpp"
#include "commvar/rng.hpp"

namespace commvar {

const char* to_string(TupleKind k) {
  switch (k) {
    case TupleKind::unitary: return "unitary";
    case TupleKind::skew_hermitian: return "skew_hermitian";
    case TupleKind::real_symmetric: return "real_symmetric";
  }
  return "unitary";
}

TupleKind tuple_kind_from_string(const std::string& s) {
  if (s == "unitary") return TupleKind::unitary;
  if (s == "skew_hermitian") return TupleKind::skew_hermitian;
  if (s == "real_symmetric") return TupleKind::real_symmetric;
  throw Error(ErrorCode::InvalidArgument, "unknown tuple kind '" + s + "'");
}

void validate(const CommutingTuple& t, const Tolerances& tol) {
  const std::size_t s = t.s();
  for (const auto& m : t.mats) {
    if (!m.square() || m.rows() != s) throw Error(ErrorCode::ShapeMismatch, "tuple matrices must be s x s");
    if (!m.all_finite()) throw Error(ErrorCode::InvalidArgument, "non-finite matrix entry");
  }
  if (t.ambient && t.ambient->dim() != s)
    throw Error(ErrorCode::ShapeMismatch, "matrix size does not match the universe dimension");
  const double slack = std::max(1.0, std::sqrt(static_cast<double>(s)));
  for (const auto& m : t.mats) {
    switch (t.kind) {
      case TupleKind::unitary:
        if (!is_unitary(m, tol.eps_struct * slack)) throw Error(ErrorCode::NotUnitary, "tuple entry is not unitary");
        break;
      case TupleKind::skew_hermitian:
        if (!is_skew_hermitian(m, tol.eps_struct))
          throw Error(ErrorCode::NotSkewHermitian, "tuple entry is not skew-Hermitian");
        break;
      case TupleKind::real_symmetric:
        if (!is_real_symmetric(m, tol.eps_struct))
          throw Error(ErrorCode::NotSymmetric, "tuple entry is not real symmetric");
        break;
    }
  }
  if (commutator_defect(t.mats) > tol.eps_struct)
    throw Error(ErrorCode::NotCommuting, "tuple entries do not commute");
}

namespace {

std::vector<Matrix> hermitian_components(const CommutingTuple& t) {
  std::vector<Matrix> hs;
  const cplx i(0.0, 1.0);
  for (const auto& m : t.mats) {
    switch (t.kind) {
      case TupleKind::unitary:
        hs.push_back(0.5 * (m + m.adjoint()));
        hs.push_back((-0.5 * i) * (m - m.adjoint()));
        break;
      case TupleKind::skew_hermitian: {
        Matrix h = (-0.5 * i) * (m - m.adjoint());
        hs.push_back(std::move(h));
        break;
      }
      case TupleKind::real_symmetric:
        hs.push_back(0.5 * (m + m.transpose()).real_part());
        break;
    }
  }
  return hs;
}

double joint_residual(const CommutingTuple& t, const Matrix& q) {
  double r = 0.0;
  for (const auto& m : t.mats) r = std::max(r, off_diagonal_norm(q.adjoint() * m * q));
  return r;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

std::size_t leading_coordinate(const Frame& f) {
  for (std::size_t r = 0; r < f.ambient_dim(); ++r) {
    double w = 0.0;
    for (std::size_t c = 0; c < f.dim(); ++c) w += std::norm(f.basis()(r, c));
    if (w > 1e-10) return r;
  }
  return f.ambient_dim();
}

bool values_less(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  for (std::size_t k = 0; k < std::min(a.size(), b.size()); ++k) {
    if (a[k].real() != b[k].real()) return a[k].real() < b[k].real();
    if (a[k].imag() != b[k].imag()) return a[k].imag() < b[k].imag();
  }
  return a.size() < b.size();
}

}  // namespace

void sort_blocks(std::vector<EigenBlock>& blocks) {
  std::vector<std::pair<std::size_t, std::size_t>> keys;
  for (std::size_t i = 0; i < blocks.size(); ++i) keys.emplace_back(leading_coordinate(blocks[i].frame), i);
  std::vector<std::size_t> order(blocks.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (keys[a].first != keys[b].first) return keys[a].first < keys[b].first;
    return values_less(blocks[a].values, blocks[b].values);
  });
  std::vector<EigenBlock> sorted;
  for (std::size_t i : order) sorted.push_back(std::move(blocks[i]));
  blocks = std::move(sorted);
}

JointDiagonalization joint_diagonalize(const CommutingTuple& t, const Tolerances& tol) {
  validate(t, tol);
  const std::size_t s = t.s();
  JointDiagonalization out;
  if (s == 0) return out;

  double scale = 0.0;
  for (const auto& m : t.mats) scale = std::max(scale, frobenius_norm(m));
  const double budget = 1e-8 * scale;

  const auto hs = hermitian_components(t);
  double hnorm = 0.0;
  for (const auto& h : hs) hnorm += std::norm(frobenius_norm(h));
  const double target = 1e-14 * std::sqrt(hnorm);

  JacobiResult jr = joint_jacobi(hs, Matrix::identity(s), target, tol.max_sweeps);
  Matrix q = jr.q;
  double residual = joint_residual(t, q);
  if (residual > budget) {
    // stalled: seed the sweeps with the eigenvectors of a generic combination
    SplitMix64 rng(0x6A09E667F3BCC909ULL);
    Matrix combo(s, s);
    for (const auto& h : hs) combo += rng.uniform(-1.0, 1.0) * h;
    combo = 0.5 * (combo + combo.adjoint());
    const auto eig = hermitian_eig(combo, tol);
    jr = joint_jacobi(hs, eig.vectors, target, tol.max_sweeps);
    q = jr.q;
    residual = joint_residual(t, q);
    out.used_fallback = true;
    if (residual > budget) throw Error(ErrorCode::NoConvergence, "joint diagonalization did not converge");
  }

  // value tuples per column
  std::vector<std::vector<cplx>> vals(s, std::vector<cplx>(t.n()));
  double vscale = 1.0;
  for (std::size_t k = 0; k < t.n(); ++k) {
    const Matrix d = q.adjoint() * t.mats[k] * q;
    for (std::size_t j = 0; j < s; ++j) {
      vals[j][k] = d(j, j);
      vscale = std::max(vscale, std::abs(d(j, j)));
    }
  }
  if (t.kind != TupleKind::unitary)
    for (auto& v : vals)
      for (auto& x : v) x = t.kind == TupleKind::skew_hermitian ? cplx(0.0, x.imag()) : cplx(x.real(), 0.0);

  UnionFind uf(s);
  const double thr = tol.eps_cluster * vscale;
  for (std::size_t a = 0; a < s; ++a)
    for (std::size_t b = a + 1; b < s; ++b) {
      double d = 0.0;
      for (std::size_t k = 0; k < t.n(); ++k) d = std::max(d, std::abs(vals[a][k] - vals[b][k]));
      if (d < thr) uf.unite(a, b);
    }
  std::vector<std::vector<std::size_t>> clusters;
  std::vector<std::size_t> cluster_of(s, s);
  for (std::size_t j = 0; j < s; ++j) {
    const std::size_t root = uf.find(j);
    if (cluster_of[root] == s) {
      cluster_of[root] = clusters.size();
      clusters.emplace_back();
    }
    clusters[cluster_of[root]].push_back(j);
  }

  for (const auto& cl : clusters) {
    Matrix p(s, s);
    std::vector<cplx> mean(t.n(), 0.0);
    for (std::size_t j : cl) {
      const Matrix v = q.col_block(j, 1);
      p += v * v.adjoint();
      for (std::size_t k = 0; k < t.n(); ++k) mean[k] += vals[j][k];
    }
    for (auto& x : mean) x /= static_cast<double>(cl.size());
    if (t.kind == TupleKind::real_symmetric) p = p.real_part();
    out.blocks.push_back({subspace_basis(p, cl.size()), std::move(mean)});
  }
  sort_blocks(out.blocks);

  std::vector<Matrix> frames;
  for (const auto& b : out.blocks) frames.push_back(b.frame.basis());
  out.q = hcat(frames);
  out.residual = joint_residual(t, out.q);
  return out;
}

std::vector<EigenBlock> F_blocks(const CommutingTuple& t, const Tolerances& tol) {
  if (t.kind != TupleKind::unitary) throw Error(ErrorCode::InvalidArgument, "F_subspace needs unitary tuples");
  auto jd = joint_diagonalize(t, tol);
  std::vector<EigenBlock> keep;
  for (auto& b : jd.blocks) {
    const bool touches_one =
        std::any_of(b.values.begin(), b.values.end(), [&](cplx x) { return std::abs(x - 1.0) <= tol.eps_base; });
    if (!touches_one) keep.push_back(std::move(b));
  }
  return keep;
}

Frame F_subspace(const CommutingTuple& t, const Tolerances& tol) {
  const auto blocks = F_blocks(t, tol);
  if (blocks.empty()) return Frame(t.s());
  std::vector<Matrix> frames;
  for (const auto& b : blocks) frames.push_back(b.frame.basis());
  return Frame::unchecked(hcat(frames));
}

Frame F_subspace_via_kernels(const CommutingTuple& t, const Tolerances& tol) {
  if (t.kind != TupleKind::unitary) throw Error(ErrorCode::InvalidArgument, "F_subspace needs unitary tuples");
  validate(t, tol);
  const std::size_t s = t.s();
  const Matrix id = Matrix::identity(s);
  Matrix kernel_sum(s, s);
  for (const auto& a : t.mats) {
    Matrix g = (a - id).adjoint() * (a - id);
    g = 0.5 * (g + g.adjoint());
    const auto eig = hermitian_eig(g, tol);
    const double thr = std::max(tol.eps_base * tol.eps_base, 64.0 * 2.22e-16 * (1.0 + frobenius_norm(g)));
    for (std::size_t j = 0; j < s; ++j)
      if (eig.values[j] <= thr) {
        const Matrix v = eig.vectors.col_block(j, 1);
        kernel_sum += v * v.adjoint();
      }
  }
  // complement of the sum of kernels = null space of the summed kernel projectors
  const auto eig = hermitian_eig(0.5 * (kernel_sum + kernel_sum.adjoint()), tol);
  Matrix p(s, s);
  std::size_t dim = 0;
  for (std::size_t j = 0; j < s; ++j)
    if (eig.values[j] < 0.5) {
      const Matrix v = eig.vectors.col_block(j, 1);
      p += v * v.adjoint();
      ++dim;
    }
  if (dim == 0) return Frame(s);
  return subspace_basis(p, dim);
}

CommutingTuple canonical_rep(const CommutingTuple& t, const Tolerances& tol) {
  const Frame f = F_subspace(t, tol);
  const Matrix p = f.projector();
  const Matrix comp = Matrix::identity(t.s()) - p;
  CommutingTuple out{t.kind, {}, t.ambient};
  for (const auto& a : t.mats) out.mats.push_back(p * a * p + comp);
  return out;
}

double class_distance(const CommutingTuple& a, const CommutingTuple& b, const Tolerances& tol) {
  if (a.n() != b.n() || a.s() != b.s()) return std::numeric_limits<double>::infinity();
  const auto ra = canonical_rep(a, tol);
  const auto rb = canonical_rep(b, tol);
  double d = 0.0;
  for (std::size_t i = 0; i < a.n(); ++i) d = std::max(d, distance(ra.mats[i], rb.mats[i]));
  return d;
}

bool equivalent(const CommutingTuple& a, const CommutingTuple& b, const Tolerances& tol) {
  const double slack = std::max(1.0, std::sqrt(static_cast<double>(a.s())));
  return class_distance(a, b, tol) <= tol.eps_struct * slack;
}

CommutingTuple config_to_commuting(const Configuration& c) {
  const std::size_t dim = c.universe.dim();
  std::size_t n = 0;
  for (const auto& lab : c.labels)
    if (!lab.point.is_basepoint_symbol()) n = lab.point.dim();
  if (n == 0) n = static_cast<std::size_t>(c.universe.n());
  CommutingTuple t{TupleKind::unitary, std::vector<Matrix>(n, Matrix::identity(dim)), c.universe};
  for (const auto& lab : c.labels) {
    if (lab.point.is_basepoint_symbol() || lab.frame.empty()) continue;
    if (lab.point.dim() != n) throw Error(ErrorCode::ShapeMismatch, "labels carry points of different dimensions");
    const Matrix p = lab.frame.projector();
    for (std::size_t j = 0; j < n; ++j) t.mats[j] += (lab.point.coords()[j] - 1.0) * p;
  }
  return t;
}

Configuration commuting_to_config(const CommutingTuple& t, const Tolerances& tol) {
  if (!t.ambient) throw Error(ErrorCode::InvalidArgument, "commuting_to_config needs a universe");
  Configuration c{*t.ambient, {}};
  for (auto& b : F_blocks(t, tol)) {
    std::vector<cplx> x = b.values;
    for (auto& v : x) v /= std::abs(v);
    c.labels.push_back({std::move(b.frame), SpherePoint(std::move(x))});
  }
  return c;
}

CommutingTuple sigma_action_tuple(const Permutation& sigma, const CommutingTuple& t) {
  if (!t.ambient) throw Error(ErrorCode::InvalidArgument, "sigma action needs a universe");
  if (sigma.size() != t.n() || static_cast<std::size_t>(t.ambient->n()) != t.n())
    throw Error(ErrorCode::ShapeMismatch, "permutation size must match tuple length and universe");
  const Matrix ps = sigma_star(sigma, *t.ambient);
  const Permutation inv = inverse(sigma);
  CommutingTuple out{t.kind, {}, t.ambient};
  for (std::size_t j = 0; j < t.n(); ++j) out.mats.push_back(ps * t.mats[inv[j]] * ps.adjoint());
  return out;
}

CommutingTuple identity_tuple(const UniverseBasis& u, std::size_t n) {
  return CommutingTuple{TupleKind::unitary, std::vector<Matrix>(n, Matrix::identity(u.dim())), u};
}

}  // namespace commvar
