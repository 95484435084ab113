#include "commvar/randgen.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace commvar {

namespace {

cplx random_value(SplitMix64& rng, TupleKind kind) {
  switch (kind) {
    case TupleKind::unitary: return rng.unit_phase();
    case TupleKind::skew_hermitian: return cplx(0.0, rng.normal());
    case TupleKind::real_symmetric: return rng.normal();
  }
  return 0.0;
}

Matrix random_basis(SplitMix64& rng, std::size_t s, TupleKind kind) {
  return kind == TupleKind::real_symmetric ? haar_orthogonal(rng, s) : haar_unitary(rng, s);
}

CommutingTuple assemble(const Matrix& q, const std::vector<std::vector<cplx>>& diag, TupleKind kind) {
  CommutingTuple t{kind, {}, std::nullopt};
  for (const auto& d : diag) {
    Matrix m = q * Matrix::diagonal(d) * q.adjoint();
    // restore exact structure lost to rounding
    switch (kind) {
      case TupleKind::unitary: break;
      case TupleKind::skew_hermitian: m = 0.5 * (m - m.adjoint()); break;
      case TupleKind::real_symmetric: m = (0.5 * (m + m.transpose())).real_part(); break;
    }
    t.mats.push_back(std::move(m));
  }
  return t;
}

}  // namespace

CommutingTuple gen_random_commuting(std::uint64_t seed, std::size_t n, std::size_t s, TupleKind kind) {
  SplitMix64 rng(seed);
  std::vector<std::vector<cplx>> diag(n, std::vector<cplx>(s));
  for (std::size_t j = 0; j < s; ++j)
    for (std::size_t k = 0; k < n; ++k) diag[k][j] = random_value(rng, kind);
  const Matrix q = random_basis(rng, s, kind);
  return assemble(q, diag, kind);
}

CommutingTuple random_commuting_with_blocks(SplitMix64& rng, std::size_t n, const std::vector<int>& parts,
                                            TupleKind kind, bool traceless) {
  const int s = std::accumulate(parts.begin(), parts.end(), 0);
  if (traceless && kind == TupleKind::unitary)
    throw Error(ErrorCode::InvalidArgument, "traceless applies to skew-Hermitian or symmetric tuples");
  std::vector<std::vector<cplx>> block_vals;
  for (std::size_t b = 0; b < parts.size(); ++b) {
    for (int attempt = 0;; ++attempt) {
      std::vector<cplx> v(n);
      for (auto& x : v) x = random_value(rng, kind);
      bool separated = true;
      for (const auto& w : block_vals) {
        double d = 0.0;
        for (std::size_t k = 0; k < n; ++k) d = std::max(d, std::abs(v[k] - w[k]));
        separated = separated && d >= 0.1 + (traceless ? 0.1 : 0.0);
      }
      if (separated || attempt > 1000) {
        block_vals.push_back(std::move(v));
        break;
      }
    }
  }
  if (traceless) {
    for (std::size_t k = 0; k < n; ++k) {
      cplx tr = 0.0;
      for (std::size_t b = 0; b < parts.size(); ++b) tr += static_cast<double>(parts[b]) * block_vals[b][k];
      for (auto& v : block_vals) v[k] -= tr / static_cast<double>(s);
    }
  }
  std::vector<std::vector<cplx>> diag(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t b = 0; b < parts.size(); ++b)
      for (int r = 0; r < parts[b]; ++r) diag[k].push_back(block_vals[b][k]);
  const Matrix q = random_basis(rng, static_cast<std::size_t>(s), kind);
  return assemble(q, diag, kind);
}

SpherePoint random_point(SplitMix64& rng, std::size_t n, double margin) {
  std::vector<cplx> c(n);
  for (auto& x : c) x = std::polar(1.0, rng.uniform(margin, 2.0 * std::numbers::pi - margin));
  return SpherePoint(std::move(c));
}

std::vector<int> random_composition(SplitMix64& rng, int total, int parts) {
  if (parts < 1 || parts > total) throw Error(ErrorCode::InvalidArgument, "random_composition");
  std::vector<int> out(parts, 1);
  for (int r = total - parts; r > 0; --r) ++out[rng.below(static_cast<std::uint64_t>(parts))];
  return out;
}

Configuration random_configuration(SplitMix64& rng, const UniverseBasis& u, int rank, int labels, bool real) {
  if (rank < 0 || static_cast<std::size_t>(rank) > u.dim())
    throw Error(ErrorCode::InvalidArgument, "rank exceeds the universe dimension");
  Configuration c{u, {}};
  if (rank == 0 || labels == 0) return c;
  const auto sizes = random_composition(rng, rank, labels);
  const Matrix q = real ? haar_orthogonal(rng, u.dim()) : haar_unitary(rng, u.dim());
  std::size_t col = 0;
  for (int sz : sizes) {
    SpherePoint x;
    for (int attempt = 0;; ++attempt) {
      x = random_point(rng, static_cast<std::size_t>(u.n()));
      bool far = true;
      for (const auto& lab : c.labels) far = far && point_distance(lab.point, x) >= 0.05;
      if (far || attempt > 1000) break;
    }
    c.labels.push_back({Frame::unchecked(q.col_block(col, static_cast<std::size_t>(sz))), x});
    col += static_cast<std::size_t>(sz);
  }
  return canonicalize(c);
}

CommutingTuple random_unitary_of_rank(SplitMix64& rng, const UniverseBasis& u, int rank, int labels) {
  const std::size_t n = static_cast<std::size_t>(u.n());
  const std::size_t s = u.dim();
  if (rank < 0 || static_cast<std::size_t>(rank) > s || (rank > 0 && labels < 1))
    throw Error(ErrorCode::InvalidArgument, "random_unitary_of_rank");
  std::vector<std::vector<cplx>> diag(n, std::vector<cplx>(s));
  std::size_t col = 0;
  if (rank > 0) {
    for (int sz : random_composition(rng, rank, std::min(labels, rank))) {
      const auto x = random_point(rng, n).coords();
      for (int r = 0; r < sz; ++r, ++col)
        for (std::size_t k = 0; k < n; ++k) diag[k][col] = x[k];
    }
  }
  for (; col < s; ++col) {
    const auto x = random_point(rng, n).coords();
    const std::size_t one = rng.below(n);
    for (std::size_t k = 0; k < n; ++k) diag[k][col] = (k == one || rng.uniform() < 0.3) ? cplx(1.0) : x[k];
  }
  CommutingTuple t = assemble(haar_unitary(rng, s), diag, TupleKind::unitary);
  t.ambient = u;
  return t;
}

}  // namespace commvar
