#include "commvar/isodecomp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "commvar/rng.hpp"

namespace commvar {

int DecompType::s() const { return std::accumulate(parts.begin(), parts.end(), 0); }

DecompType make_type(std::vector<int> parts) {
  if (parts.empty()) throw Error(ErrorCode::InvalidArgument, "a decomposition type needs at least one part");
  for (int p : parts)
    if (p <= 0) throw Error(ErrorCode::InvalidArgument, "decomposition parts must be positive");
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return DecompType{std::move(parts)};
}

DecompType decomposition_type(const CommutingTuple& t, const Tolerances& tol) {
  if (t.s() == 0) throw Error(ErrorCode::InvalidArgument, "empty matrices have no decomposition type");
  std::vector<int> parts;
  if (t.n() == 0) return make_type({static_cast<int>(t.s())});
  for (const auto& b : joint_diagonalize(t, tol).blocks) parts.push_back(static_cast<int>(b.frame.dim()));
  return make_type(std::move(parts));
}

bool is_complete_type(const DecompType& d) { return d.k() > 1; }

int fixed_subspace_dim(const DecompType& d, int n, Field) {
  if (d.k() < 1 || n < 1) throw Error(ErrorCode::InvalidArgument, "fixed_subspace_dim needs k >= 1 and n >= 1");
  return n * (d.k() - 1);
}

namespace {

// real basis of skew-Hermitian (complex field) or real symmetric s x s matrices
std::vector<Matrix> matrix_basis(std::size_t s, Field field) {
  std::vector<Matrix> out;
  const cplx i(0.0, 1.0);
  for (std::size_t r = 0; r < s; ++r)
    for (std::size_t c = r; c < s; ++c) {
      Matrix m(s, s);
      if (field == Field::complex) {
        if (r == c) {
          m(r, r) = i;
        } else {
          m(r, c) = 1.0;
          m(c, r) = -1.0;
          out.push_back(m);
          m(r, c) = i;
          m(c, r) = i;
        }
      } else {
        m(r, c) = 1.0;
        m(c, r) = 1.0;
      }
      out.push_back(std::move(m));
    }
  return out;
}

Matrix block_group_element(SplitMix64& rng, const DecompType& d, Field field) {
  std::vector<Matrix> blocks;
  for (int p : d.parts) {
    const std::size_t sz = static_cast<std::size_t>(p);
    if (field == Field::complex) {
      blocks.push_back(haar_unitary(rng, sz));
    } else {
      Matrix o = haar_orthogonal(rng, sz);
      if (rng.uniform() < 0.5)
        for (std::size_t r = 0; r < sz; ++r) o(r, 0) = -o(r, 0);
      blocks.push_back(std::move(o));
    }
  }
  return direct_sum(blocks);
}

}  // namespace

int fixed_subspace_dim_numeric(const DecompType& d, int n, Field field, std::uint64_t seed) {
  const std::size_t s = static_cast<std::size_t>(d.s());
  SplitMix64 rng(seed);
  const auto basis = matrix_basis(s, field);
  const std::size_t per = basis.size();
  const std::size_t unknowns = per * static_cast<std::size_t>(n);
  constexpr int samples = 3;
  std::vector<Matrix> gs;
  for (int k = 0; k < samples; ++k) gs.push_back(block_group_element(rng, d, field));
  // one sign flip per block
  if (field == Field::real)
    for (int j = 0; j < d.k(); ++j) {
      std::vector<Matrix> blocks;
      for (int b = 0; b < d.k(); ++b) {
        Matrix e = Matrix::identity(static_cast<std::size_t>(d.parts[static_cast<std::size_t>(b)]));
        if (b == j) e *= cplx(-1.0);
        blocks.push_back(std::move(e));
      }
      gs.push_back(direct_sum(blocks));
    }

  // each unknown's image under the constraint map, flattened to real coordinates
  std::vector<std::vector<double>> cols(unknowns);
  for (std::size_t u = 0; u < unknowns; ++u) {
    const std::size_t which = u / per;
    const Matrix& e = basis[u % per];
    std::vector<double>& v = cols[u];
    for (const auto& g : gs) {
      const Matrix diff = g * e * g.adjoint() - e;
      for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j)
        for (std::size_t r = 0; r < s; ++r)
          for (std::size_t c = 0; c < s; ++c) {
            const cplx x = j == which ? diff(r, c) : cplx(0.0);
            v.push_back(x.real());
            v.push_back(x.imag());
          }
    }
    for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j) {
      const cplx tr = j == which ? e.trace() : cplx(0.0);
      v.push_back(tr.real());
      v.push_back(tr.imag());
    }
  }
  // Gram matrix M^T M; its null space is the fixed space
  Matrix gram(unknowns, unknowns);
  for (std::size_t a = 0; a < unknowns; ++a)
    for (std::size_t b = a; b < unknowns; ++b) {
      double dot = 0.0;
      for (std::size_t k = 0; k < cols[a].size(); ++k) dot += cols[a][k] * cols[b][k];
      gram(a, b) = dot;
      gram(b, a) = dot;
    }
  const auto eig = hermitian_eig(gram);
  const double thr = 1e-9 * std::max(1.0, eig.values.back());
  return static_cast<int>(std::count_if(eig.values.begin(), eig.values.end(), [&](double x) { return x < thr; }));
}

CommutingTuple unit_normalize(const CommutingTuple& t, const Tolerances& tol) {
  double sq = 0.0;
  for (const auto& m : t.mats) sq += std::pow(frobenius_norm(m), 2);
  const double norm = std::sqrt(sq);
  if (norm < tol.eps_struct) throw Error(ErrorCode::ZeroTuple, "cannot normalize the zero tuple");
  CommutingTuple out = t;
  for (auto& m : out.mats) m *= cplx(1.0 / norm);
  return out;
}

CommutingTuple flag_map(const Matrix& g, const CommutingTuple& x, const Tolerances& tol) {
  if (!g.square() || !is_unitary(g, tol.eps_struct * std::max(1.0, std::sqrt(static_cast<double>(g.rows())))))
    throw Error(ErrorCode::NotUnitary, "flag_map needs a unitary g");
  double sq = 0.0;
  for (const auto& m : x.mats) {
    if (m.rows() != g.rows() || !m.square()) throw Error(ErrorCode::ShapeMismatch, "flag_map: sizes differ");
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c)
        if (r != c && std::abs(m(r, c)) > tol.eps_struct)
          throw Error(ErrorCode::InvalidArgument, "flag_map needs diagonal matrices");
    if (!is_skew_hermitian(m, tol.eps_struct) || std::abs(m.trace()) > tol.eps_struct)
      throw Error(ErrorCode::InvalidArgument, "flag_map needs traceless imaginary diagonals");
    sq += std::pow(frobenius_norm(m), 2);
  }
  if (std::abs(sq - 1.0) > tol.eps_struct * 10.0) throw Error(ErrorCode::InvalidArgument, "flag_map needs unit norm");
  CommutingTuple out{TupleKind::skew_hermitian, {}, std::nullopt};
  for (const auto& m : x.mats) out.mats.push_back(g * m * g.adjoint());
  return out;
}

FlagClass canonicalize_flag(const Matrix& g, const CommutingTuple& x) {
  const std::size_t p = g.cols();
  std::vector<std::size_t> order(p);
  std::iota(order.begin(), order.end(), 0);
  auto key = [&](std::size_t j) {
    std::vector<double> k;
    for (const auto& m : x.mats) k.push_back(m(j, j).imag());
    return k;
  };
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return key(a) > key(b); });
  FlagClass out;
  out.g = Matrix(g.rows(), p);
  for (std::size_t j = 0; j < p; ++j) out.g.set_col(j, g.col(order[j]));
  normalize_column_phases(out.g);
  for (const auto& m : x.mats) {
    std::vector<cplx> d(p);
    for (std::size_t j = 0; j < p; ++j) d[j] = cplx(0.0, m(order[j], order[j]).imag());
    out.x.mats.push_back(Matrix::diagonal(d));
  }
  return out;
}

FlagClass flag_preimage(const CommutingTuple& target, const Tolerances& tol) {
  const auto jd = joint_diagonalize(target, tol);
  if (jd.blocks.size() != target.s())
    throw Error(ErrorCode::InvalidArgument, "flag_preimage needs a simple joint spectrum");
  CommutingTuple x{TupleKind::skew_hermitian, {}, std::nullopt};
  for (std::size_t k = 0; k < target.n(); ++k) {
    std::vector<cplx> d;
    for (const auto& b : jd.blocks) d.push_back(cplx(0.0, b.values[k].imag()));
    x.mats.push_back(Matrix::diagonal(d));
  }
  return canonicalize_flag(jd.q, x);
}

double flag_class_distance(const FlagClass& a, const FlagClass& b) {
  if (a.g.cols() != b.g.cols() || a.x.n() != b.x.n()) return std::numeric_limits<double>::infinity();
  double d = 0.0;
  for (std::size_t k = 0; k < a.x.n(); ++k) d = std::max(d, distance(a.x.mats[k], b.x.mats[k]));
  for (std::size_t j = 0; j < a.g.cols(); ++j) {
    const Matrix ca = a.g.col_block(j, 1), cb = b.g.col_block(j, 1);
    d = std::max(d, distance(ca * ca.adjoint(), cb * cb.adjoint()));
  }
  return d;
}

}  // namespace commvar
