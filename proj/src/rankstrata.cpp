#include "commvar/rankstrata.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace commvar {

Matrix cayley(const Matrix& x, const Tolerances& tol) {
  if (!is_skew_hermitian(x, tol.eps_struct * std::max(1.0, frobenius_norm(x))))
    throw Error(ErrorCode::NotSkewHermitian, "cayley needs a skew-Hermitian matrix");
  const Matrix id = Matrix::identity(x.rows());
  // X - I and (X + I)^{-1} commute
  return solve(x + id, x - id);
}

Matrix cayley_inv(const Matrix& a, const Tolerances& tol) {
  const Matrix id = Matrix::identity(a.rows());
  if (a.rows() > 0 && min_singular_value(a - id, tol) <= tol.eps_struct)
    throw Error(ErrorCode::SingularAtOne, "A - Id is singular");
  return solve(id - a, id + a);
}

int stratum_rank(const CommutingTuple& t, const Tolerances& tol) {
  return static_cast<int>(F_subspace(t, tol).dim());
}

SubquotientChart chart_with_frame(const CommutingTuple& t, const Frame& f, const Tolerances& tol) {
  SubquotientChart c;
  c.s = static_cast<int>(f.dim());
  c.f = f;
  if (f.dim() == 0) {
    c.x.mats.assign(t.n(), Matrix(0, 0));
    return c;
  }
  const Matrix& fb = f.basis();
  for (const auto& a : t.mats) {
    const Matrix b = fb.adjoint() * a * fb;
    if (min_singular_value(b - Matrix::identity(f.dim()), tol) <= tol.eps_struct)
      throw Error(ErrorCode::WrongStratum, "B - Id is singular on the chart frame");
    Matrix x = cayley_inv(b, tol);
    c.x.mats.push_back(0.5 * (x - x.adjoint()));
  }
  return c;
}

SubquotientChart subquotient_chart(const CommutingTuple& t, const Tolerances& tol) {
  return chart_with_frame(t, F_subspace(t, tol), tol);
}

SubquotientChart subquotient_chart(const CommutingTuple& t, int expected_rank, const Tolerances& tol) {
  const Frame f = F_subspace(t, tol);
  if (static_cast<int>(f.dim()) != expected_rank)
    throw Error(ErrorCode::WrongStratum, "tuple has stratum rank " + std::to_string(f.dim()) + ", expected " +
                                             std::to_string(expected_rank));
  return chart_with_frame(t, f, tol);
}

CommutingTuple reconstruct(const SubquotientChart& c, const std::optional<UniverseBasis>& ambient) {
  const std::size_t dim = c.f.ambient_dim();
  CommutingTuple t{TupleKind::unitary, {}, ambient};
  const Matrix& fb = c.f.basis();
  for (const auto& x : c.x.mats) {
    Matrix a = Matrix::identity(dim);
    if (c.s > 0) a += fb * (cayley(x) - Matrix::identity(x.rows())) * fb.adjoint();
    t.mats.push_back(std::move(a));
  }
  return t;
}

double chart_conjugacy_defect(const SubquotientChart& a, const SubquotientChart& b) {
  if (a.s != b.s || a.x.n() != b.x.n()) return std::numeric_limits<double>::infinity();
  if (a.s == 0) return 0.0;
  const Matrix g = a.f.basis().adjoint() * b.f.basis();
  double d = distance(g.adjoint() * g, Matrix::identity(g.cols()));
  for (std::size_t i = 0; i < a.x.n(); ++i) d = std::max(d, distance(g.adjoint() * a.x.mats[i] * g, b.x.mats[i]));
  return d;
}

SubquotientChart sigma_action_chart(const Permutation& sigma, const SubquotientChart& c, const UniverseBasis& u) {
  if (sigma.size() != c.x.n()) throw Error(ErrorCode::ShapeMismatch, "permutation size must match tuple length");
  SubquotientChart out;
  out.s = c.s;
  out.f = c.s > 0 ? sigma_star(sigma, u, c.f) : Frame(u.dim());
  const Permutation inv = inverse(sigma);
  for (std::size_t j = 0; j < c.x.n(); ++j) out.x.mats.push_back(c.x.mats[inv[j]]);
  return out;
}

TraceSplit trace_split(const CommutingTuple& x) {
  TraceSplit out{CommutingTuple{x.kind, {}, x.ambient}, {}};
  for (const auto& m : x.mats) {
    const double s = static_cast<double>(m.rows());
    const cplx mean = s > 0 ? m.trace() / s : cplx(0.0);
    cplx tau;
    if (x.kind == TupleKind::skew_hermitian) {
      tau = cplx(0.0, mean.imag());
      out.tau.push_back(mean.imag());
    } else if (x.kind == TupleKind::real_symmetric) {
      tau = mean.real();
      out.tau.push_back(mean.real());
    } else {
      throw Error(ErrorCode::InvalidArgument, "trace_split needs a skew-Hermitian or symmetric tuple");
    }
    out.traceless.mats.push_back(m - tau * Matrix::identity(m.rows()));
  }
  return out;
}

CommutingTuple reassemble(const TraceSplit& split) {
  CommutingTuple out{split.traceless.kind, {}, split.traceless.ambient};
  const bool skew = split.traceless.kind == TupleKind::skew_hermitian;
  for (std::size_t i = 0; i < split.traceless.n(); ++i) {
    const Matrix& m = split.traceless.mats[i];
    const cplx tau = skew ? cplx(0.0, split.tau[i]) : cplx(split.tau[i]);
    out.mats.push_back(m + tau * Matrix::identity(m.rows()));
  }
  return out;
}

CommutingTuple stabilize(const CommutingTuple& x, std::size_t m) {
  if (x.kind == TupleKind::unitary) throw Error(ErrorCode::InvalidArgument, "stabilize appends zero matrices");
  CommutingTuple out = x;
  const std::size_t s = x.s();
  for (std::size_t k = 0; k < m; ++k) out.mats.push_back(Matrix(s, s));
  return out;
}

CommutingTuple pairing_chart(const CommutingTuple& x, const CommutingTuple& y) {
  if (x.kind != y.kind || x.kind == TupleKind::unitary)
    throw Error(ErrorCode::InvalidArgument, "pairing needs two skew-Hermitian or two symmetric tuples");
  const std::size_t s = x.mats.empty() ? 1 : x.s();
  const std::size_t t = y.mats.empty() ? 1 : y.s();
  CommutingTuple out{x.kind, {}, std::nullopt};
  const Matrix is = Matrix::identity(s), it = Matrix::identity(t);
  for (const auto& m : x.mats) out.mats.push_back(kron(m, it));
  for (const auto& m : y.mats) out.mats.push_back(kron(is, m));
  return out;
}

}  // namespace commvar
