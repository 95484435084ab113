#include "commvar/realk.hpp"

#include <algorithm>
#include <cmath>

namespace commvar {

namespace {

const cplx kI(0.0, 1.0);

double max_imag(const Matrix& m) {
  double d = 0.0;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) d = std::max(d, std::abs(m(r, c).imag()));
  return d;
}

}  // namespace

Matrix real_cayley(const Matrix& x, const Tolerances& tol) {
  if (!is_real_symmetric(x, tol.eps_struct * std::max(1.0, frobenius_norm(x))))
    throw Error(ErrorCode::NotSymmetric, "real_cayley needs a real symmetric matrix");
  return cayley(kI * x.real_part(), tol);
}

Matrix real_cayley_inv(const Matrix& a, const Tolerances& tol) {
  const Matrix x = (-kI) * cayley_inv(a, tol);
  return (0.5 * (x + x.transpose())).real_part();
}

RealDiagonalization joint_diagonalize_real(const CommutingTuple& t, const Tolerances& tol) {
  if (t.kind != TupleKind::real_symmetric)
    throw Error(ErrorCode::InvalidArgument, "joint_diagonalize_real needs a real symmetric tuple");
  validate(t, tol);
  auto jd = joint_diagonalize(t, tol);
  RealDiagonalization out;
  out.q = jd.q.real_part();
  out.blocks = std::move(jd.blocks);
  for (auto& b : out.blocks) b.frame = Frame::unchecked(b.frame.basis().real_part());
  if (out.q.rows() > 0 && determinant(out.q).real() < 0.0) {
    const std::size_t last = out.q.cols() - 1;
    for (std::size_t r = 0; r < out.q.rows(); ++r) out.q(r, last) = -out.q(r, last);
    Matrix fb = out.blocks.back().frame.basis();
    const std::size_t lc = fb.cols() - 1;
    for (std::size_t r = 0; r < fb.rows(); ++r) fb(r, lc) = -fb(r, lc);
    out.blocks.back().frame = Frame::unchecked(std::move(fb));
  }
  double res = 0.0;
  for (const auto& m : t.mats) {
    const Matrix d = out.q.transpose() * m * out.q;
    double off = 0.0;
    for (std::size_t r = 0; r < d.rows(); ++r)
      for (std::size_t c = 0; c < d.cols(); ++c)
        if (r != c) off += std::norm(d(r, c));
    res = std::max(res, std::sqrt(off));
  }
  out.residual = res;
  return out;
}

RealSplit real_trace_split(const CommutingTuple& x) {
  if (x.kind != TupleKind::real_symmetric)
    throw Error(ErrorCode::InvalidArgument, "real_trace_split needs a real symmetric tuple");
  return trace_split(x);
}

SubquotientChart real_stratum_chart(const CommutingTuple& t, const Tolerances& tol) {
  if (t.kind != TupleKind::unitary) throw Error(ErrorCode::InvalidArgument, "real chart needs a unitary tuple");
  for (const auto& a : t.mats)
    if (distance(a, a.transpose()) > tol.eps_struct * std::max(1.0, frobenius_norm(a)))
      throw Error(ErrorCode::NotRealizable, "tuple entry is not complex symmetric");
  const auto blocks = F_blocks(t, tol);
  const double slack = std::max(1.0, std::sqrt(static_cast<double>(t.s())));
  std::vector<Matrix> frames;
  for (const auto& b : blocks) {
    const Matrix p = b.frame.projector();
    if (max_imag(p) > tol.eps_struct * slack)
      throw Error(ErrorCode::NotRealizable, "eigenspace is not the complexification of a real subspace");
    frames.push_back(subspace_basis(p.real_part(), b.frame.dim()).basis().real_part());
  }
  SubquotientChart c;
  c.x.kind = TupleKind::real_symmetric;
  if (frames.empty()) {
    c.f = Frame(t.s());
    c.x.mats.assign(t.n(), Matrix(0, 0));
    return c;
  }
  c.f = Frame::unchecked(hcat(frames));
  c.s = static_cast<int>(c.f.dim());
  const Matrix& fb = c.f.basis();
  for (const auto& a : t.mats) {
    const Matrix b = fb.transpose() * a * fb;
    if (min_singular_value(b - Matrix::identity(b.rows()), tol) <= tol.eps_struct)
      throw Error(ErrorCode::WrongStratum, "B - Id is singular on the chart frame");
    c.x.mats.push_back(real_cayley_inv(b, tol));
  }
  return c;
}

SubquotientChart complexify(const SubquotientChart& real_chart) {
  SubquotientChart c = real_chart;
  c.x.kind = TupleKind::skew_hermitian;
  for (auto& m : c.x.mats) m = kI * m;
  return c;
}

CommutingTuple reconstruct_real(const SubquotientChart& c, const std::optional<UniverseBasis>& ambient) {
  return reconstruct(complexify(c), ambient);
}

}  // namespace commvar
