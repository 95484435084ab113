#include "commvar/numkit.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "commvar/jacobi.hpp"

namespace commvar {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::TruncationOverflow: return "TruncationOverflow";
    case ErrorCode::NotOrthogonal: return "NotOrthogonal";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotCommuting: return "NotCommuting";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::NotSkewHermitian: return "NotSkewHermitian";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::SingularAtOne: return "SingularAtOne";
    case ErrorCode::WrongStratum: return "WrongStratum";
    case ErrorCode::NotRealizable: return "NotRealizable";
    case ErrorCode::ZeroTuple: return "ZeroTuple";
    case ErrorCode::NotOddPrime: return "NotOddPrime";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

void Tolerances::validate() const {
  if (!(eps_struct > 0 && eps_cluster > 0 && eps_base > 0 && max_sweeps > 0))
    throw Error(ErrorCode::InvalidArgument, "tolerances must be strictly positive");
  if (eps_struct > eps_cluster)
    throw Error(ErrorCode::InvalidArgument, "eps_struct must not exceed eps_cluster");
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<cplx> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_)
    throw Error(ErrorCode::ShapeMismatch, "data length does not match rows*cols");
}

Matrix::Matrix(std::initializer_list<std::initializer_list<cplx>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorCode::ShapeMismatch, "ragged initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::diagonal(std::span<const cplx> d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Matrix Matrix::column(std::span<const cplx> v) {
  return Matrix(v.size(), 1, std::vector<cplx>(v.begin(), v.end()));
}

std::vector<cplx> Matrix::col(std::size_t c) const {
  std::vector<cplx> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Matrix::set_col(std::size_t c, std::span<const cplx> v) {
  if (v.size() != rows_) throw Error(ErrorCode::ShapeMismatch, "set_col length");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

std::vector<cplx> Matrix::diag() const {
  std::vector<cplx> d(std::min(rows_, cols_));
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = (*this)(i, i);
  return d;
}

Matrix Matrix::adjoint() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = std::conj((*this)(r, c));
  return t;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::conj() const {
  Matrix t = *this;
  for (auto& x : t.data_) x = std::conj(x);
  return t;
}

Matrix Matrix::real_part() const {
  Matrix t = *this;
  for (auto& x : t.data_) x = x.real();
  return t;
}

Matrix Matrix::imag_part() const {
  Matrix t = *this;
  for (auto& x : t.data_) x = x.imag();
  return t;
}

cplx Matrix::trace() const {
  cplx t = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

Matrix Matrix::col_block(std::size_t first, std::size_t count) const {
  if (first + count > cols_) throw Error(ErrorCode::IndexOutOfRange, "col_block");
  Matrix m(rows_, count);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < count; ++c) m(r, c) = (*this)(r, first + c);
  return m;
}

Matrix Matrix::select(std::span<const std::size_t> rs, std::span<const std::size_t> cs) const {
  Matrix m(rs.size(), cs.size());
  for (std::size_t i = 0; i < rs.size(); ++i)
    for (std::size_t j = 0; j < cs.size(); ++j) m(i, j) = (*this)(rs[i], cs[j]);
  return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorCode::ShapeMismatch, "operator+");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorCode::ShapeMismatch, "operator-");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(cplx a) {
  for (auto& x : data_) x *= a;
  return *this;
}

bool Matrix::all_finite() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](cplx x) { return std::isfinite(x.real()) && std::isfinite(x.imag()); });
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
Matrix operator*(cplx a, Matrix m) { return m *= a; }
Matrix operator*(Matrix m, cplx a) { return m *= a; }

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::ShapeMismatch, "operator*");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx(0.0)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

Matrix hcat(std::span<const Matrix> blocks) {
  if (blocks.empty()) return {};
  const std::size_t rows = blocks.front().rows();
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    if (b.rows() != rows) throw Error(ErrorCode::ShapeMismatch, "hcat row count");
    cols += b.cols();
  }
  Matrix m(rows, cols);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) m(r, off + c) = b(r, c);
    off += b.cols();
  }
  return m;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const cplx aij = a(i, j);
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          m(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return m;
}

Matrix direct_sum(std::span<const Matrix> blocks) {
  std::size_t rows = 0, cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  Matrix m(rows, cols);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) m(r0 + r, c0 + c) = b(r, c);
    r0 += b.rows();
    c0 += b.cols();
  }
  return m;
}

double frobenius_norm(const Matrix& m) {
  double s = 0.0;
  for (const auto& x : m.data()) s += std::norm(x);
  return std::sqrt(s);
}

double distance(const Matrix& a, const Matrix& b) { return frobenius_norm(a - b); }

cplx inner(std::span<const cplx> a, std::span<const cplx> b) {
  if (a.size() != b.size()) throw Error(ErrorCode::ShapeMismatch, "inner");
  cplx s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

double norm2(std::span<const cplx> v) {
  double s = 0.0;
  for (const auto& x : v) s += std::norm(x);
  return std::sqrt(s);
}

namespace {

struct LU {
  Matrix lu;
  std::vector<std::size_t> perm;
  int sign = 1;
  bool singular = false;
};

LU lu_decompose(const Matrix& a) {
  if (!a.square()) throw Error(ErrorCode::ShapeMismatch, "LU of non-square matrix");
  const std::size_t n = a.rows();
  LU f{a, std::vector<std::size_t>(n), 1, false};
  std::iota(f.perm.begin(), f.perm.end(), 0);
  const double scale = std::max(1.0, frobenius_norm(a));
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    double best = std::abs(f.lu(k, k));
    for (std::size_t r = k + 1; r < n; ++r)
      if (std::abs(f.lu(r, k)) > best) {
        best = std::abs(f.lu(r, k));
        piv = r;
      }
    if (best <= 1e-300 * scale) {
      f.singular = true;
      continue;
    }
    if (piv != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(f.lu(k, c), f.lu(piv, c));
      std::swap(f.perm[k], f.perm[piv]);
      f.sign = -f.sign;
    }
    for (std::size_t r = k + 1; r < n; ++r) {
      const cplx m = f.lu(r, k) / f.lu(k, k);
      f.lu(r, k) = m;
      for (std::size_t c = k + 1; c < n; ++c) f.lu(r, c) -= m * f.lu(k, c);
    }
  }
  return f;
}

}  // namespace

Matrix solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw Error(ErrorCode::ShapeMismatch, "solve");
  const LU f = lu_decompose(a);
  if (f.singular) throw Error(ErrorCode::RankDeficient, "singular matrix in solve");
  const std::size_t n = a.rows();
  Matrix x(n, b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j) {
    std::vector<cplx> y(n);
    for (std::size_t i = 0; i < n; ++i) {
      cplx s = b(f.perm[i], j);
      for (std::size_t k = 0; k < i; ++k) s -= f.lu(i, k) * y[k];
      y[i] = s;
    }
    for (std::size_t i = n; i-- > 0;) {
      cplx s = y[i];
      for (std::size_t k = i + 1; k < n; ++k) s -= f.lu(i, k) * x(k, j);
      x(i, j) = s / f.lu(i, i);
    }
  }
  return x;
}

Matrix inverse(const Matrix& a) { return solve(a, Matrix::identity(a.rows())); }

cplx determinant(const Matrix& a) {
  const LU f = lu_decompose(a);
  if (f.singular) return 0.0;
  cplx d = static_cast<double>(f.sign);
  for (std::size_t i = 0; i < a.rows(); ++i) d *= f.lu(i, i);
  return d;
}

bool is_hermitian(const Matrix& m, double tol) {
  return m.square() && distance(m, m.adjoint()) <= tol * std::max(1.0, frobenius_norm(m));
}

bool is_skew_hermitian(const Matrix& m, double tol) {
  return m.square() && frobenius_norm(m + m.adjoint()) <= tol * std::max(1.0, frobenius_norm(m));
}

bool is_unitary(const Matrix& m, double tol) {
  return m.square() && distance(m.adjoint() * m, Matrix::identity(m.rows())) <= tol;
}

bool is_real_symmetric(const Matrix& m, double tol) {
  const double scale = std::max(1.0, frobenius_norm(m));
  return m.square() && frobenius_norm(m.imag_part()) <= tol * scale &&
         distance(m, m.transpose()) <= tol * scale;
}

// ---------------------------------------------------------------------------
// Frames

Frame::Frame(std::size_t ambient_dim) : basis_(ambient_dim, 0) {}

Frame::Frame(Matrix columns, double tol) : basis_(std::move(columns)) {
  const Matrix gram = basis_.adjoint() * basis_;
  if (distance(gram, Matrix::identity(basis_.cols())) > tol)
    throw Error(ErrorCode::NotOrthogonal, "frame columns are not orthonormal");
}

Frame Frame::unchecked(Matrix columns) {
  Frame f;
  f.basis_ = std::move(columns);
  return f;
}

Matrix Frame::projector() const { return basis_ * basis_.adjoint(); }

Frame orthonormalize(std::span<const std::vector<cplx>> vectors, std::size_t ambient_dim,
                     const Tolerances& tol) {
  std::vector<std::vector<cplx>> q;
  q.reserve(vectors.size());
  for (const auto& v0 : vectors) {
    if (v0.size() != ambient_dim) throw Error(ErrorCode::ShapeMismatch, "orthonormalize length");
    const double n0 = norm2(v0);
    std::vector<cplx> v = v0;
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& u : q) {
        const cplx c = inner(u, v);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] -= c * u[i];
      }
    const double r = norm2(v);
    if (n0 == 0.0 || r < tol.eps_struct * n0)
      throw Error(ErrorCode::RankDeficient, "vectors are linearly dependent");
    for (auto& x : v) x /= r;
    q.push_back(std::move(v));
  }
  Matrix m(ambient_dim, q.size());
  for (std::size_t c = 0; c < q.size(); ++c) m.set_col(c, q[c]);
  return Frame::unchecked(std::move(m));
}

Frame orthonormalize(const Matrix& columns, const Tolerances& tol) {
  std::vector<std::vector<cplx>> vs;
  for (std::size_t c = 0; c < columns.cols(); ++c) vs.push_back(columns.col(c));
  return orthonormalize(vs, columns.rows(), tol);
}

Frame subspace_basis(const Matrix& projector, std::size_t rank) {
  const std::size_t n = projector.rows();
  std::vector<std::vector<cplx>> residual;
  for (std::size_t c = 0; c < n; ++c) residual.push_back(projector.col(c));
  std::vector<bool> used(n, false);
  Matrix out(n, rank);
  for (std::size_t k = 0; k < rank; ++k) {
    std::size_t best = n;
    double best_norm = -1.0;
    for (std::size_t c = 0; c < n; ++c) {
      if (used[c]) continue;
      const double r = norm2(residual[c]);
      // prefer the lower index unless a later column is clearly larger
      if (r > best_norm * (1.0 + 1e-10) + 1e-14) {
        best_norm = r;
        best = c;
      }
    }
    if (best == n || best_norm <= 0.0) throw Error(ErrorCode::RankDeficient, "subspace_basis");
    used[best] = true;
    std::vector<cplx> q = residual[best];
    // the pivot coordinate of a projector residual is real positive; keep it exactly so
    const double nq = norm2(q);
    for (auto& x : q) x /= nq;
    const cplx ph = q[best] / std::abs(q[best]);
    for (auto& x : q) x /= ph;
    // re-orthogonalize against earlier picks
    for (std::size_t j = 0; j < k; ++j) {
      const auto u = out.col(j);
      const cplx c = inner(u, q);
      for (std::size_t i = 0; i < n; ++i) q[i] -= c * u[i];
    }
    const double nq2 = norm2(q);
    for (auto& x : q) x /= nq2;
    out.set_col(k, q);
    for (std::size_t c = 0; c < n; ++c) {
      if (used[c]) continue;
      const cplx proj = inner(q, residual[c]);
      for (std::size_t i = 0; i < n; ++i) residual[c][i] -= proj * q[i];
    }
  }
  return Frame::unchecked(std::move(out));
}

void normalize_column_phases(Matrix& m) {
  for (std::size_t c = 0; c < m.cols(); ++c) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
      const double a = std::abs(m(r, c));
      if (a > 1e-8) {
        const cplx ph = m(r, c) / a;
        for (std::size_t i = 0; i < m.rows(); ++i) m(i, c) /= ph;
        m(r, c) = a;
        break;
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Eigen

HermitianEig hermitian_eig(const Matrix& h, const Tolerances& tol) {
  if (!h.square()) throw Error(ErrorCode::ShapeMismatch, "hermitian_eig needs a square matrix");
  if (!is_hermitian(h, tol.eps_struct)) throw Error(ErrorCode::NotHermitian, "hermitian_eig");
  const std::size_t n = h.rows();
  const double scale = frobenius_norm(h);
  JacobiResult jr = joint_jacobi({h}, Matrix::identity(n), 1e-14 * scale, tol.max_sweeps);
  if (!jr.converged && jr.off > 1e-12 * scale)
    throw Error(ErrorCode::NoConvergence, "hermitian_eig: Jacobi sweep cap reached");
  std::vector<double> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = jr.rotated[0](i, i).real();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return d[a] < d[b]; });
  HermitianEig out{Matrix(n, n), std::vector<double>(n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = d[order[k]];
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = jr.q(r, order[k]);
  }
  return out;
}

double min_singular_value(const Matrix& m, const Tolerances& tol) {
  if (m.empty()) return 0.0;
  // eigenvalues of [[0, M], [M^H, 0]] are +-sigma_i plus |rows - cols| zeros
  const std::size_t r = m.rows(), c = m.cols();
  Matrix h(r + c, r + c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      h(i, r + j) = m(i, j);
      h(r + j, i) = std::conj(m(i, j));
    }
  const auto eig = hermitian_eig(h, tol);
  std::vector<double> mags;
  for (double v : eig.values) mags.push_back(std::abs(v));
  std::sort(mags.begin(), mags.end());
  return mags[r > c ? r - c : c - r];
}

double commutator_defect(std::span<const Matrix> mats) {
  for (const auto& m : mats)
    if (!m.square() || m.rows() != mats.front().rows())
      throw Error(ErrorCode::ShapeMismatch, "commutator_defect needs square matrices of one size");
  double worst = 0.0;
  for (std::size_t i = 0; i < mats.size(); ++i)
    for (std::size_t j = i + 1; j < mats.size(); ++j) {
      const double c = distance(mats[i] * mats[j], mats[j] * mats[i]);
      const double scale = std::max(1.0, frobenius_norm(mats[i]) * frobenius_norm(mats[j]));
      worst = std::max(worst, c / scale);
    }
  return worst;
}

}  // namespace commvar
