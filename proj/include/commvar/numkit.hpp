#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace commvar {

using cplx = std::complex<double>;

enum class ErrorCode {
  InvalidArgument,
  ShapeMismatch,
  RankDeficient,
  NotHermitian,
  NoConvergence,
  TruncationOverflow,
  NotOrthogonal,
  IndexOutOfRange,
  NotCommuting,
  NotUnitary,
  NotSkewHermitian,
  NotSymmetric,
  SingularAtOne,
  WrongStratum,
  NotRealizable,
  ZeroTuple,
  NotOddPrime,
};

const char* to_string(ErrorCode code);

/// Single exception type for the library; the code says which contract broke.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Tolerance policy threaded explicitly through every numerical routine.
struct Tolerances {
  double eps_struct = 1e-9;   // structure checks (unitary, Hermitian, orthonormal)
  double eps_cluster = 1e-6;  // eigenvalue clustering and point merging
  double eps_base = 1e-9;     // basepoint detection |x - 1|
  int max_sweeps = 100;       // Jacobi sweep cap

  /// Throws InvalidArgument unless all positive and eps_struct <= eps_cluster.
  void validate() const;
};

/// Dense complex matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<cplx> data);
  Matrix(std::initializer_list<std::initializer_list<cplx>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix diagonal(std::span<const cplx> d);
  static Matrix diagonal(std::initializer_list<cplx> d) { return diagonal(std::span<const cplx>(d.begin(), d.size())); }
  static Matrix column(std::span<const cplx> v);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  const std::vector<cplx>& data() const noexcept { return data_; }

  std::vector<cplx> col(std::size_t c) const;
  void set_col(std::size_t c, std::span<const cplx> v);
  std::vector<cplx> diag() const;

  Matrix adjoint() const;
  Matrix transpose() const;
  Matrix conj() const;
  Matrix real_part() const;
  Matrix imag_part() const;
  cplx trace() const;

  /// Columns [first, first + count).
  Matrix col_block(std::size_t first, std::size_t count) const;
  /// Submatrix selecting the given rows and columns.
  Matrix select(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(cplx a);

  bool all_finite() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(cplx a, Matrix m);
Matrix operator*(Matrix m, cplx a);

/// Columns concatenated left to right; all inputs share a row count.
Matrix hcat(std::span<const Matrix> blocks);
Matrix kron(const Matrix& a, const Matrix& b);
/// Block-diagonal assembly.
Matrix direct_sum(std::span<const Matrix> blocks);

double frobenius_norm(const Matrix& m);
double distance(const Matrix& a, const Matrix& b);
cplx inner(std::span<const cplx> a, std::span<const cplx> b);  // a^H b
double norm2(std::span<const cplx> v);

/// Solves A X = B by LU with partial pivoting. Throws RankDeficient on a zero pivot.
Matrix solve(const Matrix& a, const Matrix& b);
Matrix inverse(const Matrix& a);
cplx determinant(const Matrix& a);

bool is_hermitian(const Matrix& m, double tol);
bool is_skew_hermitian(const Matrix& m, double tol);
bool is_unitary(const Matrix& m, double tol);
bool is_real_symmetric(const Matrix& m, double tol);

/// Orthonormal columns in a fixed ambient space.
class Frame {
 public:
  Frame() = default;
  /// An empty frame (no vectors) in an ambient space of the given dimension.
  explicit Frame(std::size_t ambient_dim);
  /// Wraps columns that are already orthonormal; throws NotOrthogonal otherwise.
  Frame(Matrix columns, double tol);

  std::size_t ambient_dim() const noexcept { return basis_.rows(); }
  std::size_t dim() const noexcept { return basis_.cols(); }
  bool empty() const noexcept { return dim() == 0; }
  const Matrix& basis() const noexcept { return basis_; }
  Matrix projector() const;

  static Frame unchecked(Matrix columns);

 private:
  Matrix basis_;
};

/// Modified Gram-Schmidt with one re-orthogonalization pass.
/// Throws RankDeficient when a residual falls below eps_struct times its input norm.
Frame orthonormalize(std::span<const std::vector<cplx>> vectors, std::size_t ambient_dim,
                     const Tolerances& tol);
Frame orthonormalize(const Matrix& columns, const Tolerances& tol);

/// Orthonormal basis of the column space of a (near-)projector, chosen greedily by
/// largest residual so the result depends only on the subspace, not on how it was
/// produced. Phase convention: first significant coordinate real positive.
Frame subspace_basis(const Matrix& projector, std::size_t rank);

/// Multiplies each column by a unit scalar so its first significant entry is real positive.
void normalize_column_phases(Matrix& m);

struct HermitianEig {
  Matrix vectors;              // unitary, columns are eigenvectors
  std::vector<double> values;  // ascending
};

/// Cyclic Jacobi eigendecomposition of a Hermitian matrix.
HermitianEig hermitian_eig(const Matrix& h, const Tolerances& tol = {});

/// Smallest singular value, from the Hermitian embedding [[0, M], [M^H, 0]], so tiny
/// values are resolved to about eps ||M|| rather than sqrt(eps).
double min_singular_value(const Matrix& m, const Tolerances& tol = {});

/// max_{i<j} ||X_i X_j - X_j X_i||_F / max(1, ||X_i||_F ||X_j||_F).
double commutator_defect(std::span<const Matrix> mats);

}  // namespace commvar
