#pragma once

#include <optional>
#include <vector>

#include "commvar/commodel.hpp"

namespace commvar {

/// (X - Id)(X + Id)^{-1}. Throws NotSkewHermitian.
Matrix cayley(const Matrix& x, const Tolerances& tol = {});
/// (Id - A)^{-1}(Id + A). Throws SingularAtOne when sigma_min(A - Id) <= eps_struct.
Matrix cayley_inv(const Matrix& a, const Tolerances& tol = {});

/// dim F(T).
int stratum_rank(const CommutingTuple& t, const Tolerances& tol = {});

/// Point of the open stratum R^s \ R^{s-1} in coordinates: a commuting skew-Hermitian
/// tuple X on C^s and an isometric embedding f of C^s onto F(T).
struct SubquotientChart {
  int s = 0;
  CommutingTuple x{TupleKind::skew_hermitian, {}, std::nullopt};
  Frame f;
};

/// Chart with f = the F eigenblock frames concatenated (deterministic), B_i = f^H A_i f
/// and X_i = cayley_inv(B_i). Throws WrongStratum if some B_i - Id is singular.
SubquotientChart subquotient_chart(const CommutingTuple& t, const Tolerances& tol = {});
/// Same, but throws WrongStratum unless stratum_rank(t) == expected_rank.
SubquotientChart subquotient_chart(const CommutingTuple& t, int expected_rank, const Tolerances& tol = {});
/// Chart for a caller-chosen orthonormal frame of F(T).
SubquotientChart chart_with_frame(const CommutingTuple& t, const Frame& f, const Tolerances& tol = {});

/// Id + f (cayley(X_i) - Id) f^H on the ambient space.
CommutingTuple reconstruct(const SubquotientChart& c, const std::optional<UniverseBasis>& ambient = {});

/// For charts of one class with frames f1, f2: g = f1^H f2 should be unitary and
/// X2_i = g^H X1_i g. Returns the larger of ||g^H g - Id||_F and max_i ||g^H X1_i g - X2_i||_F.
double chart_conjugacy_defect(const SubquotientChart& a, const SubquotientChart& b);

/// The chart of sigma.[T] built from the chart of [T]: X'_j = X_{sigma^{-1}(j)}, f' = sigma_* f.
SubquotientChart sigma_action_chart(const Permutation& sigma, const SubquotientChart& c, const UniverseBasis& u);

/// X_i = Xbar_i + tau_i Id. For skew-Hermitian tuples tau_i = tr(X_i)/s is imaginary and
/// stored as its imaginary part; for real symmetric tuples tau_i is the real trace mean.
struct TraceSplit {
  CommutingTuple traceless;
  std::vector<double> tau;
};

TraceSplit trace_split(const CommutingTuple& x);
CommutingTuple reassemble(const TraceSplit& split);

/// Appends m zero matrices.
CommutingTuple stabilize(const CommutingTuple& x, std::size_t m);

/// (X_1 (x) Id_t, ..., X_n (x) Id_t, Id_s (x) Y_1, ..., Id_s (x) Y_m). An empty tuple
/// counts as size 1.
CommutingTuple pairing_chart(const CommutingTuple& x, const CommutingTuple& y);

}  // namespace commvar
