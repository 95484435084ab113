#pragma once

#include <optional>

#include "commvar/commodel.hpp"
#include "commvar/gammaconf.hpp"

namespace commvar {

// Level maps of the spectrum {ku_n}, in the configuration picture (primary) and the
// commuting tuple picture (second route, used for cross-checks).

/// x -> [C.1, x] on the universe u; empty for the basepoint.
Configuration unit_map(const SpherePoint& x, const UniverseBasis& u);

/// [(V_i, x_i)] . [(W_j, y_j)] = [(psi(V_i (x) W_j), x_i ^ y_j)] on Sym^{<=D}(C^{n+m}) with
/// D = D_a + D_b unless a larger target degree is given.
Configuration multiply(const Configuration& a, const Configuration& b, std::optional<int> target_degree = {},
                       const Tolerances& tol = {});

/// [(V_i, x_i)] ^ y -> [(psi(V_i (x) C.1), x_i ^ y)] for y in S^m. The C.1 line lives in
/// Sym^{<=D}(C^m) with D the degree of a's universe.
Configuration structure_map(const Configuration& a, const SpherePoint& y, int m, const Tolerances& tol = {});

/// x_j on the C.1 line, the identity elsewhere.
CommutingTuple unit_tuple(const SpherePoint& x, const UniverseBasis& u);

/// C_i = psi(A_i|_F(A) (x) Id_F(B)) psi^{-1} for i <= n and psi(Id_F(A) (x) B_{i-n}|_F(B)) psi^{-1}
/// after, each extended by the identity off psi(F(A) (x) F(B)). Both tuples need an ambient.
CommutingTuple multiply_tuple(const CommutingTuple& a, const CommutingTuple& b, std::optional<int> target_degree = {},
                              const Tolerances& tol = {});

/// B_i = psi(A_i|_F (x) Id_{C.1}) psi^{-1}, B_{n+k} = psi(Id_F (x) y_k Id_{C.1}) psi^{-1}.
CommutingTuple structure_map_tuple(const CommutingTuple& a, const SpherePoint& y, int m, const Tolerances& tol = {});

}  // namespace commvar
