#include "commvar/spectrumops.hpp"

namespace commvar {

namespace {

const UniverseBasis& ambient_of(const CommutingTuple& t) {
  if (!t.ambient) throw Error(ErrorCode::InvalidArgument, "tuple picture maps need a universe");
  return *t.ambient;
}

void check_sphere(const SpherePoint& y, int m) {
  if (!y.is_basepoint_symbol() && y.dim() != static_cast<std::size_t>(m))
    throw Error(ErrorCode::ShapeMismatch, "sphere point has the wrong dimension");
}

}  // namespace

Configuration unit_map(const SpherePoint& x, const UniverseBasis& u) {
  Configuration c{u, {}};
  if (x.is_basepoint_symbol()) return c;
  if (x.dim() != static_cast<std::size_t>(u.n()))
    throw Error(ErrorCode::ShapeMismatch, "sphere dimension does not match the universe");
  c.labels.push_back({j0(u), x});
  return canonicalize(c);
}

Configuration multiply(const Configuration& a, const Configuration& b, std::optional<int> target_degree,
                       const Tolerances& tol) {
  const PsiEmbedding psi(a.universe, b.universe, target_degree);
  Configuration out{psi.target(), {}};
  for (const auto& la : a.labels)
    for (const auto& lb : b.labels) {
      if (la.frame.empty() || lb.frame.empty()) continue;
      out.labels.push_back({psi.apply(la.frame, lb.frame), smash(la.point, lb.point)});
    }
  return canonicalize(out, tol);
}

Configuration structure_map(const Configuration& a, const SpherePoint& y, int m, const Tolerances& tol) {
  check_sphere(y, m);
  const UniverseBasis line(m, a.universe.max_degree());
  const PsiEmbedding psi(a.universe, line);
  Configuration out{psi.target(), {}};
  if (y.is_basepoint_symbol()) return out;
  const Frame one = j0(line);
  for (const auto& la : a.labels)
    if (!la.frame.empty()) out.labels.push_back({psi.apply(la.frame, one), smash(la.point, y)});
  return canonicalize(out, tol);
}

CommutingTuple unit_tuple(const SpherePoint& x, const UniverseBasis& u) {
  CommutingTuple t = identity_tuple(u, static_cast<std::size_t>(u.n()));
  if (x.is_basepoint_symbol()) return t;
  if (x.dim() != static_cast<std::size_t>(u.n()))
    throw Error(ErrorCode::ShapeMismatch, "sphere dimension does not match the universe");
  for (std::size_t j = 0; j < t.n(); ++j) t.mats[j](0, 0) = x.coords()[j];
  return t;
}

CommutingTuple multiply_tuple(const CommutingTuple& a, const CommutingTuple& b, std::optional<int> target_degree,
                              const Tolerances& tol) {
  const UniverseBasis& ua = ambient_of(a);
  const UniverseBasis& ub = ambient_of(b);
  const PsiEmbedding psi(ua, ub, target_degree);
  const Matrix pa = F_subspace(a, tol).projector();
  const Matrix pb = F_subspace(b, tol).projector();
  const Matrix ia = Matrix::identity(ua.dim()), ib = Matrix::identity(ub.dim());
  CommutingTuple out{TupleKind::unitary, {}, psi.target()};
  for (std::size_t i = 0; i < a.n(); ++i)
    out.mats.push_back(psi.conjugate(kron(ia, ib) + kron(pa * (a.mats[i] - ia) * pa, pb)));
  for (std::size_t k = 0; k < b.n(); ++k)
    out.mats.push_back(psi.conjugate(kron(ia, ib) + kron(pa, pb * (b.mats[k] - ib) * pb)));
  return out;
}

CommutingTuple structure_map_tuple(const CommutingTuple& a, const SpherePoint& y, int m, const Tolerances& tol) {
  check_sphere(y, m);
  const UniverseBasis& ua = ambient_of(a);
  const UniverseBasis line(m, ua.max_degree());
  const PsiEmbedding psi(ua, line);
  if (y.is_basepoint_symbol()) return identity_tuple(psi.target(), a.n() + static_cast<std::size_t>(m));
  const Matrix p = F_subspace(a, tol).projector();
  const Matrix one = j0(line).projector();
  const Matrix ia = Matrix::identity(ua.dim()), il = Matrix::identity(line.dim());
  CommutingTuple out{TupleKind::unitary, {}, psi.target()};
  for (const auto& ai : a.mats) out.mats.push_back(psi.conjugate(kron(ia, il) + kron(p * (ai - ia) * p, one)));
  for (cplx yk : y.coords()) out.mats.push_back(psi.conjugate(kron(ia, il) + kron(p, (yk - 1.0) * one)));
  return out;
}

}  // namespace commvar
