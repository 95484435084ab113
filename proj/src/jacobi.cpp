#include "commvar/jacobi.hpp"

#include <array>
#include <cmath>
#include <limits>

namespace commvar {

namespace {

using Vec3 = std::array<double, 3>;
using Mat3 = std::array<std::array<double, 3>, 3>;

// Dominant eigenvector of a real symmetric 3x3 matrix by classical Jacobi.
Vec3 dominant_eigvec3(Mat3 a) {
  Mat3 v{};
  for (int i = 0; i < 3; ++i) v[i][i] = 1.0;
  for (int sweep = 0; sweep < 50; ++sweep) {
    const double off = a[0][1] * a[0][1] + a[0][2] * a[0][2] + a[1][2] * a[1][2];
    const double diag = a[0][0] * a[0][0] + a[1][1] * a[1][1] + a[2][2] * a[2][2];
    if (off <= 1e-32 * diag || off == 0.0) break;
    for (int p = 0; p < 2; ++p)
      for (int q = p + 1; q < 3; ++q) {
        if (a[p][q] == 0.0) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < 3; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < 3; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
        for (int k = 0; k < 3; ++k) {
          const double vkp = v[k][p], vkq = v[k][q];
          v[k][p] = c * vkp - s * vkq;
          v[k][q] = s * vkp + c * vkq;
        }
      }
  }
  int best = 0;
  for (int i = 1; i < 3; ++i)
    if (a[i][i] > a[best][best]) best = i;
  return {v[0][best], v[1][best], v[2][best]};
}

// H <- R^H H R for the plane rotation R = [[c, -conj(s)], [s, c]] acting on (p, q).
void rotate(Matrix& h, std::size_t p, std::size_t q, double c, cplx s) {
  const std::size_t n = h.rows();
  const cplx sc = std::conj(s);
  for (std::size_t r = 0; r < n; ++r) {
    const cplx hp = h(r, p), hq = h(r, q);
    h(r, p) = hp * c + hq * s;
    h(r, q) = -hp * sc + hq * c;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const cplx hp = h(p, k), hq = h(q, k);
    h(p, k) = c * hp + sc * hq;
    h(q, k) = -s * hp + c * hq;
  }
  h(p, p) = h(p, p).real();
  h(q, q) = h(q, q).real();
  h(q, p) = std::conj(h(p, q));
}

void rotate_columns(Matrix& m, std::size_t p, std::size_t q, double c, cplx s) {
  const cplx sc = std::conj(s);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const cplx mp = m(r, p), mq = m(r, q);
    m(r, p) = mp * c + mq * s;
    m(r, q) = -mp * sc + mq * c;
  }
}

double family_off(const std::vector<Matrix>& hs) {
  double s = 0.0;
  for (const auto& h : hs) {
    const double o = off_diagonal_norm(h);
    s += o * o;
  }
  return std::sqrt(s);
}

}  // namespace

double off_diagonal_norm(const Matrix& m) {
  double s = 0.0;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (r != c) s += std::norm(m(r, c));
  return std::sqrt(s);
}

JacobiResult joint_jacobi(std::vector<Matrix> hs, const Matrix& start, double target,
                          int max_sweeps) {
  JacobiResult res;
  const std::size_t n = hs.empty() ? start.rows() : hs.front().rows();
  res.q = start.empty() ? Matrix::identity(n) : start;
  if (!start.empty())
    for (auto& h : hs) h = res.q.adjoint() * h * res.q;

  double total = 0.0;
  for (const auto& h : hs) total += std::norm(frobenius_norm(h));
  total = std::sqrt(total);
  const double skip = std::numeric_limits<double>::epsilon() * 1e-1 * total;

  res.off = family_off(hs);
  if (res.off <= target || n < 2) {
    res.converged = true;
    res.rotated = std::move(hs);
    return res;
  }

  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        Mat3 g{};
        double off_pq = 0.0;
        for (const auto& h : hs) {
          const cplx b = h(p, q);
          off_pq += std::norm(b);
          const Vec3 v{h(p, p).real() - h(q, q).real(), 2.0 * b.real(), -2.0 * b.imag()};
          for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) g[i][j] += v[i] * v[j];
        }
        if (std::sqrt(off_pq) <= skip) continue;
        Vec3 u = dominant_eigvec3(g);
        if (u[0] < 0) u = {-u[0], -u[1], -u[2]};
        const double c = std::sqrt(0.5 * (1.0 + u[0]));
        const cplx s = cplx(u[1], u[2]) / (2.0 * c);
        if (std::abs(s) < 1e-17) continue;
        if (std::abs(s) > 1e-13) rotated = true;
        for (auto& h : hs) rotate(h, p, q, c, s);
        rotate_columns(res.q, p, q, c, s);
      }
    res.sweeps = sweep + 1;
    res.off = family_off(hs);
    if (!rotated || res.off <= target) {
      res.converged = true;
      break;
    }
  }
  res.rotated = std::move(hs);
  return res;
}

}  // namespace commvar
