#include <cmath>
#include <numbers>

#include "commvar/randgen.hpp"
#include "commvar/realk.hpp"
#include "doctest.h"

using namespace commvar;

namespace {

const cplx I(0.0, 1.0);

Matrix random_symmetric(SplitMix64& rng, std::size_t s) {
  Matrix g(s, s);
  for (std::size_t r = 0; r < s; ++r)
    for (std::size_t c = 0; c < s; ++c) g(r, c) = rng.normal();
  return 0.5 * (g + g.transpose());
}

double imag_norm(const Matrix& m) { return frobenius_norm(m.imag_part()); }

}  // namespace

TEST_CASE("real_cayley examples") {
  CHECK(distance(real_cayley(Matrix(2, 2)), -1.0 * Matrix::identity(2)) < 1e-15);
  CHECK(std::abs(real_cayley(Matrix::diagonal({1.0}))(0, 0) - I) < 1e-15);
  CHECK_THROWS_AS(real_cayley(Matrix::diagonal({I})), Error);
}

TEST_CASE("real_cayley lands in unitary symmetric matrices") {
  SplitMix64 rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t s = 1 + rng.below(6);
    const Matrix x = random_symmetric(rng, s);
    const Matrix a = real_cayley(x);
    CHECK(is_unitary(a, 1e-10));
    CHECK(distance(a, a.transpose()) < 1e-10);
    CHECK(min_singular_value(a - Matrix::identity(s)) > 0.0);
    CHECK(distance(real_cayley_inv(a), x) < 1e-10 * std::max(1.0, frobenius_norm(x)));
    const Matrix o = haar_orthogonal(rng, s);
    CHECK(distance(real_cayley(o * x * o.transpose()), o * a * o.transpose()) < 1e-10);
  }
}

TEST_CASE("joint_diagonalize_real gives special orthogonal Q") {
  const CommutingTuple diag{TupleKind::real_symmetric, {Matrix::diagonal({2.0, 1.0, 3.0})}, std::nullopt};
  const auto d = joint_diagonalize_real(diag);
  CHECK(std::abs(determinant(d.q) - cplx(1.0)) < 1e-12);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) {
      const double v = std::abs(d.q(r, c));
      CHECK((v < 1e-14 || std::abs(v - 1.0) < 1e-14));
    }

  SplitMix64 rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng.below(3), s = 1 + rng.below(6);
    const CommutingTuple t = gen_random_commuting(trial_seed(2, trial), n, s, TupleKind::real_symmetric);
    const auto jd = joint_diagonalize_real(t);
    double scale = 1.0;
    for (const auto& m : t.mats) scale = std::max(scale, frobenius_norm(m));
    CHECK(jd.residual <= 1e-8 * scale);
    CHECK(std::abs(determinant(jd.q) - cplx(1.0)) < 1e-10);
    CHECK(imag_norm(jd.q) == 0.0);
    CHECK(distance(jd.q.transpose() * jd.q, Matrix::identity(s)) < 1e-10);
  }
}

TEST_CASE("real trace split") {
  const CommutingTuple id{TupleKind::real_symmetric, {Matrix::identity(3)}, std::nullopt};
  const RealSplit sp = real_trace_split(id);
  CHECK(frobenius_norm(sp.traceless.mats[0]) < 1e-15);
  CHECK(sp.tau[0] == doctest::Approx(1.0));
  for (int trial = 0; trial < 30; ++trial) {
    const CommutingTuple x = gen_random_commuting(trial_seed(3, trial), 2, 4, TupleKind::real_symmetric);
    const RealSplit split = real_trace_split(x);
    for (const auto& m : split.traceless.mats) CHECK(std::abs(m.trace()) < 1e-12);
    const CommutingTuple back = reassemble(split);
    for (std::size_t i = 0; i < x.n(); ++i) CHECK(distance(back.mats[i], x.mats[i]) < 1e-12);
    const RealSplit again = real_trace_split(split.traceless);
    for (double t : again.tau) CHECK(std::abs(t) < 1e-12);
  }
}

TEST_CASE("real stratum chart examples") {
  const CommutingTuple t{TupleKind::unitary, {Matrix::diagonal({-1.0, 1.0})}, std::nullopt};
  const SubquotientChart c = real_stratum_chart(t);
  CHECK(c.s == 1);
  CHECK(std::abs(c.x.mats[0](0, 0)) < 1e-15);
  CHECK(std::abs(c.f.basis()(0, 0) - cplx(1.0)) < 1e-15);

  const CommutingTuple generic = gen_random_commuting(9, 1, 3, TupleKind::unitary);
  try {
    real_stratum_chart(generic);
    FAIL("expected NotRealizable");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotRealizable);
  }
}

TEST_CASE("real chart round trip and agreement with the complex chart") {
  SplitMix64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(3));
    const UniverseBasis u(n, 1);
    const int r = 1 + static_cast<int>(rng.below(std::min<std::size_t>(u.dim(), 4)));
    const Configuration c = random_configuration(rng, u, r, 1 + static_cast<int>(rng.below(r)), true);
    for (const auto& lab : c.labels) CHECK(imag_norm(lab.frame.basis()) < 1e-14);
    const CommutingTuple t = config_to_commuting(c);
    for (const auto& m : t.mats) CHECK(distance(m, m.transpose()) < 1e-12);
    // the real model maps injectively: the inverse recovers real frames
    const Configuration back = commuting_to_config(t);
    CHECK(configuration_distance(back, c) < 1e-8);
    for (const auto& lab : back.labels) CHECK(imag_norm(lab.frame.basis()) < 1e-8);

    const SubquotientChart rc = real_stratum_chart(t);
    CHECK(rc.s == r);
    CHECK(imag_norm(rc.f.basis()) == 0.0);
    for (const auto& x : rc.x.mats) CHECK(is_real_symmetric(x, 1e-10));
    CHECK(commutator_defect(rc.x.mats) < 1e-10);
    const CommutingTuple rec = reconstruct_real(rc, t.ambient);
    const CommutingTuple rep = canonical_rep(t);
    for (std::size_t i = 0; i < t.n(); ++i) CHECK(distance(rec.mats[i], rep.mats[i]) < 1e-8);
    const SubquotientChart cc = subquotient_chart(t);
    CHECK(chart_conjugacy_defect(complexify(rc), cc) < 1e-8);
    // O(s) ambiguity of the real frame
    const Matrix o = haar_orthogonal(rng, static_cast<std::size_t>(r));
    const SubquotientChart other = chart_with_frame(t, Frame::unchecked(rc.f.basis() * o));
    CHECK(chart_conjugacy_defect(complexify(rc), other) < 1e-8);
  }
}

TEST_CASE("Moebius parametrization of unit traceless 2x2 symmetric matrices") {
  // n = 1, s = 2: X(theta) = [[cos, sin], [sin, -cos]] / sqrt2 for theta in [0, 2 pi)
  for (int k = 0; k < 64; ++k) {
    const double th = 2.0 * std::numbers::pi * k / 64.0;
    Matrix x(2, 2);
    x(0, 0) = std::cos(th) / std::sqrt(2.0);
    x(1, 1) = -x(0, 0);
    x(0, 1) = x(1, 0) = std::sin(th) / std::sqrt(2.0);
    const CommutingTuple t{TupleKind::real_symmetric, {x}, std::nullopt};
    CHECK_NOTHROW(validate(t, {}));
    CHECK(frobenius_norm(x) == doctest::Approx(1.0));
    CHECK(std::abs(x.trace()) < 1e-15);
    const auto jd = joint_diagonalize_real(t);
    CHECK(jd.blocks.size() == 2);
    CHECK(std::abs(determinant(jd.q) - cplx(1.0)) < 1e-12);
  }
}
