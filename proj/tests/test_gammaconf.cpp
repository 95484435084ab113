#include <cmath>

#include "commvar/gammaconf.hpp"
#include "commvar/randgen.hpp"
#include "doctest.h"

using namespace commvar;

namespace {

Frame coord_frame(std::size_t dim, std::vector<std::size_t> idx) {
  Matrix m(dim, idx.size());
  for (std::size_t j = 0; j < idx.size(); ++j) m(idx[j], j) = 1.0;
  return Frame(m, 1e-12);
}

SpherePoint pt(std::vector<cplx> c) { return SpherePoint(std::move(c)); }

const cplx I(0.0, 1.0);

}  // namespace

TEST_CASE("sphere_coord values") {
  CHECK(std::abs(sphere_coord(0.0) - cplx(-1.0)) < 1e-15);
  CHECK(std::abs(sphere_coord(1.0) - I) < 1e-15);
  CHECK(sphere_coord(INFINITY) == cplx(1.0));
  CHECK(sphere_coord(-INFINITY) == cplx(1.0));
  for (double t : {-3.0, -0.5, 0.25, 7.0}) CHECK(std::abs(std::abs(sphere_coord(t)) - 1.0) < 1e-15);
}

TEST_CASE("canonicalize drops basepoint and empty labels") {
  const UniverseBasis u(2, 1);
  Configuration c{u, {{coord_frame(3, {0}), SpherePoint::basepoint()}}};
  CHECK(canonicalize(c).labels.empty());
  c.labels = {{coord_frame(3, {0, 1}), pt({-1.0, 1.0})}};
  CHECK(canonicalize(c).labels.empty());
  c.labels = {{Frame(3), pt({-1.0, I})}};
  CHECK(canonicalize(c).labels.empty());
}

TEST_CASE("canonicalize merges coincident points") {
  const UniverseBasis u(1, 2);
  const Configuration c{u, {{coord_frame(3, {0}), pt({I})}, {coord_frame(3, {2}), pt({I})}}};
  const Configuration k = canonicalize(c);
  REQUIRE(k.labels.size() == 1);
  CHECK(k.labels[0].frame.dim() == 2);
  CHECK(distance(k.labels[0].frame.projector(), coord_frame(3, {0, 2}).projector()) < 1e-14);
  CHECK(rank(k) == 2);
}

TEST_CASE("canonicalize rejects non-orthogonal labels") {
  const UniverseBasis u(1, 1);
  Matrix v(2, 1);
  v(0, 0) = v(1, 0) = std::sqrt(0.5);
  const Configuration c{u, {{coord_frame(2, {0}), pt({I})}, {Frame(v, 1e-12), pt({-1.0})}}};
  CHECK_THROWS_AS(canonicalize(c), Error);
}

TEST_CASE("canonicalize is idempotent and respects rank bounds") {
  SplitMix64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const UniverseBasis u(1 + static_cast<int>(rng.below(3)), 1 + static_cast<int>(rng.below(2)));
    const int r = 1 + static_cast<int>(rng.below(std::min<std::size_t>(6, u.dim())));
    const Configuration c = random_configuration(rng, u, r, 1 + static_cast<int>(rng.below(r)));
    CHECK(configuration_distance(canonicalize(c), c) < 1e-12);
    CHECK(rank(c) == r);
    CHECK(static_cast<std::size_t>(rank(c)) <= u.dim());
  }
}

TEST_CASE("rank examples") {
  const UniverseBasis u(1, 5);
  CHECK(rank(Configuration{u, {}}) == 0);
  const Configuration c{u, {{coord_frame(6, {0, 1}), pt({I})}, {coord_frame(6, {2, 3, 4}), pt({-I})}}};
  CHECK(rank(c) == 5);
  Configuration d = c;
  d.labels[1].point = pt({1.0});
  CHECK(rank(canonicalize(d)) == 2);
}

TEST_CASE("apply_based_map examples") {
  const UniverseBasis u(1, 2);
  const Configuration c{u, {{coord_frame(3, {0}), pt({I})}, {coord_frame(3, {1}), pt({-1.0})}}};
  CHECK(configuration_distance(apply_based_map({1, 2}, 2, c), c) < 1e-14);
  CHECK(apply_based_map({0, 0}, 1, c).labels.empty());
  const Configuration same{u, {{coord_frame(3, {0}), pt({I})}, {coord_frame(3, {1}), pt({I})}}};
  const Configuration folded = apply_based_map({1, 1}, 1, same);
  REQUIRE(folded.labels.size() == 1);
  CHECK(folded.labels[0].frame.dim() == 2);
  CHECK_THROWS_AS(apply_based_map({1, 1}, 1, c), Error);
  CHECK_THROWS_AS(apply_based_map({3, 1}, 2, c), Error);
  const auto pushed = pushforward({2, 0}, 3, c);
  REQUIRE(pushed.size() == 3);
  CHECK(pushed[0].point.is_basepoint_symbol());
  CHECK(pushed[1].frame.dim() == 1);
}

TEST_CASE("apply_based_map is functorial") {
  const UniverseBasis u(1, 3);
  // four labels, points 1,2 equal and 3,4 equal so every fold below is lawful
  const Configuration c{u,
                        {{coord_frame(4, {0}), pt({I})},
                         {coord_frame(4, {1}), pt({I})},
                         {coord_frame(4, {2}), pt({-1.0})},
                         {coord_frame(4, {3}), pt({-1.0})}}};
  const std::vector<int> alpha{1, 1, 2, 3};  // <4> -> <3>
  const std::vector<int> beta{1, 2, 2};      // <3> -> <2>
  std::vector<int> ba;
  for (int a : alpha) ba.push_back(a == 0 ? 0 : beta[a - 1]);
  const auto step = pushforward(alpha, 3, c);
  const Configuration lhs = apply_based_map(beta, 2, Configuration{u, step});
  const Configuration rhs = apply_based_map(ba, 2, c);
  CHECK(configuration_distance(lhs, rhs) < 1e-12);
}

TEST_CASE("sigma action on configurations") {
  const UniverseBasis u(2, 1);
  const Configuration c{u, {{coord_frame(3, {1}), pt({I, -1.0})}}};
  const Configuration id = sigma_action_config({0, 1}, c);
  CHECK(configuration_distance(id, c) < 1e-15);
  const Configuration sw = sigma_action_config({1, 0}, c);
  CHECK(sw.labels[0].point.coords() == std::vector<cplx>{-1.0, I});
  // x1 -> x2 under the swap
  CHECK(std::abs(sw.labels[0].frame.basis()(2, 0)) == doctest::Approx(1.0));

  SplitMix64 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const UniverseBasis w(3, 1);
    const Configuration r = random_configuration(rng, w, 3, 2);
    const Permutation s = random_permutation(rng, 3), t = random_permutation(rng, 3);
    const Configuration a = sigma_action_config(compose(s, t), r);
    const Configuration b = sigma_action_config(s, sigma_action_config(t, r));
    CHECK(configuration_distance(a, b) < 1e-12);
    CHECK(rank(a) == rank(r));
  }
}

TEST_CASE("act follows the left action convention") {
  const SpherePoint x = pt({1.0, 2.0, 3.0});
  const SpherePoint y = act({1, 2, 0}, x);  // 0->1, 1->2, 2->0
  CHECK(y.coords() == std::vector<cplx>{3.0, 1.0, 2.0});
  CHECK(act({1, 0}, SpherePoint::basepoint()).is_basepoint_symbol());
  CHECK(smash(pt({I}), pt({-1.0})).coords() == std::vector<cplx>{I, -1.0});
  CHECK(smash(pt({I}), SpherePoint::basepoint()).is_basepoint_symbol());
}

TEST_CASE("configuration_distance matches labels irrespective of order") {
  const UniverseBasis u(1, 2);
  const Configuration a{u, {{coord_frame(3, {0}), pt({I})}, {coord_frame(3, {1}), pt({-1.0})}}};
  const Configuration b{u, {{coord_frame(3, {1}), pt({-1.0})}, {coord_frame(3, {0}), pt({I})}}};
  CHECK(configuration_distance(a, b) == 0.0);
  Configuration c = b;
  c.labels.pop_back();
  CHECK(std::isinf(configuration_distance(a, c)));
}
