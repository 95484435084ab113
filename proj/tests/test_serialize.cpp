#include <functional>

#include "commvar/randgen.hpp"
#include "commvar/serialize.hpp"
#include "doctest.h"

using namespace commvar;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("matrix and scalar schema") {
  CHECK(complex_to_json(cplx(1.5, -2.0)) == json::parse("[1.5, -2.0]"));
  Matrix m(1, 2);
  m(0, 0) = cplx(1.0, 2.0);
  m(0, 1) = cplx(-3.0, 0.0);
  const json j = matrix_to_json(m);
  CHECK(j == json::parse(R"({"rows":1,"cols":2,"data":[[1.0,2.0],[-3.0,0.0]]})"));
  CHECK(distance(matrix_from_json(j), m) == 0.0);
  CHECK(matrix_from_json(json::parse(R"({"rows":1,"cols":1,"data":[4]})"))(0, 0) == cplx(4.0));
  CHECK(code_of([] { matrix_from_json(json::parse(R"({"rows":2,"cols":2,"data":[1,2,3]})")); }) ==
        ErrorCode::ShapeMismatch);
  CHECK(code_of([] { matrix_from_json(json::parse(R"({"rows":1,"cols":1,"data":[[1,2,3]]})")); }) ==
        ErrorCode::InvalidArgument);
  CHECK(code_of([] { matrix_from_json(json::parse(R"({"rows":1})")); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { matrix_from_json(json::parse(R"({"rows":-1,"cols":1,"data":[]})")); }) ==
        ErrorCode::InvalidArgument);
}

TEST_CASE("tuple round trip is exact") {
  for (auto kind : {TupleKind::unitary, TupleKind::skew_hermitian, TupleKind::real_symmetric}) {
    const CommutingTuple t = gen_random_commuting(11, 2, 3, kind);
    const json j = tuple_to_json(t);
    CHECK(j["kind"] == to_string(kind));
    CHECK(j.contains("field") == (kind == TupleKind::real_symmetric));
    const CommutingTuple back = tuple_from_json(json::parse(j.dump()));
    CHECK(back.kind == kind);
    REQUIRE(back.n() == 2);
    for (std::size_t i = 0; i < 2; ++i) CHECK(distance(back.mats[i], t.mats[i]) == 0.0);
  }
  const CommutingTuple id = identity_tuple(UniverseBasis(2, 1), 2);
  const CommutingTuple back = tuple_from_json(tuple_to_json(id));
  CHECK(back.ambient.has_value());
  CHECK(back.ambient->dim() == 3);
  CHECK(code_of([] { tuple_from_json(json::parse(R"({"kind":"weird","mats":[]})")); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] {
          tuple_from_json(json::parse(R"({"kind":"unitary","n":2,"mats":[{"rows":1,"cols":1,"data":[1]}]})"));
        }) == ErrorCode::ShapeMismatch);
}

TEST_CASE("configuration round trip") {
  SplitMix64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const UniverseBasis u(2, 1);
    const Configuration c = random_configuration(rng, u, 1 + static_cast<int>(rng.below(3)), 1);
    const Configuration back = config_from_json(json::parse(config_to_json(c).dump()));
    CHECK(configuration_distance(back, c) < 1e-14);
    REQUIRE(back.labels.size() == c.labels.size());
    for (std::size_t i = 0; i < c.labels.size(); ++i) {
      CHECK(distance(back.labels[i].frame.basis(), c.labels[i].frame.basis()) == 0.0);
      CHECK(point_distance(back.labels[i].point, c.labels[i].point) == 0.0);
    }
  }
  const json bp = json::parse(R"({"universe":{"n":1,"D":1},"labels":[{"frame":{"rows":2,"cols":1,"data":[1,0]},"point":"basepoint"}]})");
  CHECK(config_from_json(bp).labels[0].point.is_basepoint_symbol());
  const json overlap = json::parse(
      R"({"universe":{"n":1,"D":1},"labels":[{"frame":{"rows":2,"cols":1,"data":[1,0]},"point":"basepoint"},
          {"frame":{"rows":2,"cols":1,"data":[1,0]},"point":{"coords":[[0,1]]}}]})");
  CHECK(code_of([&] { config_from_json(overlap); }) == ErrorCode::NotOrthogonal);
}

TEST_CASE("polynomial schema") {
  const IntPolynomial p = poincare_poly(3);
  const json j = poly_to_json(p);
  CHECK(j == json::parse(R"({"0":1,"3":1,"4":2,"5":1})"));
  CHECK(poly_from_json(j) == p);
  CHECK(code_of([] { poly_from_json(json::parse(R"({"x":1})")); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { poly_from_json(json::parse(R"({"1":1.5})")); }) == ErrorCode::InvalidArgument);
}
