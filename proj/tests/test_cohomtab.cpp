#include <vector>

#include "commvar/cohomtab.hpp"
#include "commvar/numkit.hpp"
#include "commvar/rng.hpp"
#include "doctest.h"

using namespace commvar;

namespace {

// count subsets of the exterior generators by total degree, then shift
std::map<int, std::int64_t> subset_oracle(int p) {
  std::vector<int> gens{1};
  for (int i = 1; i <= p - 2; ++i) gens.push_back(2 * i - 1);
  std::map<int, std::int64_t> out;
  for (unsigned mask = 0; mask < (1u << gens.size()); ++mask) {
    int d = 2 * p - 3;
    for (std::size_t g = 0; g < gens.size(); ++g)
      if (mask & (1u << g)) d += gens[g];
    ++out[d];
  }
  return out;
}

IntPolynomial random_poly(SplitMix64& rng) {
  std::map<int, std::int64_t> c;
  const int terms = static_cast<int>(rng.below(5));
  for (int k = 0; k < terms; ++k) c[static_cast<int>(rng.below(6))] += static_cast<std::int64_t>(rng.below(7)) - 3;
  return IntPolynomial::from_map(c);
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  const IntPolynomial one = IntPolynomial::monomial(0), t = IntPolynomial::monomial(1);
  CHECK((one + t) * (one + t) == IntPolynomial::from_map({{0, 1}, {1, 2}, {2, 1}}));
  CHECK(((one + t) * IntPolynomial()).is_zero());
  CHECK((t + IntPolynomial::monomial(1, -1)).coefficients().empty());
  CHECK(IntPolynomial::from_map({{3, 0}, {1, 2}}).coefficients().size() == 1);
  CHECK(IntPolynomial::from_map({{0, 1}, {3, 1}, {4, 2}, {5, 1}}).to_string() == "1 + t^3 + 2t^4 + t^5");
  SplitMix64 rng(1);
  for (int trial = 0; trial < 300; ++trial) {
    const IntPolynomial a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a * b == b * a);
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    for (std::int64_t x = -2; x <= 2; ++x) CHECK((a * b).eval(x) == a.eval(x) * b.eval(x));
    const IntPolynomial ab = a * b;
    for (const auto& [d, v] : ab.coefficients()) CHECK(v != 0);
  }
}

TEST_CASE("poincare_poly examples") {
  CHECK(poincare_poly(3) == IntPolynomial::from_map({{0, 1}, {3, 1}, {4, 2}, {5, 1}}));
  CHECK(poincare_poly(5).coeff(8) == 2);
  for (int p : {3, 5, 7, 11, 13}) CHECK(poincare_poly(p).coeff(0) == 1);
  CHECK(a0_lambda_table(3) == std::map<int, std::int64_t>{{3, 1}, {4, 2}, {5, 1}});
}

TEST_CASE("poincare_poly rejects non odd primes") {
  for (int p : {-3, 0, 1, 2, 4, 9, 15}) {
    try {
      poincare_poly(p);
      FAIL("expected NotOddPrime");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotOddPrime);
    }
    CHECK_THROWS_AS(a0_lambda_table(p), Error);
  }
}

TEST_CASE("poincare_poly invariants against the subset count") {
  for (int p : {3, 5, 7, 11, 13, 17}) {
    CAPTURE(p);
    const IntPolynomial P = poincare_poly(p);
    const auto oracle = subset_oracle(p);
    CHECK(a0_lambda_table(p) == oracle);
    CHECK(P == IntPolynomial::monomial(0) + IntPolynomial::from_map(oracle));
    CHECK(P.eval(1) == 1 + (std::int64_t{1} << (p - 1)));
    CHECK(P.degree() == 2 * p - 2 + (p - 2) * (p - 2));
    CHECK(IntPolynomial::from_map(a0_lambda_table(p)).low_degree() == 2 * p - 3);
    std::int64_t total = 0;
    for (const auto& [d, c] : a0_lambda_table(p)) total += c;
    CHECK(total == (std::int64_t{1} << (p - 1)));
  }
}
