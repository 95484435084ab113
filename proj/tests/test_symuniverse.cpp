#include <algorithm>
#include <cmath>
#include <set>

#include "commvar/rng.hpp"
#include "commvar/symuniverse.hpp"
#include "doctest.h"

using namespace commvar;

namespace {

// factor list of e^a: variable k repeated a_k times
std::vector<int> factors(const MultiIndex& a) {
  std::vector<int> out;
  for (std::size_t k = 0; k < a.size(); ++k)
    for (int r = 0; r < a[k]; ++r) out.push_back(static_cast<int>(k));
  return out;
}

// <e^a, e^b> via the permanent of the Gram matrix of the linear factors
double permanent_inner(const MultiIndex& a, const MultiIndex& b) {
  const auto fa = factors(a), fb = factors(b);
  if (fa.size() != fb.size()) return 0.0;
  if (fa.empty()) return 1.0;
  Matrix g(fa.size(), fb.size());
  for (std::size_t i = 0; i < fa.size(); ++i)
    for (std::size_t j = 0; j < fb.size(); ++j) g(i, j) = fa[i] == fb[j] ? 1.0 : 0.0;
  return permanent(g).real();
}

MultiIndex concat(const MultiIndex& a, const MultiIndex& b) {
  MultiIndex c = a;
  c.insert(c.end(), b.begin(), b.end());
  return c;
}

}  // namespace

TEST_CASE("universe dimension is binomial(n+D, n)") {
  for (int n = 1; n <= 4; ++n)
    for (int d = 0; d <= 4; ++d) {
      const UniverseBasis u(n, d);
      // enumerate independently by counting all tuples in [0,d]^n with sum <= d
      std::size_t count = 0;
      std::vector<int> a(n, 0);
      while (true) {
        int sum = 0;
        for (int x : a) sum += x;
        if (sum <= d) ++count;
        int k = 0;
        while (k < n && ++a[k] > d) a[k++] = 0;
        if (k == n) break;
      }
      CHECK(u.dim() == count);
      CHECK(u.dim() == binomial(n + d, n));
    }
}

TEST_CASE("universe ordering starts at the constant and is graded") {
  const UniverseBasis u(3, 3);
  CHECK(UniverseBasis::degree(u.monomial(0)) == 0);
  for (std::size_t i = 1; i < u.dim(); ++i) {
    const int d0 = UniverseBasis::degree(u.monomial(i - 1)), d1 = UniverseBasis::degree(u.monomial(i));
    CHECK(d0 <= d1);
    if (d0 == d1) CHECK(u.monomial(i - 1) > u.monomial(i));
  }
  for (std::size_t i = 0; i < u.dim(); ++i) CHECK(u.index_of(u.monomial(i)) == i);
  CHECK(!u.index_of({4, 0, 0}).has_value());
}

TEST_CASE("norm_squared agrees with the permanent inner product") {
  const UniverseBasis u(3, 4);
  for (const auto& a : u.monomials()) {
    CHECK(UniverseBasis::norm_squared(a) == doctest::Approx(permanent_inner(a, a)));
    for (const auto& b : u.monomials())
      if (a != b) CHECK(permanent_inner(a, b) == 0.0);
  }
}

TEST_CASE("psi examples") {
  const UniverseBasis u(1, 2), v(1, 2);
  const PsiEmbedding psi(u, v);
  CHECK(psi.target() == UniverseBasis(2, 4));
  CHECK(psi.image(0, 0) == 0u);
  // x (x) y -> xy
  const auto xy = psi.target().index_of({1, 1});
  CHECK(psi.image(*u.index_of({1}), *v.index_of({1})) == xy);
  CHECK(UniverseBasis::norm_squared({1, 1}) == 1.0);
  // x^2/sqrt2 (x) 1 -> x^2/sqrt2, normalized coordinates unchanged
  std::vector<cplx> t(u.dim() * v.dim(), 0.0);
  t[*u.index_of({2}) * v.dim() + 0] = 1.0;
  const auto out = psi.apply(t);
  CHECK(out[*psi.target().index_of({2, 0})] == cplx(1.0));
}

TEST_CASE("psi is an isometry under the permanent inner product") {
  for (auto [n, m, d] : {std::tuple{1, 1, 2}, {2, 1, 2}, {2, 2, 2}, {1, 3, 1}}) {
    const UniverseBasis u(n, d), v(m, d);
    const PsiEmbedding psi(u, v);
    std::set<std::size_t> seen;
    for (std::size_t a = 0; a < u.dim(); ++a)
      for (std::size_t b = 0; b < v.dim(); ++b) {
        const auto img = psi.image(a, b);
        REQUIRE(img.has_value());
        CHECK(seen.insert(*img).second);
        const MultiIndex ab = concat(u.monomial(a), v.monomial(b));
        CHECK(psi.target().monomial(*img) == ab);
        // <e^a (x) e^b, same> = a! b! must equal <e^(a,b), e^(a,b)>
        CHECK(permanent_inner(ab, ab) ==
              doctest::Approx(permanent_inner(u.monomial(a), u.monomial(a)) *
                              permanent_inner(v.monomial(b), v.monomial(b))));
      }
  }
}

TEST_CASE("psi frames and conjugation preserve orthonormality") {
  SplitMix64 rng(11);
  const UniverseBasis u(2, 1), v(1, 1);
  const PsiEmbedding psi(u, v);
  const Frame f(haar_unitary(rng, u.dim()).col_block(0, 2), 1e-12);
  const Frame g(haar_unitary(rng, v.dim()).col_block(0, 1), 1e-12);
  const Frame h = psi.apply(f, g);
  CHECK(h.dim() == 2);
  CHECK(distance(h.basis().adjoint() * h.basis(), Matrix::identity(2)) < 1e-14);
  const Matrix w = haar_unitary(rng, u.dim() * v.dim());
  const Matrix c = psi.conjugate(w);
  CHECK(is_unitary(c, 1e-12));
}

TEST_CASE("psi reports truncation overflow") {
  const UniverseBasis u(1, 1), v(1, 1);
  const PsiEmbedding psi(u, v, 1);
  std::vector<cplx> t(4, 0.0);
  t[3] = 1.0;  // x (x) y has degree 2
  CHECK_THROWS_AS(psi.apply(t), Error);
  t[3] = 0.0;
  t[1] = 1.0;
  CHECK_NOTHROW(psi.apply(t));
}

TEST_CASE("sigma_star examples") {
  const UniverseBasis u(2, 3);
  const Matrix id = sigma_star(identity_permutation(2), u);
  CHECK(distance(id, Matrix::identity(u.dim())) == 0.0);
  const auto idx = sigma_star_indices({1, 0}, u);
  CHECK(idx[*u.index_of({1, 2})] == *u.index_of({2, 1}));
  CHECK(idx[0] == 0u);
}

TEST_CASE("sigma_star is a unitary homomorphism fixing the constant") {
  SplitMix64 rng(5);
  const UniverseBasis u(4, 2);
  for (int trial = 0; trial < 20; ++trial) {
    const Permutation s = random_permutation(rng, 4), t = random_permutation(rng, 4);
    const Matrix ss = sigma_star(s, u), ts = sigma_star(t, u);
    CHECK(is_unitary(ss, 1e-14));
    CHECK(distance(sigma_star(compose(s, t), u), ss * ts) == 0.0);
    CHECK(sigma_star_indices(s, u)[0] == 0u);
  }
}

TEST_CASE("psi is equivariant for block permutations") {
  SplitMix64 rng(8);
  const UniverseBasis u(2, 2), v(2, 2);
  const PsiEmbedding psi(u, v);
  for (int trial = 0; trial < 10; ++trial) {
    const Permutation s = random_permutation(rng, 2), t = random_permutation(rng, 2);
    const auto si = sigma_star_indices(s, u), ti = sigma_star_indices(t, v);
    const auto st = sigma_star_indices(block_sum(s, t), psi.target());
    for (std::size_t a = 0; a < u.dim(); ++a)
      for (std::size_t b = 0; b < v.dim(); ++b) CHECK(*psi.image(si[a], ti[b]) == st[*psi.image(a, b)]);
  }
}

TEST_CASE("j0 is the constant line") {
  const UniverseBasis v(1, 2);
  const Frame f = j0(v);
  CHECK(f.dim() == 1);
  CHECK(f.basis()(0, 0) == cplx(1.0));
  CHECK(norm2(f.basis().col(0)) == doctest::Approx(1.0));
  const UniverseBasis u(2, 2);
  const PsiEmbedding psi(u, v);
  for (std::size_t a = 0; a < u.dim(); ++a)
    CHECK(psi.target().monomial(*psi.image(a, 0)) == concat(u.monomial(a), {0}));
}

TEST_CASE("permutation helpers") {
  CHECK(block_swap(2, 1) == Permutation{1, 2, 0});
  CHECK(compose(block_swap(2, 1), block_swap(1, 2)) == identity_permutation(3));
  CHECK(inverse(Permutation{2, 0, 1}) == Permutation{1, 2, 0});
  CHECK(!is_permutation({0, 0}));
  CHECK(permanent(Matrix::identity(3)) == cplx(1.0));
  Matrix ones(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) ones(i, j) = 1.0;
  CHECK(permanent(ones).real() == doctest::Approx(6.0));
}
