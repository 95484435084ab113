#include "commvar/rng.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

namespace commvar {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double SplitMix64::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double SplitMix64::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  if (bound == 0) return 0;
  return next() % bound;
}

double SplitMix64::normal() {
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

cplx SplitMix64::complex_normal() {
  const double re = normal();
  const double im = normal();
  return cplx(re, im) * std::numbers::sqrt2 * 0.5;
}

cplx SplitMix64::unit_phase() { return std::polar(1.0, 2.0 * std::numbers::pi * uniform()); }

std::uint64_t trial_seed(std::uint64_t base, std::uint64_t index) {
  SplitMix64 g(base + 0x9E3779B97F4A7C15ULL * (index + 1));
  return g.next();
}

namespace {

Matrix qr_q(Matrix g) {
  const std::size_t n = g.rows();
  Matrix q(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    auto v = g.col(c);
    for (int pass = 0; pass < 2; ++pass)
      for (std::size_t k = 0; k < c; ++k) {
        const auto u = q.col(k);
        const cplx proj = inner(u, v);
        for (std::size_t i = 0; i < n; ++i) v[i] -= proj * u[i];
      }
    // Gram-Schmidt already yields a positive real R diagonal, which is the phase fix
    const double r = norm2(v);
    for (auto& x : v) x /= r;
    q.set_col(c, v);
  }
  return q;
}

}  // namespace

Matrix haar_unitary(SplitMix64& rng, std::size_t n) {
  Matrix g(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) g(r, c) = rng.complex_normal();
  return qr_q(std::move(g));
}

Matrix haar_orthogonal(SplitMix64& rng, std::size_t n) {
  Matrix g(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) g(r, c) = rng.normal();
  return qr_q(std::move(g));
}

std::vector<int> random_permutation(SplitMix64& rng, int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(p[i], p[rng.below(static_cast<std::uint64_t>(i) + 1)]);
  return p;
}

}  // namespace commvar
