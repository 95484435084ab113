#include "commvar/symuniverse.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace commvar {

Permutation identity_permutation(int n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

bool is_permutation(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  for (int x : p) {
    if (x < 0 || static_cast<std::size_t>(x) >= p.size() || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

Permutation compose(const Permutation& sigma, const Permutation& tau) {
  if (sigma.size() != tau.size()) throw Error(ErrorCode::ShapeMismatch, "compose");
  Permutation p(sigma.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = sigma[tau[i]];
  return p;
}

Permutation inverse(const Permutation& sigma) {
  Permutation p(sigma.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[sigma[i]] = static_cast<int>(i);
  return p;
}

Permutation block_sum(const Permutation& sigma, const Permutation& tau) {
  Permutation p(sigma);
  const int n = static_cast<int>(sigma.size());
  for (int t : tau) p.push_back(n + t);
  return p;
}

Permutation block_swap(int n, int m) {
  Permutation p(n + m);
  for (int i = 0; i < n; ++i) p[i] = m + i;
  for (int j = 0; j < m; ++j) p[n + j] = j;
  return p;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

namespace {

void enumerate(int n, int remaining, MultiIndex& cur, std::vector<MultiIndex>& out) {
  const int pos = static_cast<int>(cur.size());
  if (pos == n - 1) {
    cur.push_back(remaining);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur.push_back(e);
    enumerate(n, remaining - e, cur, out);
    cur.pop_back();
  }
}

}  // namespace

UniverseBasis::UniverseBasis(int n, int max_degree) : n_(n), d_(max_degree) {
  if (n < 0 || max_degree < 0) throw Error(ErrorCode::InvalidArgument, "negative universe size");
  if (n == 0) {
    monomials_.push_back({});
  } else {
    for (int d = 0; d <= max_degree; ++d) {
      MultiIndex cur;
      enumerate(n, d, cur, monomials_);
    }
  }
  for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
}

std::optional<std::size_t> UniverseBasis::index_of(const MultiIndex& alpha) const {
  const auto it = index_.find(alpha);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

double UniverseBasis::norm_squared(const MultiIndex& alpha) {
  double r = 1.0;
  for (int a : alpha) r *= std::tgamma(a + 1.0);
  return r;
}

int UniverseBasis::degree(const MultiIndex& alpha) { return std::accumulate(alpha.begin(), alpha.end(), 0); }

// ---------------------------------------------------------------------------

PsiEmbedding::PsiEmbedding(const UniverseBasis& u, const UniverseBasis& v, std::optional<int> target_degree)
    : u_(u), v_(v), w_(u.n() + v.n(), target_degree.value_or(u.max_degree() + v.max_degree())) {
  map_.reserve(u.dim() * v.dim());
  for (const auto& a : u.monomials())
    for (const auto& b : v.monomials()) {
      MultiIndex ab = a;
      ab.insert(ab.end(), b.begin(), b.end());
      map_.push_back(w_.index_of(ab));
    }
}

std::optional<std::size_t> PsiEmbedding::image(std::size_t a, std::size_t b) const {
  return map_.at(a * v_.dim() + b);
}

std::vector<cplx> PsiEmbedding::apply(std::span<const cplx> x) const {
  if (x.size() != map_.size()) throw Error(ErrorCode::ShapeMismatch, "psi: tensor length");
  std::vector<cplx> y(w_.dim());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (map_[i]) {
      y[*map_[i]] = x[i];
    } else if (std::abs(x[i]) > 1e-12) {
      throw Error(ErrorCode::TruncationOverflow, "psi: image exceeds the target degree");
    }
  }
  return y;
}

Frame PsiEmbedding::apply(const Frame& f, const Frame& g) const {
  if (f.ambient_dim() != u_.dim() || g.ambient_dim() != v_.dim())
    throw Error(ErrorCode::ShapeMismatch, "psi: frame ambient dimensions");
  Matrix out(w_.dim(), f.dim() * g.dim());
  for (std::size_t i = 0; i < f.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j) {
      const auto t = kron(f.basis().col_block(i, 1), g.basis().col_block(j, 1));
      out.set_col(i * g.dim() + j, apply(t.data()));
    }
  return Frame::unchecked(std::move(out));
}

Matrix PsiEmbedding::conjugate(const Matrix& m) const {
  if (m.rows() != map_.size() || !m.square()) throw Error(ErrorCode::ShapeMismatch, "psi conjugate");
  Matrix out = Matrix::identity(w_.dim());
  for (std::size_t a = 0; a < map_.size(); ++a)
    for (std::size_t b = 0; b < map_.size(); ++b) {
      if (map_[a] && map_[b]) {
        out(*map_[a], *map_[b]) = m(a, b);
      } else if (std::abs(m(a, b) - (a == b ? 1.0 : 0.0)) > 1e-12) {
        throw Error(ErrorCode::TruncationOverflow, "psi: operator acts beyond the target degree");
      }
    }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<std::size_t> sigma_star_indices(const Permutation& sigma, const UniverseBasis& u) {
  if (sigma.size() != static_cast<std::size_t>(u.n()) || !is_permutation(sigma))
    throw Error(ErrorCode::InvalidArgument, "sigma_star: not a permutation of the variables");
  std::vector<std::size_t> out(u.dim());
  for (std::size_t i = 0; i < u.dim(); ++i) {
    const auto& a = u.monomial(i);
    MultiIndex b(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) b[sigma[k]] = a[k];  // b_{sigma(k)} = a_k
    out[i] = *u.index_of(b);
  }
  return out;
}

Matrix sigma_star(const Permutation& sigma, const UniverseBasis& u) {
  const auto idx = sigma_star_indices(sigma, u);
  Matrix m(u.dim(), u.dim());
  for (std::size_t i = 0; i < idx.size(); ++i) m(idx[i], i) = 1.0;
  return m;
}

Frame sigma_star(const Permutation& sigma, const UniverseBasis& u, const Frame& f) {
  if (f.ambient_dim() != u.dim()) throw Error(ErrorCode::ShapeMismatch, "sigma_star frame");
  const auto idx = sigma_star_indices(sigma, u);
  Matrix out(u.dim(), f.dim());
  for (std::size_t r = 0; r < u.dim(); ++r)
    for (std::size_t c = 0; c < f.dim(); ++c) out(idx[r], c) = f.basis()(r, c);
  return Frame::unchecked(std::move(out));
}

Frame j0(const UniverseBasis& v) {
  Matrix m(v.dim(), 1);
  m(0, 0) = 1.0;
  return Frame::unchecked(std::move(m));
}

cplx permanent(const Matrix& m) {
  if (!m.square()) throw Error(ErrorCode::ShapeMismatch, "permanent");
  const std::size_t n = m.rows();
  if (n == 0) return 1.0;
  if (n > 20) throw Error(ErrorCode::InvalidArgument, "permanent: matrix too large");
  cplx total = 0.0;
  for (std::uint64_t set = 1; set < (1ULL << n); ++set) {
    cplx prod = 1.0;
    for (std::size_t r = 0; r < n; ++r) {
      cplx row = 0.0;
      for (std::size_t c = 0; c < n; ++c)
        if (set & (1ULL << c)) row += m(r, c);
      prod *= row;
    }
    const int bits = __builtin_popcountll(set);
    total += ((n - bits) % 2 == 0 ? 1.0 : -1.0) * prod;
  }
  return total;
}

}  // namespace commvar
