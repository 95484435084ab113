#include "commvar/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "commvar/cohomtab.hpp"
#include "commvar/commodel.hpp"
#include "commvar/isodecomp.hpp"
#include "commvar/randgen.hpp"
#include "commvar/rankstrata.hpp"
#include "commvar/realk.hpp"
#include "commvar/spectrumops.hpp"

namespace commvar {

void RunConfig::validate() const {
  tol.validate();
  if (trials < 1) throw Error(ErrorCode::InvalidArgument, "trials must be at least 1");
  if (n_max < 1 || s_max < 1 || D_max < 1) throw Error(ErrorCode::InvalidArgument, "size caps must be at least 1");
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"roundtrip", "cayley", "spectrum", "equivariance",
                                              "real",      "isotropy", "cohomology"};
  return names;
}

namespace {

constexpr std::size_t kUniverseCap = 10;
constexpr std::size_t kMaxNotes = 5;
const cplx kI(0.0, 1.0);

class Trial {
 public:
  void bound(double residual, double limit, const char* what) {
    if (std::isnan(residual)) residual = std::numeric_limits<double>::infinity();
    worst = std::max(worst, residual);
    if (!(residual <= limit)) fail(std::string(what) + ": " + fmt(residual) + " > " + fmt(limit));
  }
  void check(bool ok, const char* what) {
    if (!ok) fail(what);
  }
  void fail(const std::string& what) {
    if (!failed) first = what;
    failed = true;
  }

  bool failed = false;
  std::string first;
  double worst = 0.0;

 private:
  static std::string fmt(double x) {
    std::ostringstream os;
    os.precision(3);
    os << x;
    return os.str();
  }
};

using Body = std::function<void(Trial&, SplitMix64&, const RunConfig&, int)>;

SuiteResult run_trials(const std::string& name, const RunConfig& cfg, const Body& body) {
  SuiteResult r;
  r.suite = name;
  r.trials = cfg.trials;
  for (int i = 0; i < cfg.trials; ++i) {
    SplitMix64 rng(trial_seed(cfg.seed, static_cast<std::uint64_t>(i)));
    Trial t;
    try {
      body(t, rng, cfg, i);
    } catch (const Error& e) {
      t.fail(std::string(to_string(e.code())) + ": " + e.what());
    } catch (const std::exception& e) {
      t.fail(e.what());
    }
    r.worst_residual = std::max(r.worst_residual, t.worst);
    if (t.failed) {
      ++r.failures;
      if (r.notes.size() < kMaxNotes) r.notes.push_back("trial " + std::to_string(i) + ": " + t.first);
    }
  }
  return r;
}

int pick(SplitMix64& rng, int lo, int hi) { return lo + static_cast<int>(rng.below(static_cast<std::uint64_t>(hi - lo + 1))); }

Matrix random_skew(SplitMix64& rng, std::size_t s) {
  Matrix g(s, s);
  for (std::size_t r = 0; r < s; ++r)
    for (std::size_t c = 0; c < s; ++c) g(r, c) = rng.complex_normal();
  return 0.5 * (g - g.adjoint());
}

double max_norm(const CommutingTuple& t) {
  double m = 1.0;
  for (const auto& a : t.mats) m = std::max(m, frobenius_norm(a));
  return m;
}

double tuple_distance(const CommutingTuple& a, const CommutingTuple& b) {
  if (a.n() != b.n()) return std::numeric_limits<double>::infinity();
  double d = 0.0;
  for (std::size_t i = 0; i < a.n(); ++i) d = std::max(d, distance(a.mats[i], b.mats[i]));
  return d;
}

// largest universe Sym^{<=D}(C^n) with D <= D_max and dim <= kUniverseCap
UniverseBasis capped_universe(int n, int d_max) {
  int d = d_max;
  while (d > 1 && binomial(n + d, n) > kUniverseCap) --d;
  return UniverseBasis(n, d);
}

CommutingTuple exact_rank_tuple(SplitMix64& rng, const RunConfig& cfg, int s_cap) {
  const int n = pick(rng, 1, cfg.n_max);
  int d = 1;
  while (binomial(n + d, n) < static_cast<std::uint64_t>(s_cap) + 1) ++d;
  const UniverseBasis u(n, d);
  const int s = pick(rng, 1, s_cap);
  return random_unitary_of_rank(rng, u, s, pick(rng, 1, std::min(3, s)));
}

Configuration small_config(SplitMix64& rng, int n) {
  const UniverseBasis u(n, 1);
  const int r = pick(rng, 0, 2);
  if (r == 0) return Configuration{u, {}};
  return random_configuration(rng, u, r, pick(rng, 1, r));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  Permutation p = identity_permutation(n);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<int> random_partition(SplitMix64& rng, int s) {
  std::vector<int> p = random_composition(rng, s, pick(rng, 1, s));
  std::sort(p.begin(), p.end(), std::greater<>());
  return p;
}

void roundtrip_trial(Trial& t, SplitMix64& rng, const RunConfig& cfg, int) {
  const int n = pick(rng, 1, cfg.n_max);
  const UniverseBasis u = capped_universe(n, pick(rng, 1, cfg.D_max));
  const int r = pick(rng, 1, static_cast<int>(std::min<std::size_t>(u.dim(), static_cast<std::size_t>(cfg.s_max))));
  const Configuration c = random_configuration(rng, u, r, pick(rng, 1, r));
  const CommutingTuple x = config_to_commuting(c);
  validate(x, cfg.tol);
  t.check(F_subspace(x, cfg.tol).dim() == static_cast<std::size_t>(r), "dim F equals the rank");
  t.bound(configuration_distance(commuting_to_config(x, cfg.tol), c), 1e-6, "configuration round trip");
  t.bound(configuration_distance(canonicalize(c, cfg.tol), c), 1e-12, "canonical configurations are fixed");
  t.check(F_subspace(x, cfg.tol).dim() == F_subspace_via_kernels(x, cfg.tol).dim(), "F agrees with the kernel route");

  const CommutingTuple y = random_unitary_of_rank(rng, u, r, pick(rng, 1, std::min(3, r)));
  const CommutingTuple back = config_to_commuting(commuting_to_config(y, cfg.tol));
  t.bound(class_distance(back, y, cfg.tol), 1e-8, "tuple round trip");

  // forgetting labels along a based map drops exactly their rank
  std::vector<int> alpha(c.labels.size());
  int kept = 0, expect = 0;
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    if (rng.below(3) == 0) {
      alpha[j] = 0;
    } else {
      alpha[j] = ++kept;
      expect += static_cast<int>(c.labels[j].frame.dim());
    }
  }
  t.check(rank(apply_based_map(alpha, kept, c, cfg.tol)) == expect, "rank after a based map");

  // psi is an isometry on frames
  const PsiEmbedding psi(u, UniverseBasis(1, 1));
  const Frame img = psi.apply(c.labels[0].frame, j0(UniverseBasis(1, 1)));
  const Matrix& b = img.basis();
  t.bound(distance(b.adjoint() * b, Matrix::identity(b.cols())), 1e-12, "psi preserves orthonormality");
}

void cayley_trial(Trial& t, SplitMix64& rng, const RunConfig& cfg, int) {
  const std::size_t s = static_cast<std::size_t>(pick(rng, 1, cfg.s_max));
  const Matrix x = random_skew(rng, s);
  const Matrix a = cayley(x, cfg.tol);
  const Matrix id = Matrix::identity(s);
  const double scale = std::max(1.0, frobenius_norm(x));
  t.bound(distance(a.adjoint() * a, id), 1e-10, "cayley is unitary");
  t.bound(distance(cayley_inv(a, cfg.tol), x) / scale, 1e-10, "cayley_inv after cayley");
  const Matrix w = haar_unitary(rng, s);
  t.bound(distance(cayley(cayley_inv(w, cfg.tol), cfg.tol), w), 1e-10, "cayley after cayley_inv");
  const Matrix u = haar_unitary(rng, s);
  t.bound(distance(cayley(u * x * u.adjoint(), cfg.tol), u * a * u.adjoint()), 1e-10, "conjugation equivariance");
  const double tt = 3.0 * rng.normal();
  t.bound(std::abs(cayley(Matrix::diagonal({kI * tt}), cfg.tol)(0, 0) - sphere_coord(tt)), 1e-14, "scalar chart");

  // an exact eigenvalue 1 must be rejected
  std::vector<cplx> d(s);
  for (auto& z : d) z = std::polar(1.0, rng.uniform(0.3, 6.0));
  d[rng.below(s)] = 1.0;
  bool raised = false;
  try {
    cayley_inv(u * Matrix::diagonal(d) * u.adjoint(), cfg.tol);
  } catch (const Error& e) {
    raised = e.code() == ErrorCode::SingularAtOne;
  }
  t.check(raised, "SingularAtOne at an eigenvalue 1");

  // stratum chart
  const CommutingTuple tup = exact_rank_tuple(rng, cfg, std::min(5, cfg.s_max));
  const int r = stratum_rank(tup, cfg.tol);
  const SubquotientChart c = subquotient_chart(tup, r, cfg.tol);
  t.bound(commutator_defect(c.x.mats), 1e-10, "chart commutes");
  t.bound(tuple_distance(reconstruct(c, tup.ambient), canonical_rep(tup, cfg.tol)), 1e-8, "chart reconstruction");
  const Matrix g = haar_unitary(rng, static_cast<std::size_t>(r));
  t.bound(chart_conjugacy_defect(c, chart_with_frame(tup, Frame::unchecked(c.f.basis() * g), cfg.tol)), 1e-8,
          "frame ambiguity");

  // trace split and pairing
  const CommutingTuple sk = gen_random_commuting(rng.next(), static_cast<std::size_t>(pick(rng, 1, cfg.n_max)), s,
                                                 TupleKind::skew_hermitian);
  const TraceSplit sp = trace_split(sk);
  double tr = 0.0;
  for (const auto& m : sp.traceless.mats) tr = std::max(tr, std::abs(m.trace()));
  t.bound(tr, 1e-12, "traceless part");
  t.bound(tuple_distance(reassemble(sp), sk) / max_norm(sk), 1e-12, "reassembly");
  const std::size_t s2 = static_cast<std::size_t>(pick(rng, 1, 3));
  const CommutingTuple sk2 = gen_random_commuting(rng.next(), 1, s2, TupleKind::skew_hermitian);
  const CommutingTuple pr = pairing_chart(sp.traceless, sk2);
  t.bound(commutator_defect(pr.mats), 1e-12, "pairing commutes");
  CommutingTuple pu{TupleKind::unitary, {}, std::nullopt};
  for (const auto& m : pr.mats) pu.mats.push_back(cayley(m, cfg.tol));
  t.check(stratum_rank(pu, cfg.tol) == static_cast<int>(s * s2), "pairing rank is the product");
}

void spectrum_trial(Trial& t, SplitMix64& rng, const RunConfig& cfg, int) {
  const int nm = std::min(2, cfg.n_max);
  const int n = pick(rng, 1, nm), m = pick(rng, 1, nm), l = pick(rng, 1, nm);
  const UniverseBasis u(n, 1), v(m, 1);
  const SpherePoint x = random_point(rng, static_cast<std::size_t>(n)), y = random_point(rng, static_cast<std::size_t>(m));
  const Configuration a = small_config(rng, n), b = small_config(rng, m), c = small_config(rng, l);

  const Configuration one = unit_map(SpherePoint(std::vector<cplx>{}), UniverseBasis(0, 0));
  t.bound(configuration_distance(multiply(one, a, {}, cfg.tol), a), 1e-8, "left unit");
  t.bound(configuration_distance(multiply(a, one, {}, cfg.tol), a), 1e-8, "right unit");
  t.bound(configuration_distance(multiply(unit_map(x, u), unit_map(y, v), {}, cfg.tol), unit_map(smash(x, y), UniverseBasis(n + m, 2))),
          1e-8, "units multiply to the unit");
  const Configuration sa = structure_map(a, y, m, cfg.tol);
  t.bound(configuration_distance(sa, multiply(a, unit_map(y, v), {}, cfg.tol)), 1e-8, "structure map via the unit");
  t.check(rank(sa) == rank(a), "structure maps preserve rank");
  t.bound(configuration_distance(multiply(multiply(a, b, {}, cfg.tol), c, {}, cfg.tol),
                                 multiply(a, multiply(b, c, {}, cfg.tol), {}, cfg.tol)),
          1e-8, "associativity");
  const Configuration ab = multiply(a, b, {}, cfg.tol);
  t.check(rank(ab) == rank(a) * rank(b), "rank is multiplicative");

  const CommutingTuple ta = config_to_commuting(a), tb = config_to_commuting(b);
  t.bound(class_distance(config_to_commuting(ab), multiply_tuple(ta, tb, {}, cfg.tol), cfg.tol), 1e-8,
          "multiplication across pictures");
  t.bound(class_distance(config_to_commuting(sa), structure_map_tuple(ta, y, m, cfg.tol), cfg.tol), 1e-8,
          "structure map across pictures");
}

void equivariance_trial(Trial& t, SplitMix64& rng, const RunConfig& cfg, int) {
  const int n = pick(rng, 1, cfg.n_max);
  const UniverseBasis u = capped_universe(n, pick(rng, 1, cfg.D_max));
  const int r = pick(rng, 1, static_cast<int>(std::min<std::size_t>(u.dim(), static_cast<std::size_t>(cfg.s_max))));
  const Configuration c = random_configuration(rng, u, r, pick(rng, 1, r));
  const CommutingTuple x = config_to_commuting(c);
  const CommutingTuple chart_src = exact_rank_tuple(rng, cfg, std::min(5, cfg.s_max));
  const SubquotientChart chart = subquotient_chart(chart_src, cfg.tol);
  const int nc = static_cast<int>(chart_src.n());
  for (const auto& sigma : all_permutations(n)) {
    t.bound(class_distance(sigma_action_tuple(sigma, x), config_to_commuting(sigma_action_config(sigma, c)), cfg.tol),
            1e-10, "phi is equivariant");
  }
  for (const auto& sigma : all_permutations(nc)) {
    const SubquotientChart moved = subquotient_chart(sigma_action_tuple(sigma, chart_src), cfg.tol);
    t.bound(chart_conjugacy_defect(sigma_action_chart(sigma, chart, *chart_src.ambient), moved), 1e-8,
            "chart is equivariant");
  }
  const Permutation s1 = random_permutation(rng, n), s2 = random_permutation(rng, n);
  t.bound(class_distance(sigma_action_tuple(compose(s1, s2), x), sigma_action_tuple(s1, sigma_action_tuple(s2, x)), cfg.tol),
          1e-10, "action composes");

  const int nm = std::min(2, cfg.n_max);
  const int p = pick(rng, 1, nm), q = pick(rng, 1, nm);
  const Configuration a = small_config(rng, p), b = small_config(rng, q);
  const Permutation sp = random_permutation(rng, p), sq = random_permutation(rng, q);
  const Configuration ab = multiply(a, b, {}, cfg.tol);
  t.bound(configuration_distance(multiply(sigma_action_config(sp, a), sigma_action_config(sq, b), {}, cfg.tol),
                                 sigma_action_config(block_sum(sp, sq), ab)),
          1e-8, "multiplication is equivariant");
  t.bound(configuration_distance(multiply(b, a, {}, cfg.tol), sigma_action_config(block_swap(p, q), ab)), 1e-8,
          "block swap commutativity");
  const SpherePoint y = random_point(rng, static_cast<std::size_t>(q));
  t.bound(configuration_distance(structure_map(sigma_action_config(sp, a), act(sq, y), q, cfg.tol),
                                 sigma_action_config(block_sum(sp, sq), structure_map(a, y, q, cfg.tol))),
          1e-8, "structure map is equivariant");
}

void real_trial(Trial& t, SplitMix64& rng, const RunConfig& cfg, int) {
  const std::size_t s = static_cast<std::size_t>(pick(rng, 1, cfg.s_max));
  Matrix g(s, s);
  for (std::size_t r = 0; r < s; ++r)
    for (std::size_t c = 0; c < s; ++c) g(r, c) = rng.normal();
  const Matrix x = 0.5 * (g + g.transpose());
  const Matrix a = real_cayley(x, cfg.tol);
  t.bound(distance(a.adjoint() * a, Matrix::identity(s)), 1e-10, "real cayley is unitary");
  t.bound(distance(a, a.transpose()), 1e-10, "real cayley is symmetric");
  t.bound(distance(real_cayley_inv(a, cfg.tol), x) / std::max(1.0, frobenius_norm(x)), 1e-10, "real cayley round trip");

  const CommutingTuple sym = gen_random_commuting(rng.next(), static_cast<std::size_t>(pick(rng, 1, cfg.n_max)), s,
                                                  TupleKind::real_symmetric);
  const RealDiagonalization jd = joint_diagonalize_real(sym, cfg.tol);
  t.bound(jd.residual / max_norm(sym), 1e-8, "real joint diagonalization");
  t.bound(std::abs(determinant(jd.q) - cplx(1.0)), 1e-10, "det Q = 1");
  t.bound(frobenius_norm(jd.q.imag_part()), 0.0, "Q is real");

  const int n = pick(rng, 1, cfg.n_max);
  const UniverseBasis u = capped_universe(n, 1);
  const int r = pick(rng, 1, static_cast<int>(std::min<std::size_t>(u.dim(), 4)));
  const CommutingTuple tu = config_to_commuting(random_configuration(rng, u, r, pick(rng, 1, r), true));
  const SubquotientChart rc = real_stratum_chart(tu, cfg.tol);
  t.check(rc.s == r, "real chart rank");
  t.bound(chart_conjugacy_defect(complexify(rc), subquotient_chart(tu, cfg.tol)), 1e-8, "real chart matches the complex chart");
  t.bound(tuple_distance(reconstruct_real(rc, tu.ambient), canonical_rep(tu, cfg.tol)), 1e-8, "real chart reconstruction");
}

void isotropy_trial(Trial& t, SplitMix64& rng, const RunConfig& cfg, int) {
  const int s = pick(rng, 1, std::min(5, cfg.s_max));
  const std::vector<int> parts = random_partition(rng, s);
  const auto kind = rng.below(2) ? TupleKind::skew_hermitian : TupleKind::real_symmetric;
  const std::size_t n = static_cast<std::size_t>(pick(rng, 1, cfg.n_max));
  const CommutingTuple x = random_commuting_with_blocks(rng, n, parts, kind, parts.size() > 1);
  const DecompType d = decomposition_type(x, cfg.tol);
  t.check(d == make_type(parts), "prescribed decomposition type");
  if (parts.size() > 1) {
    const CommutingTuple un = unit_normalize(x, cfg.tol);
    t.check(is_complete_type(decomposition_type(un, cfg.tol)), "unit traceless tuples have complete type");
    t.check(decomposition_type(stabilize(un, 1), cfg.tol) == d, "stabilizing keeps the type");
  }
  const Field f = rng.below(2) ? Field::complex : Field::real;
  const int nn = static_cast<int>(n);
  t.check(fixed_subspace_dim(d, nn, f) == fixed_subspace_dim_numeric(d, nn, f, rng.next()), "fixed subspace dimension");

  // flag map at p = 2
  const CommutingTuple y = unit_normalize(trace_split(gen_random_commuting(rng.next(), 1, 2, TupleKind::skew_hermitian)).traceless, cfg.tol);
  const FlagClass c = flag_preimage(y, cfg.tol);
  t.bound(tuple_distance(flag_map(c.g, c.x, cfg.tol), y), 1e-8, "flag preimage maps back");
  Matrix swap(2, 2);
  swap(0, 1) = swap(1, 0) = 1.0;
  CommutingTuple xs = c.x;
  xs.mats[0] = swap * c.x.mats[0] * swap;
  const Matrix ph = Matrix::diagonal({rng.unit_phase(), rng.unit_phase()});
  t.bound(flag_class_distance(canonicalize_flag(c.g * swap * ph, xs), c), 1e-8, "flag class is well defined");
}

std::map<int, std::int64_t> subset_count(int p) {
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

void cohomology_trial(Trial& t, SplitMix64&, const RunConfig&, int index) {
  static const int primes[] = {3, 5, 7, 11, 13};
  const int p = primes[index % 5];
  const IntPolynomial P = poincare_poly(p);
  if (p == 3) t.check(P == IntPolynomial::from_map({{0, 1}, {3, 1}, {4, 2}, {5, 1}}), "P_3 = 1 + t^3 + 2t^4 + t^5");
  const auto table = a0_lambda_table(p);
  t.check(table == subset_count(p), "table matches the subset count");
  t.check(IntPolynomial::from_map(table) + IntPolynomial::monomial(0) == P, "table plus one is P");
  t.check(P.eval(1) == 1 + (std::int64_t{1} << (p - 1)), "P(1) = 1 + 2^(p-1)");
  t.check(P.degree() == 2 * p - 2 + (p - 2) * (p - 2), "degree of P");
  t.check(table.begin()->first == 2 * p - 3, "lowest degree is 2p - 3");
}

const std::map<std::string, Body>& bodies() {
  static const std::map<std::string, Body> b{
      {"roundtrip", roundtrip_trial}, {"cayley", cayley_trial},     {"spectrum", spectrum_trial},
      {"equivariance", equivariance_trial}, {"real", real_trial}, {"isotropy", isotropy_trial},
      {"cohomology", cohomology_trial}};
  return b;
}

}  // namespace

SuiteResult run_suite(const std::string& name, const RunConfig& cfg) {
  cfg.validate();
  if (name == "all") {
    SuiteResult all;
    all.suite = "all";
    for (const auto& s : suite_names()) {
      SuiteResult r = run_suite(s, cfg);
      all.trials += r.trials;
      all.failures += r.failures;
      all.worst_residual = std::max(all.worst_residual, r.worst_residual);
      for (const auto& note : r.notes)
        if (all.notes.size() < kMaxNotes) all.notes.push_back(s + " " + note);
      all.parts.push_back(std::move(r));
    }
    return all;
  }
  const auto it = bodies().find(name);
  if (it == bodies().end()) throw Error(ErrorCode::InvalidArgument, "unknown suite '" + name + "'");
  return run_trials(name, cfg, it->second);
}

}  // namespace commvar
