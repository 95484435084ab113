// Command-line driver: generators, converters, stratification, isotropy reports,
// polynomial tables and the verification suites.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "commvar/randgen.hpp"
#include "commvar/serialize.hpp"
#include "commvar/verify.hpp"

using namespace commvar;

namespace {

enum Exit { kOk = 0, kSuiteFailure = 1, kBadInput = 2, kStratum = 3 };

struct Options {
  std::uint64_t seed = 1;
  bool seed_given = false;
  int trials = 100;
  double tol_struct = Tolerances{}.eps_struct;
  double tol_cluster = Tolerances{}.eps_cluster;
  int n = 2;
  int s = 3;
  int D = 1;
  std::string suite = "all";
  std::string output = "json";
  std::string input = "-";
  std::string kind = "unitary";
  int rank = -1;
  int labels = 1;
  int p = 3;
  int expected_rank = -1;
};

Tolerances tolerances(const Options& o) {
  Tolerances t;
  t.eps_struct = o.tol_struct;
  t.eps_cluster = o.tol_cluster;
  t.validate();
  return t;
}

std::uint64_t seed_of(const Options& o) {
  if (o.seed_given) return o.seed;
  if (const char* env = std::getenv("COMMVAR_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidArgument, "COMMVAR_SEED is not an unsigned integer");
    }
  }
  return o.seed;
}

json read_input(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("JSON parse error: ") + e.what());
  }
}

void emit(const json& j, const Options& o, const std::string& text = {}) {
  if (o.output == "text" && !text.empty())
    std::cout << text << "\n";
  else
    std::cout << j.dump(2) << "\n";
}

int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::WrongStratum:
    case ErrorCode::SingularAtOne:
    case ErrorCode::NoConvergence:
    case ErrorCode::RankDeficient:
    case ErrorCode::TruncationOverflow:
      return kStratum;
    default:
      return kBadInput;
  }
}

int report_error(const Error& e, const Options& o) {
  const json body = {{"error", to_string(e.code())}, {"message", e.what()}};
  emit(body, o, std::string("error: ") + to_string(e.code()) + ": " + e.what());
  return exit_code_for(e.code());
}

json chart_report(const CommutingTuple& t, const Options& o) {
  const Tolerances tol = tolerances(o);
  validate(t, tol);
  if (t.kind != TupleKind::unitary) throw Error(ErrorCode::InvalidArgument, "stratify needs a unitary tuple");
  const SubquotientChart c =
      o.expected_rank >= 0 ? subquotient_chart(t, o.expected_rank, tol) : subquotient_chart(t, tol);
  json report;
  report["rank"] = c.s;
  json xs = json::array();
  for (const auto& m : c.x.mats) xs.push_back(matrix_to_json(m));
  report["chart"] = {{"s", c.s}, {"X", xs}, {"frame", matrix_to_json(c.f.basis())}};
  if (c.s > 0) {
    const TraceSplit sp = trace_split(c.x);
    json bar = json::array();
    for (const auto& m : sp.traceless.mats) bar.push_back(matrix_to_json(m));
    report["split"] = {{"traceless", bar}, {"tau", sp.tau}};
    report["type"] = type_to_json(decomposition_type(c.x, tol));
  } else {
    report["split"] = nullptr;
    report["type"] = nullptr;
  }
  return report;
}

json suite_json(const SuiteResult& r) {
  json j = {{"suite", r.suite}, {"trials", r.trials}, {"failures", r.failures}, {"worst_residual", r.worst_residual}};
  if (!r.notes.empty()) j["notes"] = r.notes;
  if (!r.parts.empty()) {
    json parts = json::array();
    for (const auto& p : r.parts) parts.push_back(suite_json(p));
    j["suites"] = parts;
  }
  return j;
}

std::string suite_text(const SuiteResult& r) {
  std::ostringstream os;
  os << r.suite << ": " << r.trials << " trials, " << r.failures << " failures, worst residual " << r.worst_residual;
  for (const auto& p : r.parts) os << "\n  " << suite_text(p);
  for (const auto& n : r.notes) os << "\n  " << n;
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Commuting tuples, configurations and the level maps of the spectrum ku"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option_function<std::uint64_t>("--seed", [&](std::uint64_t v) { o.seed = v, o.seed_given = true; },
                                            "RNG seed (default: $COMMVAR_SEED, else 1)");
    sub->add_option("--tol-struct", o.tol_struct, "structure tolerance");
    sub->add_option("--tol-cluster", o.tol_cluster, "clustering tolerance");
    sub->add_option("--output", o.output, "json or text")->check(CLI::IsMember({"json", "text"}));
  };

  auto* gen = app.add_subcommand("gen", "random commuting tuple or configuration");
  common(gen);
  gen->add_option("--n", o.n, "number of matrices / sphere dimension")->check(CLI::PositiveNumber);
  gen->add_option("--s", o.s, "matrix size")->check(CLI::PositiveNumber);
  gen->add_option("--D", o.D, "universe degree for --kind config or --rank")->check(CLI::PositiveNumber);
  gen->add_option("--kind", o.kind, "unitary, skew_hermitian, real_symmetric or config")
      ->check(CLI::IsMember({"unitary", "skew_hermitian", "real_symmetric", "config"}));
  gen->add_option("--rank", o.rank, "exact rank: a tuple on the universe (unitary) or a configuration");
  gen->add_option("--labels", o.labels, "label count for --rank")->check(CLI::PositiveNumber);

  auto* stratify = app.add_subcommand("stratify", "rank, stratum chart, trace split and type of a unitary tuple");
  common(stratify);
  stratify->add_option("input", o.input, "tuple JSON file, - for stdin");
  stratify->add_option("--rank", o.expected_rank, "fail with exit 3 unless the rank matches");

  auto* decompose = app.add_subcommand("decompose", "decomposition type and fixed-subspace dimension");
  common(decompose);
  decompose->add_option("input", o.input, "tuple JSON file, - for stdin");

  auto* to_tuple = app.add_subcommand("to-tuple", "configuration JSON to its commuting tuple");
  common(to_tuple);
  to_tuple->add_option("input", o.input, "configuration JSON file, - for stdin");
  auto* to_config = app.add_subcommand("to-config", "unitary tuple JSON (with universe) to its configuration");
  common(to_config);
  to_config->add_option("input", o.input, "tuple JSON file, - for stdin");

  auto* poincare = app.add_subcommand("poincare", "mod-p Poincare polynomial and the reduced table");
  common(poincare);
  poincare->add_option("--p", o.p, "odd prime")->required();

  auto* verify = app.add_subcommand("verify", "run a property suite");
  common(verify);
  verify->add_option("--suite", o.suite, "roundtrip, cayley, spectrum, equivariance, real, isotropy, cohomology or all");
  verify->add_option("--trials", o.trials, "trials per suite");
  verify->add_option("--n", o.n, "cap on n");
  verify->add_option("--s", o.s, "cap on matrix size");
  verify->add_option("--D", o.D, "cap on universe degree");
  bool caps_n = false, caps_s = false, caps_d = false;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kBadInput;
  }
  caps_n = verify->count("--n") > 0;
  caps_s = verify->count("--s") > 0;
  caps_d = verify->count("--D") > 0;

  try {
    if (*gen) {
      const std::uint64_t seed = seed_of(o);
      const auto n = static_cast<std::size_t>(o.n), s = static_cast<std::size_t>(o.s);
      if (o.kind == "config" || o.rank >= 0) {
        SplitMix64 rng(seed);
        const UniverseBasis u(o.n, o.D);
        const int r = o.rank >= 0 ? o.rank : std::min<int>(o.s, static_cast<int>(u.dim()));
        if (r > static_cast<int>(u.dim())) throw Error(ErrorCode::InvalidArgument, "rank exceeds the universe dimension");
        if (o.kind == "config") {
          const Configuration c = r == 0 ? Configuration{u, {}} : random_configuration(rng, u, r, std::min(o.labels, r));
          emit(config_to_json(c), o);
        } else {
          if (o.kind != "unitary") throw Error(ErrorCode::InvalidArgument, "--rank needs a unitary tuple or a config");
          const CommutingTuple t = r == 0 ? identity_tuple(u, n) : random_unitary_of_rank(rng, u, r, std::min(o.labels, r));
          emit(tuple_to_json(t), o);
        }
      } else {
        emit(tuple_to_json(gen_random_commuting(seed, n, s, tuple_kind_from_string(o.kind))), o);
      }
      return kOk;
    }
    if (*stratify) {
      const json report = chart_report(tuple_from_json(read_input(o.input)), o);
      emit(report, o, "rank " + std::to_string(report["rank"].get<int>()));
      return kOk;
    }
    if (*decompose) {
      const Tolerances tol = tolerances(o);
      const CommutingTuple t = tuple_from_json(read_input(o.input));
      validate(t, tol);
      const DecompType d = decomposition_type(t, tol);
      const int n = static_cast<int>(t.n());
      json j = type_to_json(d);
      j["complete"] = is_complete_type(d);
      if (n > 0) {
        j["fixed_subspace_dim"] = fixed_subspace_dim(d, n, t.kind == TupleKind::real_symmetric ? Field::real : Field::complex);
      }
      std::string text = "type (";
      for (std::size_t i = 0; i < d.parts.size(); ++i) text += (i ? "," : "") + std::to_string(d.parts[i]);
      emit(j, o, text + ")");
      return kOk;
    }
    if (*to_tuple) {
      const Configuration c = config_from_json(read_input(o.input), tolerances(o));
      emit(tuple_to_json(config_to_commuting(canonicalize(c, tolerances(o)))), o);
      return kOk;
    }
    if (*to_config) {
      const Tolerances tol = tolerances(o);
      const CommutingTuple t = tuple_from_json(read_input(o.input));
      validate(t, tol);
      if (!t.ambient) throw Error(ErrorCode::InvalidArgument, "to-config needs a tuple with a universe");
      emit(config_to_json(commuting_to_config(t, tol)), o);
      return kOk;
    }
    if (*poincare) {
      const IntPolynomial P = poincare_poly(o.p);
      json table = json::object();
      for (const auto& [d, c] : a0_lambda_table(o.p)) table[std::to_string(d)] = c;
      emit({{"p", o.p}, {"poincare", poly_to_json(P)}, {"text", P.to_string()}, {"reduced_table", table}}, o,
           P.to_string());
      return kOk;
    }
    if (*verify) {
      RunConfig cfg;
      cfg.seed = seed_of(o);
      cfg.trials = o.trials;
      cfg.tol = tolerances(o);
      if (caps_n) cfg.n_max = o.n;
      if (caps_s) cfg.s_max = o.s;
      if (caps_d) cfg.D_max = o.D;
      if (o.suite != "all" && std::find(suite_names().begin(), suite_names().end(), o.suite) == suite_names().end())
        throw Error(ErrorCode::InvalidArgument, "unknown suite '" + o.suite + "'");
      const SuiteResult r = run_suite(o.suite, cfg);
      emit(suite_json(r), o, suite_text(r));
      return r.failures == 0 ? kOk : kSuiteFailure;
    }
  } catch (const Error& e) {
    return report_error(e, o);
  }
  return kOk;
}
