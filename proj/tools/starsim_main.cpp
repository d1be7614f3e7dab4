// starsim: decompose sparse Hermitian matrices into exactly solvable star
// pieces and evolve e^{-iHt} with product formulas, counting black-box
// queries along the way.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "starsim/dense_reference.hpp"
#include "starsim/matrix_io.hpp"
#include "starsim/reports.hpp"

namespace {

using nlohmann::json;
using namespace starsim;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitBadInput = 2;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
  out << text;
  if (text.empty() || text.back() != '\n') out << '\n';
}

NormMode parse_norm(const std::string& name) {
  if (name == "spectral") return NormMode::Spectral;
  if (name == "mcn") return NormMode::MaxColumn;
  throw CLI::ValidationError("--norm", "must be 'spectral' or 'mcn'");
}

StateVector make_initial(const std::string& kind, std::size_t n, std::uint64_t seed) {
  if (kind == "basis") return basis_state(n, 0);
  if (kind == "random") return random_state(n, seed);
  throw CLI::ValidationError("--state", "must be 'basis' or 'random'");
}

struct GenerateArgs {
  GeneratorOptions gen;
  std::string out;
};

struct DecomposeArgs {
  std::string in;
  std::string out;
};

struct SimulateArgs {
  std::string in;
  double t = 1.0;
  double epsilon = 1e-3;
  int k = 1;
  std::string norm = "spectral";
  std::string state = "basis";
  std::uint64_t seed = 1;
  bool empirical = false;
  std::string out;
};

struct BenchmarkArgs {
  std::string sweep = "d";
  std::vector<double> values;
  std::size_t n = 256;
  int d = 4;
  int k = 1;
  double norm_t = 1.0;
  double epsilon = 1e-3;
  std::string norm = "mcn";
  std::uint64_t seed = 1;
  bool evolve = false;
  std::string out;  // prefix: writes <out>.json and <out>.csv
};

struct VerifyArgs {
  std::string in;
  std::size_t n = 32;
  int d = 3;
  double density = 0.9;
  std::uint64_t seed = 1;
  double t = 0.5;
  double epsilon = 1e-4;
  int k = 1;
  std::string out;
};

int run_generate(const GenerateArgs& args) {
  const SparseHermitian h = generate_instance(args.gen);
  emit(matrix_to_json(h), args.out);
  return kExitPass;
}

int run_decompose(const DecomposeArgs& args) {
  const SparseHermitian h = load_matrix(args.in);
  const json report = decomposition_report(h);
  emit(report.dump(2), args.out);
  return report["pass"].get<bool>() ? kExitPass : kExitCheckFailed;
}

int run_simulate(const SimulateArgs& args) {
  const SparseHermitian h = load_matrix(args.in);
  SimulationOptions opts;
  opts.t = args.t;
  opts.epsilon = args.epsilon;
  opts.k = args.k;
  opts.norm_mode = parse_norm(args.norm);
  const StateVector initial = make_initial(args.state, h.dim(), args.seed);

  const SimulationResult result = simulate(h, initial, opts);
  json report = report_to_json(result.report);
  report["config"] = json{{"file", args.in}, {"state", args.state}, {"seed", args.seed}};

  bool pass = true;
  if (h.dim() <= 4096) {
    const StateVector reference = apply_operator(dense_expm(h, args.t), initial);
    const ErrorMetrics err = compare_states(result.state, reference);
    report["error"] = json{{"trace_distance", err.trace_distance},
                           {"infidelity", err.infidelity},
                           {"norm_error", err.norm_error}};
    pass = err.trace_distance <= args.epsilon;
    if (args.empirical && args.t > 0.0) {
      report["empirical_r"] = empirical_segment_search(h, initial, opts, reference);
    }
  } else {
    report["error"] = nullptr;  // no dense reference at this size
  }
  report["pass"] = pass;
  emit(report.dump(2), args.out);
  return pass ? kExitPass : kExitCheckFailed;
}

int run_benchmark(const BenchmarkArgs& args) {
  if (args.values.empty())
    throw CLI::ValidationError("--values", "needs at least one sweep value");
  std::vector<BenchmarkPoint> points;
  for (const double value : args.values) {
    std::size_t n = args.n;
    int d = args.d;
    int k = args.k;
    if (args.sweep == "d")
      d = static_cast<int>(value);
    else if (args.sweep == "n")
      n = static_cast<std::size_t>(value);
    else if (args.sweep == "k")
      k = static_cast<int>(value);
    else
      throw CLI::ValidationError("--sweep", "must be 'd', 'n' or 'k'");

    GeneratorOptions gen;
    gen.n = n;
    gen.d = d;
    gen.seed = args.seed;
    const SparseHermitian h = generate_instance(gen);

    SimulationOptions opts;
    opts.k = k;
    opts.epsilon = args.epsilon;
    opts.norm_mode = parse_norm(args.norm);
    opts.evolve = args.evolve;
    // Fix norm * t across the sweep so points are comparable.
    const double norm_value =
        opts.norm_mode == NormMode::Spectral ? spectral_norm(h) : max_column_norm(h);
    if (norm_value <= 0.0) throw std::runtime_error("benchmark: instance has zero norm");
    opts.t = args.norm_t / norm_value;

    BenchmarkPoint point;
    point.label = args.sweep;
    point.value = value;
    if (args.evolve && h.dim() <= 4096) {
      const StateVector initial = random_state(h.dim(), args.seed + 7);
      const SimulationResult res = simulate(h, initial, opts);
      const StateVector reference = apply_operator(dense_expm(h, opts.t), initial);
      point.trace_distance = compare_states(res.state, reference).trace_distance;
      point.report = res.report;
    } else {
      opts.evolve = false;
      const StateVector initial = basis_state(h.dim(), 0);
      point.report = simulate(h, initial, opts).report;
    }
    points.push_back(std::move(point));
  }
  const json out = benchmark_to_json(points);
  if (args.out.empty()) {
    emit(out.dump(2), "");
  } else {
    emit(out.dump(2), args.out + ".json");
    emit(benchmark_to_csv(points), args.out + ".csv");
  }
  return kExitPass;
}

int run_verify(const VerifyArgs& args) {
  SparseHermitian h = [&] {
    if (!args.in.empty()) return load_matrix(args.in);
    GeneratorOptions gen;
    gen.n = args.n;
    gen.d = args.d;
    gen.density = args.density;
    gen.seed = args.seed;
    return generate_instance(gen);
  }();
  const json report = verification_report(h, args.t, args.epsilon, args.k);
  emit(report.dump(2), args.out);
  return report["pass"].get<bool>() ? kExitPass : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"star-decomposition simulator for sparse Hermitian matrices"};
  app.require_subcommand(1);

  GenerateArgs gen_args;
  CLI::App* gen = app.add_subcommand("generate", "write a random d-sparse instance");
  gen->add_option("--n", gen_args.gen.n, "dimension")->check(CLI::Range(std::size_t{2}, std::size_t{8192}));
  gen->add_option("--d", gen_args.gen.d, "sparsity")->check(CLI::Range(1, 64));
  gen->add_option("--density", gen_args.gen.density, "target edge fraction of n*d/2")
      ->check(CLI::Range(0.0, 1.0));
  gen->add_option("--seed", gen_args.gen.seed, "generator seed");
  gen->add_flag("--diagonal", gen_args.gen.random_diagonal, "random diagonal in [-1, 1]");
  gen->add_flag("--ring", gen_args.gen.ring, "cycle topology with unit weights");
  gen->add_option("--out", gen_args.out, "output file (stdout otherwise)");

  DecomposeArgs dec_args;
  CLI::App* dec = app.add_subcommand("decompose", "decompose and run the structural checks");
  dec->add_option("--in", dec_args.in, "matrix file")->required();
  dec->add_option("--out", dec_args.out, "report file (stdout otherwise)");

  SimulateArgs sim_args;
  CLI::App* sim = app.add_subcommand("simulate", "evolve a state and report query costs");
  sim->add_option("--in", sim_args.in, "matrix file")->required();
  sim->add_option("--t", sim_args.t, "evolution time")->check(CLI::NonNegativeNumber);
  sim->add_option("--epsilon", sim_args.epsilon, "error budget")->check(CLI::PositiveNumber);
  sim->add_option("--k", sim_args.k, "product-formula order")->check(CLI::Range(1, 6));
  sim->add_option("--norm", sim_args.norm, "norm driving r: spectral | mcn");
  sim->add_option("--state", sim_args.state, "initial state: basis | random");
  sim->add_option("--seed", sim_args.seed, "seed of the random initial state");
  sim->add_flag("--empirical", sim_args.empirical,
                "also bisect the smallest r that stays within epsilon/2");
  sim->add_option("--out", sim_args.out, "report file (stdout otherwise)");

  BenchmarkArgs bench_args;
  CLI::App* bench = app.add_subcommand("benchmark", "sweep a parameter and tabulate costs");
  bench->add_option("--sweep", bench_args.sweep, "swept variable: d | n | k");
  bench->add_option("--values", bench_args.values, "sweep values")->required()->delimiter(',');
  bench->add_option("--n", bench_args.n, "dimension (fixed unless swept)");
  bench->add_option("--d", bench_args.d, "sparsity (fixed unless swept)");
  bench->add_option("--k", bench_args.k, "order (fixed unless swept)")->check(CLI::Range(1, 6));
  bench->add_option("--normt", bench_args.norm_t, "norm * t held fixed across the sweep")
      ->check(CLI::PositiveNumber);
  bench->add_option("--epsilon", bench_args.epsilon, "error budget")->check(CLI::PositiveNumber);
  bench->add_option("--norm", bench_args.norm, "norm driving r: spectral | mcn");
  bench->add_option("--seed", bench_args.seed, "instance seed");
  bench->add_flag("--evolve", bench_args.evolve, "evolve states too (default: count only)");
  bench->add_option("--out", bench_args.out, "output prefix for .json and .csv");

  VerifyArgs ver_args;
  CLI::App* ver = app.add_subcommand("verify", "full invariant battery plus an accuracy run");
  ver->add_option("--in", ver_args.in, "matrix file (generated when absent)");
  ver->add_option("--n", ver_args.n, "generated dimension")->check(CLI::Range(std::size_t{2}, std::size_t{4096}));
  ver->add_option("--d", ver_args.d, "generated sparsity")->check(CLI::Range(1, 64));
  ver->add_option("--density", ver_args.density, "generated density")->check(CLI::Range(0.0, 1.0));
  ver->add_option("--seed", ver_args.seed, "generator seed");
  ver->add_option("--t", ver_args.t, "accuracy-run time")->check(CLI::NonNegativeNumber);
  ver->add_option("--epsilon", ver_args.epsilon, "accuracy-run budget")->check(CLI::PositiveNumber);
  ver->add_option("--k", ver_args.k, "accuracy-run order")->check(CLI::Range(1, 6));
  ver->add_option("--out", ver_args.out, "report file (stdout otherwise)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitBadInput;
  }

  try {
    if (gen->parsed()) return run_generate(gen_args);
    if (dec->parsed()) return run_decompose(dec_args);
    if (sim->parsed()) return run_simulate(sim_args);
    if (bench->parsed()) return run_benchmark(bench_args);
    if (ver->parsed()) return run_verify(ver_args);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  }
  return kExitBadInput;
}
