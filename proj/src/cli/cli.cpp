#include "tclique/cli.hpp"

#include <chrono>
#include <cmath>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "tclique/analytics.hpp"
#include "tclique/experiments.hpp"
#include "tclique/io.hpp"
#include "tclique/solver.hpp"

namespace tclique {
namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& seed, std::ostream& err) {
  if (seed) return *seed;
  std::random_device device;
  const std::uint64_t drawn = (static_cast<std::uint64_t>(device()) << 32) ^ device();
  err << "seed: " << drawn << "\n";
  return drawn;
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
  } else {
    write_file_atomically(path, text);
  }
}

TemporalGraph load_graph(const std::string& path) {
  if (path == "-") return read_temporal_graph(std::cin, "<stdin>");
  return read_temporal_graph(std::filesystem::path(path));
}

struct GenerateArgs {
  std::size_t n = 0;
  std::optional<std::uint64_t> seed;
  std::string out = "-";
};

struct SolveArgs {
  std::string in;
  double delta = 0.0;
  std::string mode = "exact";
  std::optional<double> budget;
  std::optional<std::uint64_t> seed;
  int restarts = 2;
  bool allow_large = false;
  bool no_witness = false;
  std::string out = "-";
};

struct AnalyzeArgs {
  std::string what;
  std::optional<std::int64_t> n, k, h, m;
  std::optional<double> delta, x, y;
  std::string kind = "min";
};

struct ExperimentArgs {
  std::string name;
  std::optional<std::size_t> n;
  std::vector<std::size_t> ns;
  std::optional<std::size_t> k;
  std::optional<std::int64_t> h;
  double delta = 0.5;
  std::size_t trials = 20;
  std::optional<std::uint64_t> seed;
  std::string mode = "exact";
  std::optional<double> budget;
  int restarts = 2;
  std::size_t threads = 0;
  std::size_t bins = 10;
  double upper_factor = 1.25;
  double lower_factor = 0.5;
  std::string outdir;
  std::string format = "json";
};

int do_generate(const GenerateArgs& a, std::ostream& out, std::ostream& err) {
  const std::uint64_t seed = resolve_seed(a.seed, err);
  emit(a.out, to_json_string(generate_random_complete(a.n, seed)), out);
  return kExitOk;
}

int do_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  SolverConfig cfg;
  cfg.mode = parse_solver_mode(a.mode);
  cfg.time_budget_secs = a.budget;
  cfg.heuristic_restarts = a.restarts;
  cfg.allow_large_bruteforce = a.allow_large;
  cfg.report_witness = !a.no_witness;
  const TemporalGraph tg = load_graph(a.in);
  const std::uint64_t seed = cfg.mode == SolverMode::kHeuristic ? resolve_seed(a.seed, err) : a.seed.value_or(0);

  const auto start = std::chrono::steady_clock::now();
  const CliqueResult q = solve_max_delta_clique(tg, a.delta, cfg, seed);
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  json record = {{"size", q.size()}};
  if (cfg.report_witness) record["vertices"] = q.vertices;
  record["interval_min"] = q.interval_min;
  record["interval_max"] = q.interval_max;
  record["optimal"] = q.optimal;
  record["mode"] = a.mode;
  record["wall_time"] = wall;
  emit(a.out, record.dump() + "\n", out);
  return kExitOk;
}

template <typename T>
T need(const std::optional<T>& value, const char* flag, const std::string& what) {
  if (!value) throw UsageError("analyze --what " + what + " requires " + flag);
  return *value;
}

int do_analyze(const AnalyzeArgs& a, std::ostream& out) {
  namespace an = analytics;
  json record = {{"what", a.what}};
  double value = 0.0;
  if (a.what == "window-prob") {
    const auto h = need(a.h, "--h", a.what);
    const double delta = need(a.delta, "--delta", a.what);
    record["h"] = h;
    record["delta"] = delta;
    value = an::window_probability(h, delta);
  } else if (a.what == "expected-count") {
    const auto n = need(a.n, "--n", a.what);
    const auto k = need(a.k, "--k", a.what);
    const double delta = need(a.delta, "--delta", a.what);
    record["n"] = n;
    record["k"] = k;
    record["delta"] = delta;
    record["log_value"] = an::log_expected_clique_count(n, k, delta);
    value = an::expected_clique_count(n, k, delta);
  } else if (a.what == "k0") {
    const auto n = need(a.n, "--n", a.what);
    const double delta = need(a.delta, "--delta", a.what);
    record["n"] = n;
    record["delta"] = delta;
    value = an::k0_threshold(n, delta);
  } else if (a.what == "overlap-bound") {
    const auto n = need(a.n, "--n", a.what);
    const auto k = need(a.k, "--k", a.what);
    const double delta = need(a.delta, "--delta", a.what);
    record["n"] = n;
    record["k"] = k;
    record["delta"] = delta;
    value = an::second_moment_overlap_bound(n, k, delta);
  } else {  // density
    const auto m = need(a.m, "--m", a.what);
    const double x = need(a.x, "--x", a.what);
    record["kind"] = a.kind;
    record["m"] = m;
    record["x"] = x;
    if (a.kind == "joint") {
      const double y = need(a.y, "--y", a.what);
      record["y"] = y;
      value = an::minmax_joint_density(m, x, y);
    } else {
      value = an::min_density(m, x);
    }
  }
  record["value"] = value;
  out << record.dump() << "\n";
  return kExitOk;
}

int do_experiment(const ExperimentArgs& a, std::ostream& out, std::ostream& err) {
  ExperimentOptions opts;
  opts.trials = a.trials;
  opts.seed = resolve_seed(a.seed, err);
  opts.threads = a.threads;
  opts.solver.mode = parse_solver_mode(a.mode);
  opts.solver.time_budget_secs = a.budget;
  opts.solver.heuristic_restarts = a.restarts;

  const auto need_n = [&] {
    if (!a.n) throw UsageError("experiment --name " + a.name + " requires --n");
    return *a.n;
  };
  ExperimentReport report;
  if (a.name == "window-prob") {
    if (!a.h) throw UsageError("experiment --name window-prob requires --h");
    report = estimate_window_probability(*a.h, a.delta, opts);
  } else if (a.name == "clique-count") {
    if (!a.k) throw UsageError("experiment --name clique-count requires --k");
    report = estimate_clique_count(need_n(), *a.k, a.delta, opts);
  } else if (a.name == "threshold") {
    std::vector<std::size_t> ns = a.ns;
    if (ns.empty() && a.n) ns.push_back(*a.n);
    if (ns.empty()) throw UsageError("experiment --name threshold requires --ns or --n");
    report = threshold_sweep(ns, a.delta, opts, ThresholdBands{a.upper_factor, a.lower_factor});
  } else if (a.name == "interval-width") {
    report = interval_width_experiment(need_n(), a.delta, opts);
  } else if (a.name == "reduction") {
    report = reduction_experiment(need_n(), a.delta, opts);
  } else {  // conjecture2
    report = conjecture2_probe(need_n(), a.delta, opts, a.bins);
  }

  if (!a.outdir.empty()) {
    const auto [csv, json_path] = report.write_files(a.outdir);
    err << "wrote " << csv.string() << " and " << json_path.string() << "\n";
  }
  out << (a.format == "csv" ? report.to_csv() : report.to_json().dump(2) + "\n");
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Random simple temporal graphs: generation, maximum delta-clique solvers, closed forms and experiments",
               "tclique"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Random complete temporal graph as JSON");
  generate->add_option("--n", gen.n, "Vertex count")->required()->check(CLI::PositiveNumber);
  generate->add_option("--seed", gen.seed, "Master seed (drawn and printed when omitted)");
  generate->add_option("--out", gen.out, "Output path or - for stdout");

  SolveArgs sol;
  auto* solve = app.add_subcommand("solve", "Maximum delta-temporal clique of a graph file");
  solve->add_option("--in", sol.in, "Input graph (JSON or 'u v label' text), - for stdin")->required();
  solve->add_option("--delta", sol.delta, "Window width")->required()->check(CLI::Range(0.0, 1.0));
  solve->add_option("--mode", sol.mode, "Solver")->check(CLI::IsMember({"bruteforce", "exact", "heuristic"}));
  solve->add_option("--budget-secs", sol.budget, "Time budget; result flagged non-optimal when hit")
      ->check(CLI::NonNegativeNumber);
  solve->add_option("--seed", sol.seed, "Heuristic seed");
  solve->add_option("--restarts", sol.restarts, "Heuristic restarts per window")->check(CLI::PositiveNumber);
  solve->add_flag("--allow-large", sol.allow_large, "Let brute force run on more than 20 vertices");
  solve->add_flag("--no-witness", sol.no_witness, "Omit the vertex list from the output");
  solve->add_option("--out", sol.out, "Output path or - for stdout");

  AnalyzeArgs ana;
  auto* analyze = app.add_subcommand("analyze", "Evaluate a closed-form quantity");
  analyze->add_option("--what", ana.what, "Quantity")
      ->required()
      ->check(CLI::IsMember({"window-prob", "expected-count", "k0", "overlap-bound", "density"}));
  analyze->add_option("--n", ana.n, "Vertex count");
  analyze->add_option("--k", ana.k, "Clique size");
  analyze->add_option("--delta", ana.delta, "Window width")->check(CLI::Range(0.0, 1.0));
  analyze->add_option("--h", ana.h, "Edge count of the subgraph");
  analyze->add_option("--m", ana.m, "Edge count for densities");
  analyze->add_option("--x", ana.x, "Density argument (minimum label)");
  analyze->add_option("--y", ana.y, "Density argument (maximum label)");
  analyze->add_option("--kind", ana.kind, "Density kind")->check(CLI::IsMember({"min", "joint"}));

  ExperimentArgs exp;
  auto* experiment = app.add_subcommand("experiment", "Run a Monte Carlo experiment");
  experiment->add_option("--name", exp.name, "Experiment")
      ->required()
      ->check(CLI::IsMember({"window-prob", "clique-count", "threshold", "interval-width", "reduction", "conjecture2"}));
  experiment->add_option("--n", exp.n, "Vertex count")->check(CLI::PositiveNumber);
  experiment->add_option("--ns", exp.ns, "Vertex counts for the threshold sweep")->delimiter(',');
  experiment->add_option("--k", exp.k, "Clique size (clique-count)")->check(CLI::PositiveNumber);
  experiment->add_option("--h", exp.h, "Label count (window-prob)")->check(CLI::NonNegativeNumber);
  experiment->add_option("--delta", exp.delta, "Window width")->check(CLI::Range(0.0, 1.0));
  experiment->add_option("--trials", exp.trials, "Trials (per n for the sweep)")->check(CLI::PositiveNumber);
  experiment->add_option("--seed", exp.seed, "Master seed (drawn and printed when omitted)");
  experiment->add_option("--mode", exp.mode, "Solver")->check(CLI::IsMember({"bruteforce", "exact", "heuristic"}));
  experiment->add_option("--budget-secs", exp.budget, "Per-solve time budget")->check(CLI::NonNegativeNumber);
  experiment->add_option("--restarts", exp.restarts, "Heuristic restarts")->check(CLI::PositiveNumber);
  experiment->add_option("--threads", exp.threads, "Worker threads (0 = all cores)");
  experiment->add_option("--bins", exp.bins, "Histogram bins (conjecture2)")->check(CLI::PositiveNumber);
  experiment->add_option("--upper-factor", exp.upper_factor, "Threshold upper band factor");
  experiment->add_option("--lower-factor", exp.lower_factor, "Threshold lower band factor");
  experiment->add_option("--outdir", exp.outdir, "Directory for <experiment>_<hash>_<seed>.{csv,json}");
  experiment->add_option("--format", exp.format, "Stdout format")->check(CLI::IsMember({"json", "csv"}));

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    for (const auto* sub : app.get_subcommands()) err << sub->help();
    return kExitUsage;
  }

  try {
    if (generate->parsed()) return do_generate(gen, out, err);
    if (solve->parsed()) return do_solve(sol, out, err);
    if (analyze->parsed()) return do_analyze(ana, out);
    return do_experiment(exp, out, err);
  } catch (const InfeasibleConfig& e) {
    err << "infeasible configuration: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const ParseError& e) {
    err << "malformed input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace tclique
