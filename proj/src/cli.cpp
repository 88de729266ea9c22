#include "sdfvs/cli.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sdfvs/instance_io.hpp"
#include "sdfvs/oracle.hpp"
#include "sdfvs/report.hpp"
#include "sdfvs/solver.hpp"

namespace sdfvs {

namespace {

using Clock = std::chrono::steady_clock;

struct SolveOptions {
  std::string mode = "auto";
  long long trials = 0;
  long long trial_factor = 1;
  std::uint64_t seed = 1;
  long long max_nodes = -1;
  double timeout = -1;
  int threads = 1;
  int retries = 1;
  bool json = false;
  bool minimize = false;
  std::string solution_out;
};

void attach_solver_flags(CLI::App* app, SolveOptions& o) {
  app->add_option("--mode", o.mode, "sampling mode: mc, exhaustive-p, det (default: auto)")
      ->check(CLI::IsMember({"auto", "mc", "exhaustive-p", "det"}));
  app->add_option("--trials", o.trials, "covering trials per call (default 4^(k^2)+64)");
  app->add_option("--trial-factor", o.trial_factor, "multiply the covering trial count");
  app->add_option("--seed", o.seed, "master random seed");
  app->add_option("--max-nodes", o.max_nodes, "abort after this many search nodes");
  app->add_option("--timeout", o.timeout, "abort after this many seconds");
  app->add_option("--threads", o.threads, "worker threads for covering trials");
  app->add_option("--retries", o.retries, "doubling retries after a monte-carlo NO");
}

SolverConfig make_config(const SolveOptions& o, int n) {
  SolverConfig cfg;
  if (o.mode == "mc")
    cfg.sampling.mode = SamplingMode::monte_carlo;
  else if (o.mode == "exhaustive-p")
    cfg.sampling.mode = SamplingMode::exhaustive_p;
  else if (o.mode == "det")
    cfg.sampling.mode = SamplingMode::deterministic;
  else
    cfg.sampling.mode = n <= 16 ? SamplingMode::exhaustive_p : SamplingMode::monte_carlo;
  cfg.sampling.trials = o.trials;
  cfg.sampling.trial_factor = o.trial_factor;
  cfg.sampling.seed = o.seed;
  cfg.sampling.threads = o.threads;
  cfg.max_retries = o.retries;
  cfg.max_nodes = o.max_nodes;
  cfg.timeout_seconds = o.timeout;
  return cfg;
}

EdgeInstance as_edge(const ParsedInstance& inst) {
  return inst.kind == ParsedInstance::Kind::edge ? inst.edge : vertex_to_edge(inst.vertex);
}

RunReport run_solver(const ParsedInstance& parsed, const SolveOptions& opts) {
  EdgeInstance edge = as_edge(parsed);
  SolverConfig cfg = make_config(opts, edge.graph.vertex_count());

  RunReport report;
  report.name = parsed.name.empty() ? "-" : parsed.name;
  report.n = edge.graph.vertex_count();
  report.m = edge.graph.arc_count();
  report.s_size = parsed.s_size();
  report.k = edge.budget;
  report.seed = opts.seed;
  report.mode = to_string(cfg.sampling.mode);

  auto t0 = Clock::now();
  SolveResult result;
  if (opts.minimize) {
    int cap = (edge.graph.alive() - edge.graph.undeletable()).count();
    for (int k = 0; k <= cap; ++k) {
      EdgeInstance attempt = edge;
      attempt.budget = k;
      SolverConfig kcfg = cfg;
      kcfg.sampling.seed = derive_seed(opts.seed, static_cast<std::uint64_t>(k));
      SolveResult r = solve(attempt, kcfg);
      result.stats.nodes += r.stats.nodes;
      result.stats.covering_trials += r.stats.covering_trials;
      result.exact = r.exact;
      if (r.solution) {
        result.solution = std::move(r.solution);
        report.k = k;
        break;
      }
    }
  } else {
    result = solve(edge, cfg);
  }
  auto t1 = Clock::now();

  report.yes = result.solution.has_value();
  if (result.solution)
    for (VertexId v : result.solution->deleted) report.solution.push_back(v + 1);
  report.nodes = result.stats.nodes;
  report.trials = result.stats.covering_trials;
  report.retries = result.stats.retries;
  report.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  report.exact = result.exact || report.yes;  // YES answers are always certified
  return report;
}

int cmd_solve(const std::string& path, const SolveOptions& opts, std::ostream& out,
              std::ostream& err) {
  ParsedInstance parsed = load_instance_file(path);
  RunReport report = run_solver(parsed, opts);
  out << (opts.json ? report_json(report) + "\n" : report_human(report));
  if (report.yes && !opts.solution_out.empty()) {
    std::ofstream sol(opts.solution_out);
    if (!sol) {
      err << "cannot write " << opts.solution_out << "\n";
      return kExitInternal;
    }
    for (std::size_t i = 0; i < report.solution.size(); ++i)
      sol << report.solution[i] << (i + 1 < report.solution.size() ? ' ' : '\n');
    if (report.solution.empty()) sol << '\n';
  }
  return report.yes ? kExitYes : kExitNo;
}

int cmd_verify(const std::string& instance_path, const std::string& solution_path,
               std::ostream& out, std::ostream& err) {
  ParsedInstance parsed = load_instance_file(instance_path);
  EdgeInstance edge = as_edge(parsed);

  std::ifstream in(solution_path);
  if (!in) {
    err << "cannot open " << solution_path << "\n";
    return kExitParse;
  }
  Bitset deleted = edge.graph.empty_set();
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok) || tok == "c") continue;
    do {
      int v = 0;
      try {
        v = std::stoi(tok);
      } catch (...) {
        throw ParseError(lineno, "not a vertex id: '" + tok + "'");
      }
      if (v < 1 || v > edge.graph.slot_count())
        throw ParseError(lineno, "vertex " + tok + " out of range");
      deleted.set(v - 1);
    } while (ls >> tok);
  }
  bool ok = verify_solution(edge, deleted);
  out << (ok ? "valid solution" : "invalid solution") << "\n";
  return ok ? kExitYes : kExitNo;
}

int cmd_oracle(const std::string& path, int max_vertices, long long max_subsets, bool json,
               std::ostream& out) {
  ParsedInstance parsed = load_instance_file(path);
  EdgeInstance edge = as_edge(parsed);
  OracleBudget budget;
  if (max_vertices > 0) budget.max_vertices = max_vertices;
  if (max_subsets > 0) budget.max_subsets = max_subsets;

  RunReport report;
  report.name = parsed.name.empty() ? "-" : parsed.name;
  report.n = edge.graph.vertex_count();
  report.m = edge.graph.arc_count();
  report.s_size = parsed.s_size();
  report.k = edge.budget;
  report.mode = "oracle";

  auto t0 = Clock::now();
  std::optional<Solution> sol = brute_force_solve(edge, budget);
  auto t1 = Clock::now();
  report.yes = sol.has_value();
  if (sol)
    for (VertexId v : sol->deleted) report.solution.push_back(v + 1);
  report.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  out << (json ? report_json(report) + "\n" : report_human(report));
  return report.yes ? kExitYes : kExitNo;
}

int cmd_gen(const GenConfig& cfg, const std::string& out_path, std::ostream& out,
            std::ostream& err) {
  ParsedInstance inst = generate_instance(cfg);
  std::string text = serialize_instance(inst);
  if (out_path.empty()) {
    out << text;
    return kExitYes;
  }
  std::ofstream f(out_path);
  if (!f) {
    err << "cannot write " << out_path << "\n";
    return kExitInternal;
  }
  f << text;
  return kExitYes;
}

int cmd_reduce(const std::string& path, bool subdivide_all, const std::string& out_path,
               std::ostream& out, std::ostream& err) {
  ParsedInstance parsed = load_instance_file(path);
  ParsedInstance converted;
  if (parsed.kind == ParsedInstance::Kind::edge) {
    converted.kind = ParsedInstance::Kind::vertex;
    converted.vertex = edge_to_vertex(parsed.edge, subdivide_all);
  } else {
    converted.kind = ParsedInstance::Kind::edge;
    converted.edge = vertex_to_edge(parsed.vertex);
  }
  std::string text = serialize_instance(converted);
  if (out_path.empty()) {
    out << text;
    return kExitYes;
  }
  std::ofstream f(out_path);
  if (!f) {
    err << "cannot write " << out_path << "\n";
    return kExitInternal;
  }
  f << text;
  return kExitYes;
}

int cmd_bench(const std::string& dir, const SolveOptions& opts, const std::string& out_path,
              std::ostream& out, std::ostream& err) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file()) files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  std::vector<std::string> rows(files.size());
  bool soundness_violation = false;
  std::ostringstream warnings;

  for (std::size_t i = 0; i < files.size(); ++i) {
    ParsedInstance parsed = load_instance_file(files[i].string());
    RunReport report = run_solver(parsed, opts);
    EdgeInstance edge = as_edge(parsed);
    if (edge.graph.vertex_count() <= OracleBudget{}.max_vertices) {
      std::optional<Solution> oracle = brute_force_solve(edge);
      if (report.yes && !oracle) {
        soundness_violation = true;
        warnings << "soundness violation on " << report.name << ": solver YES, oracle NO\n";
      } else if (!report.yes && oracle) {
        if (report.exact) {
          soundness_violation = true;
          warnings << "completeness violation on " << report.name
                   << ": exact-mode NO, oracle YES\n";
        } else {
          warnings << "one-sided miss on " << report.name << " (monte-carlo NO, oracle YES)\n";
        }
      }
    }
    rows[i] = csv_row(report);
  }

  std::ostringstream csv;
  csv << csv_header() << "\n";
  for (const std::string& r : rows) csv << r << "\n";
  if (out_path.empty()) {
    out << csv.str();
  } else {
    std::ofstream f(out_path);
    if (!f) {
      err << "cannot write " << out_path << "\n";
      return kExitInternal;
    }
    f << csv.str();
  }
  err << warnings.str();
  return soundness_violation ? kExitInternal : kExitYes;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"subset directed feedback vertex set solver"};
  app.require_subcommand(1);

  SolveOptions opts;

  auto* solve_cmd = app.add_subcommand("solve", "solve an instance file");
  std::string solve_path;
  solve_cmd->add_option("instance", solve_path)->required();
  attach_solver_flags(solve_cmd, opts);
  solve_cmd->add_flag("--json", opts.json, "print the report as JSON");
  solve_cmd->add_flag("--minimize", opts.minimize, "loop k upward until a solution exists");
  solve_cmd->add_option("--solution-out", opts.solution_out, "write YES solutions to a file");

  auto* verify_cmd = app.add_subcommand("verify", "check a proposed solution file");
  std::string verify_instance, verify_solution_path;
  verify_cmd->add_option("instance", verify_instance)->required();
  verify_cmd->add_option("solution", verify_solution_path)->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force ground truth");
  std::string oracle_path;
  int oracle_max_vertices = 0;
  long long oracle_max_subsets = 0;
  bool oracle_json = false;
  oracle_cmd->add_option("instance", oracle_path)->required();
  oracle_cmd->add_option("--max-vertices", oracle_max_vertices);
  oracle_cmd->add_option("--max-subsets", oracle_max_subsets);
  oracle_cmd->add_flag("--json", oracle_json);

  auto* gen_cmd = app.add_subcommand("gen", "generate an instance");
  GenConfig gen_cfg;
  std::string gen_mode = "random", gen_out;
  gen_cmd->add_option("--mode", gen_mode)->check(CLI::IsMember({"random", "planted"}));
  gen_cmd->add_option("--n", gen_cfg.n)->required();
  gen_cmd->add_option("--m", gen_cfg.m)->required();
  gen_cmd->add_option("--s-fraction", gen_cfg.s_fraction);
  gen_cmd->add_option("--k", gen_cfg.k)->required();
  gen_cmd->add_option("--seed", gen_cfg.seed);
  gen_cmd->add_option("-o,--out", gen_out);

  auto* reduce_cmd = app.add_subcommand("reduce", "convert between vertex and edge forms");
  std::string reduce_path, reduce_out;
  bool subdivide_all = false;
  reduce_cmd->add_option("instance", reduce_path)->required();
  reduce_cmd->add_flag("--subdivide-all", subdivide_all,
                       "subdivide every arc, not only the S-arcs");
  reduce_cmd->add_option("-o,--out", reduce_out);

  auto* bench_cmd = app.add_subcommand("bench", "run a directory of instances, emit CSV");
  std::string bench_dir, bench_out;
  bench_cmd->add_option("directory", bench_dir)->required();
  attach_solver_flags(bench_cmd, opts);
  bench_cmd->add_option("--out", bench_out, "CSV output file (default stdout)");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return kExitYes;
    }
    err << e.what() << "\n";
    return kExitParse;
  }

  try {
    if (solve_cmd->parsed()) return cmd_solve(solve_path, opts, out, err);
    if (verify_cmd->parsed()) return cmd_verify(verify_instance, verify_solution_path, out, err);
    if (oracle_cmd->parsed())
      return cmd_oracle(oracle_path, oracle_max_vertices, oracle_max_subsets, oracle_json, out);
    if (gen_cmd->parsed()) {
      gen_cfg.mode = gen_mode == "planted" ? GenConfig::Mode::planted : GenConfig::Mode::random;
      return cmd_gen(gen_cfg, gen_out, out, err);
    }
    if (reduce_cmd->parsed()) return cmd_reduce(reduce_path, subdivide_all, reduce_out, out, err);
    if (bench_cmd->parsed()) return cmd_bench(bench_dir, opts, bench_out, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const LimitExceeded& e) {
    err << "aborted: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  err << "no subcommand\n";
  return kExitParse;
}

}  // namespace sdfvs
