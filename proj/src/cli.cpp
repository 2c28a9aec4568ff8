#include "mogp/cli.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "mogp/problem_io.hpp"
#include "mogp/report.hpp"
#include "mogp/sweep.hpp"

namespace mogp::cli {

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MaxIterations:
    case ErrorKind::NonConverged:
    case ErrorKind::RankDeficient:
      return kExitNonConverged;
    case ErrorKind::NegativeDoD:
    case ErrorKind::InfeasibleDual:
    case ErrorKind::SingularSystem:
    case ErrorKind::NoFeasiblePoint:
      return kExitInfeasible;
    default:
      return kExitInput;
  }
}

std::vector<double> parse_number_list(const std::string& text) {
  auto to_double = [&](const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size() || !std::isfinite(v)) {
      throw Error(ErrorKind::ParseError, "bad number \"" + s + "\" in \"" + text + "\"");
    }
    return v;
  };
  std::vector<std::string> parts;
  const char sep = text.find(':') != std::string::npos ? ':' : ',';
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, sep);) parts.push_back(item);

  if (sep == ',') {
    std::vector<double> out;
    for (const auto& p : parts) out.push_back(to_double(p));
    if (out.empty()) throw Error(ErrorKind::ParseError, "empty number list");
    return out;
  }
  if (parts.size() != 3) throw Error(ErrorKind::ParseError, "range must be lo:hi:step, got \"" + text + "\"");
  const double lo = to_double(parts[0]), hi = to_double(parts[1]), step = to_double(parts[2]);
  if (!(step > 0.0) || hi < lo) throw Error(ErrorKind::ParseError, "range needs step > 0 and hi >= lo");
  const auto count = static_cast<long>(std::floor((hi - lo) / step + 1e-9)) + 1;
  std::vector<double> out;
  for (long i = 0; i < count; ++i) {
    // Snap so 0.1 + 2 * 0.1 prints and compares as 0.3.
    out.push_back(std::round((lo + static_cast<double>(i) * step) * 1e12) / 1e12);
  }
  return out;
}

namespace {

bool is_parametric(const Problem& problem) {
  auto any = [](const Posynomial& p) {
    for (const auto& m : p.terms()) {
      if (!m.coeff.is_constant()) return true;
    }
    return false;
  };
  for (const auto& f : problem.objectives()) {
    if (any(f)) return true;
  }
  for (const auto& c : problem.constraints()) {
    if (any(c.lhs)) return true;
  }
  return false;
}

std::vector<WeightVector> weight_grid(const RunConfig& config, const Problem& problem) {
  std::vector<std::vector<double>> raw = config.weights;
  const std::size_t p = problem.num_objectives();
  if (config.w1_range) {
    if (!config.complete_weights) {
      throw Error(ErrorKind::ValidationError, "--w1 ranges need --complete-weights to fill w2 = 1 - w1");
    }
    if (p != 2) throw Error(ErrorKind::ValidationError, "--complete-weights only applies to two objectives");
    for (double w1 : parse_number_list(*config.w1_range)) raw.push_back({w1, 1.0 - w1});
  }
  if (raw.empty()) {
    if (p != 1) throw Error(ErrorKind::ValidationError, "weights are required (--weights or --w1)");
    raw.push_back({1.0});
  }
  std::vector<WeightVector> out;
  for (auto& w : raw) {
    if (w.size() != p) {
      throw Error(ErrorKind::ValidationError, "expected " + std::to_string(p) + " weights, got " +
                                                  std::to_string(w.size()));
    }
    out.push_back(WeightVector::validate(std::move(w)));
  }
  return out;
}

std::vector<double> t_grid(const RunConfig& config, const Problem& problem) {
  if (!config.ts.empty()) return config.ts;
  if (is_parametric(problem)) throw Error(ErrorKind::ValidationError, "--t is required for this problem");
  return {0.0};
}

std::string weights_text(const WeightVector& w, int sig) {
  std::string s = "(";
  for (std::size_t k = 0; k < w.size(); ++k) s += (k ? ", " : "") + format_number(w[k], sig);
  return s + ")";
}

int analyze(const RunConfig& config, const Problem& problem, std::ostream& out, std::ostream& err) {
  out << "n=" << problem.num_variables() << " p=" << problem.num_objectives()
      << " m=" << problem.num_constraints() << "\n";
  out << "objective terms:";
  for (const auto& f : problem.objectives()) out << ' ' << f.size();
  out << "\nconstraint terms:";
  for (const auto& c : problem.constraints()) out << ' ' << c.lhs.size();
  out << "\n";

  const int dod = degree_of_difficulty(problem.total_term_count(), problem.num_variables());
  const std::string summary = "terms=" + std::to_string(problem.total_term_count()) +
                              " vars=" + std::to_string(problem.num_variables()) +
                              " DoD=" + std::to_string(dod);
  if (config.ts.empty() && config.weights.empty() && !config.w1_range) {
    out << summary << "\n";
  } else {
    for (double t : t_grid(config, problem)) {
      for (const auto& w : weight_grid(config, problem)) {
        const WeightedGP wgp = scalarize(problem, w, t);
        out << "t=" << format_number(t, config.precision) << " w=" << weights_text(w, config.precision)
            << " terms=" << wgp.total_term_count() << " vars=" << wgp.num_variables()
            << " DoD=" << degree_of_difficulty(wgp.total_term_count(), wgp.num_variables()) << "\n";
      }
    }
  }
  if (dod < 0) {
    err << "NegativeDoD: degree of difficulty " << dod << " is negative\n";
    return kExitInfeasible;
  }
  return kExitOk;
}

void print_solution(std::ostream& out, const PointSolve& s, const Problem& problem, int sig) {
  const auto& ds = s.dual_solution;
  const auto& ps = s.primal;
  const double zero = 10.0 * SolverOptions{}.barrier_floor;
  auto shown = [&](double v) { return format_number(std::abs(v) < zero ? 0.0 : v, sig); };

  out << "t=" << format_number(s.wgp.t, sig) << " w=" << weights_text(s.wgp.weights, sig)
      << " terms=" << s.wgp.total_term_count() << " vars=" << s.wgp.num_variables()
      << " DoD=" << s.dual.degree_of_difficulty() << "\n";
  out << "dual:\n";
  for (std::size_t t = 0; t < s.dual.objective_terms; ++t) {
    out << "  w0_" << t + 1 << " = " << shown(ds.w(static_cast<Eigen::Index>(t))) << "\n";
  }
  for (std::size_t i = 0; i < s.dual.blocks.size(); ++i) {
    const auto& blk = s.dual.blocks[i];
    for (std::size_t t = 0; t < blk.size; ++t) {
      out << "  w" << i + 1 << "_" << t + 1 << " = "
          << shown(ds.w(static_cast<Eigen::Index>(blk.start + t))) << "\n";
    }
  }
  for (Eigen::Index i = 0; i < ds.lambda.size(); ++i) {
    out << "  lambda" << i + 1 << " = " << shown(ds.lambda(i)) << "\n";
  }
  out << "  v = " << format_number(ds.value(), sig) << "  (iterations " << ds.iterations
      << ", kkt " << format_number(ds.kkt_residual, 3) << (ds.degenerate ? ", degenerate" : "")
      << ")\n";
  out << "primal:\n";
  for (Eigen::Index j = 0; j < ps.x.size(); ++j) {
    out << "  " << problem.variables()[static_cast<std::size_t>(j)] << " = "
        << format_number(ps.x(j), sig) << "\n";
  }
  for (std::size_t k = 0; k < ps.per_objective.size(); ++k) {
    out << "  f" << k + 1 << " = " << format_number(ps.per_objective[k], sig) << "\n";
  }
  out << "  Z = " << format_number(ps.z_objective, sig) << "\n";
  out << "  gap = " << format_number(ps.duality_gap_rel, 3) << "\n";
}

int solve(const RunConfig& config, const Problem& problem, std::ostream& out, std::ostream& err) {
  const auto ts = t_grid(config, problem);
  const auto ws = weight_grid(config, problem);
  if (config.format == Format::Csv) {
    SweepReport report;
    int code = kExitOk;
    for (double t : ts) {
      for (const auto& w : ws) {
        SweepRow row(t, w);
        try {
          PointSolve s = solve_point(problem, w, t, config.solver);
          row.dual = std::move(s.dual_solution);
          row.primal = std::move(s.primal);
          row.converged = true;
        } catch (const Error& e) {
          err << e.what() << "\n";
          code = std::max(code, exit_code(e.kind()));
        }
        report.rows.push_back(std::move(row));
      }
    }
    write_sweep_csv(out, report, problem.num_variables(), problem.num_objectives(), config.precision);
    return code;
  }
  bool first = true;
  for (double t : ts) {
    for (const auto& w : ws) {
      if (!first) out << "\n";
      first = false;
      print_solution(out, solve_point(problem, w, t, config.solver), problem, config.precision);
    }
  }
  return kExitOk;
}

int run_sweep(const RunConfig& config, const Problem& problem, std::ostream& out, std::ostream& err) {
  const SweepReport report =
      sweep(problem, weight_grid(config, problem), t_grid(config, problem), config.solver);
  if (config.format == Format::Csv) {
    write_sweep_csv(out, report, problem.num_variables(), problem.num_objectives(), config.precision);
  } else {
    write_sweep_table(out, report, problem.num_variables(), problem.num_objectives(), config.precision);
  }
  int code = kExitOk;
  for (const auto& row : report.rows) {
    if (row.error_kind) {
      err << "t=" << format_number(row.t) << " w=" << weights_text(row.weights, 7) << ": "
          << row.error << "\n";
      code = std::max(code, exit_code(*row.error_kind));
    }
  }
  return code;
}

int oracle(const RunConfig& config, const Problem& problem, std::ostream& out, std::ostream& err) {
  int code = kExitOk;
  const int sig = config.precision;
  for (double t : t_grid(config, problem)) {
    for (const auto& w : weight_grid(config, problem)) {
      const WeightedGP wgp = scalarize(problem, w, t);
      const OracleResult grid = brute_force_min(wgp, config.oracle);
      out << "t=" << format_number(t, sig) << " w=" << weights_text(w, sig) << "\n";
      out << "  oracle Z = " << format_number(grid.z, sig) << " at x = (";
      for (Eigen::Index j = 0; j < grid.x.size(); ++j) out << (j ? ", " : "") << format_number(grid.x(j), sig);
      out << ")  [" << grid.evaluated << " grid points]\n";
      try {
        const PointSolve s = solve_point(problem, w, t, config.solver);
        const double rel = std::abs(s.primal.z_objective - grid.z) / grid.z;
        out << "  dual   Z = " << format_number(s.primal.z_objective, sig)
            << "  relative difference " << format_number(rel, 3)
            << (rel <= 0.01 ? "  agree" : "  DISAGREE") << "\n";
      } catch (const Error& e) {
        err << e.what() << "\n";
        code = std::max(code, exit_code(e.kind()));
      }
    }
  }
  return code;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::ofstream file;
  std::ostream* sink = &out;
  if (config.out_path) {
    file.open(*config.out_path);
    if (!file) {
      err << "cannot open output file " << *config.out_path << "\n";
      return kExitInput;
    }
    sink = &file;
  }
  try {
    const Problem problem = parse_problem(config.problem_path);
    switch (config.command) {
      case Command::Analyze: return analyze(config, problem, *sink, err);
      case Command::Solve: return solve(config, problem, *sink, err);
      case Command::Sweep: return run_sweep(config, problem, *sink, err);
      case Command::Oracle: return oracle(config, problem, *sink, err);
    }
  } catch (const Error& e) {
    err << e.what() << "\n";
    return exit_code(e.kind());
  }
  return kExitOk;
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weighted-sum multi-objective geometric programming solver"};
  app.require_subcommand(1);

  RunConfig config;
  std::vector<std::string> t_args;
  std::vector<std::string> weight_args;
  std::string format = "table";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("problem", config.problem_path, "Problem file (JSON)")->required();
    sub->add_option("--t", t_args, "Parameter values: list a,b,c or range lo:hi:step (repeatable)")
        ->allow_extra_args(false);
    sub->add_option("--weights", weight_args, "Weight vector w1,...,wp (repeatable)")
        ->allow_extra_args(false);
    sub->add_option("--w1", config.w1_range, "Range lo:hi:step for w1 (two objectives)");
    sub->add_flag("--complete-weights", config.complete_weights, "Fill w2 = 1 - w1 for --w1 ranges");
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "csv"}));
    sub->add_option("--precision", config.precision, "Significant digits")->check(CLI::Range(1, 17));
    sub->add_option("--out", config.out_path, "Write output to FILE instead of stdout");
    sub->add_option("--tol-kkt", config.solver.tol_kkt, "KKT tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--tol-feas", config.solver.tol_feas, "Feasibility tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--max-iters", config.solver.max_iters, "Dual ascent iteration cap")->check(CLI::PositiveNumber);
  };
  auto* analyze_cmd = app.add_subcommand("analyze", "Report sizes and degree of difficulty");
  auto* solve_cmd = app.add_subcommand("solve", "Solve the weighted problem at each (t, w)");
  auto* sweep_cmd = app.add_subcommand("sweep", "Solve a grid of (t, w) points and tabulate");
  auto* oracle_cmd = app.add_subcommand("oracle", "Compare the dual pipeline against a grid search");
  for (auto* sub : {analyze_cmd, solve_cmd, sweep_cmd, oracle_cmd}) add_common(sub);
  oracle_cmd->add_option("--grid", config.oracle.resolution, "Grid points per axis")->check(CLI::Range(3, 1000));
  oracle_cmd->add_option("--passes", config.oracle.refinements, "Refinement passes")->check(CLI::Range(0, 20));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e2;
    const int rc = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return rc == 0 ? kExitOk : kExitInput;
  }

  if (*analyze_cmd) config.command = Command::Analyze;
  if (*solve_cmd) config.command = Command::Solve;
  if (*sweep_cmd) config.command = Command::Sweep;
  if (*oracle_cmd) config.command = Command::Oracle;
  config.format = format == "csv" ? Format::Csv : Format::Table;

  try {
    for (const auto& t : t_args) {
      const auto ts = parse_number_list(t);
      config.ts.insert(config.ts.end(), ts.begin(), ts.end());
    }
    for (const auto& w : weight_args) config.weights.push_back(parse_number_list(w));
  } catch (const Error& e) {
    err << e.what() << "\n";
    return kExitInput;
  }
  return run(config, out, err);
}

}  // namespace mogp::cli
