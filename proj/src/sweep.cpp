#include "mogp/sweep.hpp"

#include <algorithm>

#include "mogp/error.hpp"

namespace mogp {

PointSolve solve_point(const Problem& problem, const WeightVector& w, double t,
                       const SolverOptions& opts) {
  WeightedGP wgp = scalarize(problem, w, t);
  DualProgram dp = build_dual(wgp);
  DualSolution ds = solve_dual(dp, opts);
  if (!ds.converged) {
    throw Error(ErrorKind::MaxIterations,
                "dual ascent stopped after " + std::to_string(ds.iterations) +
                    " iterations with KKT residual " + std::to_string(ds.kkt_residual));
  }
  PrimalSolution ps = recover_primal(dp, ds, wgp);
  return {std::move(wgp), std::move(dp), std::move(ds), std::move(ps)};
}

SweepReport sweep(const Problem& problem, std::vector<WeightVector> weights, std::vector<double> ts,
                  const SolverOptions& opts) {
  if (weights.empty() || ts.empty()) throw Error(ErrorKind::ValidationError, "sweep grid is empty");
  for (const auto& w : weights) {
    if (w.size() != problem.num_objectives()) {
      throw Error(ErrorKind::ValidationError, "weight vector length does not match objective count");
    }
  }
  std::stable_sort(ts.begin(), ts.end());
  std::stable_sort(weights.begin(), weights.end());

  SweepReport report;
  report.rows.reserve(ts.size() * weights.size());
  for (double t : ts) {
    for (const auto& w : weights) {
      SweepRow row(t, w);
      try {
        WeightedGP wgp = scalarize(problem, w, t);
        const DualProgram dp = build_dual(wgp);
        DualSolution ds = solve_dual(dp, opts);
        if (ds.converged) {
          row.primal = recover_primal(dp, ds, wgp);
          row.converged = true;
        } else {
          row.error_kind = ErrorKind::MaxIterations;
          row.error = "dual ascent did not converge";
        }
        row.dual = std::move(ds);
      } catch (const Error& e) {
        row.converged = false;
        row.error_kind = e.kind();
        row.error = e.what();
      }
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

}  // namespace mogp
