#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mogp/error.hpp"
#include "mogp/primal.hpp"

namespace mogp {

/// Everything produced by one scalarize -> dual -> solve -> recover pass.
struct PointSolve {
  WeightedGP wgp;
  DualProgram dual;
  DualSolution dual_solution;
  PrimalSolution primal;
};

/// Throws on any failure along the pipeline.
PointSolve solve_point(const Problem& problem, const WeightVector& w, double t,
                       const SolverOptions& opts = {});

struct SweepRow {
  SweepRow(double t_, WeightVector w) : t(t_), weights(std::move(w)) {}

  double t = 0.0;
  WeightVector weights;
  std::optional<DualSolution> dual;
  std::optional<PrimalSolution> primal;
  bool converged = false;
  std::optional<ErrorKind> error_kind;
  std::string error;
};

/// Rows ordered lexicographically by (t, weights).
struct SweepReport {
  std::vector<SweepRow> rows;
};

/// Solves every (t, w) combination. Per-point failures are recorded in the
/// row; only malformed grids throw.
SweepReport sweep(const Problem& problem, std::vector<WeightVector> weights, std::vector<double> ts,
                  const SolverOptions& opts = {});

}  // namespace mogp
