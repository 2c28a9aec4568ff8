#pragma once

#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "mogp/scalarizer.hpp"

namespace mogp {

/// Constraint slack check at a point: feasible iff max(lhs_i(x) - 1) <= 1e-8.
struct Feasibility {
  bool feasible = true;
  /// Max over normalized constraints of lhs - 1; -inf when there are none.
  double max_violation = 0.0;
};

inline constexpr double kFeasibilityTolerance = 1e-8;

Feasibility check_feasible(const Problem& problem, double t, std::span<const double> x);
Feasibility check_feasible(const WeightedGP& wgp, std::span<const double> x);

struct OracleOptions {
  /// Per-variable [lo, hi] in log10(x); empty means [-3, 3] for every variable.
  std::vector<std::pair<double, double>> log10_box;
  int resolution = 25;
  int refinements = 3;
  double shrink = 5.0;
};

struct OracleResult {
  Eigen::VectorXd x;
  double z = 0.0;
  long long evaluated = 0;
};

/// Exhaustive log-space grid search over feasible points, refined around the
/// incumbent. Independent of the dual machinery. Limited to n <= 5.
OracleResult brute_force_min(const WeightedGP& wgp, const OracleOptions& opts = {});

}  // namespace mogp
