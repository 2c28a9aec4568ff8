#pragma once

#include <vector>

#include <Eigen/Dense>

#include "mogp/dual_solver.hpp"

namespace mogp {

struct PrimalSolution {
  Eigen::VectorXd x;
  double z_objective = 0.0;          // weighted objective at x
  std::vector<double> per_objective;  // f_k(x), unweighted
  double max_constraint_violation = 0.0;
  double duality_gap_rel = 0.0;
  double lsq_residual = 0.0;
};

/// Dual weights below this contribute no equation to primal recovery.
inline constexpr double kRecoveryThreshold = 1e-7;

/// Recovery fails with DomainError when some |log x_j| exceeds this.
inline constexpr double kMaxLogX = 700.0;

/// Solves the log-linear primal-dual relations in log x by least squares.
/// Throws NonConverged for an unconverged dual and RankDeficient when the
/// retained equations do not determine every variable.
PrimalSolution recover_primal(const DualProgram& dp, const DualSolution& ds, const WeightedGP& wgp);

/// |Z(x) - v(w)| / max(1, |v(w)|).
double duality_gap(const WeightedGP& wgp, const DualSolution& ds, const Eigen::VectorXd& x);

}  // namespace mogp
