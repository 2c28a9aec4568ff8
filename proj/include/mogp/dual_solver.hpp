#pragma once

#include <vector>

#include <Eigen/Dense>

#include "mogp/dual.hpp"

namespace mogp {

struct SolverOptions {
  double tol_kkt = 1e-9;
  double tol_feas = 1e-10;
  int max_iters = 500;
  /// Iterates never drop below this; components under 10x are treated as zero.
  double barrier_floor = 1e-12;
};

struct DualSolution {
  Eigen::VectorXd w;
  Eigen::VectorXd lambda;
  double log_v = 0.0;
  double kkt_residual = 0.0;
  double feasibility = 0.0;  // max |A w - b|
  int iterations = 0;  // barrier and Newton steps together
  bool converged = false;
  bool degenerate = false;
  /// Log dual value when the Newton polish starts and after every step it accepts.
  std::vector<double> trace;

  double value() const;
};

/// Affine parameterization w = particular + basis * z of {A w = b}.
struct AffineSubspace {
  Eigen::VectorXd particular;
  Eigen::MatrixXd basis;  // orthonormal columns spanning null(A)
};

/// Throws InfeasibleDual when A w = b has no solution at all.
AffineSubspace dual_subspace(const DualProgram& dp, const SolverOptions& opts = {});

/// Strictly positive w with A w = b, found by a phase-one barrier method.
/// Throws InfeasibleDual when every solution has a zero or negative component.
Eigen::VectorXd find_feasible_interior(const DualProgram& dp, const SolverOptions& opts = {});

/// The unique dual point of a zero-degree-of-difficulty program.
/// Throws SingularSystem when T != n + 1 or A is singular; InfeasibleDual
/// when the solution has a negative component.
DualSolution solve_dod_zero(const DualProgram& dp, const SolverOptions& opts = {});

/// Maximizes the log dual over {A w = b, w >= 0} in the null space of A: a
/// short log-barrier path, then projected Newton ascent with vanishing
/// components pinned at the floor. Non-convergence is reported through
/// DualSolution::converged rather than thrown.
DualSolution maximize_dual(const DualProgram& dp, const SolverOptions& opts = {});
/// Same, from a caller-supplied strictly positive feasible start.
DualSolution maximize_dual(const DualProgram& dp, const Eigen::VectorXd& start,
                           const SolverOptions& opts = {});

/// Dispatches on the degree of difficulty; negative raises NegativeDoD.
DualSolution solve_dual(const DualProgram& dp, const SolverOptions& opts = {});

/// Max-norm of the reduced gradient g - A^T y. Components below
/// `zero_threshold` may carry a negative reduced gradient.
double kkt_residual(const DualProgram& dp, const Eigen::VectorXd& w, double zero_threshold);

}  // namespace mogp
