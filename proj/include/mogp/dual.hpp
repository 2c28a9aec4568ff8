#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "mogp/scalarizer.hpp"

namespace mogp {

/// Column range [start, start + size) of one constraint's terms.
struct Block {
  std::size_t start = 0;
  std::size_t size = 0;
};

/// Dual of a weighted GP. Columns are the objective terms in (k, t) order
/// followed by each constraint's terms in constraint order.
///
///   maximize  sum_t w_t (logc_t - log w_t) + sum_i lambda_i log lambda_i
///   s.t.      A w = b,  w >= 0
///
/// Row 0 of A is normality (1 on objective columns), rows 1..n are
/// orthogonality (the exponent of variable j in each term); b = e_0.
struct DualProgram {
  Eigen::MatrixXd A;
  Eigen::VectorXd b;
  Eigen::VectorXd logc;
  std::size_t objective_terms = 0;
  std::vector<Block> blocks;

  std::size_t num_terms() const noexcept { return static_cast<std::size_t>(A.cols()); }
  std::size_t num_variables() const noexcept { return static_cast<std::size_t>(A.rows()) - 1; }
  int degree_of_difficulty() const noexcept;
};

struct DualResiduals {
  double normality = 0.0;
  Eigen::VectorXd orthogonality;

  double max_abs() const noexcept;
};

DualProgram build_dual(const WeightedGP& wgp);

/// lambda_i = sum of w over block i.
Eigen::VectorXd block_sums(const DualProgram& dp, const Eigen::VectorXd& w);

/// Log of the dual function with 0 log 0 = 0; defined on the whole nonnegative orthant.
double dual_log_objective(const DualProgram& dp, const Eigen::VectorXd& w);

/// Closed-form gradient. Throws DomainError if some w_t <= 0.
Eigen::VectorXd dual_gradient(const DualProgram& dp, const Eigen::VectorXd& w);

/// Hessian of the log dual; w must be strictly positive.
Eigen::MatrixXd dual_hessian(const DualProgram& dp, const Eigen::VectorXd& w);

/// A w - b split into the normality row and the orthogonality rows.
DualResiduals residuals(const DualProgram& dp, const Eigen::VectorXd& w);

}  // namespace mogp
