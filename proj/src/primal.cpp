#include "mogp/primal.hpp"

#include <cmath>
#include <span>

#include "mogp/error.hpp"

namespace mogp {

namespace {

std::span<const double> as_span(const Eigen::VectorXd& x) {
  return {x.data(), static_cast<std::size_t>(x.size())};
}

}  // namespace

double duality_gap(const WeightedGP& wgp, const DualSolution& ds, const Eigen::VectorXd& x) {
  const double z = evaluate_weighted(wgp, as_span(x));
  const double v = ds.value();
  return std::abs(z - v) / std::max(1.0, std::abs(v));
}

PrimalSolution recover_primal(const DualProgram& dp, const DualSolution& ds, const WeightedGP& wgp) {
  if (!ds.converged) throw Error(ErrorKind::NonConverged, "primal recovery needs a converged dual");
  if (!std::isfinite(ds.log_v)) throw Error(ErrorKind::NonConverged, "dual value is not finite");

  const Eigen::Index n = static_cast<Eigen::Index>(dp.num_variables());
  std::vector<Eigen::Index> cols;
  std::vector<double> rhs;

  // Objective term t carries the share w_t of the optimum: c_t x^a_t = w_t v.
  for (Eigen::Index t = 0; t < static_cast<Eigen::Index>(dp.objective_terms); ++t) {
    if (ds.w(t) >= kRecoveryThreshold) {
      cols.push_back(t);
      rhs.push_back(std::log(ds.w(t)) + ds.log_v - dp.logc(t));
    }
  }
  // Active constraint i: c_t x^a_t = w_t / lambda_i.
  for (std::size_t i = 0; i < dp.blocks.size(); ++i) {
    const double lambda = ds.lambda(static_cast<Eigen::Index>(i));
    if (lambda < kRecoveryThreshold) continue;
    const auto& blk = dp.blocks[i];
    for (auto t = static_cast<Eigen::Index>(blk.start);
         t < static_cast<Eigen::Index>(blk.start + blk.size); ++t) {
      if (ds.w(t) >= kRecoveryThreshold) {
        cols.push_back(t);
        rhs.push_back(std::log(ds.w(t) / lambda) - dp.logc(t));
      }
    }
  }

  Eigen::MatrixXd E(static_cast<Eigen::Index>(cols.size()), n);
  Eigen::VectorXd r(static_cast<Eigen::Index>(cols.size()));
  for (std::size_t row = 0; row < cols.size(); ++row) {
    E.row(static_cast<Eigen::Index>(row)) = dp.A.col(cols[row]).tail(n).transpose();
    r(static_cast<Eigen::Index>(row)) = rhs[row];
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(E);
  if (E.rows() < n || qr.rank() < n) {
    throw Error(ErrorKind::RankDeficient,
                "only " + std::to_string(E.rows() == 0 ? 0 : qr.rank()) +
                    " independent primal-dual equations for " + std::to_string(n) + " variables");
  }
  const Eigen::VectorXd logx = qr.solve(r);

  PrimalSolution ps;
  ps.lsq_residual = (E * logx - r).cwiseAbs().maxCoeff();
  if (logx.cwiseAbs().maxCoeff() > kMaxLogX) {
    throw Error(ErrorKind::DomainError, "recovered point lies outside the floating-point range");
  }
  ps.x = logx.array().exp();
  const auto x = as_span(ps.x);
  ps.z_objective = evaluate_weighted(wgp, x);
  for (const auto& f : wgp.instantiated.objectives()) ps.per_objective.push_back(evaluate(f, wgp.t, x));
  for (const auto& c : wgp.constraints) {
    ps.max_constraint_violation = std::max(ps.max_constraint_violation, evaluate(c.lhs, wgp.t, x) - 1.0);
  }
  ps.duality_gap_rel = duality_gap(wgp, ds, ps.x);
  return ps;
}

}  // namespace mogp
