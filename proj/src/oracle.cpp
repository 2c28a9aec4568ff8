#include "mogp/oracle.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "mogp/error.hpp"

namespace mogp {

namespace {

Feasibility check(const std::vector<Constraint>& constraints, double t, std::span<const double> x) {
  Feasibility out;
  out.max_violation = -std::numeric_limits<double>::infinity();
  for (const auto& c : constraints) {
    out.max_violation = std::max(out.max_violation, evaluate(c.lhs, t, x) / c.bound - 1.0);
  }
  out.feasible = out.max_violation <= kFeasibilityTolerance;
  return out;
}

// Log-space term data: log(term) = logc + sum_j a_j * ln(10) * u_j.
struct LogTerms {
  Eigen::VectorXd logc;
  Eigen::MatrixXd a;  // terms x variables, premultiplied by ln 10
};

LogTerms log_terms(const Posynomial& p, std::size_t n) {
  LogTerms out{Eigen::VectorXd(static_cast<Eigen::Index>(p.size())),
               Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(p.size()), static_cast<Eigen::Index>(n))};
  for (std::size_t t = 0; t < p.size(); ++t) {
    const auto& term = p.terms()[t];
    out.logc(static_cast<Eigen::Index>(t)) = std::log(term.coeff.coeffs().front());
    for (const auto& [var, a] : term.exponents) {
      out.a(static_cast<Eigen::Index>(t), static_cast<Eigen::Index>(var)) = a * std::numbers::ln10;
    }
  }
  return out;
}

double sum_exp(const LogTerms& lt, const Eigen::VectorXd& u) {
  return (lt.logc + lt.a * u).array().exp().sum();
}

}  // namespace

Feasibility check_feasible(const Problem& problem, double t, std::span<const double> x) {
  return check(problem.constraints(), t, x);
}

Feasibility check_feasible(const WeightedGP& wgp, std::span<const double> x) {
  return check(wgp.constraints, wgp.t, x);
}

OracleResult brute_force_min(const WeightedGP& wgp, const OracleOptions& opts) {
  const std::size_t n = wgp.num_variables();
  if (n > 5) throw Error(ErrorKind::DomainError, "grid oracle is limited to n <= 5");
  if (opts.resolution < 3) throw Error(ErrorKind::ValidationError, "oracle resolution must be >= 3");
  if (!opts.log10_box.empty() && opts.log10_box.size() != n) {
    throw Error(ErrorKind::ValidationError, "oracle box needs one interval per variable");
  }

  const LogTerms objective = log_terms(wgp.objective, n);
  std::vector<LogTerms> constraints;
  for (const auto& c : wgp.constraints) constraints.push_back(log_terms(c.lhs, n));

  const auto dim = static_cast<Eigen::Index>(n);
  Eigen::VectorXd center(dim), half(dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    const auto [lo, hi] = opts.log10_box.empty() ? std::pair{-3.0, 3.0}
                                                 : opts.log10_box[static_cast<std::size_t>(j)];
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(hi > lo)) {
      throw Error(ErrorKind::ValidationError, "oracle box bounds must be finite with lo < hi");
    }
    center(j) = 0.5 * (lo + hi);
    half(j) = 0.5 * (hi - lo);
  }

  OracleResult best;
  best.z = std::numeric_limits<double>::infinity();
  Eigen::VectorXd best_u;
  const int res = opts.resolution;

  for (int pass = 0; pass <= opts.refinements; ++pass) {
    std::vector<int> idx(n, 0);
    Eigen::VectorXd u(dim);
    while (true) {
      for (Eigen::Index j = 0; j < dim; ++j) {
        u(j) = center(j) - half(j) + 2.0 * half(j) * idx[static_cast<std::size_t>(j)] / (res - 1);
      }
      ++best.evaluated;
      bool feasible = true;
      for (const auto& c : constraints) {
        if (sum_exp(c, u) > 1.0 + 1e-9) {
          feasible = false;
          break;
        }
      }
      if (feasible) {
        const double z = sum_exp(objective, u);
        if (z < best.z) {
          best.z = z;
          best_u = u;
        }
      }
      std::size_t j = 0;
      while (j < n && ++idx[j] == res) idx[j++] = 0;
      if (j == n) break;
    }
    if (best_u.size() == 0) {
      throw Error(ErrorKind::NoFeasiblePoint, "no feasible grid point; widen the search box");
    }
    center = best_u;
    half /= opts.shrink;
  }

  best.x = (best_u * std::numbers::ln10).array().exp();
  return best;
}

}  // namespace mogp
