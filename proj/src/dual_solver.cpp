#include "mogp/dual_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mogp/error.hpp"

namespace mogp {

double DualSolution::value() const { return std::exp(log_v); }

AffineSubspace dual_subspace(const DualProgram& dp, const SolverOptions& opts) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(dp.A, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::Index rank = svd.rank();
  AffineSubspace sub;
  sub.particular = svd.solve(dp.b);
  const double inconsistency = (dp.A * sub.particular - dp.b).cwiseAbs().maxCoeff();
  if (inconsistency > std::max(opts.tol_feas, 1e-12 * (1.0 + dp.A.cwiseAbs().maxCoeff()))) {
    throw Error(ErrorKind::InfeasibleDual, "normality/orthogonality system has no solution");
  }
  sub.basis = svd.matrixV().rightCols(dp.A.cols() - rank);
  return sub;
}

namespace {

Eigen::VectorXd safe_gradient(const DualProgram& dp, const Eigen::VectorXd& w) {
  const Eigen::VectorXd lambda = block_sums(dp, w);
  Eigen::VectorXd g(w.size());
  for (Eigen::Index t = 0; t < w.size(); ++t) {
    g(t) = w(t) > 0.0 ? dp.logc(t) - std::log(w(t)) : std::numeric_limits<double>::quiet_NaN();
  }
  g.head(static_cast<Eigen::Index>(dp.objective_terms)).array() -= 1.0;
  for (std::size_t i = 0; i < dp.blocks.size(); ++i) {
    const auto& blk = dp.blocks[i];
    const double li = lambda(static_cast<Eigen::Index>(i));
    g.segment(static_cast<Eigen::Index>(blk.start), static_cast<Eigen::Index>(blk.size)).array() +=
        li > 0.0 ? std::log(li) : std::numeric_limits<double>::quiet_NaN();
  }
  return g;
}

// Orthonormal basis of {y : rows * y = 0}.
Eigen::MatrixXd kernel(const Eigen::MatrixXd& rows, Eigen::Index dim) {
  if (rows.rows() == 0) return Eigen::MatrixXd::Identity(dim, dim);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(rows, Eigen::ComputeFullV);
  return svd.matrixV().rightCols(dim - svd.rank());
}

Eigen::MatrixXd select_rows(const Eigen::MatrixXd& m, const std::vector<Eigen::Index>& rows) {
  Eigen::MatrixXd out(static_cast<Eigen::Index>(rows.size()), m.cols());
  for (std::size_t r = 0; r < rows.size(); ++r) out.row(static_cast<Eigen::Index>(r)) = m.row(rows[r]);
  return out;
}

// (x + d) log(x + d) - x log x without cancellation.
double xlogx_change(double x, double d) {
  const double y = x + d;
  if (x <= 0.0) return y > 0.0 ? y * std::log(y) : 0.0;
  if (y <= 0.0) return -x * std::log(x);
  return d * std::log(y) + x * std::log1p(d / x);
}

// log v(to) - log v(from), accurate when the two points are close.
double objective_change(const DualProgram& dp, const Eigen::VectorXd& from, const Eigen::VectorXd& to) {
  const Eigen::VectorXd step = to - from;
  double change = 0.0;
  for (Eigen::Index t = 0; t < from.size(); ++t) {
    change += step(t) * dp.logc(t) - xlogx_change(from(t), step(t));
  }
  const Eigen::VectorXd lambda = block_sums(dp, from);
  const Eigen::VectorXd dlambda = block_sums(dp, step);
  for (Eigen::Index i = 0; i < lambda.size(); ++i) change += xlogx_change(lambda(i), dlambda(i));
  return change;
}

// A constraint's terms vanish together, so a whole block counts as zero once
// its sum is negligible.
constexpr double kBlockZeroFactor = 10.0;

bool block_at_zero(const Block& blk, const Eigen::VectorXd& w, double zero_threshold) {
  const double lambda =
      w.segment(static_cast<Eigen::Index>(blk.start), static_cast<Eigen::Index>(blk.size)).sum();
  return lambda < kBlockZeroFactor * zero_threshold * static_cast<double>(blk.size);
}

std::vector<bool> at_zero(const DualProgram& dp, const Eigen::VectorXd& w, double zero_threshold) {
  std::vector<bool> zero(static_cast<std::size_t>(w.size()));
  for (Eigen::Index t = 0; t < w.size(); ++t) zero[static_cast<std::size_t>(t)] = w(t) < zero_threshold;
  for (const auto& blk : dp.blocks) {
    if (!block_at_zero(blk, w, zero_threshold)) continue;
    for (std::size_t t = blk.start; t < blk.start + blk.size; ++t) zero[t] = true;
  }
  return zero;
}

// Multipliers y fitted to g by least squares over the components not at zero.
Eigen::VectorXd multipliers(const DualProgram& dp, const Eigen::VectorXd& g, const Eigen::VectorXd& w,
                            double zero_threshold) {
  const std::vector<bool> zero = at_zero(dp, w, zero_threshold);
  std::vector<Eigen::Index> free;
  for (Eigen::Index t = 0; t < w.size(); ++t) {
    if (!zero[static_cast<std::size_t>(t)] && std::isfinite(g(t))) free.push_back(t);
  }
  if (free.empty()) return Eigen::VectorXd::Zero(dp.A.rows());
  const Eigen::MatrixXd At = select_rows(dp.A.transpose(), free);
  Eigen::VectorXd gf(static_cast<Eigen::Index>(free.size()));
  for (std::size_t r = 0; r < free.size(); ++r) gf(static_cast<Eigen::Index>(r)) = g(free[r]);
  return At.completeOrthogonalDecomposition().solve(gf);
}

// Path following on f + mu * sum(log w) with mu shrinking tenfold per level.
// Moves components that vanish at the optimum, and blocks that must
// re-enter, close to their final state before the pinned Newton polish.
constexpr double kBarrierStart = 1.0;
constexpr double kBarrierEnd = 1e-9;

void follow_central_path(const DualProgram& dp, const Eigen::MatrixXd& N, Eigen::VectorXd& w,
                         const SolverOptions& opts, int& iterations) {
  for (double mu = kBarrierStart; mu >= kBarrierEnd; mu *= 0.1) {
    for (int inner = 0; inner < 50 && iterations < opts.max_iters; ++inner) {
      const Eigen::VectorXd inv = w.cwiseInverse();
      const Eigen::VectorXd g = dual_gradient(dp, w) + mu * inv;
      Eigen::MatrixXd H = dual_hessian(dp, w);
      H.diagonal() -= mu * inv.cwiseProduct(inv);
      const Eigen::MatrixXd negH = -(N.transpose() * H * N);
      const Eigen::VectorXd dw = N * negH.ldlt().solve(N.transpose() * g);
      const double decrement = g.dot(dw);
      if (!(decrement > 1e-2 * mu)) break;

      double alpha = 1.0;
      for (Eigen::Index t = 0; t < w.size(); ++t) {
        if (dw(t) < 0.0) alpha = std::min(alpha, 0.99 * w(t) / -dw(t));
      }
      const double alpha_min = alpha * 1e-10;
      bool accepted = false;
      Eigen::VectorXd trial;
      for (; alpha > alpha_min; alpha *= 0.5) {
        trial = w + alpha * dw;
        if (!(trial.minCoeff() > 0.0)) continue;
        double change = objective_change(dp, w, trial);
        for (Eigen::Index t = 0; t < w.size(); ++t) change += mu * std::log1p(alpha * dw(t) / w(t));
        if (change >= 1e-4 * alpha * decrement) {
          accepted = true;
          break;
        }
      }
      if (!accepted) break;
      w = std::move(trial);
      ++iterations;
    }
  }
}

DualSolution finish(const DualProgram& dp, Eigen::VectorXd w, double zero_threshold) {
  DualSolution sol;
  sol.lambda = block_sums(dp, w);
  sol.log_v = dual_log_objective(dp, w);
  sol.kkt_residual = kkt_residual(dp, w, zero_threshold);
  sol.feasibility = (dp.A * w - dp.b).cwiseAbs().maxCoeff();
  sol.w = std::move(w);
  return sol;
}

DualSolution unique_point(const DualProgram& dp, Eigen::VectorXd w, const SolverOptions& opts) {
  if (w.minCoeff() < -opts.tol_feas) {
    throw Error(ErrorKind::InfeasibleDual, "the unique dual solution has a negative component");
  }
  w = w.cwiseMax(0.0);
  DualSolution sol = finish(dp, std::move(w), 10.0 * opts.barrier_floor);
  sol.kkt_residual = 0.0;  // a single feasible point is trivially optimal
  sol.converged = sol.feasibility <= std::max(opts.tol_feas, 1e-12);
  sol.trace = {sol.log_v};
  return sol;
}

}  // namespace

double kkt_residual(const DualProgram& dp, const Eigen::VectorXd& w, double zero_threshold) {
  const Eigen::VectorXd g = safe_gradient(dp, w);
  const Eigen::VectorXd reduced = g - dp.A.transpose() * multipliers(dp, g, w, zero_threshold);
  const std::vector<bool> zero = at_zero(dp, w, zero_threshold);
  double res = 0.0;
  for (Eigen::Index t = 0; t < w.size(); ++t) {
    if (!std::isfinite(reduced(t))) continue;
    res = std::max(res, zero[static_cast<std::size_t>(t)] ? std::max(reduced(t), 0.0) : std::abs(reduced(t)));
  }
  return res;
}

Eigen::VectorXd find_feasible_interior(const DualProgram& dp, const SolverOptions& opts) {
  const AffineSubspace sub = dual_subspace(dp, opts);
  const Eigen::VectorXd& w0 = sub.particular;
  const Eigen::MatrixXd& N = sub.basis;
  const Eigen::Index d = N.cols();
  const auto T = static_cast<double>(w0.size());

  if (d == 0) {
    if (w0.minCoeff() > 0.0) return w0;
    throw Error(ErrorKind::InfeasibleDual, "the only dual solution is not strictly positive");
  }

  // Minimize tau*s + rho/2 |z|^2 - sum log(w(z) + s): as tau grows, s tends to
  // -max_z min_t w_t(z), which is negative exactly when a strictly positive point exists.
  constexpr double kRho = 1.0;
  Eigen::VectorXd z = Eigen::VectorXd::Zero(d);
  double s = std::max(0.0, -w0.minCoeff()) + 1.0;
  double tau = 1.0;

  auto phase_one = [&](const Eigen::VectorXd& zz, double ss) {
    const Eigen::ArrayXd r = (w0 + N * zz).array() + ss;
    if ((r <= 0.0).any()) return std::numeric_limits<double>::infinity();
    return tau * ss + 0.5 * kRho * zz.squaredNorm() - r.log().sum();
  };

  for (int outer = 0; outer < 80; ++outer) {
    for (int inner = 0; inner < 100; ++inner) {
      const Eigen::VectorXd r = (w0 + N * z).array() + s;
      const Eigen::VectorXd inv = r.cwiseInverse();
      const Eigen::VectorXd inv2 = inv.cwiseProduct(inv);

      Eigen::VectorXd grad(d + 1);
      grad.head(d) = kRho * z - N.transpose() * inv;
      grad(d) = tau - inv.sum();
      Eigen::MatrixXd H(d + 1, d + 1);
      H.topLeftCorner(d, d) = N.transpose() * inv2.asDiagonal() * N;
      H.topLeftCorner(d, d).diagonal().array() += kRho;
      H.topRightCorner(d, 1) = N.transpose() * inv2;
      H.bottomLeftCorner(1, d) = H.topRightCorner(d, 1).transpose();
      H(d, d) = inv2.sum();

      const Eigen::VectorXd step = -H.ldlt().solve(grad);
      const double slope = grad.dot(step);
      if (-slope / 2.0 < 1e-12) break;

      const Eigen::VectorXd dr = (N * step.head(d)).array() + step(d);
      double alpha = 1.0;
      for (Eigen::Index t = 0; t < dr.size(); ++t) {
        if (dr(t) < 0.0) alpha = std::min(alpha, 0.99 * r(t) / -dr(t));
      }
      const double f0 = phase_one(z, s);
      while (alpha > 1e-14 &&
             phase_one(z + alpha * step.head(d), s + alpha * step(d)) > f0 + 1e-4 * alpha * slope) {
        alpha *= 0.5;
      }
      if (alpha <= 1e-14) break;
      z += alpha * step.head(d);
      s += alpha * step(d);
      if (s < -1.0) return w0 + N * z;
    }
    const double gap = T / tau;
    if (s < 0.0 && gap <= 1e-3 * -s) break;
    if (gap < 1e-13) break;
    tau *= 10.0;
  }

  if (!(s < -opts.tol_feas)) {
    throw Error(ErrorKind::InfeasibleDual,
                "no strictly positive dual point satisfies normality and orthogonality");
  }
  return w0 + N * z;
}

DualSolution solve_dod_zero(const DualProgram& dp, const SolverOptions& opts) {
  if (dp.num_terms() != dp.num_variables() + 1) {
    throw Error(ErrorKind::SingularSystem, "exact dual solve requires T = n + 1, got T=" +
                                               std::to_string(dp.num_terms()) +
                                               ", n=" + std::to_string(dp.num_variables()));
  }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(dp.A);
  if (!lu.isInvertible()) {
    throw Error(ErrorKind::SingularSystem, "normality/orthogonality matrix is singular");
  }
  return unique_point(dp, lu.solve(dp.b), opts);
}

DualSolution maximize_dual(const DualProgram& dp, const SolverOptions& opts) {
  const AffineSubspace sub = dual_subspace(dp, opts);
  if (sub.basis.cols() == 0) return unique_point(dp, sub.particular, opts);
  return maximize_dual(dp, find_feasible_interior(dp, opts), opts);
}

DualSolution maximize_dual(const DualProgram& dp, const Eigen::VectorXd& start,
                           const SolverOptions& opts) {
  const AffineSubspace sub = dual_subspace(dp, opts);
  const Eigen::VectorXd& w0 = sub.particular;
  const Eigen::MatrixXd& N = sub.basis;
  const Eigen::Index d = N.cols();
  const double floor = opts.barrier_floor;
  const double zero_threshold = 10.0 * floor;

  if (start.size() != w0.size() || !(start.minCoeff() > 0.0)) {
    throw Error(ErrorKind::DomainError, "dual start must be strictly positive with T entries");
  }
  Eigen::VectorXd w = w0 + N * (N.transpose() * (start - w0));
  if ((w - start).cwiseAbs().maxCoeff() > 1e-8 || !(w.minCoeff() > 0.0)) {
    throw Error(ErrorKind::DomainError, "dual start does not satisfy A w = b");
  }

  int iterations = 0;
  follow_central_path(dp, N, w, opts, iterations);

  double f = dual_log_objective(dp, w);
  std::vector<double> trace{f};
  bool converged = false;
  Eigen::MatrixXd B = N;

  while (true) {
    if (kkt_residual(dp, w, zero_threshold) <= opts.tol_kkt * std::max(1.0, std::abs(f))) {
      converged = true;
      break;
    }
    if (iterations >= opts.max_iters) break;

    const Eigen::VectorXd g = dual_gradient(dp, w);
    const Eigen::MatrixXd H = dual_hessian(dp, w);
    const std::vector<bool> zero = at_zero(dp, w, zero_threshold);
    auto pin = [&](std::vector<Eigen::Index>& list, Eigen::Index t) {
      if (std::find(list.begin(), list.end(), t) != list.end()) return false;
      list.push_back(t);
      return true;
    };

    // Newton direction in the null space, with components sitting on the
    // floor held fixed whenever the step would push them lower.
    std::vector<Eigen::Index> pinned;
    Eigen::VectorXd dw;
    while (true) {
      const Eigen::MatrixXd M = kernel(select_rows(N, pinned), d);
      B = N * M;
      for (Eigen::Index t : pinned) B.row(t).setZero();
      if (M.cols() == 0) {
        dw = Eigen::VectorXd::Zero(w.size());
        break;
      }
      Eigen::MatrixXd negH = -(B.transpose() * H * B);
      const double delta = 1e-12 * std::max(1.0, negH.diagonal().cwiseAbs().maxCoeff());
      negH.diagonal().array() += delta;
      const Eigen::VectorXd dy = negH.ldlt().solve(B.transpose() * g);
      dw = B * dy;
      bool added = false;
      for (Eigen::Index t = 0; t < w.size(); ++t) {
        if (zero[static_cast<std::size_t>(t)] && dw(t) < 0.0) added = pin(pinned, t) || added;
      }
      for (const auto& blk : dp.blocks) {
        const auto start = static_cast<Eigen::Index>(blk.start);
        const auto size = static_cast<Eigen::Index>(blk.size);
        if (block_at_zero(blk, w, zero_threshold) && dw.segment(start, size).sum() < 0.0) {
          for (Eigen::Index t = start; t < start + size; ++t) added = pin(pinned, t) || added;
        }
      }
      if (!added) break;
    }

    double slope = g.dot(dw);
    const Eigen::VectorXd y = multipliers(dp, g, w, zero_threshold);
    const Eigen::VectorXd r = g - dp.A.transpose() * y;
    double violation = 0.0;
    for (Eigen::Index t : pinned) violation = std::max(violation, r(t));
    if (!(slope > 0.0) || slope < 1e-3 * violation * violation) {
      // Newton stalls when a zeroed block should re-enter; release every
      // floored component whose reduced gradient is positive and take a
      // projected gradient step instead. Small components that would cut
      // the step to almost nothing are held for this step.
      pinned.clear();
      for (Eigen::Index t = 0; t < w.size(); ++t) {
        if (zero[static_cast<std::size_t>(t)] && r(t) <= 0.0) pinned.push_back(t);
      }
      while (true) {
        const Eigen::MatrixXd M = kernel(select_rows(N, pinned), d);
        dw = N * (M * (M.transpose() * (N.transpose() * g)));
        for (Eigen::Index t : pinned) dw(t) = 0.0;
        bool added = false;
        for (Eigen::Index t = 0; t < w.size(); ++t) {
          if (dw(t) < 0.0 && 0.99 * (w(t) - floor) < 1e-3 * -dw(t)) added = pin(pinned, t) || added;
        }
        if (!added) break;
      }
      slope = g.dot(dw);
      if (!(slope > 0.0)) break;
    }

    double alpha = 1.0;
    for (Eigen::Index t = 0; t < w.size(); ++t) {
      if (dw(t) < 0.0 && std::find(pinned.begin(), pinned.end(), t) == pinned.end()) {
        alpha = std::min(alpha, 0.99 * (w(t) - floor) / -dw(t));
      }
    }
    double gain = 0.0;
    Eigen::VectorXd trial;
    bool accepted = false;
    const double alpha_min = alpha * 1e-16;
    for (; alpha > alpha_min; alpha *= 0.5) {
      trial = w + alpha * dw;
      if (!(trial.minCoeff() > 0.0)) continue;
      // Rounding leaves trial slightly off A w = b; drop that first-order effect.
      gain = objective_change(dp, w, trial) - y.dot(dp.A * (trial - w));
      if (gain >= 1e-4 * alpha * slope) {
        accepted = true;
        break;
      }
    }
    if (!accepted) break;

    w = std::move(trial);
    f += gain;
    trace.push_back(f);
    ++iterations;
  }

  DualSolution sol = finish(dp, std::move(w), zero_threshold);
  sol.iterations = iterations;
  sol.trace = std::move(trace);
  sol.converged = converged && sol.feasibility <= opts.tol_feas;

  if (B.cols() > 0) {
    const Eigen::MatrixXd negH = -(B.transpose() * dual_hessian(dp, sol.w) * B);
    const Eigen::VectorXd eig = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(negH).eigenvalues();
    const double top = eig.cwiseAbs().maxCoeff();
    sol.degenerate = top == 0.0 || eig.minCoeff() < 1e-10 * top;
  }
  return sol;
}

DualSolution solve_dual(const DualProgram& dp, const SolverOptions& opts) {
  const int dod = dp.degree_of_difficulty();
  if (dod < 0) {
    throw Error(ErrorKind::NegativeDoD,
                "degree of difficulty is " + std::to_string(dod) + "; the dual may be inconsistent");
  }
  if (dod == 0) return solve_dod_zero(dp, opts);
  return maximize_dual(dp, opts);
}

}  // namespace mogp
