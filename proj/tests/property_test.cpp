#include <algorithm>
#include <cmath>
#include <optional>
#include <random>

#include <gtest/gtest.h>

#include "mogp/dual.hpp"
#include "mogp/dual_solver.hpp"
#include "mogp/error.hpp"
#include "mogp/oracle.hpp"
#include "mogp/primal.hpp"
#include "mogp/scalarizer.hpp"
#include "mogp/sweep.hpp"
#include "random_problems.hpp"
#include "test_support.hpp"

namespace mogp {
namespace {

constexpr int kInstances = 200;

WeightVector random_weights(std::mt19937& rng) {
  std::uniform_real_distribution<double> u(0.05, 0.95);
  const double a = u(rng);
  return WeightVector::validate({a, 1.0 - a});
}

Eigen::VectorXd random_positive(std::mt19937& rng, Eigen::Index size) {
  std::uniform_real_distribution<double> u(0.05, 2.0);
  Eigen::VectorXd w(size);
  for (Eigen::Index i = 0; i < size; ++i) w(i) = u(rng);
  return w;
}

TEST(PropertyTest, ScalarizationIsLinearInWeights) {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> logx(-1.0, 1.0);
  for (int k = 0; k < kInstances; ++k) {
    const Problem p = testing::random_problem(rng);
    const WeightVector w = random_weights(rng);
    const WeightedGP wgp = scalarize(p, w, 0.0);
    std::vector<double> x(p.num_variables());
    for (double& v : x) v = std::exp(logx(rng));
    const double expected = w[0] * evaluate(p.objectives()[0], 0.0, x) +
                            w[1] * evaluate(p.objectives()[1], 0.0, x);
    EXPECT_NEAR(evaluate_weighted(wgp, x), expected, 1e-12 * std::max(1.0, std::abs(expected)));
  }
}

TEST(PropertyTest, ProvenanceAndTermCounts) {
  std::mt19937 rng(12);
  for (int k = 0; k < kInstances; ++k) {
    const Problem p = testing::random_problem(rng);
    const WeightVector w = random_weights(rng);
    const WeightedGP wgp = scalarize(p, w, 0.0);
    const DualProgram dp = build_dual(wgp);
    EXPECT_EQ(wgp.total_term_count(), p.total_term_count());
    EXPECT_EQ(dp.num_terms(), p.total_term_count());
    EXPECT_EQ(dp.degree_of_difficulty(), degree_of_difficulty(p.total_term_count(), p.num_variables()));

    ASSERT_EQ(wgp.origins.size(), p.objective_term_count());
    std::vector<std::vector<int>> seen(p.num_objectives());
    for (std::size_t q = 0; q < p.num_objectives(); ++q) seen[q].assign(p.objectives()[q].size(), 0);
    for (std::size_t i = 0; i < wgp.origins.size(); ++i) {
      const TermOrigin o = wgp.origins[i];
      ASSERT_LT(o.objective, p.num_objectives());
      ASSERT_LT(o.term, p.objectives()[o.objective].size());
      ++seen[o.objective][o.term];
      const Monomial& src = p.objectives()[o.objective].terms()[o.term];
      const Monomial& dst = wgp.objective.terms()[i];
      EXPECT_DOUBLE_EQ(dst.coeff.evaluate(0.0), w[o.objective] * src.coeff.evaluate(0.0));
      EXPECT_EQ(dst.exponents, src.exponents);
    }
    for (const auto& row : seen) {
      for (int c : row) EXPECT_EQ(c, 1);
    }
  }
}

TEST(PropertyTest, GradientMatchesFiniteDifferences) {
  std::mt19937 rng(13);
  for (int k = 0; k < kInstances; ++k) {
    const Problem p = testing::random_problem(rng);
    const DualProgram dp = build_dual(scalarize(p, random_weights(rng), 0.0));
    const Eigen::VectorXd w = random_positive(rng, static_cast<Eigen::Index>(dp.num_terms()));
    const Eigen::VectorXd g = dual_gradient(dp, w);
    for (Eigen::Index i = 0; i < w.size(); ++i) {
      const double h = 1e-6 * w(i);
      Eigen::VectorXd up = w, down = w;
      up(i) += h;
      down(i) -= h;
      const double fd = (dual_log_objective(dp, up) - dual_log_objective(dp, down)) / (2 * h);
      EXPECT_NEAR(g(i), fd, 1e-5 * std::max(1.0, std::abs(fd)));
    }
  }
}

TEST(PropertyTest, DualIsConcave) {
  std::mt19937 rng(14);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 0; k < kInstances; ++k) {
    const Problem p = testing::random_problem(rng);
    const DualProgram dp = build_dual(scalarize(p, random_weights(rng), 0.0));
    const auto size = static_cast<Eigen::Index>(dp.num_terms());
    const Eigen::VectorXd a = random_positive(rng, size);
    const Eigen::VectorXd b = random_positive(rng, size);
    const double s = u(rng);
    const double mixed = dual_log_objective(dp, s * a + (1 - s) * b);
    const double chord = s * dual_log_objective(dp, a) + (1 - s) * dual_log_objective(dp, b);
    EXPECT_GE(mixed, chord - 1e-10 * std::max(1.0, std::abs(chord)));

    const Eigen::VectorXd d = random_positive(rng, size) - random_positive(rng, size);
    EXPECT_LE(d.dot(dual_hessian(dp, a) * d), 1e-9 * d.squaredNorm());
  }
}

TEST(PropertyTest, AscentIsMonotoneAndPrimalIsFeasible) {
  std::mt19937 rng(15);
  int solved = 0;
  int rank_deficient = 0;
  for (int k = 0; k < kInstances; ++k) {
    const Problem p = testing::random_problem(rng);
    const WeightedGP wgp = scalarize(p, random_weights(rng), 0.0);
    const DualProgram dp = build_dual(wgp);
    const DualSolution ds = solve_dual(dp);
    ASSERT_TRUE(ds.converged) << "instance " << k << " kkt " << ds.kkt_residual;
    for (std::size_t i = 1; i < ds.trace.size(); ++i) {
      EXPECT_GE(ds.trace[i], ds.trace[i - 1] - 1e-12 * std::max(1.0, std::abs(ds.trace[i - 1])))
          << "instance " << k << " step " << i;
    }
    EXPECT_LE(residuals(dp, ds.w).max_abs(), 1e-9);
    EXPECT_GE(ds.w.minCoeff(), 0.0);

    try {
      const PrimalSolution ps = recover_primal(dp, ds, wgp);
      ++solved;
      const Feasibility f = check_feasible(wgp, testing::span_of(ps.x));
      EXPECT_TRUE(f.feasible) << "instance " << k << " violation " << f.max_violation;
      EXPECT_LE(ps.duality_gap_rel, 1e-6) << "instance " << k;
    } catch (const Error& e) {
      ASSERT_EQ(e.kind(), ErrorKind::RankDeficient) << e.what();
      ++rank_deficient;
    }
  }
  EXPECT_GE(solved, kInstances * 3 / 4) << rank_deficient << " rank-deficient instances";
}

TEST(PropertyTest, SweepPointsAreMutuallyNonDominated) {
  std::mt19937 rng(16);
  std::vector<WeightVector> weights;
  for (double a : {0.1, 0.3, 0.5, 0.7, 0.9}) weights.push_back(WeightVector::validate({a, 1 - a}));
  for (int k = 0; k < 40; ++k) {
    const Problem p = testing::random_problem(rng);
    const SweepReport report = sweep(p, weights, {0.0});
    for (const auto& a : report.rows) {
      if (!a.primal) continue;
      for (const auto& b : report.rows) {
        if (!b.primal || &a == &b) continue;
        const auto& fa = a.primal->per_objective;
        const auto& fb = b.primal->per_objective;
        bool dominates = true;
        for (std::size_t q = 0; q < fa.size(); ++q) {
          const double tol = 1e-6 * std::max(1.0, std::abs(fa[q]));
          dominates = dominates && fb[q] < fa[q] - tol;
        }
        EXPECT_FALSE(dominates) << "instance " << k;
      }
    }
  }
}

TEST(PropertyTest, SweepIsDeterministic) {
  std::mt19937 rng(17);
  std::vector<WeightVector> weights;
  for (double a : {0.9, 0.2, 0.5}) weights.push_back(WeightVector::validate({a, 1 - a}));
  for (int k = 0; k < 20; ++k) {
    const Problem p = testing::random_problem(rng);
    const SweepReport first = sweep(p, weights, {0.0});
    const SweepReport second = sweep(p, weights, {0.0});
    ASSERT_EQ(first.rows.size(), second.rows.size());
    for (std::size_t r = 0; r < first.rows.size(); ++r) {
      const auto& a = first.rows[r];
      const auto& b = second.rows[r];
      EXPECT_EQ(a.weights, b.weights);
      EXPECT_EQ(a.converged, b.converged);
      if (a.dual && b.dual) EXPECT_TRUE(a.dual->w == b.dual->w);
      if (a.primal && b.primal) {
        EXPECT_TRUE(a.primal->x == b.primal->x);
        EXPECT_EQ(a.primal->z_objective, b.primal->z_objective);
      }
    }
  }
}

TEST(PropertyTest, OracleNeverBeatsDualBeyondTolerance) {
  std::mt19937 rng(18);
  for (int k = 0; k < 15; ++k) {
    const Problem p = testing::random_problem(rng);
    const WeightVector w = random_weights(rng);
    std::optional<PointSolve> sol;
    try {
      sol = solve_point(p, w, 0.0);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::RankDeficient) continue;
      throw;
    }
    OracleResult oracle;
    try {
      oracle = brute_force_min(sol->wgp, {.log10_box = {}, .resolution = 15});
    } catch (const Error&) {
      continue;  // optimum outside the search box
    }
    const double v = sol->dual_solution.value();
    EXPECT_GE(oracle.z, v * (1 - 1e-6)) << "instance " << k;
  }
}

}  // namespace
}  // namespace mogp
