#include "mogp/dual.hpp"

#include <cmath>

#include "mogp/error.hpp"

namespace mogp {

int DualProgram::degree_of_difficulty() const noexcept {
  return mogp::degree_of_difficulty(num_terms(), num_variables());
}

double DualResiduals::max_abs() const noexcept {
  double m = std::abs(normality);
  if (orthogonality.size() > 0) m = std::max(m, orthogonality.cwiseAbs().maxCoeff());
  return m;
}

namespace {

void fill_column(DualProgram& dp, Eigen::Index col, const Monomial& term, bool objective) {
  dp.A(0, col) = objective ? 1.0 : 0.0;
  for (const auto& [var, a] : term.exponents) dp.A(static_cast<Eigen::Index>(var) + 1, col) = a;
  dp.logc(col) = std::log(term.coeff.coeffs().front());
}

double xlogx(double v) { return v > 0.0 ? v * std::log(v) : 0.0; }

}  // namespace

DualProgram build_dual(const WeightedGP& wgp) {
  const auto n = static_cast<Eigen::Index>(wgp.num_variables());
  const auto T = static_cast<Eigen::Index>(wgp.total_term_count());

  DualProgram dp;
  dp.A = Eigen::MatrixXd::Zero(n + 1, T);
  dp.b = Eigen::VectorXd::Zero(n + 1);
  dp.b(0) = 1.0;
  dp.logc.resize(T);
  dp.objective_terms = wgp.objective.size();

  Eigen::Index col = 0;
  for (const auto& term : wgp.objective.terms()) fill_column(dp, col++, term, true);
  for (const auto& c : wgp.constraints) {
    dp.blocks.push_back({static_cast<std::size_t>(col), c.lhs.size()});
    for (const auto& term : c.lhs.terms()) fill_column(dp, col++, term, false);
  }
  return dp;
}

Eigen::VectorXd block_sums(const DualProgram& dp, const Eigen::VectorXd& w) {
  Eigen::VectorXd lambda(static_cast<Eigen::Index>(dp.blocks.size()));
  for (std::size_t i = 0; i < dp.blocks.size(); ++i) {
    const auto& blk = dp.blocks[i];
    lambda(static_cast<Eigen::Index>(i)) =
        w.segment(static_cast<Eigen::Index>(blk.start), static_cast<Eigen::Index>(blk.size)).sum();
  }
  return lambda;
}

double dual_log_objective(const DualProgram& dp, const Eigen::VectorXd& w) {
  double value = 0.0;
  for (Eigen::Index t = 0; t < w.size(); ++t) {
    if (w(t) > 0.0) value += w(t) * dp.logc(t) - xlogx(w(t));
  }
  const Eigen::VectorXd lambda = block_sums(dp, w);
  for (Eigen::Index i = 0; i < lambda.size(); ++i) value += xlogx(lambda(i));
  return value;
}

Eigen::VectorXd dual_gradient(const DualProgram& dp, const Eigen::VectorXd& w) {
  for (Eigen::Index t = 0; t < w.size(); ++t) {
    if (!(w(t) > 0.0)) {
      throw Error(ErrorKind::DomainError,
                  "dual gradient undefined at zero weight (term " + std::to_string(t + 1) + ")");
    }
  }
  Eigen::VectorXd g = dp.logc - w.array().log().matrix();
  g.head(static_cast<Eigen::Index>(dp.objective_terms)).array() -= 1.0;
  for (const auto& blk : dp.blocks) {
    const auto start = static_cast<Eigen::Index>(blk.start);
    const auto size = static_cast<Eigen::Index>(blk.size);
    g.segment(start, size).array() += std::log(w.segment(start, size).sum());
  }
  return g;
}

Eigen::MatrixXd dual_hessian(const DualProgram& dp, const Eigen::VectorXd& w) {
  Eigen::MatrixXd H = Eigen::MatrixXd::Zero(w.size(), w.size());
  H.diagonal() = -w.cwiseInverse();
  for (const auto& blk : dp.blocks) {
    const auto start = static_cast<Eigen::Index>(blk.start);
    const auto size = static_cast<Eigen::Index>(blk.size);
    H.block(start, start, size, size).array() += 1.0 / w.segment(start, size).sum();
  }
  return H;
}

DualResiduals residuals(const DualProgram& dp, const Eigen::VectorXd& w) {
  const Eigen::VectorXd r = dp.A * w - dp.b;
  return {r(0), r.tail(r.size() - 1)};
}

}  // namespace mogp
