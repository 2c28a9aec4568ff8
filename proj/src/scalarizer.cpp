#include "mogp/scalarizer.hpp"

#include <cmath>
#include <sstream>

#include "mogp/error.hpp"

namespace mogp {

WeightVector WeightVector::validate(std::vector<double> w) {
  if (w.empty()) throw Error(ErrorKind::WeightSumError, "empty weight vector");
  double sum = 0.0;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (!(w[k] > kZeroWeight) || !std::isfinite(w[k])) {
      std::ostringstream msg;
      msg << "weight w" << k + 1 << "=" << w[k] << " must be strictly positive";
      throw Error(ErrorKind::NonPositiveWeight, msg.str());
    }
    sum += w[k];
  }
  if (std::abs(sum - 1.0) > kSumTolerance) {
    std::ostringstream msg;
    msg << "weights sum to " << sum << ", expected 1";
    throw Error(ErrorKind::WeightSumError, msg.str());
  }
  return WeightVector(std::move(w));
}

std::size_t WeightedGP::total_term_count() const noexcept {
  std::size_t count = objective.size();
  for (const auto& c : constraints) count += c.lhs.size();
  return count;
}

WeightedGP scalarize(const Problem& problem, const WeightVector& w, double t) {
  if (w.size() != problem.num_objectives()) {
    throw Error(ErrorKind::ValidationError,
                "expected " + std::to_string(problem.num_objectives()) + " weights, got " +
                    std::to_string(w.size()));
  }
  Problem fixed = instantiate(problem, t);

  std::vector<Monomial> terms;
  std::vector<TermOrigin> origins;
  for (std::size_t k = 0; k < fixed.num_objectives(); ++k) {
    const auto& f = fixed.objectives()[k];
    for (std::size_t i = 0; i < f.size(); ++i) {
      Monomial m = f.terms()[i];
      m.coeff = Coefficient::constant(w[k] * m.coeff.coeffs().front());
      terms.push_back(std::move(m));
      origins.push_back({k, i});
    }
  }

  std::vector<Constraint> constraints;
  constraints.reserve(fixed.num_constraints());
  for (const auto& c : fixed.constraints()) constraints.push_back(normalize(c));

  return WeightedGP{Posynomial(std::move(terms)), std::move(constraints), w, t, std::move(origins),
                    std::move(fixed)};
}

double evaluate_weighted(const WeightedGP& wgp, std::span<const double> x) {
  return evaluate(wgp.objective, wgp.t, x);
}

}  // namespace mogp
