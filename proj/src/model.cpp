#include "mogp/model.hpp"

#include <cmath>
#include <sstream>

#include "mogp/error.hpp"

namespace mogp {

Coefficient Coefficient::constant(double value) { return Coefficient(true, {value}); }

Coefficient Coefficient::polynomial(std::vector<double> coeffs) {
  if (coeffs.empty()) throw Error(ErrorKind::ValidationError, "empty polynomial coefficient");
  for (double c : coeffs) {
    if (!std::isfinite(c)) throw Error(ErrorKind::ValidationError, "non-finite polynomial coefficient");
  }
  return Coefficient(false, std::move(coeffs));
}

double Coefficient::raw_value(double t) const noexcept {
  double value = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) value = value * t + *it;
  return value;
}

double Coefficient::evaluate(double t) const {
  const double value = raw_value(t);
  if (!(value > 0.0)) {
    std::ostringstream msg;
    msg << "coefficient evaluates to " << value << " at t=" << t;
    throw Error(ErrorKind::NonPositiveCoefficient, msg.str());
  }
  return value;
}

double Monomial::exponent(std::size_t var) const noexcept {
  const auto it = exponents.find(var);
  return it == exponents.end() ? 0.0 : it->second;
}

Posynomial::Posynomial(std::vector<Monomial> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) throw Error(ErrorKind::ValidationError, "posynomial needs at least one term");
}

namespace {

void check_terms(const Posynomial& p, std::size_t n, const std::string& where) {
  for (std::size_t t = 0; t < p.size(); ++t) {
    for (const auto& [var, a] : p.terms()[t].exponents) {
      if (var >= n) {
        throw Error(ErrorKind::ValidationError,
                    where + " term " + std::to_string(t + 1) + " references variable index " +
                        std::to_string(var) + " >= n=" + std::to_string(n));
      }
      if (!std::isfinite(a)) {
        throw Error(ErrorKind::ValidationError,
                    where + " term " + std::to_string(t + 1) + " has a non-finite exponent");
      }
    }
  }
}

}  // namespace

Problem::Problem(std::vector<std::string> variables, std::vector<Posynomial> objectives,
                 std::vector<Constraint> constraints)
    : variables_(std::move(variables)),
      objectives_(std::move(objectives)),
      constraints_(std::move(constraints)) {
  if (variables_.empty()) throw Error(ErrorKind::ValidationError, "problem needs at least one variable");
  if (objectives_.empty()) throw Error(ErrorKind::ValidationError, "problem needs at least one objective");
  const std::size_t n = variables_.size();
  for (std::size_t k = 0; k < objectives_.size(); ++k) {
    check_terms(objectives_[k], n, "objective " + std::to_string(k + 1));
  }
  for (std::size_t i = 0; i < constraints_.size(); ++i) {
    const std::string where = "constraint " + std::to_string(i + 1);
    check_terms(constraints_[i].lhs, n, where);
    if (!(constraints_[i].bound > 0.0) || !std::isfinite(constraints_[i].bound)) {
      throw Error(ErrorKind::ValidationError, where + " bound must be a positive finite number");
    }
  }
}

std::size_t Problem::objective_term_count() const noexcept {
  std::size_t count = 0;
  for (const auto& f : objectives_) count += f.size();
  return count;
}

std::size_t Problem::constraint_term_count() const noexcept {
  std::size_t count = 0;
  for (const auto& c : constraints_) count += c.lhs.size();
  return count;
}

double evaluate(const Posynomial& p, double t, std::span<const double> x) {
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (!(x[j] > 0.0)) {
      throw Error(ErrorKind::DomainError, "x" + std::to_string(j + 1) + " must be strictly positive");
    }
  }
  double sum = 0.0;
  for (const auto& term : p.terms()) {
    double log_value = std::log(term.coeff.evaluate(t));
    for (const auto& [var, a] : term.exponents) {
      if (var >= x.size()) throw Error(ErrorKind::DomainError, "point has too few coordinates");
      log_value += a * std::log(x[var]);
    }
    sum += std::exp(log_value);
  }
  return sum;
}

Constraint normalize(const Constraint& c) {
  if (c.bound == 1.0) return c;
  std::vector<Monomial> terms = c.lhs.terms();
  for (auto& term : terms) {
    std::vector<double> coeffs = term.coeff.coeffs();
    for (double& v : coeffs) v /= c.bound;
    term.coeff = term.coeff.is_constant() ? Coefficient::constant(coeffs.front())
                                          : Coefficient::polynomial(std::move(coeffs));
  }
  return Constraint{Posynomial(std::move(terms)), 1.0};
}

int degree_of_difficulty(std::size_t total_terms, std::size_t num_variables) {
  return static_cast<int>(total_terms) - static_cast<int>(num_variables) - 1;
}

namespace {

Posynomial instantiate_terms(const Posynomial& p, double t, const std::string& where) {
  std::vector<Monomial> terms = p.terms();
  for (std::size_t i = 0; i < terms.size(); ++i) {
    try {
      terms[i].coeff = Coefficient::constant(terms[i].coeff.evaluate(t));
    } catch (const Error&) {
      std::ostringstream msg;
      msg << where << " term " << i + 1 << " coefficient " << terms[i].coeff.raw_value(t)
          << " is not positive at t=" << t;
      throw Error(ErrorKind::NonPositiveCoefficient, msg.str());
    }
  }
  return Posynomial(std::move(terms));
}

}  // namespace

Problem instantiate(const Problem& problem, double t) {
  std::vector<Posynomial> objectives;
  objectives.reserve(problem.num_objectives());
  for (std::size_t k = 0; k < problem.num_objectives(); ++k) {
    objectives.push_back(
        instantiate_terms(problem.objectives()[k], t, "objective " + std::to_string(k + 1)));
  }
  std::vector<Constraint> constraints;
  constraints.reserve(problem.num_constraints());
  for (std::size_t i = 0; i < problem.num_constraints(); ++i) {
    const auto& c = problem.constraints()[i];
    constraints.push_back(
        {instantiate_terms(c.lhs, t, "constraint " + std::to_string(i + 1)), c.bound});
  }
  return Problem(problem.variables(), std::move(objectives), std::move(constraints));
}

}  // namespace mogp
