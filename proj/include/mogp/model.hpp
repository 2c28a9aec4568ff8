#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace mogp {

/// A posynomial term coefficient: either a positive constant or a polynomial
/// c0 + c1 t + c2 t^2 + ... in the scalar parameter t.
///
/// Positivity is a property of the value at a given t, so it is checked by
/// evaluate() rather than at construction.
class Coefficient {
 public:
  static Coefficient constant(double value);
  /// Throws ValidationError if `coeffs` is empty or holds a non-finite value.
  static Coefficient polynomial(std::vector<double> coeffs);

  bool is_constant() const noexcept { return constant_; }
  /// Polynomial coefficients in increasing degree; a constant is a degree-0 polynomial.
  const std::vector<double>& coeffs() const noexcept { return coeffs_; }

  /// Value at t. Throws NonPositiveCoefficient if the value is <= 0.
  double evaluate(double t) const;
  /// Value at t without the positivity check.
  double raw_value(double t) const noexcept;

  friend bool operator==(const Coefficient&, const Coefficient&) = default;

 private:
  Coefficient(bool constant, std::vector<double> coeffs)
      : constant_(constant), coeffs_(std::move(coeffs)) {}

  bool constant_ = true;
  std::vector<double> coeffs_;
};

struct Monomial {
  Coefficient coeff = Coefficient::constant(1.0);
  /// Variable index -> exponent; absent variables have exponent 0.
  std::map<std::size_t, double> exponents;

  double exponent(std::size_t var) const noexcept;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

class Posynomial {
 public:
  /// Throws ValidationError when `terms` is empty.
  explicit Posynomial(std::vector<Monomial> terms);

  const std::vector<Monomial>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  friend bool operator==(const Posynomial&, const Posynomial&) = default;

 private:
  std::vector<Monomial> terms_;
};

/// lhs(x) <= bound.
struct Constraint {
  Posynomial lhs;
  double bound = 1.0;

  friend bool operator==(const Constraint&, const Constraint&) = default;
};

/// Multi-objective GP: minimize every objective subject to constraints, x > 0.
class Problem {
 public:
  /// Validates the structural invariants (p >= 1, n >= 1, exponent indices
  /// below n, finite exponents, positive bounds); throws ValidationError.
  Problem(std::vector<std::string> variables, std::vector<Posynomial> objectives,
          std::vector<Constraint> constraints);

  std::size_t num_variables() const noexcept { return variables_.size(); }
  std::size_t num_objectives() const noexcept { return objectives_.size(); }
  std::size_t num_constraints() const noexcept { return constraints_.size(); }

  const std::vector<std::string>& variables() const noexcept { return variables_; }
  const std::vector<Posynomial>& objectives() const noexcept { return objectives_; }
  const std::vector<Constraint>& constraints() const noexcept { return constraints_; }

  std::size_t objective_term_count() const noexcept;
  std::size_t constraint_term_count() const noexcept;
  std::size_t total_term_count() const noexcept {
    return objective_term_count() + constraint_term_count();
  }

  friend bool operator==(const Problem&, const Problem&) = default;

 private:
  std::vector<std::string> variables_;
  std::vector<Posynomial> objectives_;
  std::vector<Constraint> constraints_;
};

/// Sum of coeff(t) * prod_j x_j^a_j. Throws DomainError on non-positive x or
/// an exponent index outside x; NonPositiveCoefficient from the coefficients.
double evaluate(const Posynomial& p, double t, std::span<const double> x);

/// Divides every coefficient by the bound so the constraint reads lhs <= 1.
Constraint normalize(const Constraint& c);

/// Terms minus variables minus one; may be negative.
int degree_of_difficulty(std::size_t total_terms, std::size_t num_variables);

/// Replaces every coefficient by its constant value at t. A non-positive
/// coefficient raises NonPositiveCoefficient naming the offending term.
Problem instantiate(const Problem& problem, double t);

}  // namespace mogp
