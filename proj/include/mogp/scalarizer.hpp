#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mogp/model.hpp"

namespace mogp {

/// Strictly positive weights summing to one.
class WeightVector {
 public:
  static constexpr double kSumTolerance = 1e-9;
  /// Weights at or below this are treated as zero.
  static constexpr double kZeroWeight = 1e-12;

  /// Throws NonPositiveWeight or WeightSumError. Never renormalizes.
  static WeightVector validate(std::vector<double> w);

  std::size_t size() const noexcept { return w_.size(); }
  double operator[](std::size_t k) const { return w_[k]; }
  const std::vector<double>& values() const noexcept { return w_; }

  friend bool operator==(const WeightVector&, const WeightVector&) = default;
  friend auto operator<=>(const WeightVector& a, const WeightVector& b) { return a.w_ <=> b.w_; }

 private:
  explicit WeightVector(std::vector<double> w) : w_(std::move(w)) {}
  std::vector<double> w_;
};

/// Where a weighted objective term came from.
struct TermOrigin {
  std::size_t objective;  // k
  std::size_t term;       // index within objective k

  friend bool operator==(const TermOrigin&, const TermOrigin&) = default;
};

/// The single-objective GP  min sum_k w_k f_k(x)  s.t. normalized constraints,
/// with every coefficient evaluated at t.
struct WeightedGP {
  Posynomial objective;
  std::vector<Constraint> constraints;  // all bounds are 1
  WeightVector weights;
  double t = 0.0;
  std::vector<TermOrigin> origins;  // one per objective term, (k, t) lexicographic
  Problem instantiated;             // the source problem at t, unweighted

  std::size_t num_variables() const noexcept { return instantiated.num_variables(); }
  std::size_t total_term_count() const noexcept;
};

WeightedGP scalarize(const Problem& problem, const WeightVector& w, double t);

double evaluate_weighted(const WeightedGP& wgp, std::span<const double> x);

}  // namespace mogp
