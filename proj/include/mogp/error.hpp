#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mogp {

enum class ErrorKind {
  NonPositiveCoefficient,
  DomainError,
  ValidationError,
  ParseError,
  WeightSumError,
  NonPositiveWeight,
  NegativeDoD,
  SingularSystem,
  InfeasibleDual,
  MaxIterations,
  NonConverged,
  RankDeficient,
  NoFeasiblePoint,
};

std::string_view to_string(ErrorKind kind);

// All library failures are reported through this type; kind() drives the CLI exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace mogp
