#include "mogp/error.hpp"

namespace mogp {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonPositiveCoefficient: return "NonPositiveCoefficient";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::WeightSumError: return "WeightSumError";
    case ErrorKind::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorKind::NegativeDoD: return "NegativeDoD";
    case ErrorKind::SingularSystem: return "SingularSystem";
    case ErrorKind::InfeasibleDual: return "InfeasibleDual";
    case ErrorKind::MaxIterations: return "MaxIterations";
    case ErrorKind::NonConverged: return "NonConverged";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::NoFeasiblePoint: return "NoFeasiblePoint";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace mogp
