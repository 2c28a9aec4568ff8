#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "mogp/dual_solver.hpp"
#include "mogp/error.hpp"
#include "mogp/oracle.hpp"

namespace mogp::cli {

enum class Command { Analyze, Solve, Sweep, Oracle };
enum class Format { Table, Csv };

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitNonConverged = 3;
inline constexpr int kExitInfeasible = 4;

struct RunConfig {
  Command command = Command::Solve;
  std::string problem_path;
  std::vector<double> ts;
  std::vector<std::vector<double>> weights;
  std::optional<std::string> w1_range;  // "lo:hi:step"
  bool complete_weights = false;
  Format format = Format::Table;
  int precision = 7;
  SolverOptions solver;
  OracleOptions oracle;
  std::optional<std::string> out_path;
};

int exit_code(ErrorKind kind);

/// "a,b,c" or "lo:hi:step".
std::vector<double> parse_number_list(const std::string& text);

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv into a RunConfig and runs it.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mogp::cli
