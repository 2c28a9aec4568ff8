#pragma once

#include <ostream>
#include <string>

#include "mogp/sweep.hpp"

namespace mogp {

/// Shortest general-format rendering with `significant` digits; always uses '.'.
std::string format_number(double value, int significant = 7);

/// Header: t,w1..wp,x1..xn,f1..fp,Z,gap,converged. Failed rows leave the
/// numeric solution fields empty.
void write_sweep_csv(std::ostream& out, const SweepReport& report, std::size_t num_variables,
                     std::size_t num_objectives, int significant = 7);

/// Same columns, padded for reading.
void write_sweep_table(std::ostream& out, const SweepReport& report, std::size_t num_variables,
                       std::size_t num_objectives, int significant = 7);

}  // namespace mogp
