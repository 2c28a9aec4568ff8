#include "mogp/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <vector>

namespace mogp {

std::string format_number(double value, int significant) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general,
                                       std::clamp(significant, 1, 17));
  return ec == std::errc() ? std::string(buf, end) : std::string("nan");
}

namespace {

using Row = std::vector<std::string>;

Row header(std::size_t n, std::size_t p) {
  Row h{"t"};
  for (std::size_t k = 0; k < p; ++k) h.push_back("w" + std::to_string(k + 1));
  for (std::size_t j = 0; j < n; ++j) h.push_back("x" + std::to_string(j + 1));
  for (std::size_t k = 0; k < p; ++k) h.push_back("f" + std::to_string(k + 1));
  h.insert(h.end(), {"Z", "gap", "converged"});
  return h;
}

Row cells(const SweepRow& row, std::size_t n, std::size_t p, int sig) {
  Row r{format_number(row.t, sig)};
  for (double w : row.weights.values()) r.push_back(format_number(w, sig));
  if (row.primal) {
    const auto& ps = *row.primal;
    for (Eigen::Index j = 0; j < ps.x.size(); ++j) r.push_back(format_number(ps.x(j), sig));
    for (double f : ps.per_objective) r.push_back(format_number(f, sig));
    r.push_back(format_number(ps.z_objective, sig));
    r.push_back(format_number(ps.duality_gap_rel, sig));
  } else {
    r.insert(r.end(), n + p + 2, std::string());
  }
  r.push_back(row.converged ? "true" : "false");
  return r;
}

}  // namespace

void write_sweep_csv(std::ostream& out, const SweepReport& report, std::size_t num_variables,
                     std::size_t num_objectives, int significant) {
  auto emit = [&](const Row& r) {
    for (std::size_t c = 0; c < r.size(); ++c) out << (c ? "," : "") << r[c];
    out << '\n';
  };
  emit(header(num_variables, num_objectives));
  for (const auto& row : report.rows) emit(cells(row, num_variables, num_objectives, significant));
}

void write_sweep_table(std::ostream& out, const SweepReport& report, std::size_t num_variables,
                       std::size_t num_objectives, int significant) {
  std::vector<Row> rows{header(num_variables, num_objectives)};
  for (const auto& row : report.rows) rows.push_back(cells(row, num_variables, num_objectives, significant));
  std::vector<std::size_t> width(rows.front().size(), 0);
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  }
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (c) out << "  ";
      out << std::string(width[c] - r[c].size(), ' ') << r[c];
    }
    out << '\n';
  }
}

}  // namespace mogp
