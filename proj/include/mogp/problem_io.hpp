#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "mogp/model.hpp"

namespace mogp {

/// Reads the JSON problem format:
///
///   {
///     "variables":   ["x1", "x2"],
///     "objectives":  [[term, ...], ...],
///     "constraints": [{"terms": [term, ...], "bound": 3}, ...]
///   }
///   term = {"coeff": {"const": 2} | {"poly": [c0, c1, ...]},
///           "exps": {"x1": -1, "x2": "1/3"}}
///
/// Exponents are numbers or "p/q" strings. An optional "sense" key must be
/// "min". Malformed JSON or wrong shapes raise ParseError (with line and
/// column where known); semantic problems raise ValidationError.
Problem parse_problem(const std::filesystem::path& path);
Problem parse_problem_text(std::string_view text, std::string_view source = "<input>");

/// Inverse of parse_problem_text.
std::string serialize_problem(const Problem& problem);

}  // namespace mogp
