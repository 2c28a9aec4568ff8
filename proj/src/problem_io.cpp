#include "mogp/problem_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "mogp/error.hpp"

namespace mogp {

using nlohmann::json;

namespace {

class Reader {
 public:
  explicit Reader(std::string source) : source_(std::move(source)) {}

  [[noreturn]] void fail(ErrorKind kind, const std::string& where, const std::string& what) const {
    throw Error(kind, source_ + ": " + where + ": " + what);
  }

  const json& field(const json& obj, const char* key, const std::string& where) const {
    const auto it = obj.find(key);
    if (it == obj.end()) fail(ErrorKind::ParseError, where, std::string("missing key \"") + key + "\"");
    return *it;
  }

  void only_keys(const json& obj, std::initializer_list<std::string_view> keys,
                 const std::string& where) const {
    for (const auto& [key, _] : obj.items()) {
      bool known = false;
      for (auto k : keys) known = known || key == k;
      if (!known) fail(ErrorKind::ParseError, where, "unexpected key \"" + key + "\"");
    }
  }

  double number(const json& v, const std::string& where) const {
    if (!v.is_number()) fail(ErrorKind::ParseError, where, "expected a number");
    const double d = v.get<double>();
    if (!std::isfinite(d)) fail(ErrorKind::ValidationError, where, "number is not finite");
    return d;
  }

  double exponent(const json& v, const std::string& where) const {
    if (v.is_number()) return number(v, where);
    if (!v.is_string()) fail(ErrorKind::ParseError, where, "exponent must be a number or \"p/q\"");
    const std::string s = v.get<std::string>();
    const auto slash = s.find('/');
    double num = 0.0, den = 1.0;
    auto parse = [&](std::string_view part, double& out) {
      const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), out);
      return ec == std::errc() && ptr == part.data() + part.size() && !part.empty();
    };
    const std::string_view view(s);
    const bool ok = slash == std::string::npos
                        ? parse(view, num)
                        : parse(view.substr(0, slash), num) && parse(view.substr(slash + 1), den);
    if (!ok || den == 0.0) fail(ErrorKind::ParseError, where, "bad exponent \"" + s + "\"");
    return num / den;
  }

  Coefficient coefficient(const json& v, const std::string& where) const {
    if (!v.is_object() || v.size() != 1) {
      fail(ErrorKind::ParseError, where, "coeff must be {\"const\": v} or {\"poly\": [...]}");
    }
    if (v.contains("const")) {
      const double c = number(v["const"], where + ".const");
      if (!(c > 0.0)) fail(ErrorKind::ValidationError, where, "constant coefficient must be positive");
      return Coefficient::constant(c);
    }
    if (v.contains("poly")) {
      const json& arr = v["poly"];
      if (!arr.is_array() || arr.empty()) {
        fail(ErrorKind::ParseError, where, "poly must be a nonempty array of numbers");
      }
      std::vector<double> coeffs;
      for (std::size_t i = 0; i < arr.size(); ++i) {
        coeffs.push_back(number(arr[i], where + ".poly[" + std::to_string(i) + "]"));
      }
      return Coefficient::polynomial(std::move(coeffs));
    }
    fail(ErrorKind::ParseError, where, "coeff must be {\"const\": v} or {\"poly\": [...]}");
  }

  Monomial term(const json& v, const std::vector<std::string>& vars, const std::string& where) const {
    if (!v.is_object()) fail(ErrorKind::ParseError, where, "term must be an object");
    only_keys(v, {"coeff", "exps"}, where);
    Monomial m;
    m.coeff = coefficient(field(v, "coeff", where), where + ".coeff");
    if (const auto it = v.find("exps"); it != v.end()) {
      if (!it->is_object()) fail(ErrorKind::ParseError, where, "exps must be an object");
      for (const auto& [name, value] : it->items()) {
        const auto pos = std::find(vars.begin(), vars.end(), name);
        if (pos == vars.end()) fail(ErrorKind::ValidationError, where, "unknown variable \"" + name + "\"");
        const double a = exponent(value, where + ".exps." + name);
        if (a != 0.0) m.exponents[static_cast<std::size_t>(pos - vars.begin())] = a;
      }
    }
    return m;
  }

  Posynomial terms(const json& v, const std::vector<std::string>& vars, const std::string& where) const {
    if (!v.is_array()) fail(ErrorKind::ParseError, where, "expected an array of terms");
    if (v.empty()) fail(ErrorKind::ValidationError, where, "needs at least one term");
    std::vector<Monomial> out;
    for (std::size_t t = 0; t < v.size(); ++t) {
      out.push_back(term(v[t], vars, where + "[" + std::to_string(t) + "]"));
    }
    return Posynomial(std::move(out));
  }

 private:
  std::string source_;
};

std::string location(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

json coefficient_json(const Coefficient& c) {
  if (c.is_constant()) return {{"const", c.coeffs().front()}};
  return {{"poly", c.coeffs()}};
}

json terms_json(const Posynomial& p, const std::vector<std::string>& vars) {
  json arr = json::array();
  for (const auto& term : p.terms()) {
    json exps = json::object();
    for (const auto& [var, a] : term.exponents) exps[vars[var]] = a;
    arr.push_back({{"coeff", coefficient_json(term.coeff)}, {"exps", exps}});
  }
  return arr;
}

}  // namespace

Problem parse_problem_text(std::string_view text, std::string_view source) {
  const std::string src(source);
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, src + ": " + location(text, e.byte) + ": malformed JSON");
  }
  const Reader r(src);
  if (!doc.is_object()) r.fail(ErrorKind::ParseError, "top level", "expected an object");

  if (const auto it = doc.find("sense"); it != doc.end()) {
    if (!it->is_string()) r.fail(ErrorKind::ParseError, "sense", "expected \"min\"");
    if (it->get<std::string>() != "min") {
      r.fail(ErrorKind::ValidationError, "sense", "only minimization objectives are supported");
    }
  }

  const json& vars_json = r.field(doc, "variables", "top level");
  if (!vars_json.is_array()) r.fail(ErrorKind::ParseError, "variables", "expected an array of names");
  std::vector<std::string> vars;
  for (const auto& v : vars_json) {
    if (!v.is_string() || v.get<std::string>().empty()) {
      r.fail(ErrorKind::ParseError, "variables", "names must be nonempty strings");
    }
    if (std::find(vars.begin(), vars.end(), v.get<std::string>()) != vars.end()) {
      r.fail(ErrorKind::ValidationError, "variables", "duplicate name \"" + v.get<std::string>() + "\"");
    }
    vars.push_back(v.get<std::string>());
  }
  if (vars.empty()) r.fail(ErrorKind::ValidationError, "variables", "at least one variable is required");

  const json& objs_json = r.field(doc, "objectives", "top level");
  if (!objs_json.is_array()) r.fail(ErrorKind::ParseError, "objectives", "expected an array");
  if (objs_json.empty()) r.fail(ErrorKind::ValidationError, "objectives", "at least one objective is required");
  std::vector<Posynomial> objectives;
  for (std::size_t k = 0; k < objs_json.size(); ++k) {
    objectives.push_back(r.terms(objs_json[k], vars, "objectives[" + std::to_string(k) + "]"));
  }

  std::vector<Constraint> constraints;
  if (const auto it = doc.find("constraints"); it != doc.end()) {
    if (!it->is_array()) r.fail(ErrorKind::ParseError, "constraints", "expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string where = "constraints[" + std::to_string(i) + "]";
      const json& c = (*it)[i];
      if (!c.is_object()) r.fail(ErrorKind::ParseError, where, "expected {terms, bound}");
      r.only_keys(c, {"terms", "bound"}, where);
      double bound = 1.0;
      if (c.contains("bound")) bound = r.number(c["bound"], where + ".bound");
      if (!(bound > 0.0)) r.fail(ErrorKind::ValidationError, where, "bound must be positive");
      constraints.push_back({r.terms(r.field(c, "terms", where), vars, where + ".terms"), bound});
    }
  }

  try {
    return Problem(std::move(vars), std::move(objectives), std::move(constraints));
  } catch (const Error& e) {
    throw Error(e.kind(), src + ": " + e.what());
  }
}

Problem parse_problem(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, path.string() + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem_text(buf.str(), path.string());
}

std::string serialize_problem(const Problem& problem) {
  const auto& vars = problem.variables();
  json doc;
  doc["variables"] = vars;
  doc["objectives"] = json::array();
  for (const auto& f : problem.objectives()) doc["objectives"].push_back(terms_json(f, vars));
  doc["constraints"] = json::array();
  for (const auto& c : problem.constraints()) {
    doc["constraints"].push_back({{"terms", terms_json(c.lhs, vars)}, {"bound", c.bound}});
  }
  return doc.dump(2) + "\n";
}

}  // namespace mogp
