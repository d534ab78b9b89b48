#include "dhyp/config.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

#include "dhyp/errors.hpp"

namespace dhyp {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& v) {
  std::size_t used = 0;
  double x = 0.0;
  try {
    x = std::stod(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != v.size()) throw ConfigError("'" + key + "' expects a number, got '" + v + "'");
  return x;
}

int to_int(const std::string& key, const std::string& v) {
  const double x = to_double(key, v);
  if (x != static_cast<int>(x)) throw ConfigError("'" + key + "' expects an integer, got '" + v + "'");
  return static_cast<int>(x);
}

bool to_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw ConfigError("'" + key + "' expects true or false, got '" + v + "'");
}

bool is_data_key(const std::string& k) { return k == "tau" || k == "nu" || k == "phi_a" || k == "phi_b"; }

}  // namespace

RunConfig parse_config(std::istream& in) {
  RunConfig c;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "m") c.params.m = to_double(key, value);
    else if (key == "lambda_squared") c.params.mu.mu = to_double(key, value);
    else if (key == "a") c.params.a = to_double(key, value);
    else if (key == "b") c.params.b = to_double(key, value);
    else if (key == "grid") c.grid = to_int(key, value);
    else if (key == "quadrature_order") c.quadrature_order = to_int(key, value);
    else if (key == "normalize_corner") c.normalize_corner = to_bool(key, value);
    else if (key == "c1") c.c1 = to_double(key, value);
    else if (key == "c2") c.c2 = to_double(key, value);
    else if (key == "residual_tolerance") c.tolerances.residual = to_double(key, value);
    else if (key == "trace_tolerance") c.tolerances.trace = to_double(key, value);
    else if (key == "limit_tolerance") c.tolerances.limit = to_double(key, value);
    else if (key == "problem") {
      try {
        c.problem = parse_problem_kind(value);
      } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
      }
    } else if (key == "coordinate_output") {
      if (value == "characteristic") c.coordinate_output = CoordinateSystem::characteristic;
      else if (value == "original") c.coordinate_output = CoordinateSystem::original;
      else throw ConfigError("coordinate_output must be characteristic or original");
    } else if (is_data_key(key)) {
      try {
        c.data[key] = DataFunction::parse(value);
      } catch (const std::invalid_argument& e) {
        throw ConfigError("'" + key + "': " + e.what());
      }
    } else {
      throw ConfigError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  return parse_config(in);
}

void validate_parameters(const RunConfig& c) {
  if (!(c.params.m > -1.0 && c.params.m < 0.0))
    throw ConfigError("m must satisfy -1 < m < 0 (got " + std::to_string(c.params.m) + ")");
  if (!std::isfinite(c.params.a) || !std::isfinite(c.params.b) || !(c.params.a < c.params.b))
    throw ConfigError("interval must satisfy a < b with finite ends");
  if (!std::isfinite(c.params.mu.mu)) throw ConfigError("lambda_squared must be finite");
  if (c.grid < 2) throw ConfigError("grid must be >= 2");
  if (c.quadrature_order < 1 || c.quadrature_order > kMaxQuadratureOrder)
    throw ConfigError("quadrature_order must lie in [1, " + std::to_string(kMaxQuadratureOrder) + "]");
}

void validate_config(const RunConfig& c) {
  validate_parameters(c);
  for (const auto& name : required_data(c.problem))
    if (!c.data.count(name))
      throw ConfigError("problem " + to_string(c.problem) + " needs data binding '" + name + "'");
}

ProblemData problem_data(const RunConfig& c) {
  ProblemData d;
  auto get = [&](const char* k) -> std::optional<DataFunction> {
    auto it = c.data.find(k);
    if (it == c.data.end()) return std::nullopt;
    return it->second;
  };
  d.tau = get("tau");
  d.nu = get("nu");
  d.phi_a = get("phi_a");
  d.phi_b = get("phi_b");
  d.c1 = c.c1;
  d.c2 = c.c2;
  return d;
}

}  // namespace dhyp
