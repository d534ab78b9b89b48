#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "dhyp/solution_core.hpp"
#include "dhyp/verify.hpp"

namespace dhyp {

// Plain-text run configuration, one `key = value` per line, `#` comments:
//
//   m = -0.6666666666666666
//   lambda_squared = 1
//   a = 0
//   b = 1
//   problem = goursat-2a
//   phi_a = polynomial:0,0,1
//   phi_b = polynomial:1,1,-0.5
//   grid = 5
//   quadrature_order = 48
//   coordinate_output = characteristic
//
// Optional: normalize_corner (true/false), c1 and c2 (particular solution),
// residual_tolerance, trace_tolerance, limit_tolerance.

struct RunConfig {
  ProblemParameters params;
  ProblemKind problem = ProblemKind::cauchy;
  std::map<std::string, DataFunction> data;
  int grid = 5;
  int quadrature_order = kDefaultOrder;
  CoordinateSystem coordinate_output = CoordinateSystem::characteristic;
  bool normalize_corner = false;
  double c1 = 1.0;
  double c2 = 0.0;
  VerifyTolerances tolerances;
};

/// Throws ConfigError on unknown keys or malformed values.
RunConfig parse_config(std::istream& in);
RunConfig load_config(const std::string& path);

/// Throws ConfigError naming the violated constraint. The first form skips
/// the data bindings.
void validate_parameters(const RunConfig& config);
void validate_config(const RunConfig& config);

ProblemData problem_data(const RunConfig& config);

}  // namespace dhyp
