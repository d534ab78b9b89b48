#include <doctest.h>

#include <sstream>

#include "dhyp/config.hpp"
#include "dhyp/errors.hpp"

using namespace dhyp;

namespace {

RunConfig parse(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in);
}

}  // namespace

TEST_CASE("a complete configuration") {
  const auto c = parse(
      "# goursat run\n"
      "m = -0.5\n"
      "lambda_squared = -4   # focusing\n"
      "a = 0.3\n"
      "b = 1.7\n"
      "problem = goursat-2a\n"
      "phi_a = polynomial:-0.3,1\n"
      "phi_b = polynomial:1.4\n"
      "grid = 7\n"
      "quadrature_order = 64\n"
      "coordinate_output = original\n"
      "normalize_corner = yes\n"
      "trace_tolerance = 1e-7\n");
  CHECK(c.params.m == -0.5);
  CHECK(c.params.mu.mu == -4.0);
  CHECK(c.params.a == 0.3);
  CHECK(c.params.b == 1.7);
  CHECK(c.problem == ProblemKind::goursat_2a);
  CHECK(c.data.size() == 2);
  CHECK(c.grid == 7);
  CHECK(c.quadrature_order == 64);
  CHECK(c.coordinate_output == CoordinateSystem::original);
  CHECK(c.normalize_corner);
  CHECK(c.tolerances.trace == 1e-7);
  CHECK_NOTHROW(validate_config(c));
  const auto d = problem_data(c);
  CHECK(d.phi_a.has_value());
  CHECK_FALSE(d.tau.has_value());
}

TEST_CASE("malformed input") {
  CHECK_THROWS_AS(parse("colour = red\n"), ConfigError);
  CHECK_THROWS_AS(parse("m -0.5\n"), ConfigError);
  CHECK_THROWS_AS(parse("m = -0.5x\n"), ConfigError);
  CHECK_THROWS_AS(parse("grid = 2.5\n"), ConfigError);
  CHECK_THROWS_AS(parse("normalize_corner = maybe\n"), ConfigError);
  CHECK_THROWS_AS(parse("problem = dirichlet\n"), ConfigError);
  CHECK_THROWS_AS(parse("tau = bessel:1\n"), ConfigError);
  CHECK_THROWS_AS(parse("coordinate_output = polar\n"), ConfigError);
  CHECK_THROWS_AS(load_config("/nonexistent/run.conf"), ConfigError);
  try {
    parse("m = 1\nfoo = 2\n");
    FAIL("expected an error");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("validation names the constraint") {
  auto expect = [](const RunConfig& c, const std::string& fragment) {
    try {
      validate_config(c);
      FAIL("expected a ConfigError");
    } catch (const ConfigError& e) {
      CHECK_MESSAGE(std::string(e.what()).find(fragment) != std::string::npos, e.what());
    }
  };
  RunConfig c = parse("tau = polynomial:1\nnu = polynomial:0\n");
  CHECK_NOTHROW(validate_config(c));
  c.params.m = 0.2;
  expect(c, "-1 < m < 0");
  c.params.m = -0.5;
  c.params.b = c.params.a;
  expect(c, "a < b");
  c.params.b = 1.0;
  c.grid = 1;
  expect(c, "grid");
  c.grid = 5;
  c.quadrature_order = 0;
  expect(c, "quadrature_order");
  c.quadrature_order = kDefaultOrder;
  c.data.erase("nu");
  expect(c, "'nu'");
  CHECK_NOTHROW(validate_parameters(c));
}
