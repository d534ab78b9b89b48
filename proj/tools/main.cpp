// dhyp: evaluate and check solutions of the degenerate hyperbolic problems.
//
//   dhyp coeffs          --config run.conf
//   dhyp solve           --config run.conf [--grid N] > field.csv
//   dhyp verify          --config run.conf
//   dhyp identity-tests  [--order N]
//
// Exit codes: 0 ok/pass, 1 runtime failure, 2 invalid input, 3 a check failed.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "dhyp/config.hpp"
#include "dhyp/errors.hpp"
#include "dhyp/solution_core.hpp"
#include "dhyp/verify.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kRuntime = 1;
constexpr int kInvalid = 2;
constexpr int kFailed = 3;

struct Overrides {
  std::string config_path;
  std::optional<double> m;
  std::optional<double> lambda_squared;
  std::optional<int> grid;
  std::optional<int> order;
  bool corrupt_b = false;
};

dhyp::RunConfig resolve(const Overrides& o) {
  dhyp::RunConfig c = o.config_path.empty() ? dhyp::RunConfig{} : dhyp::load_config(o.config_path);
  if (o.m) c.params.m = *o.m;
  if (o.lambda_squared) c.params.mu.mu = *o.lambda_squared;
  if (o.grid) c.grid = *o.grid;
  if (o.order) c.quadrature_order = *o.order;
  return c;
}

int cmd_coeffs(const dhyp::RunConfig& c) {
  dhyp::validate_parameters(c);
  const auto k = dhyp::derive_coefficients(c.params);
  std::printf("beta   = %.12g\n", k.beta);
  std::printf("kappa1 = %.12g\n", k.kappa1);
  std::printf("kappa2 = %.12g\n", k.kappa2);
  std::printf("kappa3 = %.12g\n", k.kappa3);
  return kOk;
}

int cmd_solve(const dhyp::RunConfig& c) {
  dhyp::validate_config(c);
  const auto u = dhyp::make_solution(c.problem, dhyp::problem_data(c), c.params, c.quadrature_order,
                                     c.normalize_corner);
  const auto field = dhyp::evaluate_field(c.problem, u, c.params, c.grid, c.coordinate_output);
  // the whole field is in hand before anything is written
  std::string out = "coord1,coord2,u\n";
  char row[96];
  for (std::size_t i = 0; i < field.values.size(); ++i) {
    std::snprintf(row, sizeof row, "%.15g,%.15g,%.15g\n", field.points[i].first, field.points[i].second,
                  field.values[i]);
    out += row;
  }
  std::fwrite(out.data(), 1, out.size(), stdout);
  return kOk;
}

int cmd_verify(const dhyp::RunConfig& c) {
  dhyp::validate_config(c);
  const auto rows = dhyp::verify_problem(c.problem, dhyp::problem_data(c), c.params, c.quadrature_order,
                                         c.normalize_corner, c.tolerances);
  int failed = 0;
  std::printf("%-28s %12s %10s  %s\n", "check", "value", "tolerance", "status");
  for (const auto& r : rows) {
    std::printf("%-28s %12.3e %10.1e  %s%s%s\n", r.name.c_str(), r.value, r.tolerance, r.passed ? "ok" : "FAIL",
                r.note.empty() ? "" : "  ", r.note.c_str());
    if (!r.passed) ++failed;
  }
  if (failed == 0) {
    std::printf("PASS\n");
    return kOk;
  }
  std::printf("FAIL: %d checks\n", failed);
  return kFailed;
}

int cmd_identity_tests(const dhyp::RunConfig& c, bool corrupt_b) {
  dhyp::validate_parameters(c);
  dhyp::IdentitySuiteOptions opt;
  opt.order = c.quadrature_order;
  opt.corrupt_b = corrupt_b;
  const auto report = dhyp::run_identity_suite(opt);
  std::printf("%-12s %12s %10s %6s %8s  %s\n", "identity", "worst", "tolerance", "cases", "seconds", "status");
  for (const auto& r : report.results)
    std::printf("%-12s %12.3e %10.1e %6d %8.2f  %s\n", r.name.c_str(), r.worst_error, r.tolerance, r.cases,
                r.seconds, r.passed ? "ok" : "FAIL");
  if (report.all_passed()) {
    std::printf("PASS\n");
    return kOk;
  }
  std::printf("FAIL: %d checks\n", report.failures());
  return kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Solutions of a degenerate hyperbolic equation with a spectral parameter"};
  app.require_subcommand(1);
  Overrides o;

  auto add_common = [&o](CLI::App* sub) {
    sub->add_option("--config", o.config_path, "run configuration (key = value lines)")->check(CLI::ExistingFile);
    sub->add_option("--m", o.m, "degeneration exponent, -1 < m < 0");
    sub->add_option("--lambda-squared", o.lambda_squared, "spectral parameter lambda^2 (signed)");
    sub->add_option("--grid", o.grid, "grid points per axis");
    sub->add_option("--order", o.order, "quadrature order");
  };
  auto* coeffs = app.add_subcommand("coeffs", "print beta and the kappa constants");
  auto* solve = app.add_subcommand("solve", "evaluate the configured solution on the triangle grid (CSV)");
  auto* verify = app.add_subcommand("verify", "residual, trace and degeneration-line checks");
  auto* identities = app.add_subcommand("identity-tests", "operator identities of the construction");
  for (auto* sub : {coeffs, solve, verify, identities}) add_common(sub);
  identities->add_flag("--corrupt-b", o.corrupt_b, "flip the sign of the integral in B (negative control)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInvalid;
  }

  try {
    const dhyp::RunConfig config = resolve(o);
    if (*coeffs) return cmd_coeffs(config);
    if (*solve) return cmd_solve(config);
    if (*verify) return cmd_verify(config);
    return cmd_identity_tests(config, o.corrupt_b);
  } catch (const std::invalid_argument& e) {
    // ConfigError and CompatibilityError: the input is at fault
    std::cerr << "dhyp: invalid input: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "dhyp: " << e.what() << '\n';
    return kRuntime;
  }
}
