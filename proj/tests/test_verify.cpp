#include <doctest.h>

#include <cmath>

#include "dhyp/errors.hpp"
#include "dhyp/verify.hpp"

using namespace dhyp;
using doctest::Approx;

TEST_CASE("richardson removes the fitted powers") {
  const std::vector<double> eps{1e-2, 1e-3, 1e-4};
  std::vector<double> v;
  for (double e : eps) v.push_back(3.0 + 2.0 * std::pow(e, 0.5) - 7.0 * e);
  CHECK(richardson(eps, v, 0.5, 1.0) == Approx(3.0).epsilon(1e-12));
  CHECK(richardson({1e-2}, {4.0}, 0.5, 1.0) == 4.0);
  CHECK_THROWS_AS(richardson({}, {}, 0.5, 1.0), DomainError);
}

TEST_CASE("residual of an exact solution converges at second order") {
  const SpectralSquare mu{2.0};
  const FieldFn u = [&](double x, double y) { return particular_solution(1.0, 0.5, mu, x, y); };
  CHECK(std::abs(pde_residual_char(u, -0.25, mu, 0.3, 0.7, 1e-3)) < 1e-6);

  // counterexample: smooth but not polynomial, so the truncation error shows
  const ProblemParameters p{-2.0 / 3.0, {1.0}, 0.0, 1.0};
  const FieldFn w = [&](double x, double y) { return counterexample_solution(p, x, y); };
  const auto rep = residual_report(w, -0.25, p.mu, {{0.3, 0.8}, {0.5, 0.7}}, 1e-2);
  CHECK(rep.convergence_order == Approx(2.0).epsilon(0.05));
  CHECK(rep.max_abs() < 1e-4);
}

TEST_CASE("a field that is not a solution keeps its residual") {
  const FieldFn u = [](double x, double y) { return x * x + y; };
  const auto rep = residual_report(u, -0.25, {1.0}, {{0.3, 0.8}}, 1e-3);
  CHECK(rep.max_abs() > 0.1);
}

TEST_CASE("stencil must stay inside the triangle") {
  const FieldFn u = [](double, double) { return 0.0; };
  CHECK_THROWS_AS(pde_residual_char(u, -0.25, {1.0}, 0.5, 0.5005, 1e-3, Triangle{0.0, 1.0}), DomainError);
  CHECK_NOTHROW(pde_residual_char(u, -0.25, {1.0}, 0.3, 0.6, 1e-3, Triangle{0.0, 1.0}));
}

TEST_CASE("original-variable residual") {
  const double m = -0.5;
  const SpectralSquare mu{-1.0};
  const auto U = [&](double x, double y) {
    const auto [xi, eta] = char_coords(x, y, m);
    return particular_solution(0.3, 1.0, mu, xi, eta);
  };
  CHECK(std::abs(pde_residual_orig(U, m, mu, 0.4, 0.5, 1e-3)) < 1e-5);
}

TEST_CASE("limit on the degeneration line for the Cauchy solution") {
  const ProblemParameters p{-0.5, {-4.0}, 0.0, 1.0};
  const Sampler tau = DataFunction::parse("sine:1,1,0").sampler();
  const Sampler nu = DataFunction::parse("exponential:1,1").sampler();
  const FieldFn u = [&](double x, double y) { return cauchy_solution(tau, nu, p, x, y); };
  const auto est = cauchy_data_limit(u, p.m, 0.4, {1e-3, 1e-4, 1e-5});
  CHECK(est.value == Approx(std::exp(0.4)).epsilon(1e-4));
  CHECK_FALSE(est.diverging);
  CHECK(trace_check(u, Edge::diagonal, [&](double x) { return tau(x); }, 10, p) < 1e-8);
}

TEST_CASE("identity suite") {
  IdentitySuiteOptions opt;
  opt.mus = {-4.0, 1.0};
  const auto report = run_identity_suite(opt);
  CHECK(report.results.size() == 4);
  CHECK(report.all_passed());
  for (const auto& r : report.results) CHECK_MESSAGE(r.worst_error <= r.tolerance, r.name);

  opt.corrupt_b = true;
  const auto bad = check_inversion(opt);
  CHECK_FALSE(bad.passed);
  CHECK(bad.worst_error > 1e-3);
}

TEST_CASE("configured problem checks") {
  ProblemData d;
  d.tau = DataFunction::polynomial({0, 0, 1});
  d.nu = DataFunction::polynomial({1});
  const ProblemParameters p{-2.0 / 3.0, {1.0}, 0.0, 1.0};
  const auto rows = verify_problem(ProblemKind::cauchy, d, p, kDefaultOrder, false);
  REQUIRE_FALSE(rows.empty());
  for (const auto& r : rows) CHECK_MESSAGE(r.passed, r.name << " " << r.value);

  VerifyTolerances strict;
  strict.trace = 1e-30;
  strict.residual = 1e-30;
  bool any_failed = false;
  for (const auto& r : verify_problem(ProblemKind::cauchy, d, p, kDefaultOrder, false, strict))
    any_failed = any_failed || !r.passed;
  CHECK(any_failed);
}
