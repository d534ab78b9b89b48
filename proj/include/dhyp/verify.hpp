#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dhyp/solution_core.hpp"

namespace dhyp {

// Finite-difference checks that use only point values of a field, so they
// stay independent of the analytic machinery they test.

struct Triangle {
  double a = 0.0;
  double b = 1.0;
};

/// Centered-difference left side of the characteristic form. If a triangle
/// is given, the 3x3 stencil must lie inside it (DomainError otherwise).
double pde_residual_char(const FieldFn& u, double beta, SpectralSquare mu, double xi, double eta, double h,
                         std::optional<Triangle> domain = std::nullopt);

/// y^m U_xx - U_yy + mu y^m U by centered second differences; needs y - h > 0.
double pde_residual_orig(const std::function<double(double, double)>& U, double m, SpectralSquare mu, double x,
                         double y, double h);

struct ResidualReport {
  std::vector<std::pair<double, double>> points;
  std::vector<double> residuals;        // at step h
  std::vector<double> residuals_half;   // at step h/2
  double fd_step = 0.0;
  double convergence_order = 0.0;       // log2(max|r_h| / max|r_{h/2}|)
  double max_abs() const;
};

ResidualReport residual_report(const FieldFn& u, double beta, SpectralSquare mu,
                               const std::vector<std::pair<double, double>>& points, double h,
                               std::optional<Triangle> domain = std::nullopt);

struct LimitEstimate {
  double value = 0.0;
  std::vector<double> raw;  // scaled differences at each epsilon
  bool diverging = false;   // successive raw values moved apart
};

/// Fits c0 + c1 eps^p1 + c2 eps^p2 through three samples and returns c0
/// (two samples: drops the p2 term; one sample: returns it).
double richardson(const std::vector<double>& eps, const std::vector<double>& values, double p1, double p2);

/// ((m+2)/4)^(2 beta) lim (eta-xi)^(2 beta) (u_xi - u_eta) at eta = xi + eps,
/// derivatives by 5-point central differences with step eps/10, extrapolated
/// with the exponents 1 + 2 beta and 1.
LimitEstimate cauchy_data_limit(const FieldFn& u, double m, double xi, const std::vector<double>& epsilons);

enum class Edge { xi_equals_a, eta_equals_b, diagonal };

/// Sup-norm trace error over sample_count equispaced points. The diagonal
/// uses u(x - eps/2, x + eps/2), eps in {1e-3, 1e-4, 1e-5}(b-a), extrapolated.
double trace_check(const FieldFn& u, Edge edge, const std::function<double(double)>& expected, int sample_count,
                   const ProblemParameters& params);

struct IdentityResult {
  std::string name;
  double worst_error = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  int cases = 0;
  double seconds = 0.0;
};

struct IdentityTolerances {
  double inversion = 1e-8;
  double f_k = 1e-10;
  double kernel_l = 1e-9;
  double lemma1 = 1e-8;
};

struct IdentitySuiteOptions {
  std::vector<double> mus{-4.0, -1.0, 0.0, 1.0, 4.0};
  int order = kDefaultOrder;
  bool corrupt_b = false;  // negative control: B f = f - (integral)
  IdentityTolerances tolerances;
};

struct IdentityReport {
  std::vector<IdentityResult> results;
  bool all_passed() const;
  int failures() const;
};

IdentityResult check_inversion(const IdentitySuiteOptions& opt);
IdentityResult check_f_k(const IdentitySuiteOptions& opt);
IdentityResult check_kernel_l(const IdentitySuiteOptions& opt);
IdentityResult check_lemma1(const IdentitySuiteOptions& opt);
IdentityReport run_identity_suite(const IdentitySuiteOptions& opt = {});

// ---- checks of a configured problem ----------------------------------------

struct VerifyTolerances {
  double residual = 1e-5;        // max |residual| at h = 1e-3 (b-a)
  double order_band = 0.3;       // |order - 2| allowed when the residual is above the floor
  double residual_floor = 1e-9;  // below this the order is not meaningful
  double trace = 1e-6;
  double limit = 1e-3;
};

struct CheckRow {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string note;
};

/// Residual convergence, edge traces and the condition on the degeneration
/// line for one problem, as applicable to its kind.
std::vector<CheckRow> verify_problem(ProblemKind kind, const ProblemData& data, const ProblemParameters& params,
                                     int order, bool normalize_corner, const VerifyTolerances& tol = {});

}  // namespace dhyp
