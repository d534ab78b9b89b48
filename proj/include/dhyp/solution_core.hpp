#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dhyp/data_function.hpp"
#include "dhyp/quadrature.hpp"
#include "dhyp/special_fn.hpp"

namespace dhyp {

// Equation y^m U_xx - U_yy + lambda^2 y^m U = 0, -1 < m < 0, y > 0, in
// characteristic coordinates xi = x - (2/(m+2)) y^((m+2)/2),
// eta = x + (2/(m+2)) y^((m+2)/2):
//
//   u_{xi eta} - beta/(eta - xi) (u_eta - u_xi) + mu/4 u = 0,
//   beta = m / (2(m+2)),  mu = lambda^2,
//
// on the triangle a <= xi <= eta <= b.

struct ProblemParameters {
  double m = -2.0 / 3.0;
  SpectralSquare mu;
  double a = 0.0;
  double b = 1.0;

  /// Throws DomainError unless -1 < m < 0 and a < b (and all finite).
  void validate() const;
};

struct DerivedCoefficients {
  double beta = 0.0;
  double kappa1 = 0.0;
  double kappa2 = 0.0;
  double kappa3 = 0.0;
};

DerivedCoefficients derive_coefficients(const ProblemParameters& params);

std::pair<double, double> char_coords(double x, double y, double m);
/// Positive branch y >= 0.
std::pair<double, double> inverse_char_coords(double xi, double eta, double m);

enum class End { a, b };
enum class SolutionClass { a2, b2 };  // the classes R_{2a}, R_{2b}

/// tau(x) = tau(k) + sgn(x-k) int_k^x |x-t|^(-2 beta) cj(-beta, mu (x-t)^2) T(t) dt.
double tau_from_T(const Sampler& T, End k, double tau_at_k, const ProblemParameters& params, double x,
                  int order = kDefaultOrder);

/// Solution with trace u(x, x) = tau and degeneration-line value nu. Rejects xi == eta.
double cauchy_solution(const Sampler& tau, const Sampler& nu, const ProblemParameters& params, double xi,
                       double eta, int order = kDefaultOrder);

/// N = T / (2 cos(beta pi)) - kappa2 nu.
Sampler class_n_density(const Sampler& T, const Sampler& nu, const DerivedCoefficients& coeffs);

/// Class representation; the diagonal trace is tau_from_T(T, k, 0, x).
double class_solution(SolutionClass klass, const Sampler& T, const Sampler& nu,
                      const ProblemParameters& params, double xi, double eta, int order = kDefaultOrder);

/// Piecewise Chebyshev interpolant on panels that shrink geometrically toward
/// the chosen ends (ratio 2, down to 1e-13 of the length).
class GradedTable {
 public:
  GradedTable() = default;
  GradedTable(const std::function<double(double)>& f, double lo, double hi, bool grade_lo, bool grade_hi,
              int uniform_panels = 4, int points = 16);
  double operator()(double x) const;
  std::size_t size() const { return values_.size(); }

 private:
  std::vector<double> breaks_;
  std::vector<double> values_;
  int points_ = 0;
};

/// Phi_k = (|x-k|)^(2 beta) S(x) for the corner k: the density solving
///   int_a^x (x-t)^-beta (t-a)^-beta cj(-beta, -mu (x-t)(t-a)) Phi_a(t) dt = phi_a(x)
/// (mirrored for k = b). S is analytic and tabulated.
class PhiCapital {
 public:
  PhiCapital() = default;
  PhiCapital(End corner, double a, double b, double beta, GradedTable regular);
  double operator()(double x) const;
  /// S(x) = |x - corner|^(-2 beta) Phi(x).
  double regular_part(double x) const;
  double exponent() const { return 2.0 * beta_; }
  End corner() const { return corner_; }

 private:
  End corner_ = End::a;
  double a_ = 0.0, b_ = 1.0, beta_ = 0.0;
  GradedTable table_;
};

/// Requires phi(corner) == 0 (CompatibilityError otherwise).
PhiCapital phi_capital(End side, const Sampler& phi, const ProblemParameters& params,
                       int order = kDefaultOrder);

/// The bracket kappa3 nu + 2 cos(beta pi) Phi_a solving the Goursat integral
/// equation (mirrored for class 2b), stored as
///   T(x) = (x-a)^(2 beta) (b-x)^beta That(x)   (class 2a).
class GoursatDensity {
 public:
  double operator()(double x) const;
  double regular_part(double x) const;  // That at x in the class's own (reflected for 2b) frame
  /// Phi of the class corner, tabulated over offsets x - corner in [0, b - a].
  const PhiCapital& phi() const { return phi_; }
  SolutionClass klass() const { return klass_; }

 private:
  friend GoursatDensity goursat_density(SolutionClass, const Sampler&, const Sampler&,
                                        const ProblemParameters&, int);
  friend class Goursat;
  SolutionClass klass_ = SolutionClass::a2;
  double a_ = 0.0, b_ = 1.0, beta_ = 0.0;
  PhiCapital phi_;
  // That over offsets from the class corner
  GradedTable hat_;
};

/// Requires phi_a(b) == phi_b(a) to 1e-10 and phi at the class corner == 0.
GoursatDensity goursat_density(SolutionClass side, const Sampler& phi_a, const Sampler& phi_b,
                               const ProblemParameters& params, int order = kDefaultOrder);

/// Evaluators that build their densities once and then serve many points.
class CauchyGoursat {
 public:
  CauchyGoursat(SolutionClass klass, const Sampler& nu, const Sampler& phi, const ProblemParameters& params,
                int order = kDefaultOrder);
  double operator()(double xi, double eta) const;

 private:
  SolutionClass klass_;
  ProblemParameters params_;
  DerivedCoefficients coeffs_;
  Sampler nu_;  // class frame, corner at the origin
  PhiCapital phi_;
  int order_;
};

class Goursat {
 public:
  Goursat(SolutionClass klass, const Sampler& phi_a, const Sampler& phi_b, const ProblemParameters& params,
          int order = kDefaultOrder);
  double operator()(double xi, double eta) const;
  const GoursatDensity& density() const { return density_; }

 private:
  SolutionClass klass_;
  ProblemParameters params_;
  double beta_;
  GoursatDensity density_;
  int order_;
};

double cauchy_goursat_solution(SolutionClass klass, const Sampler& nu, const Sampler& phi,
                               const ProblemParameters& params, double xi, double eta,
                               int order = kDefaultOrder);
double goursat_solution(SolutionClass klass, const Sampler& phi_a, const Sampler& phi_b,
                        const ProblemParameters& params, double xi, double eta, int order = kDefaultOrder);

/// c1 C(sigma) + c2 S(sigma), sigma = (xi+eta)/2, with C'' = -mu C, S'' = -mu S,
/// C(0) = 1, C'(0) = 0, S(0) = 0, S'(0) = 1.
double particular_solution(double c1, double c2, SpectralSquare mu, double xi, double eta);
/// c1 C(x) + c2 S(x) as a catalog function.
DataFunction particular_profile(double c1, double c2, SpectralSquare mu);

/// [(xi-a)(eta-a)]^-beta cj(-beta, mu (xi-a)(eta-a)); 0 at xi == a.
double counterexample_solution(const ProblemParameters& params, double xi, double eta);

// ---- problem assembly --------------------------------------------------

enum class ProblemKind {
  cauchy,
  cauchy_goursat_2a,
  cauchy_goursat_2b,
  goursat_2a,
  goursat_2b,
  counterexample,
  particular
};

std::string to_string(ProblemKind kind);
/// Accepts the CLI spellings ("cauchy-goursat-2a", ...). Throws std::invalid_argument.
ProblemKind parse_problem_kind(const std::string& name);

struct ProblemData {
  std::optional<DataFunction> tau, nu, phi_a, phi_b;
  double c1 = 0.0, c2 = 0.0;  // particular solution
};

/// Names of the data bindings a problem needs.
std::vector<std::string> required_data(ProblemKind kind);

/// Particular solution w subtracted so that the data vanish at the class
/// corner: w(k, k) equals the corner value, with the minimum-norm (c1, c2).
struct CornerShift {
  double c1 = 0.0, c2 = 0.0;
};
CornerShift corner_shift(double corner_value, double corner, SpectralSquare mu);

using FieldFn = std::function<double(double xi, double eta)>;

/// Builds an evaluator for the problem. With normalize_corner the data are
/// shifted by corner_shift and the particular solution is added back;
/// otherwise nonzero corner data raise CompatibilityError.
FieldFn make_solution(ProblemKind kind, const ProblemData& data, const ProblemParameters& params,
                      int order = kDefaultOrder, bool normalize_corner = false);

enum class CoordinateSystem { characteristic, original };

struct SolutionField {
  CoordinateSystem coordinate_system = CoordinateSystem::characteristic;
  std::vector<std::pair<double, double>> points;
  std::vector<double> values;
  ProblemParameters parameters;
  ProblemKind problem_kind = ProblemKind::cauchy;
};

/// Triangle grid inset by delta = 1e-3 (b-a): xi_i = a + delta + i h,
/// eta_j = a + 2 delta + j h, i <= j, h = (b - a - 3 delta)/(n - 1); row-major
/// in xi then eta, n(n+1)/2 points.
std::vector<std::pair<double, double>> triangle_grid(const ProblemParameters& params, int n);

SolutionField evaluate_field(ProblemKind kind, const FieldFn& u, const ProblemParameters& params, int n,
                             CoordinateSystem system);

}  // namespace dhyp
