#include "dhyp/solution_core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "dhyp/errors.hpp"
#include "kernels.hpp"

namespace dhyp {

namespace detail {

int panel_order(int order) { return std::max(16, order / 2); }

double j_part(const Density& d, double a, double b, double beta, double mu, double xi, double eta, int order) {
  if (xi <= a) return 0.0;
  const bool merged = (eta == xi);
  const bool cancel_b = (d.e_b != 0.0 && eta == b && d.e_b == beta);
  Grading grading;
  grading.panel_order = panel_order(order);
  if (!d.regular) grading.lower_gap = 0.0;
  if (!merged) grading.upper_gap = eta - xi;
  if (d.e_b != 0.0 && !cancel_b) grading.upper_gap = std::min(grading.upper_gap, b - xi);
  auto f = [&](double t) {
    double v = bessel_clifford_sq(-beta, mu * (eta - t) * (xi - t)) * d.g(t);
    if (!merged && !cancel_b) v *= std::pow(eta - t, -beta);
    if (d.e_b != 0.0 && !cancel_b) v *= std::pow(b - t, d.e_b);
    return v;
  };
  return integrate_graded(f, a, xi, merged ? -2.0 * beta : -beta, d.e_a, order, grading);
}

double i_part(const Density& d, double a, double b, double beta, double mu, double xi, double eta, int order) {
  if (eta <= xi) return 0.0;
  const bool merged = (xi == a);
  Grading grading;
  grading.panel_order = panel_order(order);
  if (merged) {
    if (!d.regular) grading.lower_gap = 0.0;
  } else if (d.e_a != 0.0 || !d.regular) {
    grading.lower_gap = xi - a;
  }
  if (d.e_b != 0.0 || !d.regular) grading.upper_gap = b - eta;
  auto f = [&](double t) {
    double v = bessel_clifford_sq(-beta, -mu * (eta - t) * (t - xi)) * d.g(t);
    if (!merged && d.e_a != 0.0) v *= std::pow(t - a, d.e_a);
    if (d.e_b != 0.0) v *= std::pow(b - t, d.e_b);
    return v;
  };
  return integrate_graded(f, xi, eta, -beta, merged ? d.e_a - beta : -beta, order, grading);
}

}  // namespace detail

void ProblemParameters::validate() const {
  if (!std::isfinite(m) || !(m > -1.0 && m < 0.0))
    throw DomainError("m must satisfy -1 < m < 0, got " + std::to_string(m));
  if (!std::isfinite(mu.mu)) throw DomainError("lambda_squared must be finite");
  if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) throw DomainError("interval must satisfy a < b");
}

DerivedCoefficients derive_coefficients(const ProblemParameters& params) {
  params.validate();
  DerivedCoefficients c;
  const double beta = params.m / (2.0 * (params.m + 2.0));
  c.beta = beta;
  const double g1 = gamma_fn(1.0 + beta);
  const double g2 = gamma_fn(1.0 - beta);
  c.kappa1 = gamma_fn(2.0 + 2.0 * beta) / (g1 * g1);
  c.kappa2 = std::pow(2.0 * (1.0 - 2.0 * beta), 2.0 * beta - 1.0) * gamma_fn(2.0 - 2.0 * beta) / (g2 * g2);
  c.kappa3 = 2.0 * c.kappa2 * std::cos(beta * std::numbers::pi);
  return c;
}

std::pair<double, double> char_coords(double x, double y, double m) {
  if (y < 0.0) throw DomainError("char_coords: y must be non-negative");
  const double s = 2.0 / (m + 2.0) * std::pow(y, 0.5 * (m + 2.0));
  return {x - s, x + s};
}

std::pair<double, double> inverse_char_coords(double xi, double eta, double m) {
  if (eta < xi) throw DomainError("inverse_char_coords: eta must be >= xi");
  const double x = 0.5 * (xi + eta);
  const double y = std::pow(0.25 * (m + 2.0) * (eta - xi), 2.0 / (m + 2.0));
  return {x, y};
}

double tau_from_T(const Sampler& T, End k, double tau_at_k, const ProblemParameters& params, double x,
                  int order) {
  const double beta = derive_coefficients(params).beta;
  const double mu = params.mu.mu;
  if (x < params.a || x > params.b) throw DomainError("tau_from_T: x outside [a, b]");
  Grading grading;
  grading.panel_order = detail::panel_order(order);
  if (!T.regular()) grading.lower_gap = grading.upper_gap = 0.0;
  auto f = [&](double t) { return bessel_clifford_sq(-beta, mu * (x - t) * (x - t)) * T(t); };
  if (k == End::a) return tau_at_k + integrate_graded(f, params.a, x, -2.0 * beta, 0.0, order, grading);
  return tau_at_k + integrate_graded(f, x, params.b, 0.0, -2.0 * beta, order, grading);
}

double cauchy_solution(const Sampler& tau, const Sampler& nu, const ProblemParameters& params, double xi,
                       double eta, int order) {
  const auto c = derive_coefficients(params);
  if (!(params.a <= xi && xi < eta && eta <= params.b))
    throw DomainError("cauchy_solution needs a <= xi < eta <= b");
  const double beta = c.beta;
  const double mu = params.mu.mu;
  const double scale = std::pow(eta - xi, -2.0 * beta - 1.0);
  const double tail = 1.0 / (2.0 * (1.0 + beta) * (1.0 + 2.0 * beta));
  auto r_of = [&](double t) { return (eta - t) * (t - xi); };
  const double i_tau = integrate_weighted(
      [&](double t) {
        const double r = r_of(t);
        return (bessel_clifford_sq(beta, -mu * r) + mu * r * tail * bessel_clifford_sq(1.0 + beta, -mu * r)) *
               tau(t);
      },
      xi, eta, beta, beta, order);
  const double i_dtau = integrate_weighted(
      [&](double t) {
        return bessel_clifford_sq(beta, -mu * r_of(t)) * (eta + xi - 2.0 * t) * tau.derivative(t, 1);
      },
      xi, eta, beta, beta, order);
  const double i_nu = integrate_weighted(
      [&](double t) { return bessel_clifford_sq(-beta, -mu * r_of(t)) * nu(t); }, xi, eta, -beta, -beta, order);
  return c.kappa1 * scale * i_tau - c.kappa1 / (2.0 * (1.0 + 2.0 * beta)) * scale * i_dtau - c.kappa2 * i_nu;
}

Sampler class_n_density(const Sampler& T, const Sampler& nu, const DerivedCoefficients& coeffs) {
  const double inv = 1.0 / (2.0 * std::cos(coeffs.beta * std::numbers::pi));
  const double k2 = coeffs.kappa2;
  return Sampler([T, nu, inv, k2](double x, int) { return inv * T(x) - k2 * nu(x); }, 0,
                 T.regular() && nu.regular());
}

double class_solution(SolutionClass klass, const Sampler& T, const Sampler& nu, const ProblemParameters& params,
                      double xi, double eta, int order) {
  const auto c = derive_coefficients(params);
  if (!(params.a <= xi && xi <= eta && eta <= params.b))
    throw DomainError("class_solution needs a <= xi <= eta <= b");
  if (klass == SolutionClass::b2) {
    const double s = params.a + params.b;
    return class_solution(SolutionClass::a2, reflected(T, params.a, params.b), reflected(nu, params.a, params.b),
                          params, s - eta, s - xi, order);
  }
  const Sampler N = class_n_density(T, nu, c);
  const detail::Density dT{[&](double t) { return T(t); }, T.regular()};
  const detail::Density dN{[&](double t) { return N(t); }, N.regular()};
  return detail::j_part(dT, params.a, params.b, c.beta, params.mu.mu, xi, eta, order) +
         detail::i_part(dN, params.a, params.b, c.beta, params.mu.mu, xi, eta, order);
}

// ---- tables -------------------------------------------------------------

namespace {

void graded_side(double end, double length, int sign, std::vector<double>& out) {
  // distances from `end`, doubling, closing exactly at `length`
  double d = std::max(1e-13 * length, 1e-15 * std::abs(end));
  while (d < length) {
    out.push_back(end + sign * d);
    d *= 2.0;
  }
}

}  // namespace

GradedTable::GradedTable(const std::function<double(double)>& f, double lo, double hi, bool grade_lo,
                         bool grade_hi, int uniform_panels, int points)
    : points_(points) {
  if (!(hi > lo)) throw DomainError("GradedTable: empty interval");
  const double L = hi - lo;
  breaks_.push_back(lo);
  if (grade_lo && grade_hi) {
    const double mid = lo + 0.5 * L;
    graded_side(lo, 0.5 * L, +1, breaks_);
    breaks_.push_back(mid);
    std::vector<double> right;
    graded_side(hi, 0.5 * L, -1, right);
    breaks_.insert(breaks_.end(), right.rbegin(), right.rend());
  } else if (grade_lo) {
    graded_side(lo, L, +1, breaks_);
  } else if (grade_hi) {
    std::vector<double> right;
    graded_side(hi, L, -1, right);
    breaks_.insert(breaks_.end(), right.rbegin(), right.rend());
  } else {
    for (int k = 1; k < uniform_panels; ++k) breaks_.push_back(lo + L * k / uniform_panels);
  }
  breaks_.push_back(hi);
  values_.reserve((breaks_.size() - 1) * points_);
  for (std::size_t p = 0; p + 1 < breaks_.size(); ++p) {
    const double mid = 0.5 * (breaks_[p] + breaks_[p + 1]);
    const double half = 0.5 * (breaks_[p + 1] - breaks_[p]);
    for (int j = 0; j < points_; ++j)
      values_.push_back(f(mid + half * std::cos((2 * j + 1) * std::numbers::pi / (2 * points_))));
  }
}

double GradedTable::operator()(double x) const {
  if (values_.empty()) return 0.0;
  auto it = std::upper_bound(breaks_.begin(), breaks_.end(), x);
  std::size_t p = it == breaks_.begin() ? 0 : static_cast<std::size_t>(it - breaks_.begin()) - 1;
  p = std::min(p, breaks_.size() - 2);
  const double mid = 0.5 * (breaks_[p] + breaks_[p + 1]);
  const double half = 0.5 * (breaks_[p + 1] - breaks_[p]);
  const double u = (x - mid) / half;
  const double* v = values_.data() + p * points_;
  double num = 0.0, den = 0.0;
  for (int j = 0; j < points_; ++j) {
    const double theta = (2 * j + 1) * std::numbers::pi / (2 * points_);
    const double node = std::cos(theta);
    const double w = (j % 2 ? -1.0 : 1.0) * std::sin(theta);
    const double diff = u - node;
    if (diff == 0.0) return v[j];
    num += w / diff * v[j];
    den += w / diff;
  }
  return num / den;
}

// ---- particular solution and counterexample -----------------------------

namespace {

std::pair<double, double> even_odd(SpectralSquare mu, double s) {
  if (mu.mu > 0.0) {
    const double k = std::sqrt(mu.mu);
    return {std::cos(k * s), std::sin(k * s) / k};
  }
  if (mu.mu < 0.0) {
    const double k = std::sqrt(-mu.mu);
    return {std::cosh(k * s), std::sinh(k * s) / k};
  }
  return {1.0, s};
}

}  // namespace

double particular_solution(double c1, double c2, SpectralSquare mu, double xi, double eta) {
  const auto [C, S] = even_odd(mu, 0.5 * (xi + eta));
  return c1 * C + c2 * S;
}

DataFunction particular_profile(double c1, double c2, SpectralSquare mu) {
  if (mu.mu > 0.0) {
    const double k = std::sqrt(mu.mu);
    return DataFunction(DataTerm{DataKind::cosine, {c1, k, 0.0}}) +
           DataFunction(DataTerm{DataKind::sine, {c2 / k, k, 0.0}});
  }
  if (mu.mu < 0.0) {
    const double k = std::sqrt(-mu.mu);
    return DataFunction(DataTerm{DataKind::exponential, {0.5 * c1 + 0.5 * c2 / k, k}}) +
           DataFunction(DataTerm{DataKind::exponential, {0.5 * c1 - 0.5 * c2 / k, -k}});
  }
  return DataFunction::polynomial({c1, c2});
}

CornerShift corner_shift(double corner_value, double corner, SpectralSquare mu) {
  const auto [C, S] = even_odd(mu, corner);
  const double n2 = C * C + S * S;
  return {corner_value * C / n2, corner_value * S / n2};
}

double counterexample_solution(const ProblemParameters& params, double xi, double eta) {
  const double beta = derive_coefficients(params).beta;
  if (xi < params.a || eta < xi) throw DomainError("counterexample_solution: point outside the triangle");
  const double p = (xi - params.a) * (eta - params.a);
  if (p == 0.0) return 0.0;
  return std::pow(p, -beta) * bessel_clifford_sq(-beta, params.mu.mu * p);
}

// ---- assembly -------------------------------------------------------------

std::string to_string(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::cauchy: return "cauchy";
    case ProblemKind::cauchy_goursat_2a: return "cauchy-goursat-2a";
    case ProblemKind::cauchy_goursat_2b: return "cauchy-goursat-2b";
    case ProblemKind::goursat_2a: return "goursat-2a";
    case ProblemKind::goursat_2b: return "goursat-2b";
    case ProblemKind::counterexample: return "counterexample";
    case ProblemKind::particular: return "particular";
  }
  return "?";
}

ProblemKind parse_problem_kind(const std::string& name) {
  for (auto k : {ProblemKind::cauchy, ProblemKind::cauchy_goursat_2a, ProblemKind::cauchy_goursat_2b,
                 ProblemKind::goursat_2a, ProblemKind::goursat_2b, ProblemKind::counterexample,
                 ProblemKind::particular})
    if (to_string(k) == name) return k;
  throw std::invalid_argument("unknown problem '" + name + "'");
}

std::vector<std::string> required_data(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::cauchy: return {"tau", "nu"};
    case ProblemKind::cauchy_goursat_2a: return {"nu", "phi_a"};
    case ProblemKind::cauchy_goursat_2b: return {"nu", "phi_b"};
    case ProblemKind::goursat_2a:
    case ProblemKind::goursat_2b: return {"phi_a", "phi_b"};
    case ProblemKind::counterexample:
    case ProblemKind::particular: return {};
  }
  return {};
}

namespace {

const DataFunction& need(const std::optional<DataFunction>& f, const char* name) {
  if (!f) throw std::invalid_argument(std::string("missing data binding '") + name + "'");
  return *f;
}

}  // namespace

FieldFn make_solution(ProblemKind kind, const ProblemData& data, const ProblemParameters& params, int order,
                      bool normalize_corner) {
  params.validate();
  const double a = params.a, b = params.b;
  const SpectralSquare mu = params.mu;

  switch (kind) {
    case ProblemKind::cauchy: {
      auto tau = need(data.tau, "tau").sampler();
      auto nu = need(data.nu, "nu").sampler();
      return [=](double xi, double eta) { return cauchy_solution(tau, nu, params, xi, eta, order); };
    }
    case ProblemKind::counterexample:
      return [=](double xi, double eta) { return counterexample_solution(params, xi, eta); };
    case ProblemKind::particular:
      return [c1 = data.c1, c2 = data.c2, mu](double xi, double eta) {
        return particular_solution(c1, c2, mu, xi, eta);
      };
    default: break;
  }

  const bool class_a = kind == ProblemKind::cauchy_goursat_2a || kind == ProblemKind::goursat_2a;
  const bool goursat = kind == ProblemKind::goursat_2a || kind == ProblemKind::goursat_2b;
  std::optional<DataFunction> phi_a = data.phi_a, phi_b = data.phi_b;
  const double corner = class_a ? a : b;
  const double corner_value = class_a ? need(phi_a, "phi_a")(a) : need(phi_b, "phi_b")(b);

  CornerShift shift;
  if (normalize_corner && corner_value != 0.0) {
    shift = corner_shift(corner_value, corner, mu);
    const DataFunction w = particular_profile(shift.c1, shift.c2, mu);
    if (phi_a) phi_a = *phi_a - w.composed_affine(0.5, 0.5 * a);
    if (phi_b) phi_b = *phi_b - w.composed_affine(0.5, 0.5 * b);
  }
  const SolutionClass klass = class_a ? SolutionClass::a2 : SolutionClass::b2;

  FieldFn base;
  if (goursat) {
    auto g = std::make_shared<const Goursat>(klass, need(phi_a, "phi_a").sampler(), need(phi_b, "phi_b").sampler(),
                                             params, order);
    base = [g](double xi, double eta) { return (*g)(xi, eta); };
  } else {
    const DataFunction& phi = class_a ? need(phi_a, "phi_a") : need(phi_b, "phi_b");
    auto cg = std::make_shared<const CauchyGoursat>(klass, need(data.nu, "nu").sampler(), phi.sampler(), params,
                                                    order);
    base = [cg](double xi, double eta) { return (*cg)(xi, eta); };
  }
  if (shift.c1 == 0.0 && shift.c2 == 0.0) return base;
  return [base, shift, mu](double xi, double eta) {
    return base(xi, eta) + particular_solution(shift.c1, shift.c2, mu, xi, eta);
  };
}

std::vector<std::pair<double, double>> triangle_grid(const ProblemParameters& params, int n) {
  params.validate();
  if (n < 2) throw DomainError("grid must be >= 2");
  const double L = params.b - params.a;
  const double delta = 1e-3 * L;
  const double h = (L - 3.0 * delta) / (n - 1);
  std::vector<std::pair<double, double>> pts;
  pts.reserve(static_cast<std::size_t>(n) * (n + 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) pts.emplace_back(params.a + delta + i * h, params.a + 2.0 * delta + j * h);
  return pts;
}

SolutionField evaluate_field(ProblemKind kind, const FieldFn& u, const ProblemParameters& params, int n,
                             CoordinateSystem system) {
  SolutionField field;
  field.coordinate_system = system;
  field.parameters = params;
  field.problem_kind = kind;
  for (const auto& [xi, eta] : triangle_grid(params, n)) {
    field.values.push_back(u(xi, eta));
    field.points.push_back(system == CoordinateSystem::characteristic ? std::make_pair(xi, eta)
                                                                      : inverse_char_coords(xi, eta, params.m));
  }
  return field;
}

}  // namespace dhyp
