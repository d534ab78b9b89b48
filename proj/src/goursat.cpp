// Densities of the characteristic problems. Everything is computed in the
// frame of class 2a (corner a); class 2b is its reflection t -> a + b - t,
// (xi, eta) -> (a + b - eta, a + b - xi), which leaves the equation and the
// condition on the degeneration line invariant. The frame is also shifted so
// that its corner sits at the origin: offsets from the corner then keep full
// relative precision, which the strongly weighted integrals there need.

#include <cmath>
#include <limits>
#include <numbers>

#include "dhyp/errors.hpp"
#include "dhyp/solution_core.hpp"
#include "kernels.hpp"

namespace dhyp {
namespace {

constexpr double kCornerTolerance = 1e-10;

void require_corner_zero(const Sampler& phi, double corner) {
  const double v = phi(corner);
  if (std::abs(v) > kCornerTolerance)
    throw CompatibilityError("data must vanish at the anchoring corner (value " + std::to_string(v) +
                             "); enable corner normalization to shift it");
}

// S(t) = (t-a)^(-2 beta) Phi_a(t) with
//   G(s) = (s-a)^-beta D_{a+}^{1-beta} phi(s)
//        = [phi'(a) + (s-a)^-beta int_a^s (s-u)^beta phi''(u) du] / Gamma(1+beta)
//   S(t) = [G(t) - (t-a)^-beta int_a^t (s-a)^beta G(s) mu (a-s) cj'(0, mu (t-a)(t-s)) ds] / Gamma(1-beta)
// Both pieces are analytic in t when phi is.
GradedTable phi_regular_table(const Sampler& phi, double a, double b, double beta, double mu, int order) {
  const double rg1 = rgamma(1.0 + beta);
  const double rg2 = rgamma(1.0 - beta);
  const double d1 = phi.derivative(a, 1);
  auto G = [&](double s) {
    if (s == a) return d1 * rg1;
    const double tail =
        integrate_weighted([&](double u) { return phi.derivative(u, 2); }, a, s, beta, 0.0, order);
    return (d1 + std::pow(s - a, -beta) * tail) * rg1;
  };
  auto S = [&](double t) {
    double v = G(t);
    if (mu != 0.0 && t > a) {
      const double corr = integrate_weighted(
          [&](double s) { return G(s) * mu * (a - s) * bessel_clifford_sq_deriv(0.0, mu * (t - a) * (t - s)); }, a,
          t, 0.0, beta, order);
      v -= std::pow(t - a, -beta) * corr;
    }
    return v * rg2;
  };
  return GradedTable(S, a, b, false, false, 8, 16);
}

}  // namespace

PhiCapital::PhiCapital(End corner, double a, double b, double beta, GradedTable regular)
    : corner_(corner), a_(a), b_(b), beta_(beta), table_(std::move(regular)) {}

double PhiCapital::regular_part(double x) const {
  return corner_ == End::a ? table_(x) : table_(a_ + b_ - x);
}

double PhiCapital::operator()(double x) const {
  const double d = corner_ == End::a ? x - a_ : b_ - x;
  const double s = regular_part(x);
  if (d == 0.0) return s == 0.0 ? 0.0 : std::copysign(std::numeric_limits<double>::infinity(), s);
  return std::pow(d, 2.0 * beta_) * s;
}

PhiCapital phi_capital(End side, const Sampler& phi, const ProblemParameters& params, int order) {
  const auto c = derive_coefficients(params);
  if (phi.max_order() < 2) throw DerivativeUnavailable("phi_capital needs two derivatives of the data");
  const Sampler framed = side == End::a ? phi : reflected(phi, params.a, params.b);
  require_corner_zero(framed, params.a);
  return PhiCapital(side, params.a, params.b, c.beta,
                    phi_regular_table(framed, params.a, params.b, c.beta, params.mu.mu, order));
}

// ---- Goursat density ------------------------------------------------------
//
// With Phi_a = (t-a)^(2 beta) S known, the bracket T solves
//   int_a^x (x-t)^-beta (b-t)^-beta cj(-beta, mu (b-t)(x-t)) T dt = phi_b(x) - V(x),
//   V(x) = int_x^b (b-t)^-beta (t-x)^-beta cj(-beta, -mu (b-t)(t-x)) Phi_a dt.
// By the bridge identity V = Gamma(1-beta) D_{b-}^{beta-1} h with
//   h = B_{bbx}[(b-x)^-beta Phi_a],
// and inverting the left-sided operator gives T = (b-x)^beta A_{abx}[psi],
//   psi = D_{a+}^{1-beta} phi_b / Gamma(1-beta) - D_{a+}^{1-beta} D_{b-}^{beta-1} h.
// The composition D_{a+}^{1-beta} D_{b-}^{beta-1} is evaluated in closed form,
//   D_{a+}^{s} D_{b-}^{-s} h(x) = cos(pi s) h(x)
//       + sin(pi s)/pi  PV int_a^b ((t-a)/(x-a))^s h(t) / (t-x) dt,
// and the (x-a)^(beta-1) terms cancel exactly when phi_a(b) == phi_b(a).
// h, psi and T are tabulated with their (x-a)^(2 beta) factor removed.

GoursatDensity goursat_density(SolutionClass side, const Sampler& phi_a_in, const Sampler& phi_b_in,
                               const ProblemParameters& params, int order) {
  const auto c = derive_coefficients(params);
  if (phi_a_in.max_order() < 2 || phi_b_in.max_order() < 2)
    throw DerivativeUnavailable("goursat_density needs two derivatives of the data");
  const double gap = phi_a_in(params.b) - phi_b_in(params.a);
  if (std::abs(gap) > kCornerTolerance)
    throw CompatibilityError("corner values differ: phi_a(b) - phi_b(a) = " + std::to_string(gap));

  // class 2b: swap the roles of the two characteristics in the reflected frame
  const bool a2 = side == SolutionClass::a2;
  const Sampler phi_a = shifted(a2 ? phi_a_in : reflected(phi_b_in, params.a, params.b), params.a);
  const Sampler phi_b = shifted(a2 ? phi_b_in : reflected(phi_a_in, params.a, params.b), params.a);
  const double a = 0.0, b = params.b - params.a, beta = c.beta, mu = params.mu.mu;

  GoursatDensity out;
  out.klass_ = side;
  out.a_ = params.a;
  out.b_ = params.b;
  out.beta_ = beta;
  require_corner_zero(phi_a, a);
  out.phi_ = PhiCapital(End::a, a, b, beta, phi_regular_table(phi_a, a, b, beta, mu, order));
  const PhiCapital& Phi = out.phi_;
  const int po = detail::panel_order(order);

  // h(t) (t-a)^(-2 beta)
  auto h_hat = [&](double t) {
    double v = std::pow(b - t, -beta) * Phi.regular_part(t);
    if (mu == 0.0 || t >= b) return v;
    Grading g;
    g.lower_gap = t - a;
    g.panel_order = po;
    const double W = integrate_graded(
        [&](double s) {
          return std::pow(s - a, 2.0 * beta) * Phi.regular_part(s) * mu *
                 bessel_clifford_sq_deriv(0.0, mu * (b - s) * (t - s));
        },
        t, b, 1.0 - beta, 0.0, order, g);
    return v - std::pow(t - a, -2.0 * beta) * W;
  };
  const GradedTable hh(h_hat, a, b, true, true);

  // PV int_a^b (t-a)^-beta h(t) / (t-x) dt with g(t) = (t-a)^beta hh(t)
  auto pv2 = [&](double x) {
    const double gx = std::pow(x - a, beta) * hh(x);
    Grading left;
    left.lower_gap = 0.0;
    left.upper_gap = b - x;
    left.panel_order = po;
    const double i1 = integrate_graded(
        [&](double t) { return t == x ? 0.0 : (hh(t) - gx * std::pow(t - a, -beta)) / (t - x); }, a, x, 0.0, beta,
        order, left);
    Grading right;
    right.lower_gap = x - a;
    right.upper_gap = 0.0;
    right.panel_order = po;
    const double i2 = integrate_graded(
        [&](double t) { return t == x ? 0.0 : (std::pow(t - a, beta) * hh(t) - gx) / (t - x); }, x, b, 0.0, 0.0,
        order, right);
    return i1 + i2 + gx * std::log((b - x) / (x - a));
  };

  const double rg = rgamma(1.0 + beta) * rgamma(1.0 - beta);
  const double cb = std::cos(std::numbers::pi * beta);
  const double sb = std::sin(std::numbers::pi * beta) / std::numbers::pi;
  const double db1 = phi_b.derivative(a, 1);
  // psi(x) (x-a)^(-2 beta)
  auto psi_hat = [&](double x) {
    const double tail =
        integrate_weighted([&](double u) { return phi_b.derivative(u, 2); }, a, x, beta, 0.0, order);
    const double frac = (db1 * std::pow(x - a, -beta) + std::pow(x - a, -2.0 * beta) * tail) * rg;
    return frac + cb * hh(x) - sb * std::pow(x - a, -beta) * pv2(x);
  };
  const GradedTable ph(psi_hat, a, b, true, true);

  // T(x) (x-a)^(-2 beta) (b-x)^(-beta) = A_{abx}[psi](x) (x-a)^(-2 beta)
  auto t_hat = [&](double x) {
    double v = ph(x);
    if (mu == 0.0) return v;
    Grading g;
    g.lower_gap = 0.0;
    g.upper_gap = b - x;
    g.panel_order = po;
    const double I = integrate_graded(
        [&](double s) { return ph(s) * mu * (b - s) * bessel_clifford_sq_deriv(0.0, mu * (x - b) * (x - s)); }, a,
        x, 0.0, 2.0 * beta, order, g);
    return v - std::pow(x - a, -2.0 * beta) * I;
  };
  out.hat_ = GradedTable(t_hat, a, b, true, true);
  return out;
}

double GoursatDensity::regular_part(double x) const { return hat_(x - a_); }

double GoursatDensity::operator()(double x) const {
  const double t = klass_ == SolutionClass::a2 ? x - a_ : b_ - x;
  const double L = b_ - a_;
  if (t <= 0.0 || t >= L) return std::numeric_limits<double>::quiet_NaN();
  return std::pow(t, 2.0 * beta_) * std::pow(L - t, beta_) * hat_(t);
}

// ---- evaluators -----------------------------------------------------------

namespace {

// Offsets from the class corner.
std::pair<double, double> to_frame(SolutionClass klass, const ProblemParameters& p, double xi, double eta) {
  if (!(p.a <= xi && xi <= eta && eta <= p.b)) throw DomainError("point outside the characteristic triangle");
  if (klass == SolutionClass::a2) return {xi - p.a, eta - p.a};
  return {p.b - eta, p.b - xi};
}

ProblemParameters at_origin(const ProblemParameters& p) {
  ProblemParameters q = p;
  q.a = 0.0;
  q.b = p.b - p.a;
  return q;
}

}  // namespace

CauchyGoursat::CauchyGoursat(SolutionClass klass, const Sampler& nu, const Sampler& phi,
                             const ProblemParameters& params, int order)
    : klass_(klass), params_(params), coeffs_(derive_coefficients(params)), order_(order) {
  const bool a2 = klass == SolutionClass::a2;
  nu_ = shifted(a2 ? nu : reflected(nu, params.a, params.b), params.a);
  const Sampler framed = shifted(a2 ? phi : reflected(phi, params.a, params.b), params.a);
  phi_ = phi_capital(End::a, framed, at_origin(params), order);
}

double CauchyGoursat::operator()(double xi_in, double eta_in) const {
  const auto [xi, eta] = to_frame(klass_, params_, xi_in, eta_in);
  const double a = 0.0, b = params_.b - params_.a, beta = coeffs_.beta, mu = params_.mu.mu;
  const double e = 2.0 * beta;
  const detail::Density dnu{[this](double t) { return nu_(t); }, nu_.regular()};
  const detail::Density dphi{[this](double t) { return phi_.regular_part(t); }, true, e};
  return coeffs_.kappa3 * detail::j_part(dnu, a, b, beta, mu, xi, eta, order_) +
         2.0 * std::cos(std::numbers::pi * beta) * detail::j_part(dphi, a, b, beta, mu, xi, eta, order_) +
         detail::i_part(dphi, a, b, beta, mu, xi, eta, order_);
}

Goursat::Goursat(SolutionClass klass, const Sampler& phi_a, const Sampler& phi_b, const ProblemParameters& params,
                 int order)
    : klass_(klass),
      params_(params),
      beta_(derive_coefficients(params).beta),
      density_(goursat_density(klass, phi_a, phi_b, params, order)),
      order_(order) {}

double Goursat::operator()(double xi_in, double eta_in) const {
  const auto [xi, eta] = to_frame(klass_, params_, xi_in, eta_in);
  const double a = 0.0, b = params_.b - params_.a, mu = params_.mu.mu;
  const detail::Density dT{[this](double t) { return density_.hat_(t); }, false, 2.0 * beta_, beta_};
  const detail::Density dphi{[this](double t) { return density_.phi().regular_part(t); }, true, 2.0 * beta_};
  return detail::j_part(dT, a, b, beta_, mu, xi, eta, order_) +
         detail::i_part(dphi, a, b, beta_, mu, xi, eta, order_);
}

double cauchy_goursat_solution(SolutionClass klass, const Sampler& nu, const Sampler& phi,
                               const ProblemParameters& params, double xi, double eta, int order) {
  return CauchyGoursat(klass, nu, phi, params, order)(xi, eta);
}

double goursat_solution(SolutionClass klass, const Sampler& phi_a, const Sampler& phi_b,
                        const ProblemParameters& params, double xi, double eta, int order) {
  return Goursat(klass, phi_a, phi_b, params, order)(xi, eta);
}

}  // namespace dhyp
