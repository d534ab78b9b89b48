#include "dhyp/frac_ops.hpp"

#include <cmath>
#include <limits>

#include "dhyp/errors.hpp"
#include "dhyp/special_fn.hpp"

namespace dhyp {
namespace {

void check_order(double l) {
  if (!(std::abs(l) < 2.0)) throw DomainError("fractional order must satisfy |l| < 2");
}

int derivatives_needed(double l) { return l <= 0.0 ? 0 : (l <= 1.0 ? 1 : 2); }

// int_lo^hi (hi-t)^p (t-lo)^q f(t) dt, graded toward both ends for samplers
// that are only Holder there.
double weighted(const Sampler& f, int k, double lo, double hi, double p, double q, int order) {
  auto g = [&](double t) { return f.derivative(t, k); };
  if (f.regular()) return integrate_weighted(g, lo, hi, p, q, order);
  Grading grading;
  grading.lower_gap = 0.0;
  grading.upper_gap = 0.0;
  return integrate_graded(g, lo, hi, p, q, order, grading);
}

double signed_infinity(double v) {
  return v > 0.0 ? std::numeric_limits<double>::infinity() : -std::numeric_limits<double>::infinity();
}

// Shared body: `sign` = +1 for the left-sided operator, -1 for the mirror.
// d = distance from the base point, base = the base point.
double rl_impl(const Sampler& f, double base, double l, double x, int order, int sign) {
  check_order(l);
  const double d = sign * (x - base);
  if (d < 0.0) throw DomainError("fractional operator evaluated on the wrong side of its base point");
  if (l == 0.0) return f(x);
  const int need = derivatives_needed(l);
  if (need > f.max_order())
    throw DerivativeUnavailable("fractional derivative of order " + std::to_string(l) +
                                " needs " + std::to_string(need) + " derivatives");
  const double lo = sign > 0 ? base : x;
  const double hi = sign > 0 ? x : base;
  // Kernel (x-t)^w sits at the evaluation point: upper end for the left
  // operator, lower end for the mirror.
  auto kernel_integral = [&](int k, double w) {
    return sign > 0 ? weighted(f, k, lo, hi, w, 0.0, order) : weighted(f, k, lo, hi, 0.0, w, order);
  };

  if (l < 0.0) return d == 0.0 ? 0.0 : kernel_integral(0, -l - 1.0) * rgamma(-l);
  if (l == 1.0) return sign * f.derivative(x, 1);

  const double f0 = f(base);
  const double f1 = sign * f.derivative(base, 1);
  if (d == 0.0) {
    if (f0 != 0.0) return signed_infinity(f0 * rgamma(1.0 - l));
    if (l > 1.0 && f1 != 0.0) return signed_infinity(f1 * rgamma(2.0 - l));
    return 0.0;
  }
  if (l < 1.0)
    return f0 * std::pow(d, -l) * rgamma(1.0 - l) + sign * kernel_integral(1, -l) * rgamma(1.0 - l);
  return f0 * std::pow(d, -l) * rgamma(1.0 - l) + f1 * std::pow(d, 1.0 - l) * rgamma(2.0 - l) +
         kernel_integral(2, 1.0 - l) * rgamma(2.0 - l);
}

}  // namespace

double rl_left(const Sampler& f, double a, double l, double x, int order) {
  return rl_impl(f, a, l, x, order, +1);
}

double rl_right(const Sampler& f, double b, double l, double x, int order) {
  return rl_impl(f, b, l, x, order, -1);
}

Sampler fractional_integral_sampler(const Sampler& f, double a, double nu, int order) {
  if (!(nu > 0.0)) throw DomainError("fractional_integral_sampler needs nu > 0");
  auto fn = [f, a, nu, order](double x, int k) {
    const Sampler fk([&f, k](double t, int j) { return f.derivative(t, k + j); },
                     f.max_order() - k, f.regular());
    double v = rl_left(fk, a, -nu, x, order);
    for (int j = 0; j < k; ++j) {
      const double c = f.derivative(a, j);
      if (c != 0.0) v += c * std::pow(x - a, nu - k + j) * rgamma(nu - k + j + 1.0);
    }
    return v;
  };
  return Sampler(fn, f.max_order(), false);
}

}  // namespace dhyp
