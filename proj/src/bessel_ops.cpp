#include "dhyp/bessel_ops.hpp"

#include <cmath>

#include "dhyp/errors.hpp"
#include "dhyp/frac_ops.hpp"

namespace dhyp {
namespace {

double ipow(double x, int n) {
  double r = 1.0;
  for (int i = 0; i < std::abs(n); ++i) r *= x;
  return n < 0 ? 1.0 / r : r;
}

void check_spec(const OperatorSpec& spec, double x) {
  if (spec.n < 0) throw DomainError("operator exponent n must be non-negative");
  if (spec.n >= 2 && x == spec.anchor)
    throw DomainError("operator with n >= 2 is singular at x == anchor");
}

// Oriented int_left^x f(t) w(t) dt with Gauss-Legendre (graded toward both
// ends for Holder samplers).
template <class W>
double oriented(const Sampler& f, double left, double x, int order, W&& w) {
  if (x == left) return 0.0;
  const double lo = std::min(left, x);
  const double hi = std::max(left, x);
  auto g = [&](double t) { return f(t) * w(t); };
  double v;
  if (f.regular()) {
    v = integrate_weighted(g, lo, hi, 0.0, 0.0, order);
  } else {
    Grading grading;
    grading.lower_gap = 0.0;
    grading.upper_gap = 0.0;
    v = integrate_graded(g, lo, hi, 0.0, 0.0, order, grading);
  }
  return x > left ? v : -v;
}

double apply(OperatorKind kind, const OperatorSpec& spec, const Sampler& f, double x, int order) {
  check_spec(spec, x);
  const double mu = spec.mu.mu;
  const double fx = f(x);
  if (mu == 0.0) return fx;
  const double b = spec.anchor;
  const int n = spec.n;
  const double outer = ipow(b - x, 1 - n);
  if (kind == OperatorKind::A) {
    return fx - oriented(f, spec.left, x, order, [&](double t) {
             return mu * ipow(b - t, n) * outer * bessel_clifford_sq_deriv(0.0, mu * (x - b) * (x - t));
           });
  }
  return fx + oriented(f, spec.left, x, order, [&](double t) {
           return mu * ipow(b - t, n) * outer * bessel_clifford_sq_deriv(0.0, mu * (b - t) * (x - t));
         });
}

}  // namespace

double op_A(const OperatorSpec& spec, const Sampler& f, double x, int order) {
  if (spec.orientation == Orientation::x_to_right) return op_mirrored(OperatorKind::A, spec, f, x, order);
  return apply(OperatorKind::A, spec, f, x, order);
}

double op_B(const OperatorSpec& spec, const Sampler& f, double x, int order) {
  if (spec.orientation == Orientation::x_to_right) return op_mirrored(OperatorKind::B, spec, f, x, order);
  return apply(OperatorKind::B, spec, f, x, order);
}

double op_mirrored(OperatorKind kind, const OperatorSpec& spec, const Sampler& f, double x, int order) {
  const double c = spec.left + spec.anchor;
  if (x < spec.left || x > spec.anchor) throw DomainError("mirrored operator: x outside [left, anchor]");
  OperatorSpec left_spec = spec;
  left_spec.orientation = Orientation::left_to_x;
  return apply(kind, left_spec, reflected(f, spec.left, spec.anchor), c - x, order);
}

FkValue f_k_coefficient(int k, double z) {
  if (k < 0 || k > 40) throw DomainError("f_k_coefficient: k must lie in [0, 40]");
  FkValue out;
  for (int i = 0; i <= k + 1; ++i) {
    const double coeff = (i % 2 ? -1.0 : 1.0) * std::exp(-std::lgamma(i + 1.0) - std::lgamma(k - i + 2.0));
    const double term = coeff * gauss_2f1_terminating(k, k - i + 1.0, k + 1.0, z);
    out.value += term;
    out.largest_term = std::max(out.largest_term, std::abs(term));
  }
  return out;
}

double f_k_partial(int k, double z, int terms) {
  double sum = 0.0;
  for (int i = 0; i < std::min(terms, k + 2); ++i)
    sum += (i % 2 ? -1.0 : 1.0) * std::exp(-std::lgamma(i + 1.0) - std::lgamma(k - i + 2.0)) *
           gauss_2f1_terminating(k, k - i + 1.0, k + 1.0, z);
  return sum;
}

double kernel_L(double x, double t, const OperatorSpec& spec, int order) {
  if (spec.n != 1) throw DomainError("kernel_L is defined for n = 1");
  const double b = spec.anchor;
  if (!(spec.left <= t && t <= x && x <= b)) throw DomainError("kernel_L needs left <= t <= x <= anchor");
  const double mu = spec.mu.mu;
  if (mu == 0.0) return 0.0;
  const double first = mu * bessel_clifford_sq_deriv(0.0, mu * (x - b) * (x - t));
  const double second = mu * bessel_clifford_sq_deriv(0.0, mu * (b - t) * (x - t));
  const double composed = integrate_weighted(
      [&](double s) {
        return mu * mu * (b - s) * bessel_clifford_sq_deriv(0.0, mu * (b - s) * (x - s)) *
               bessel_clifford_sq_deriv(0.0, mu * (s - b) * (s - t));
      },
      t, x, 0.0, 0.0, order);
  return first - second + composed;
}

std::pair<double, double> lemma1_check(LemmaSide side, const Sampler& f, double a, double b, double beta,
                                       SpectralSquare mu, double x, int order) {
  if (!(beta < 1.0)) throw DomainError("lemma1_check needs beta < 1");
  if (!(a <= x && x <= b)) throw DomainError("lemma1_check needs a <= x <= b");
  OperatorSpec spec;
  spec.n = 1;
  spec.mu = mu;
  spec.left = a;
  spec.anchor = b;
  const double g = gamma_fn(1.0 - beta);
  if (side == LemmaSide::left) {
    const double lhs = integrate_weighted(
        [&](double t) { return bessel_clifford_sq(-beta, mu.mu * (x - t) * (b - t)) * f(t); }, a, x, -beta,
        0.0, order);
    const Sampler bf = Sampler::values_only([&](double t) { return op_B(spec, f, t, order); });
    return {lhs, g * rl_left(bf, a, beta - 1.0, x, order)};
  }
  const double lhs = integrate_weighted(
      [&](double t) { return bessel_clifford_sq(-beta, mu.mu * (t - x) * (t - a)) * f(t); }, x, b, 0.0,
      -beta, order);
  const Sampler bf =
      Sampler::values_only([&](double t) { return op_mirrored(OperatorKind::B, spec, f, t, order); });
  return {lhs, g * rl_right(bf, b, beta - 1.0, x, order)};
}

}  // namespace dhyp
