#include "dhyp/special_fn.hpp"

#include <cmath>
#include <string>

#include "dhyp/errors.hpp"

namespace dhyp {
namespace {

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::nearbyint(x); }

// Above this the alternating series cancels too much; switch to the libstdc++
// Bessel routines (z = sqrt(s) > 10).
constexpr double kSeriesLimit = 100.0;

double clifford_series(double alpha, double s, int term_cap) {
  // term_k / term_{k-1} = (-s/4) / (k (k + alpha))
  const double q = -0.25 * s;
  double term = 1.0;
  double sum = 1.0;
  double prev_abs = std::abs(term);
  for (int k = 1; k <= term_cap; ++k) {
    term *= q / (k * (k + alpha));
    sum += term;
    const double a = std::abs(term);
    if (a <= prev_abs && a < 1e-16 * std::abs(sum)) return sum;
    if (term == 0.0) return sum;
    prev_abs = a;
  }
  throw ConvergenceError("bessel_clifford_sq: series did not converge within " +
                         std::to_string(term_cap) + " terms (s = " + std::to_string(s) + ")");
}

// Gamma(alpha+1) (z/2)^-alpha J_alpha(z) for z > 0, alpha > -1.
double clifford_oscillatory(double alpha, double z) {
  double j;
  if (alpha >= 0.0) {
    j = std::cyl_bessel_j(alpha, z);
  } else {
    // J_alpha = (2(alpha+1)/z) J_{alpha+1} - J_{alpha+2}
    j = 2.0 * (alpha + 1.0) / z * std::cyl_bessel_j(alpha + 1.0, z) -
        std::cyl_bessel_j(alpha + 2.0, z);
  }
  return std::tgamma(alpha + 1.0) * std::pow(0.5 * z, -alpha) * j;
}

}  // namespace

double gamma_fn(double x) {
  if (is_nonpositive_integer(x))
    throw DomainError("gamma_fn: pole at x = " + std::to_string(x));
  return std::tgamma(x);
}

double rgamma(double x) {
  if (is_nonpositive_integer(x)) return 0.0;
  return 1.0 / std::tgamma(x);
}

double pochhammer(double a, int n) {
  double p = 1.0;
  for (int i = 0; i < n; ++i) p *= a + i;
  return p;
}

double gauss_2f1_terminating(int n, double b, double c, double z) {
  if (n < 0) throw DomainError("gauss_2f1_terminating: n must be non-negative");
  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < n; ++k) {
    const double denom = (c + k) * (k + 1);
    if (c + k == 0.0)
      throw DomainError("gauss_2f1_terminating: zero denominator (c = " + std::to_string(c) + ")");
    term *= (-n + k) * (b + k) / denom * z;
    sum += term;
  }
  return sum;
}

double bessel_clifford_sq(double alpha, double s, const CliffordOptions& opt) {
  if (!(alpha > -1.0)) throw DomainError("bessel_clifford_sq: order must exceed -1");
  if (!std::isfinite(s) || std::abs(s) > opt.argument_cap)
    throw DomainError("bessel_clifford_sq: |s| exceeds the argument cap");
  if (s > kSeriesLimit) return clifford_oscillatory(alpha, std::sqrt(s));
  return clifford_series(alpha, s, opt.term_cap);
}

double bessel_clifford_sq_deriv(double alpha, double s, const CliffordOptions& opt) {
  if (!(alpha > -1.0)) throw DomainError("bessel_clifford_sq_deriv: order must exceed -1");
  return -bessel_clifford_sq(alpha + 1.0, s, opt) / (4.0 * (alpha + 1.0));
}

}  // namespace dhyp
