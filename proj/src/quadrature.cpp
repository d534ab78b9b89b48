#include "dhyp/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>
#include <tuple>

#include "dhyp/errors.hpp"

namespace dhyp {
namespace {

void check_order(int order) {
  if (order < 1 || order > kMaxQuadratureOrder)
    throw DomainError("quadrature order must lie in [1, " + std::to_string(kMaxQuadratureOrder) +
                      "], got " + std::to_string(order));
}

// P_n^{(p,q)}(x) and P_{n-1}^{(p,q)}(x) by the three-term recurrence.
std::pair<double, double> jacobi_pair(int n, double p, double q, double x) {
  double p0 = 1.0;
  double p1 = 0.5 * ((p + q + 2.0) * x + (p - q));
  if (n == 0) return {p0, 0.0};
  for (int k = 2; k <= n; ++k) {
    const double s = 2.0 * k + p + q;
    const double a1 = 2.0 * k * (k + p + q) * (s - 2.0);
    const double a2 = (s - 1.0) * (p * p - q * q);
    const double a3 = (s - 2.0) * (s - 1.0) * s;
    const double a4 = 2.0 * (k + p - 1.0) * (k + q - 1.0) * s;
    const double p2 = ((a2 + a3 * x) * p1 - a4 * p0) / a1;
    p0 = p1;
    p1 = p2;
  }
  return {p1, p0};
}

// d/dx P_n from P_n and P_{n-1}.
double jacobi_derivative(int n, double p, double q, double x, double pn, double pn1) {
  const double s = 2.0 * n + p + q;
  return (n * (p - q - s * x) * pn + 2.0 * (n + p) * (n + q) * pn1) / (s * (1.0 - x * x));
}

}  // namespace

double jacobi_moment0(double p, double q) {
  return std::exp((p + q + 1.0) * std::numbers::ln2 + std::lgamma(p + 1.0) + std::lgamma(q + 1.0) -
                  std::lgamma(p + q + 2.0));
}

QuadratureRule gauss_jacobi(int order, double p, double q) {
  check_order(order);
  if (!(p > -1.0) || !(q > -1.0))
    throw DomainError("gauss_jacobi: exponents must exceed -1");
  const int n = order;

  // Golub-Welsch starting values.
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(n > 1 ? n - 1 : 1);
  for (int k = 0; k < n; ++k) {
    const double s = 2.0 * k + p + q;
    diag(k) = (k == 0) ? (q - p) / (p + q + 2.0) : (q * q - p * p) / (s * (s + 2.0));
  }
  for (int k = 1; k < n; ++k) {
    const double s = 2.0 * k + p + q;
    double b2;
    if (k == 1)
      b2 = 4.0 * (1.0 + p) * (1.0 + q) / ((2.0 + p + q) * (2.0 + p + q) * (3.0 + p + q));
    else
      b2 = 4.0 * k * (k + p) * (k + q) * (k + p + q) / (s * s * (s + 1.0) * (s - 1.0));
    sub(k - 1) = std::sqrt(b2);
  }
  Eigen::VectorXd x0(n);
  if (n == 1) {
    x0(0) = diag(0);
  } else {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    x0 = es.eigenvalues();
  }

  // Newton polish and the closed-form weights.
  const double log_const = std::lgamma(n + p + 1.0) + std::lgamma(n + q + 1.0) -
                           std::lgamma(n + p + q + 1.0) - std::lgamma(n + 1.0) +
                           (p + q + 1.0) * std::numbers::ln2;
  QuadratureRule rule;
  rule.order = n;
  rule.exponent_right = p;
  rule.exponent_left = q;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = x0(i);
    double dp = 0.0;
    for (int it = 0; it < 8; ++it) {
      auto [pn, pn1] = jacobi_pair(n, p, q, x);
      dp = jacobi_derivative(n, p, q, x, pn, pn1);
      const double dx = pn / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    auto [pn, pn1] = jacobi_pair(n, p, q, x);
    dp = jacobi_derivative(n, p, q, x, pn, pn1);
    rule.nodes[i] = x;
    rule.weights[i] = std::exp(log_const) / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

QuadratureRule gauss_legendre(int order) { return gauss_jacobi(order, 0.0, 0.0); }

std::shared_ptr<const QuadratureRule> cached_rule(int order, double p, double q) {
  static std::mutex mutex;
  static std::map<std::tuple<int, double, double>, std::shared_ptr<const QuadratureRule>> cache;
  const auto key = std::make_tuple(order, p, q);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto rule = std::make_shared<const QuadratureRule>(gauss_jacobi(order, p, q));
  std::lock_guard lock(mutex);
  return cache.emplace(key, std::move(rule)).first->second;
}

double integrate_weighted(const RealFn& f, double lower, double upper, double p_at_upper,
                          double q_at_lower, int order) {
  if (upper == lower) return 0.0;
  if (upper < lower) throw DomainError("integrate_weighted: lower > upper");
  const auto rule = cached_rule(order, p_at_upper, q_at_lower);
  const double half = 0.5 * (upper - lower);
  double sum = 0.0;
  for (int i = 0; i < rule->order; ++i)
    sum += rule->weights[i] * f(lower + half * (rule->nodes[i] + 1.0));
  return sum * std::pow(half, 1.0 + p_at_upper + q_at_lower);
}

namespace {

// Panel breakpoints from `start` moving away from the singular end by a
// factor of 4 each time until `stop`; distances are measured from `end`.
void graded_breaks(double end, double gap, double length, double reach, int sign,
                   std::vector<double>& out) {
  constexpr double kRatio = 4.0;
  // a singularity on the end itself stops at a relative floor; one outside
  // the interval is resolved down to its own distance. Either way the
  // breakpoints stay representable next to `end`.
  const double floor = gap > 0.0 ? gap : 1e-13 * length;
  double d = std::max(floor, 1e-15 * std::abs(end));
  while (d < reach) {
    out.push_back(end + sign * d);
    d *= kRatio;
  }
}

}  // namespace

double integrate_graded(const RealFn& f, double lower, double upper, double p_at_upper,
                        double q_at_lower, int order, const Grading& grading) {
  if (upper == lower) return 0.0;
  if (upper < lower) throw DomainError("integrate_graded: lower > upper");
  const double length = upper - lower;
  const bool grade_lo = grading.lower_gap < 0.25 * length;
  const bool grade_hi = grading.upper_gap < 0.25 * length;
  if (!grade_lo && !grade_hi)
    return integrate_weighted(f, lower, upper, p_at_upper, q_at_lower, order);

  const double mid = grade_lo && grade_hi ? lower + 0.5 * length
                     : grade_lo           ? upper
                                          : lower;
  std::vector<double> breaks{lower};
  if (grade_lo) graded_breaks(lower, grading.lower_gap, length, 0.25 * (mid - lower), +1, breaks);
  if (grade_lo && grade_hi) breaks.push_back(mid);
  if (grade_hi) {
    std::vector<double> hi;
    graded_breaks(upper, grading.upper_gap, length, 0.25 * (upper - mid), -1, hi);
    breaks.insert(breaks.end(), hi.rbegin(), hi.rend());
  }
  breaks.push_back(upper);

  const int panel_order = grading.panel_order > 0 ? grading.panel_order : order;
  double total = 0.0;
  const std::size_t panels = breaks.size() - 1;
  for (std::size_t k = 0; k < panels; ++k) {
    const double x0 = breaks[k];
    const double x1 = breaks[k + 1];
    const bool first = (k == 0);
    const bool last = (k + 1 == panels);
    const double p = last ? p_at_upper : 0.0;
    const double q = first ? q_at_lower : 0.0;
    const int ord = (first && grade_lo) || (last && grade_hi) ? order : panel_order;
    const auto rule = cached_rule(ord, p, q);
    const double half = 0.5 * (x1 - x0);
    // distances to the ends are formed from exact offsets: rounding t itself
    // costs relative accuracy on panels only a few ulps wide
    const double off_lo = x0 - lower;
    const double off_hi = upper - x1;
    double sum = 0.0;
    for (int i = 0; i < rule->order; ++i) {
      const double u = rule->nodes[i];
      double v = f(x0 + half * (u + 1.0));
      if (!last && p_at_upper != 0.0) v *= std::pow(off_hi + half * (1.0 - u), p_at_upper);
      if (!first && q_at_lower != 0.0) v *= std::pow(off_lo + half * (1.0 + u), q_at_lower);
      sum += rule->weights[i] * v;
    }
    total += sum * std::pow(half, 1.0 + p + q);
  }
  return total;
}

}  // namespace dhyp
