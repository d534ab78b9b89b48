#pragma once

#include <functional>
#include <limits>
#include <memory>
#include <vector>

namespace dhyp {

/// Gauss rule on [-1, 1] for the weight (1-x)^exponent_right (1+x)^exponent_left.
struct QuadratureRule {
  std::vector<double> nodes;    // strictly increasing, inside (-1, 1)
  std::vector<double> weights;  // positive
  double exponent_left = 0.0;   // power of (1+x)
  double exponent_right = 0.0;  // power of (1-x)
  int order = 0;
};

constexpr int kMaxQuadratureOrder = 256;
constexpr int kDefaultOrder = 48;

QuadratureRule gauss_legendre(int order);
QuadratureRule gauss_jacobi(int order, double p, double q);

/// Shared, immutable rule from a process-wide cache.
std::shared_ptr<const QuadratureRule> cached_rule(int order, double p, double q);

/// int_{-1}^{1} (1-x)^p (1+x)^q dx = 2^{p+q+1} B(p+1, q+1).
double jacobi_moment0(double p, double q);

using RealFn = std::function<double(double)>;

/// int_lower^upper (upper-t)^p_at_upper (t-lower)^q_at_lower f(t) dt with one
/// affinely mapped Gauss-Jacobi rule. Zero when lower == upper.
double integrate_weighted(const RealFn& f, double lower, double upper, double p_at_upper,
                          double q_at_lower, int order);

/// Same integral, but f is allowed to be non-analytic close to an endpoint:
/// a singularity at distance `lower_gap` below `lower` (0 means "at lower",
/// with unknown exponents) or `upper_gap` above `upper`. The interval is cut
/// into panels shrinking geometrically toward that end.
struct Grading {
  double lower_gap = std::numeric_limits<double>::infinity();
  double upper_gap = std::numeric_limits<double>::infinity();
  int panel_order = 0;  // 0: use the main order
};

double integrate_graded(const RealFn& f, double lower, double upper, double p_at_upper,
                        double q_at_lower, int order, const Grading& grading);

}  // namespace dhyp
