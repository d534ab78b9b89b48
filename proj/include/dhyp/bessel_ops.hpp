#pragma once

#include <utility>

#include "dhyp/data_function.hpp"
#include "dhyp/quadrature.hpp"
#include "dhyp/special_fn.hpp"

namespace dhyp {

// Volterra operators with Bessel-kernel derivatives, n >= 0, b = anchor:
//
//   A f(x) = f(x) - int_left^x f(t) mu (b-t)^n (b-x)^(1-n) cj'(0, mu (x-b)(x-t)) dt
//   B f(x) = f(x) + int_left^x f(t) mu (b-t)^n (b-x)^(1-n) cj'(0, mu (b-t)(x-t)) dt
//
// The integral is oriented, so left > x is allowed (used with left == anchor).
// A and B are mutually inverse on continuous functions.

enum class Orientation { left_to_x, x_to_right };
enum class OperatorKind { A, B };

struct OperatorSpec {
  int n = 1;
  SpectralSquare mu;
  double left = 0.0;
  double anchor = 1.0;
  Orientation orientation = Orientation::left_to_x;
};

double op_A(const OperatorSpec& spec, const Sampler& f, double x, int order = kDefaultOrder);
double op_B(const OperatorSpec& spec, const Sampler& f, double x, int order = kDefaultOrder);

/// Right-sided reflection on [left, anchor]: the left-sided operator applied
/// to f(left + anchor - t) at left + anchor - x. For B this reads
///   f(x) + int_x^b f(t) mu (t-a)^n (x-a)^(1-n) cj'(0, mu (t-a)(t-x)) dt.
double op_mirrored(OperatorKind kind, const OperatorSpec& spec, const Sampler& f, double x,
                   int order = kDefaultOrder);

struct FkValue {
  double value = 0.0;
  double largest_term = 0.0;  // scale for judging cancellation
};

/// F_k(z) = sum_{i=0}^{k+1} (-1)^i / (i! (k-i+1)!) F(-k, k-i+1; k+1; z),
/// summed term by term. Identically zero; k <= 40.
FkValue f_k_coefficient(int k, double z);

/// Partial sum of the first `terms` terms of f_k_coefficient.
double f_k_partial(int k, double z, int terms);

/// Composition kernel of B after A for n = 1:
///   L = mu cj'(0, mu (x-b)(x-t)) - mu cj'(0, mu (b-t)(x-t))
///     + int_t^x mu^2 (b-s) cj'(0, mu (b-s)(x-s)) cj'(0, mu (s-b)(s-t)) ds.
/// Identically zero for left <= t <= x <= anchor.
double kernel_L(double x, double t, const OperatorSpec& spec, int order = kDefaultOrder);

enum class LemmaSide { left, right };

/// Both sides of the bridge identities, with f supplied on [a, b]:
///   left:  int_a^x (x-t)^-beta cj(-beta, mu (x-t)(b-t)) f dt
///          = Gamma(1-beta) D_{a+}^{beta-1} [B f](x)
///   right: int_x^b (t-x)^-beta cj(-beta, mu (t-x)(t-a)) f dt
///          = Gamma(1-beta) D_{b-}^{beta-1} [mirrored B f](x)
std::pair<double, double> lemma1_check(LemmaSide side, const Sampler& f, double a, double b,
                                       double beta, SpectralSquare mu, double x,
                                       int order = kDefaultOrder);

}  // namespace dhyp
