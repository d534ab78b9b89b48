#pragma once

#include "dhyp/data_function.hpp"
#include "dhyp/quadrature.hpp"

namespace dhyp {

// Riemann-Liouville operators of order l, |l| < 2: integration of order -l
// for l < 0, differentiation of order l for l > 0, identity for l = 0.
// Derivatives are taken in the regularized form: boundary terms from f and
// f' at the base point plus a weakly singular integral of f' or f''.

/// D_{a+}^l f at x >= a. At x == a with a divergent boundary term the
/// result is a signed infinity.
double rl_left(const Sampler& f, double a, double l, double x, int order = kDefaultOrder);

/// D_{b-}^l f at x <= b (mirror of rl_left under t -> a + b - t).
double rl_right(const Sampler& f, double b, double l, double x, int order = kDefaultOrder);

/// g = D_{a+}^{-nu} f, nu > 0, as a sampler whose derivatives follow from
/// those of f: g^(k) = D^{-nu} f^(k) + sum_j f^(j)(a) (x-a)^{nu-k+j} / Gamma(nu-k+j+1).
Sampler fractional_integral_sampler(const Sampler& f, double a, double nu,
                                    int order = kDefaultOrder);

}  // namespace dhyp
