#pragma once

// Gamma-function scaffolding and the Bessel-Clifford family written as an
// entire function of the squared argument:
//
//   cj(alpha, s) = sum_k Gamma(alpha+1) (-s/4)^k / (k! Gamma(k+alpha+1))
//
// so that Jbar_alpha(z) = cj(alpha, z^2) and Ibar_alpha(z) = cj(alpha, -z^2).
// Every kernel J0[lambda sqrt(P)] in the library is cj(0, lambda^2 P) with P
// carrying its own sign; no complex arithmetic is ever needed.

namespace dhyp {

/// Signed spectral square lambda^2: positive for real lambda, negative for
/// purely imaginary lambda.
struct SpectralSquare {
  double mu = 0.0;
};

/// Gamma(x). Throws DomainError at the poles x = 0, -1, -2, ...
double gamma_fn(double x);

/// 1/Gamma(x); zero at the poles.
double rgamma(double x);

/// Rising factorial a(a+1)...(a+n-1); 1 for n == 0.
double pochhammer(double a, int n);

/// Terminating Gauss series F(-n, b; c; z) summed term by term.
/// Throws DomainError if c is a non-positive integer hit within the n+1 terms.
double gauss_2f1_terminating(int n, double b, double c, double z);

struct CliffordOptions {
  double argument_cap = 1e6;
  int term_cap = 500;
};

/// cj(alpha, s) for alpha > -1.
double bessel_clifford_sq(double alpha, double s, const CliffordOptions& opt = {});

/// d/ds cj(alpha, s) = -cj(alpha+1, s) / (4(alpha+1)).
double bessel_clifford_sq_deriv(double alpha, double s, const CliffordOptions& opt = {});

}  // namespace dhyp
