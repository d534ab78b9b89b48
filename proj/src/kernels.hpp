#pragma once

// Shared kernel integrals of the class representation, written for the
// corner a. The density is (t-a)^e_a (b-t)^e_b g(t) with g bounded.

#include <functional>

namespace dhyp::detail {

struct Density {
  std::function<double(double)> g;
  bool regular = true;  // g analytic up to both ends
  double e_a = 0.0;
  double e_b = 0.0;
};

/// int_a^xi (xi-t)^-beta (eta-t)^-beta cj(-beta, mu (eta-t)(xi-t)) density dt
double j_part(const Density& d, double a, double b, double beta, double mu, double xi, double eta, int order);

/// int_xi^eta (eta-t)^-beta (t-xi)^-beta cj(-beta, -mu (eta-t)(t-xi)) density dt
double i_part(const Density& d, double a, double b, double beta, double mu, double xi, double eta, int order);

int panel_order(int order);

}  // namespace dhyp::detail
