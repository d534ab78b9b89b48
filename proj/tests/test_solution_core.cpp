#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dhyp/errors.hpp"
#include "dhyp/solution_core.hpp"
#include "dhyp/verify.hpp"

using namespace dhyp;
using doctest::Approx;

namespace {

ProblemParameters params(double m, double mu, double a = 0.0, double b = 1.0) { return {m, {mu}, a, b}; }

Sampler poly(std::vector<double> c) { return DataFunction::polynomial(std::move(c)).sampler(); }

const Sampler kExp = DataFunction::parse("exponential:1,1").sampler();

}  // namespace

TEST_CASE("derived coefficients") {
  struct Row {
    double m, beta, k1, k2, k3;
  };
  const Row rows[] = {
      {-2.0 / 3.0, -0.25, 0.59017029950804811302, 0.31139536948423569059, 0.44037955478478712941},
      {-0.5, -1.0 / 6.0, 0.70850221351938619846, 0.37410086016542863647, 0.64796169696174230814},
      {-0.2, -1.0 / 18.0, 0.89381708251964222309, 0.45970400970472753709, 0.90544014569603002623},
  };
  for (const auto& r : rows) {
    const auto k = derive_coefficients(params(r.m, 1.0));
    CHECK(k.beta == Approx(r.beta).epsilon(1e-15));
    CHECK(k.kappa1 == Approx(r.k1).epsilon(1e-14));
    CHECK(k.kappa2 == Approx(r.k2).epsilon(1e-14));
    CHECK(k.kappa3 == Approx(r.k3).epsilon(1e-14));
  }
  CHECK_THROWS_AS(derive_coefficients(params(0.0, 1.0)), DomainError);
  CHECK_THROWS_AS(derive_coefficients(params(-1.0, 1.0)), DomainError);
}

TEST_CASE("characteristic coordinates") {
  const auto [xi, eta] = char_coords(0.0, 1.0, -2.0 / 3.0);
  CHECK(xi == Approx(-1.5));
  CHECK(eta == Approx(1.5));
  const auto [x, y] = inverse_char_coords(-1.5, 1.5, -2.0 / 3.0);
  CHECK(x == Approx(0.0));
  CHECK(y == Approx(1.0));
  const auto [x2, y2] = inverse_char_coords(0.2, 0.7, -0.4);
  const auto [xi2, eta2] = char_coords(x2, y2, -0.4);
  CHECK(xi2 == Approx(0.2).epsilon(1e-14));
  CHECK(eta2 == Approx(0.7).epsilon(1e-14));
}

TEST_CASE("trace from its density") {
  CHECK(tau_from_T(kExp, End::a, 0.5, params(-2.0 / 3.0, 1.0), 0.7) ==
        Approx(1.0065173973096535155).epsilon(1e-13));
  CHECK(tau_from_T(kExp, End::b, 0.0, params(-2.0 / 3.0, -1.0), 0.3) ==
        Approx(0.8545476019630904258).epsilon(1e-13));
  // mu = 0, T = 1: tau = x^(1-2 beta) / (1-2 beta)
  const double beta = -0.25;
  CHECK(tau_from_T(poly({1}), End::a, 0.0, params(-2.0 / 3.0, 0.0), 0.6) ==
        Approx(std::pow(0.6, 1 - 2 * beta) / (1 - 2 * beta)).epsilon(1e-14));
}

TEST_CASE("Cauchy solution") {
  const Sampler sine = DataFunction::parse("sine:1,1,0").sampler();
  CHECK(cauchy_solution(poly({0, 0, 1}), poly({1}), params(-2.0 / 3.0, 1.0), 0.2, 0.8) ==
        Approx(0.36536200281188691043).epsilon(1e-13));
  CHECK(cauchy_solution(sine, kExp, params(-0.5, -4.0), 0.3, 0.5) ==
        Approx(0.32791100368219600551).epsilon(1e-13));
  // constant trace, zero flux, no spectral term: the constant itself
  CHECK(cauchy_solution(poly({2}), poly({0}), params(-0.3, 0.0), 0.1, 0.9) == Approx(2.0).epsilon(1e-10));
  CHECK_THROWS_AS(cauchy_solution(poly({1}), poly({0}), params(-0.3, 0.0), 0.4, 0.4), DomainError);
}

TEST_CASE("class representation") {
  CHECK(class_solution(SolutionClass::a2, poly({1}), poly({0}), params(-2.0 / 3.0, -1.0), 0.3, 0.9) ==
        Approx(0.37110635060573915703).epsilon(1e-12));
  const Sampler cosine = DataFunction::parse("cosine:1,1,0").sampler();
  CHECK(class_solution(SolutionClass::a2, cosine, poly({0, 1}), params(-0.5, 2.0), 0.2, 0.6) ==
        Approx(0.19513235451150603637).epsilon(1e-12));
}

TEST_CASE("class 2b mirrors class 2a") {
  // reflecting x -> a + b - x exchanges the classes
  const auto p = params(-0.5, 2.0);
  const Sampler cosine = DataFunction::parse("cosine:1,1,0").sampler();
  const Sampler cos_r = reflected(cosine, p.a, p.b);
  const Sampler nu_r = reflected(poly({0, 1}), p.a, p.b);
  const double u2a = class_solution(SolutionClass::a2, cosine, poly({0, 1}), p, 0.2, 0.6);
  const double u2b = class_solution(SolutionClass::b2, cos_r, nu_r, p, 0.4, 0.8);
  CHECK(u2b == Approx(u2a).epsilon(1e-12));
}

TEST_CASE("counterexample") {
  CHECK(counterexample_solution(params(-2.0 / 3.0, 1.0), 0.25, 0.75) ==
        Approx(0.63361643204383026715).epsilon(1e-14));
  CHECK(counterexample_solution(params(-2.0 / 3.0, 1.0), 0.0, 0.75) == 0.0);
}

TEST_CASE("particular solution") {
  for (double mu : {-4.0, 0.0, 2.5}) {
    const FieldFn u = [mu](double x, double y) { return particular_solution(0.7, -1.3, {mu}, x, y); };
    for (auto [xi, eta] : {std::pair{0.2, 0.6}, std::pair{0.4, 0.9}})
      CHECK(std::abs(pde_residual_char(u, -0.25, {mu}, xi, eta, 1e-3)) < 1e-6);  // O(h^2) stencil error
  }
  const auto prof = particular_profile(0.7, -1.3, {2.5}).sampler();
  CHECK(prof(0.4) == Approx(particular_solution(0.7, -1.3, {2.5}, 0.3, 0.5)).epsilon(1e-14));
}

TEST_CASE("corner shift") {
  for (double mu : {-2.0, 0.0, 3.0}) {
    const auto s = corner_shift(0.8, 0.35, {mu});
    CHECK(particular_solution(s.c1, s.c2, {mu}, 0.35, 0.35) == Approx(0.8).epsilon(1e-14));
  }
}

TEST_CASE("grid") {
  const auto p = params(-0.5, 1.0, 0.2, 1.4);
  const auto g = triangle_grid(p, 6);
  CHECK(g.size() == 21);
  for (auto [xi, eta] : g) {
    CHECK(xi > p.a);
    CHECK(eta < p.b);
    CHECK(xi < eta);
  }
  CHECK(g.front().first == Approx(0.2 + 1.2e-3));
  CHECK(g.back().second == Approx(1.4 - 1.2e-3));
  CHECK_THROWS(triangle_grid(p, 1));
}

TEST_CASE("problem assembly") {
  CHECK(parse_problem_kind("cauchy-goursat-2b") == ProblemKind::cauchy_goursat_2b);
  CHECK(to_string(ProblemKind::goursat_2a) == "goursat-2a");
  CHECK_THROWS_AS(parse_problem_kind("dirichlet"), std::invalid_argument);
  CHECK(required_data(ProblemKind::cauchy) == std::vector<std::string>{"tau", "nu"});

  ProblemData d;
  d.nu = DataFunction::polynomial({0, 1});
  d.phi_a = DataFunction::polynomial({0.5, 1});
  const auto p = params(-2.0 / 3.0, 1.0);
  CHECK_THROWS_AS(make_solution(ProblemKind::cauchy_goursat_2a, d, p), CompatibilityError);
  const auto u = make_solution(ProblemKind::cauchy_goursat_2a, d, p, kDefaultOrder, true);
  CHECK(u(0.0, 0.6) == Approx(1.1).epsilon(1e-9));
}
