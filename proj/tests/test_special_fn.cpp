#include <doctest.h>

#include <cmath>

#include "dhyp/errors.hpp"
#include "dhyp/special_fn.hpp"

using namespace dhyp;
using doctest::Approx;

namespace {

double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }

}  // namespace

TEST_CASE("gamma and its reciprocal") {
  CHECK(rel(gamma_fn(4.7), 15.431411600047431712) < 1e-14);
  CHECK(rel(gamma_fn(-2.5), -0.94530872048294188123) < 1e-14);
  CHECK(gamma_fn(5.0) == Approx(24.0).epsilon(1e-15));
  CHECK_THROWS_AS(gamma_fn(0.0), DomainError);
  CHECK_THROWS_AS(gamma_fn(-3.0), DomainError);
  CHECK(rgamma(-2.0) == 0.0);
  CHECK(rel(rgamma(-0.5), -0.28209479177387814347) < 1e-14);
}

TEST_CASE("rising factorial and terminating 2F1") {
  CHECK(pochhammer(0.3, 0) == 1.0);
  CHECK(rel(pochhammer(0.3, 5), 12.72843) < 1e-14);
  CHECK(rel(gauss_2f1_terminating(6, 2.5, 1.5, 0.3), -0.084035) < 1e-13);
  CHECK(rel(gauss_2f1_terminating(4, -3.5, 0.25, -2.0), 9.6153846153846153846) < 1e-13);
  // F(-n, b; b; z) = (1 - z)^n
  CHECK(gauss_2f1_terminating(7, 1.3, 1.3, 0.4) == Approx(std::pow(0.6, 7)).epsilon(1e-14));
  CHECK_THROWS_AS(gauss_2f1_terminating(5, 1.0, -2.0, 0.5), DomainError);
}

TEST_CASE("Bessel-Clifford values") {
  CHECK(bessel_clifford_sq(0.3, 0.0) == 1.0);
  CHECK(rel(bessel_clifford_sq(0.0, 4.0), 0.22389077914123566805) < 1e-14);  // J0(2)
  CHECK(rel(bessel_clifford_sq(-0.25, -1.0), 1.3578765103775692414) < 1e-14);
  CHECK(rel(bessel_clifford_sq(1.0, 4.0), 0.5767248077568733872) < 1e-14);
  CHECK(rel(bessel_clifford_sq(0.0, 1e-8), 0.99999999750000000156) < 1e-15);
  CHECK(rel(bessel_clifford_sq(0.25, 400.0), 0.090880012887741573554) < 1e-13);
  CHECK(rel(bessel_clifford_sq(-0.75, 50.0), 1.0114385415388647814) < 1e-12);
}

TEST_CASE("Bessel-Clifford at large arguments") {
  CHECK(rel(bessel_clifford_sq(0.5, 1e4), -0.0050636564110975879366) < 1e-11);
  CHECK(rel(bessel_clifford_sq(-0.4, -1e4), 7.6400015150562286435e+42) < 1e-12);
  CHECK_THROWS_AS(bessel_clifford_sq(0.0, 1e7), DomainError);
  CHECK_THROWS_AS(bessel_clifford_sq(-1.0, 1.0), DomainError);
}

TEST_CASE("derivative in the squared argument") {
  CHECK(rel(bessel_clifford_sq_deriv(0.0, 2.5), -0.17960213917171018338) < 1e-14);
  CHECK(rel(bessel_clifford_sq_deriv(-0.25, -3.0), -0.49702232394162985174) < 1e-14);
  // against a central difference
  const double s = 1.7, h = 1e-5;
  const double fd = (bessel_clifford_sq(0.4, s + h) - bessel_clifford_sq(0.4, s - h)) / (2 * h);
  CHECK(bessel_clifford_sq_deriv(0.4, s) == Approx(fd).epsilon(1e-9));
}
