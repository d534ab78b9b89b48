#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "dhyp/data_function.hpp"
#include "dhyp/errors.hpp"

using namespace dhyp;
using doctest::Approx;

TEST_CASE("catalog terms and their derivatives") {
  const auto p = DataFunction::parse("polynomial:1,-2,0.5");
  CHECK(p(2.0) == Approx(-1.0));
  CHECK(p.derivative(2.0, 1) == Approx(0.0));
  CHECK(p.derivative(2.0, 2) == Approx(1.0));
  CHECK(p.derivative(2.0, 3) == 0.0);

  const auto s = DataFunction::parse("sine:2,3,0.5");
  CHECK(s(0.4) == Approx(2 * std::sin(1.7)));
  CHECK(s.derivative(0.4, 2) == Approx(-18 * std::sin(1.7)));

  const auto e = DataFunction::parse("exponential:1.5,-2");
  CHECK(e.derivative(0.3, 3) == Approx(-8 * 1.5 * std::exp(-0.6)));

  const auto w = DataFunction::parse("power_shift:1,-1,2.5");
  CHECK(w.derivative(1.0, 1) == Approx(2.5 * std::pow(2.0, 1.5)));

  CHECK(DataFunction::parse("zero").is_zero());
}

TEST_CASE("parse rejects malformed specs") {
  CHECK_THROWS_AS(DataFunction::parse("sine:1,2"), std::invalid_argument);
  CHECK_THROWS_AS(DataFunction::parse("bessel:1"), std::invalid_argument);
  CHECK_THROWS_AS(DataFunction::parse("polynomial:1,x"), std::invalid_argument);
  CHECK_THROWS_AS(DataFunction::parse("polynomial:"), std::invalid_argument);
  // exponents in numbers are not term separators
  CHECK(DataFunction::parse("polynomial:1e+3")(0.0) == 1000.0);
}

TEST_CASE("algebra on data functions") {
  const auto f = DataFunction::parse("cosine:1,2,0");
  const auto g = DataFunction::polynomial({0, 1});
  const auto h = f + g.scaled(3.0) - DataFunction::constant(1.0);
  CHECK(h(0.7) == Approx(std::cos(1.4) + 2.1 - 1.0));
  CHECK(h.derivative(0.7, 1) == Approx(-2 * std::sin(1.4) + 3.0));

  const auto r = f.reflected(0.0, 1.0);
  CHECK(r(0.2) == Approx(f(0.8)));
  CHECK(r.derivative(0.2, 1) == Approx(-f.derivative(0.8, 1)));

  const auto c = f.composed_affine(0.5, 0.25);
  CHECK(c.derivative(0.6, 2) == Approx(0.25 * f.derivative(0.55, 2)));
}

TEST_CASE("samplers") {
  const auto s = DataFunction::parse("sine:1,1,0").sampler();
  CHECK(s.max_order() == 8);
  CHECK(s.derivative(0.3, 1) == Approx(std::cos(0.3)));

  const auto v = Sampler::values_only([](double x) { return x * x; });
  CHECK(v(3.0) == 9.0);
  CHECK_THROWS_AS(v.derivative(3.0, 1), DerivativeUnavailable);

  const auto r = reflected(s, 0.0, 2.0);
  CHECK(r.derivative(0.5, 1) == Approx(-std::cos(1.5)));
  const auto t = shifted(s, 0.25);
  CHECK(t.derivative(0.5, 2) == Approx(-std::sin(0.75)));
}
