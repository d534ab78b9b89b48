#include <doctest.h>

#include <cmath>

#include "dhyp/frac_ops.hpp"

using namespace dhyp;
using doctest::Approx;

namespace {

const Sampler kSin = DataFunction::parse("sine:1,1,0").sampler();
const Sampler kExp = DataFunction::parse("exponential:1,1").sampler();

}  // namespace

TEST_CASE("power rule") {
  // (t-a)^p with the derivatives written out; p = 2.5 leaves f'' only Holder at a
  const double a = 0.2, x = 0.9;
  for (double p : {0.0, 1.0, 2.5}) {
    const Sampler f(
        [a, p](double t, int k) {
          double c = 1.0;
          for (int j = 0; j < k; ++j) c *= p - j;
          return c == 0.0 ? 0.0 : c * std::pow(t - a, p - k);
        },
        2, p != 2.5);
    for (double l : {-1.25, -0.75, 0.75, 1.25}) {
      const double want = std::tgamma(p + 1) / std::tgamma(p - l + 1) * std::pow(x - a, p - l);
      CHECK(rl_left(f, a, l, x) == Approx(want).epsilon(1e-10));
    }
  }
  const auto sq = DataFunction::polynomial({0, 0, 1}).sampler();
  for (double l : {-1.5, -0.5, 0.3, 0.9, 1.4})
    CHECK(rl_left(sq, 0.0, l, 0.8) == Approx(2.0 / std::tgamma(3.0 - l) * std::pow(0.8, 2.0 - l)).epsilon(1e-13));
}

TEST_CASE("integer orders reduce to the classical operators") {
  CHECK(rl_left(kSin, 0.2, 0.0, 0.9) == Approx(std::sin(0.9)));
  CHECK(rl_left(kSin, 0.2, 1.0, 0.9) == Approx(std::cos(0.9)));
  CHECK(rl_left(kExp, 0.2, -1.0, 0.9) == Approx(std::exp(0.9) - std::exp(0.2)).epsilon(1e-14));
  CHECK(rl_right(kExp, 1.0, -1.0, 0.3) == Approx(std::exp(1.0) - std::exp(0.3)).epsilon(1e-14));
}

TEST_CASE("left-sided values against reference differintegrals") {
  CHECK(rl_left(kSin, 0.0, -0.5, 0.8) == Approx(0.49990259701146092233).epsilon(1e-13));
  CHECK(rl_left(kExp, 0.2, -0.5, 1.1) == Approx(2.4642798527522944343).epsilon(1e-13));
  CHECK(rl_left(kSin, 0.0, 0.4, 0.8) == Approx(0.83404669299589874938).epsilon(1e-13));
  CHECK(rl_left(kExp, 0.2, 0.4, 1.1) == Approx(3.1873313618359275134).epsilon(1e-13));
  CHECK(rl_left(kSin, 0.0, 1.3, 0.8) == Approx(0.40842240266970272399).epsilon(1e-13));
  CHECK(rl_left(kExp, 0.2, 1.3, 1.1) == Approx(2.843205264669630425).epsilon(1e-13));
}

TEST_CASE("right-sided values against reference differintegrals") {
  CHECK(rl_right(kExp, 1.5, -0.6, 0.4) == Approx(2.8263731418137208168).epsilon(1e-13));
  CHECK(rl_right(kSin, 1.5, 0.7, 0.4) == Approx(-0.56050637901794783128).epsilon(1e-13));
}

TEST_CASE("derivative undoes the integral when f vanishes at the base point") {
  const Sampler f = DataFunction::parse("sine:1,1,-0.1").sampler();  // sin(x - 0.1)
  for (double beta : {-0.1, -0.25, -0.4}) {
    const Sampler g = fractional_integral_sampler(f, 0.1, 1.0 - beta);
    for (double x : {0.15, 0.5, 1.1}) CHECK(std::abs(rl_left(g, 0.1, 1.0 - beta, x) - f(x)) < 1e-8);
  }
}

TEST_CASE("semigroup of fractional integrals") {
  for (auto [mu, nu] : {std::pair{0.3, 0.5}, std::pair{0.75, 0.9}}) {
    const Sampler g = fractional_integral_sampler(kExp, 0.1, nu);
    for (double x : {0.4, 1.2})
      CHECK(std::abs(rl_left(g, 0.1, -mu, x) - rl_left(kExp, 0.1, -(mu + nu), x)) < 1e-9);
  }
}

TEST_CASE("behaviour at the base point") {
  CHECK(rl_left(kExp, 0.2, -0.5, 0.2) == 0.0);
  CHECK(std::isinf(rl_left(kExp, 0.2, 0.5, 0.2)));
  CHECK(rl_left(kExp, 0.2, 0.5, 0.2) > 0.0);
}
