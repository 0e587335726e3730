#include <doctest.h>

#include <cmath>

#include "rbbg/elliptic.hpp"
#include "rbbg/errors.hpp"
#include "rbbg/hyp2f1.hpp"
#include "rbbg/special.hpp"

using namespace rbbg;

namespace {

double rel_err(double got, double want) { return std::fabs(got - want) / std::fabs(want); }

// Reference values from a 40-digit mpmath evaluation.
constexpr double kSingular[] = {
    0.5,
    0.1715728752538099024,
    0.066987298107780676618,
    0.02943725152285941438,
    0.014131728243354321817,
    0.0072529466122419259296,
    0.0039216291753892642809,
    0.0022110590326813072163,
    0.0012903590622273628951,
    0.00077520172935329224884,
};

double bridge_residual(double x) {
  const Hyp2F1Params half(0.5, 0.5, 1.0);
  const double k_value = ellipK(Modulus::from_parameter(x));
  const double f = eval_auto(half, Argument::with_complement(x, 1.0 - x)).value;
  return std::fabs(k_value - 0.5 * kPi * f) / k_value;
}

}  // namespace

TEST_CASE("agm") {
  CHECK(agm(2.0, 2.0) == 2.0);
  CHECK(rel_err(agm(1.0, 0.5), 0.72839551552345343459) <= 1e-15);
  CHECK(agm(1.0, 0.3) == agm(0.3, 1.0));
  CHECK(rel_err(agm(3.0, 0.9), 3.0 * agm(1.0, 0.3)) <= 1e-15);
  CHECK_THROWS_AS(agm(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(agm(1.0, -1.0), DomainError);
}

TEST_CASE("Modulus") {
  const Modulus m = Modulus::from_parameter(0.36);
  CHECK(m.k() == doctest::Approx(0.6));
  CHECK(m.k_prime() == doctest::Approx(0.8));
  CHECK(m.complementary().k() == m.k_prime());
  const Modulus close = Modulus::from_complementary_parameter(1e-20);
  CHECK(rel_err(close.k_prime(), 1e-10) <= 1e-15);
  CHECK_THROWS_AS(Modulus::from_k(1.0), DomainError);
  CHECK_THROWS_AS(Modulus::from_parameter(-0.1), DomainError);
  CHECK_THROWS_AS(Modulus::from_complementary_parameter(0.0), DomainError);
}

TEST_CASE("ellipK") {
  CHECK(rel_err(ellipK(Modulus::from_k(0.0)), kPi / 2.0) <= 1e-15);
  // K(1/sqrt 2) = Gamma(1/4)^2 / (4 sqrt pi)
  const double g = rbbg::gamma(0.25);
  CHECK(rel_err(ellipK(Modulus::from_parameter(0.5)), g * g / (4.0 * std::sqrt(kPi))) <= 1e-14);
}

TEST_CASE("property: K agrees with (pi/2) F(1/2,1/2;1;x)") {
  for (double x = 0.0; x <= 0.95 + 1e-12; x += 0.005) {
    INFO("x = " << x);
    CHECK(bridge_residual(x) <= 1e-12);
  }
  for (int i = 1; i <= 200; ++i) {
    const double w = 0.05 * std::pow(1e-6 / 0.05, i / 200.0);
    const double x = 1.0 - w;
    INFO("x = " << x);
    CHECK(bridge_residual(x) <= 1e-11);
  }
}

TEST_CASE("property: the period ratio is strictly decreasing") {
  double previous = period_ratio(1e-3);
  for (int i = 1; i < 1000; ++i) {
    const double x = 1e-3 + (1.0 - 2e-3) * i / 999.0;
    const double r = period_ratio(x);
    INFO("x = " << x);
    CHECK(r < previous);
    previous = r;
  }
  CHECK(period_ratio(0.5) == 1.0);
  CHECK_THROWS_AS(period_ratio(0.0), DomainError);
  CHECK_THROWS_AS(period_ratio(1.0), DomainError);
}

TEST_CASE("singular moduli") {
  for (int n = 1; n <= 10; ++n) {
    INFO("n = " << n);
    const SingularValue s = singular_modulus(n);
    CHECK(s.n == n);
    CHECK(rel_err(s.x_n, kSingular[n - 1]) <= 1e-12);
    CHECK(s.residual <= 1e-13);
  }
  CHECK(singular_modulus(1).x_n == 0.5);
  CHECK(rel_err(singular_modulus(4).x_n, 17.0 - 12.0 * std::sqrt(2.0)) <= 1e-12);
  CHECK_THROWS_AS(singular_modulus(0), DomainError);
}

TEST_CASE("x_9 closed form") {
  CHECK(rel_err(x9_closed_form(), kSingular[8]) <= 1e-15);
  CHECK(std::fabs(singular_modulus(9).x_n - x9_closed_form()) <= 1e-14 * x9_closed_form());
  CHECK(std::fabs(period_ratio(x9_closed_form()) - 3.0) <= 1e-14);
}
