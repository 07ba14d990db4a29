#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hslab/constants.hpp"
#include "hslab/error.hpp"
#include "oracles.hpp"

using namespace hslab;
using std::numbers::pi;

TEST_CASE("validated wrappers") {
  CHECK_THROWS_AS(Dimension(2), DomainError);
  CHECK(Dimension(3).value() == 3);
  CHECK_THROWS_AS(SigmaExponent(-0.1), DomainError);
  CHECK_THROWS_AS(SigmaExponent(2.1), DomainError);
  CHECK(double(SigmaExponent(2.0)) == 2.0);
}

TEST_CASE("log_gamma") {
  CHECK(log_gamma(1.0) == 0.0);
  CHECK(log_gamma(2.0) == 0.0);
  CHECK(log_gamma(0.5) == doctest::Approx(0.5723649429247001).epsilon(1e-14));
  CHECK_THROWS_AS(log_gamma(0.0), DomainError);
  CHECK_THROWS_AS(log_gamma(-1.0), DomainError);
  for (double x : {1e-3, 0.1, 0.3, 0.75, 1.5, 2.5, 3.7, 7.25, 12.0, 33.3, 101.5, 1e3}) {
    INFO("x = " << x);
    CHECK(log_gamma(x) == doctest::Approx(std::lgamma(x)).epsilon(1e-12).scale(1.0));
    CHECK(log_gamma(x) == doctest::Approx(oracle::stirling_log_gamma(x)).epsilon(1e-11).scale(1.0));
  }
}

TEST_CASE("sphere_area") {
  CHECK(sphere_area(1) == doctest::Approx(2 * pi).epsilon(1e-14));
  CHECK(sphere_area(2) == doctest::Approx(4 * pi).epsilon(1e-14));
  CHECK(sphere_area(3) == doctest::Approx(2 * pi * pi).epsilon(1e-14));
  CHECK_THROWS_AS(sphere_area(0), DomainError);
  for (int n = 3; n <= 12; ++n) {
    CHECK(sphere_area(n) == doctest::Approx(2 * pi * sphere_area(n - 2) / (n - 1)).epsilon(1e-12));
    CHECK(sphere_area(n) == doctest::Approx(oracle::sphere_area(n)).epsilon(1e-12));
  }
}

TEST_CASE("critical exponent and Hardy constant") {
  CHECK(critical_exponent(SigmaExponent(0), Dimension(4)) == 4.0);
  CHECK(critical_exponent(SigmaExponent(2), Dimension(7)) == 2.0);
  CHECK(critical_exponent(SigmaExponent(1), Dimension(3)) == 4.0);
  for (int n = 3; n <= 9; ++n) CHECK(critical_exponent(SigmaExponent(0), Dimension(n)) * (n - 2) == 2.0 * n);
  // linear in sigma
  const double a = critical_exponent(SigmaExponent(0.2), Dimension(5)), b = critical_exponent(SigmaExponent(0.7), Dimension(5)),
               c = critical_exponent(SigmaExponent(1.2), Dimension(5));
  CHECK(b - a == doctest::Approx(c - b).epsilon(1e-14));
  CHECK(hardy_constant(Dimension(3)) == 0.25);
  CHECK(hardy_constant(Dimension(4)) == 1.0);
  CHECK(hardy_constant(Dimension(10)) == 16.0);
}

TEST_CASE("Sobolev constant") {
  CHECK(sobolev_constant(Dimension(3)) == doctest::Approx(3.0 * std::pow(pi / 2.0, 4.0 / 3.0)).epsilon(1e-12));
  CHECK(sobolev_constant(Dimension(3)) == doctest::Approx(0.75 * std::pow(2 * pi * pi, 2.0 / 3.0)).epsilon(1e-12));
  for (int n = 3; n <= 8; ++n) {
    // quotient of the sigma = 0 bubble from Beta-function moments
    const auto m = oracle::bubble_moments(n, 0.0);
    const double q = m.dirichlet / std::pow(m.hs_mass, (n - 2.0) / n);
    CHECK(sobolev_constant(Dimension(n)) == doctest::Approx(q).epsilon(1e-10));
    CHECK(hardy_sobolev_constant(Dimension(n), SigmaExponent(1e-6)) ==
          doctest::Approx(sobolev_constant(Dimension(n))).epsilon(1e-5));
  }
}

TEST_CASE("Hardy-Sobolev constant") {
  CHECK(hardy_sobolev_constant(Dimension(3), SigmaExponent(1)) == doctest::Approx(2 * std::sqrt(2 * pi / 3)).epsilon(1e-12));
  CHECK(hardy_sobolev_constant(Dimension(3), SigmaExponent(0)) == doctest::Approx(sobolev_constant(Dimension(3))).epsilon(1e-12));
  // slow approach to the Hardy constant, gap ~ (2 - sigma) log(1 / (2 - sigma))
  CHECK(hardy_sobolev_constant(Dimension(4), SigmaExponent(1.99)) == doctest::Approx(1.036494710819452).epsilon(1e-10));
  CHECK(std::abs(hardy_sobolev_constant(Dimension(4), SigmaExponent(1.9999)) - 1.0) < 1e-3);
  CHECK_THROWS_AS(hardy_sobolev_constant(Dimension(4), SigmaExponent(2.0)), DomainError);
  for (int n = 3; n <= 6; ++n)
    for (double s : {0.0, 0.25, 0.5, 1.0, 1.5, 1.9}) {
      const auto m = oracle::bubble_moments(n, s);
      const double p = 2.0 * (n - s) / (n - 2);
      INFO("N = " << n << " sigma = " << s);
      CHECK(hardy_sobolev_constant(Dimension(n), SigmaExponent(s)) ==
            doctest::Approx(m.dirichlet / std::pow(m.hs_mass, 2.0 / p)).epsilon(1e-10));
    }
  // continuity in sigma
  for (int n = 3; n <= 6; ++n)
    for (double s = 0.0; s < 1.9; s += 0.1) {
      const double d = std::abs(hardy_sobolev_constant(Dimension(n), SigmaExponent(s + 1e-4)) -
                                hardy_sobolev_constant(Dimension(n), SigmaExponent(s)));
      CHECK(d <= 100.0 * 1e-4);
    }
}
