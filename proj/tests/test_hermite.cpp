#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "sqz/hermite.hpp"

using namespace sqz;

TEST_CASE("lowest eigenfunctions against closed forms") {
  // phi_0(0) = pi^{-1/4}, frozen to 20 digits
  CHECK(hermite_phi(0, 0.0) == doctest::Approx(0.75112554446494248286).epsilon(1e-15));
  CHECK(hermite_phi(1, 0.0) == 0.0);

  // phi_1(x) = sqrt(2) x phi_0(x)
  for (double x : {-2.3, -0.4, 0.9, 3.7}) {
    const double expect = std::sqrt(2.0) * x * hermite_phi(0, x);
    CHECK(hermite_phi(1, x) == doctest::Approx(expect).epsilon(1e-14));
  }
}

TEST_CASE("fourth eigenfunction at x = 1.3") {
  // frozen high-precision value
  CHECK(hermite_phi(4, 1.3) ==
        doctest::Approx(-0.3856554524665831542).epsilon(1e-12));

  // independent route: explicit H_4 = 16x^4 - 48x^2 + 12 with its norm
  const double x = 1.3;
  const double h4 = 16.0 * std::pow(x, 4) - 48.0 * x * x + 12.0;
  const double norm = std::sqrt(std::sqrt(M_PI) * 16.0 * 24.0);  // sqrt(pi^{1/2} 2^4 4!)
  const double direct = h4 / norm * std::exp(-0.5 * x * x);
  CHECK(hermite_phi(4, 1.3) == doctest::Approx(direct).epsilon(1e-12));
}

TEST_CASE("row evaluation matches scalar evaluation bitwise") {
  for (double x : {-6.5, 0.0, 1.25, 9.75}) {
    const auto row = hermite_phi_row(60, x);
    REQUIRE(row.size() == 61);
    for (int k = 0; k <= 60; k += 7) {
      CHECK(row[k] == hermite_phi(k, x));
    }
  }
}

TEST_CASE("index cap and argument validation") {
  CHECK_NOTHROW(hermite_phi(hermite_cap, 0.5));
  CHECK_THROWS_AS(hermite_phi(hermite_cap + 1, 0.5), std::domain_error);
  CHECK_THROWS_AS(hermite_phi(-1, 0.5), std::domain_error);
  CHECK_THROWS_AS(hermite_phi(3, std::nan("")), std::domain_error);
  CHECK_THROWS_AS(hermite_phi_row(-1, 0.5), std::domain_error);
}

TEST_CASE("parity and boundedness") {
  for (int k : {0, 1, 5, 12, 99}) {
    for (double x : {0.3, 1.7, 4.2}) {
      const double sign = (k % 2 == 0) ? 1.0 : -1.0;
      CHECK(hermite_phi(k, -x) == doctest::Approx(sign * hermite_phi(k, x)).epsilon(1e-13));
      // normalized oscillator states never exceed their ground-state peak
      CHECK(std::fabs(hermite_phi(k, x)) < 0.8);
    }
  }
}

TEST_CASE("recurrence stays finite at the cap even far out") {
  // far outside the classical turning point the value underflows smoothly
  const double tail = hermite_phi(hermite_cap, 40.0);
  CHECK(std::isfinite(tail));
  CHECK(std::fabs(tail) < 1e-60);
  // inside the oscillatory region the envelope is O(0.1); sample across more
  // than one oscillation so no single zero crossing can fool the check
  double peak = 0.0;
  for (double x : {0.9, 1.0, 1.1}) {
    const double v = std::fabs(hermite_phi(hermite_cap, x));
    CHECK(v < 0.8);
    peak = std::fmax(peak, v);
  }
  CHECK(peak > 1e-3);
}
