#include <doctest.h>

#include <cmath>
#include <random>

#include "levelwidth/classical.hpp"
#include "levelwidth/errors.hpp"

using namespace lw;
constexpr double pi = 3.14159265358979323846;

TEST_CASE("harmonic period is independent of energy") {
  const PotentialSpec p = PotentialSpec::harmonic(1.7, 0.8);
  for (double E : {0.01, 1.0, 250.0}) {
    CHECK(period(p, E) == doctest::Approx(2 * pi / 1.7).epsilon(1e-12));
    CHECK(action(p, E) == doctest::Approx(2 * pi * E / 1.7).epsilon(1e-12));
  }
}

TEST_CASE("box period and time of flight are ballistic") {
  const PotentialSpec p = PotentialSpec::box(2.0, 1.5);
  const double E = 3.0;
  const double v = std::sqrt(2 * E / 1.5);
  CHECK(period(p, E) == doctest::Approx(4.0 / v).epsilon(1e-13));
  CHECK(time_of_flight(p, E, 0.5) == doctest::Approx(0.5 / v).epsilon(1e-12));
}

TEST_CASE("Coulomb time of flight follows the Kepler parametrization") {
  const double A = 1.3, M = 0.7, E = -0.4;
  const PotentialSpec p = PotentialSpec::coulomb(A, M);
  const double a = A / (2 * std::abs(E));
  const double scale = std::sqrt(M * a * a * a / A);
  CHECK(period(p, E) == doctest::Approx(2 * pi * scale).epsilon(1e-12));
  for (double eta : {0.01, 0.4, 1.5, 2.9}) {
    const double q = a * (1 - std::cos(eta));
    CHECK(time_of_flight(p, E, q) == doctest::Approx(scale * (eta - std::sin(eta))).epsilon(1e-10));
  }
}

TEST_CASE("power-law T E / S equals (2 + alpha) / (2 alpha)") {
  for (double alpha : {-1.9, -1.2, -0.3, 0.4, 1.0, 3.0, 12.0, 50.0}) {
    const bool wall = alpha < 0;
    const PotentialSpec p = PotentialSpec::power_law(alpha > 0 ? 0.9 : -0.9, alpha, wall);
    const double E = alpha > 0 ? 2.3 : -0.6;
    CHECK(period(p, E) * E / action(p, E) == doctest::Approx((2 + alpha) / (2 * alpha)).epsilon(1e-11));
  }
}

TEST_CASE("dS/dE equals the period on random systems") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 20; ++i) {
    const double alpha = (i % 2 == 0) ? 0.2 + 8 * u(rng) : -1.95 + 1.9 * u(rng);
    const double A = (alpha > 0 ? 1 : -1) * (0.3 + u(rng));
    const PotentialSpec p = PotentialSpec::power_law(A, alpha, alpha < 0 || u(rng) < 0.3, 0.5 + u(rng));
    const double E = (alpha > 0 ? 1 : -1) * (0.1 + 5 * u(rng));
    const double h = 1e-5 * std::abs(E);
    const double fd = (action(p, E + h) - action(p, E - h)) / (2 * h);
    CHECK(fd == doctest::Approx(period(p, E)).epsilon(1e-7));
  }
}

TEST_CASE("trajectory samples the harmonic cosine") {
  const PotentialSpec p = PotentialSpec::harmonic(1.0);
  const Orbit o = trajectory(p, 4.5, 256);
  const double amp = 3.0;
  REQUIRE(o.samples.size() == 256);
  for (std::size_t k = 0; k < o.samples.size(); k += 17) {
    const double t = o.T * k / 256.0;
    CHECK(o.samples[k] == doctest::Approx(-amp * std::cos(t)).epsilon(1e-12).scale(amp));
  }
  CHECK(o.position_at(o.T * 1.25) == doctest::Approx(0.0).scale(amp).epsilon(1e-12));
  CHECK_THROWS_AS(trajectory(p, 4.5, 63), DomainError);
}

TEST_CASE("unbound or empty energies raise") {
  CHECK_THROWS_AS(period(PotentialSpec::coulomb(1.0), 0.5), NoOrbitError);
  CHECK_THROWS_AS(period(PotentialSpec::harmonic(1.0), -1.0), NoOrbitError);
}
