#include <doctest.h>

#include <cmath>

#include "levelwidth/classical.hpp"
#include "levelwidth/errors.hpp"
#include "levelwidth/numerics.hpp"
#include "levelwidth/wkb.hpp"

using namespace lw;
constexpr double pi = 3.14159265358979323846;

TEST_CASE("WKB is exact for the harmonic, box and half-oscillator spectra") {
  const PotentialSpec ho = PotentialSpec::harmonic(1.3);
  const PotentialSpec box = PotentialSpec::box(0.8, 2.0);
  const PotentialSpec half = PotentialSpec::half_harmonic(0.6);
  for (int n : {0, 1, 7, 40}) {
    CHECK(wkb_energy(ho, n) == doctest::Approx(1.3 * (n + 0.5)).epsilon(1e-11));
    CHECK(wkb_energy(box, n) == doctest::Approx(pi * pi * (n + 1) * (n + 1) / (2 * 2.0 * 0.64)).epsilon(1e-11));
    CHECK(wkb_energy(half, n) == doctest::Approx(0.6 * (2 * n + 1.5)).epsilon(1e-11));
  }
  CHECK(quantization_offset(ho) == 0.5);
  CHECK(quantization_offset(box) == 1.0);
  CHECK(quantization_offset(half) == 0.75);
}

TEST_CASE("Coulomb WKB converges to the exact spectrum") {
  const PotentialSpec c = PotentialSpec::coulomb(1.0);
  double last = 1.0;
  for (int n : {5, 25, 50, 200}) {
    const double err = std::abs(wkb_energy(c, n) / exact_energy(c, n) - 1.0);
    CHECK(err < last);
    last = err;
  }
  CHECK(last < 0.003);
}

TEST_CASE("quartic levels follow the action scaling") {
  const PotentialSpec p = PotentialSpec::power_law(1.0, 4.0, false);
  // E ~ (n + 1/2)^{4/3} at large n
  const double r = wkb_energy(p, 400) / wkb_energy(p, 200);
  CHECK(r == doctest::Approx(std::pow(400.5 / 200.5, 4.0 / 3.0)).epsilon(1e-10));
  const LevelSpectrum s = quantize(p, 10);
  for (int n = 1; n <= 10; ++n) CHECK(s.energy(n) > s.energy(n - 1));
  CHECK_THROWS_AS(exact_energy(p, 3), UnsupportedError);
}

TEST_CASE("box WKB wavefunction is the exact sine") {
  const PotentialSpec box = PotentialSpec::box(1.0);
  const int n = 4;
  const double E = exact_energy(box, n);
  for (double q : {0.1, 0.33, 0.71}) {
    CHECK(std::abs(wavefunction(box, E, q)) == doctest::Approx(std::abs(std::sqrt(2.0) * std::sin((n + 1) * pi * q))).epsilon(1e-10));
  }
}

namespace {

double wkb_norm(const PotentialSpec& p, double E) {
  const TurningPoints tp = turning_points(p, E);
  // q = mid + half sin(theta) absorbs the 1/p turning-point singularity.
  const double mid = 0.5 * (tp.q1 + tp.q2);
  const double half = 0.5 * (tp.q2 - tp.q1);
  const std::vector<double> edges{-0.5 * pi, 0.0, 0.5 * pi};
  return numerics::integrate_adaptive(
             [&](double th) {
               const double q = mid + half * std::sin(th);
               if (q <= tp.q1 || q >= tp.q2) return 0.0;
               const double psi = wavefunction(p, E, q, false);
               return psi * psi * half * std::cos(th);
             },
             edges, 1e-10)
      .value;
}

// Excess of the full-interval norm from one smooth turning point: the phase
// cos^2(S/hbar - pi/4) is not averaged there, leaving
// (2M/T) (2/3) Gamma(1/3) sin(pi/6) (3/4)^{1/3} sqrt(eps) / k
// with k = sqrt(2 M F) and eps = (hbar / k)^{2/3}.
double turning_point_excess(const PotentialSpec& p, double E, double q) {
  const double k = std::sqrt(2.0 * p.M * std::abs(derivative(p, q)));
  const double eps = std::cbrt(p.hbar * p.hbar / (k * k));
  const double c = 2.0 / 3.0 * std::tgamma(1.0 / 3.0) * 0.5 * std::cbrt(0.75);
  return 2.0 * p.M / period(p, E) * c * std::sqrt(eps) / k;
}

}  // namespace

TEST_CASE("WKB norm is exact with walls only") {
  const PotentialSpec box = PotentialSpec::box(1.3);
  CHECK(wkb_norm(box, exact_energy(box, 12)) == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("WKB norm excess follows the turning-point law") {
  const PotentialSpec ho = PotentialSpec::harmonic(1.0);
  for (int n : {30, 300}) {
    const double E = n + 0.5;
    const double a = std::sqrt(2 * E);
    const double predicted = 2.0 * turning_point_excess(ho, E, a);
    CHECK(wkb_norm(ho, E) - 1.0 == doctest::Approx(predicted).epsilon(0.05));
  }
  const PotentialSpec half = PotentialSpec::half_harmonic(1.0);
  const double E = wkb_energy(half, 40);
  const double predicted = turning_point_excess(half, E, turning_points(half, E).q2);
  CHECK(wkb_norm(half, E) - 1.0 == doctest::Approx(predicted).epsilon(0.05));
  CHECK_THROWS_AS(wavefunction(ho, 30.5, std::sqrt(61.0) * 0.9999), DomainError);
}

TEST_CASE("level spacing is 2 pi hbar l / T") {
  const PotentialSpec ho = PotentialSpec::harmonic(2.0);
  CHECK(level_spacing(ho, 5.0, 3) == doctest::Approx(6.0).epsilon(1e-12));
  CHECK(airy_scale(ho, 1.0) == doctest::Approx(std::cbrt(1.0 / 4.0)).epsilon(1e-14));
}
