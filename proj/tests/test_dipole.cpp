#include <doctest.h>

#include <cmath>
#include <vector>

#include "levelwidth/dipole.hpp"
#include "levelwidth/errors.hpp"
#include "levelwidth/numerics.hpp"

using namespace lw;
constexpr double pi = 3.14159265358979323846;

namespace {

// Hermite functions (hbar = M = omega = 1) from the three-term recurrence.
std::vector<double> hermite_functions(int n_max, double x) {
  std::vector<double> psi(static_cast<std::size_t>(n_max) + 1);
  psi[0] = std::pow(pi, -0.25) * std::exp(-0.5 * x * x);
  if (n_max > 0) psi[1] = std::sqrt(2.0) * x * psi[0];
  for (int k = 1; k < n_max; ++k) {
    psi[k + 1] = std::sqrt(2.0 / (k + 1)) * x * psi[k] - std::sqrt(static_cast<double>(k) / (k + 1)) * psi[k - 1];
  }
  return psi;
}

double integrate(const std::function<double(double)>& f, double a, double b) {
  const std::vector<double> edges = numerics::graded_edges(std::vector<double>{a, b}, 64, 0);
  return numerics::integrate_adaptive(f, edges, 1e-13, 1e-15).value;
}

double bessel_j_prime(int l, double x) {
  return 0.5 * (std::cyl_bessel_j(l - 1, x) - std::cyl_bessel_j(l + 1, x));
}

}  // namespace

TEST_CASE("harmonic exact dipoles match Hermite-function quadrature") {
  const PotentialSpec p = PotentialSpec::harmonic(1.0);
  for (auto [n, m] : std::vector<std::pair<int, int>>{{1, 0}, {5, 4}, {12, 11}, {6, 3}}) {
    const double brute = integrate([&](double x) {
      const auto psi = hermite_functions(std::max(n, m), x);
      return x * psi[n] * psi[m];
    }, -12.0, 12.0);
    CHECK(std::abs(exact_dipole(p, n, m)) == doctest::Approx(std::abs(brute)).epsilon(1e-10).scale(1.0));
  }
}

TEST_CASE("box exact dipoles match sine quadrature") {
  const double L = 1.7;
  const PotentialSpec p = PotentialSpec::box(L);
  for (auto [n, m] : std::vector<std::pair<int, int>>{{1, 0}, {9, 4}, {20, 3}, {6, 4}}) {
    const double brute = integrate([&](double q) {
      return 2.0 / L * q * std::sin((n + 1) * pi * q / L) * std::sin((m + 1) * pi * q / L);
    }, 0.0, L);
    CHECK(exact_dipole(p, n, m) == doctest::Approx(brute).epsilon(1e-10).scale(L));
  }
}

TEST_CASE("half-oscillator exact dipoles match odd Hermite quadrature") {
  const PotentialSpec p = PotentialSpec::half_harmonic(1.0);
  for (auto [n, m] : std::vector<std::pair<int, int>>{{1, 0}, {4, 1}, {10, 9}, {7, 2}}) {
    const double brute = integrate([&](double x) {
      const auto psi = hermite_functions(2 * std::max(n, m) + 1, x);
      return 2.0 * x * psi[2 * n + 1] * psi[2 * m + 1];
    }, 0.0, 14.0);
    CHECK(std::abs(exact_dipole(p, n, m)) == doctest::Approx(std::abs(brute)).epsilon(1e-9).scale(1.0));
  }
}

TEST_CASE("Coulomb exact dipoles match Laguerre quadrature") {
  const PotentialSpec p = PotentialSpec::coulomb(1.0);
  // u_N(r) = r e^{-r/N} L^1_{N-1}(2r/N), normalized numerically.
  const auto u = [](int N, double r) { return r * std::exp(-r / N) * std::assoc_laguerre(N - 1, 1, 2.0 * r / N); };
  for (auto [n, m] : std::vector<std::pair<int, int>>{{1, 0}, {3, 1}, {8, 6}}) {
    const int N = n + 1, K = m + 1;
    const double top = 40.0 * N;
    const double nn = integrate([&](double r) { return u(N, r) * u(N, r); }, 0.0, top);
    const double mm = integrate([&](double r) { return u(K, r) * u(K, r); }, 0.0, top);
    const double nm = integrate([&](double r) { return r * u(N, r) * u(K, r); }, 0.0, top);
    CHECK(std::abs(exact_dipole(p, n, m)) == doctest::Approx(std::abs(nm) / std::sqrt(nn * mm)).epsilon(1e-8));
  }
}

TEST_CASE("Kepler orbit coefficients are -a J_l'(l) / l") {
  const PotentialSpec p = PotentialSpec::coulomb(1.0);
  const Orbit o = classical_orbit(p, -0.5);
  const double a = 1.0;
  for (FourierRoute route : {FourierRoute::graded_time, FourierRoute::q_integral}) {
    const std::vector<double> d = fourier_coefficients(o, 60, route);
    for (int l : {1, 2, 5, 17, 60}) {
      CHECK(d[static_cast<std::size_t>(l - 1)] == doctest::Approx(-a * bessel_j_prime(l, l) / l).epsilon(1e-8));
    }
  }
}

TEST_CASE("box orbit coefficients are a triangle wave") {
  const double L = 1.5;
  const Orbit o = classical_orbit(PotentialSpec::box(L), 2.0);
  const std::vector<double> d = fourier_coefficients(o, 9);
  for (int l = 1; l <= 9; ++l) {
    const double expected = l % 2 == 1 ? -2.0 * L / (pi * pi * l * l) : 0.0;
    CHECK(d[static_cast<std::size_t>(l - 1)] == doctest::Approx(expected).scale(L).epsilon(1e-11));
  }
}

TEST_CASE("Fourier routes agree on a smooth well") {
  const Orbit o = classical_orbit(PotentialSpec::power_law(1.0, 4.0, false), 2.0);
  const auto u = fourier_coefficients(o, 40, FourierRoute::uniform_samples);
  const auto g = fourier_coefficients(o, 40, FourierRoute::graded_time);
  const auto q = fourier_coefficients(o, 40, FourierRoute::q_integral);
  for (std::size_t i = 0; i < 40; i += 3) {
    CHECK(g[i] == doctest::Approx(u[i]).scale(1.0).epsilon(1e-11));
    CHECK(q[i] == doctest::Approx(u[i]).scale(1.0).epsilon(1e-9));
  }
}

TEST_CASE("power-law coefficients scale as (E/A)^{1/alpha}") {
  const double alpha = 3.0;
  const auto d1 = fourier_coefficients(classical_orbit(PotentialSpec::power_law(1.0, alpha, true), 1.0), 10);
  const auto d2 = fourier_coefficients(classical_orbit(PotentialSpec::power_law(2.0, alpha, true, 3.0), 3.0), 10);
  const double s = std::pow(1.5, 1.0 / alpha);
  for (std::size_t i = 0; i < 10; ++i) CHECK(d2[i] == doctest::Approx(s * d1[i]).scale(1.0).epsilon(1e-11));
}

TEST_CASE("midpoint semiclassical dipoles are exact for the oscillator") {
  const PotentialSpec p = PotentialSpec::harmonic(1.0);
  const DipoleTable t = dipole_table(p, 9, 3, DipoleMethod::semiclassical, {FourierRoute::automatic, OrbitEnergy::midpoint});
  CHECK(std::abs(t.at(1).d) == doctest::Approx(std::sqrt(9 / 2.0)).epsilon(1e-13));
  CHECK(std::abs(t.at(2).d) < 1e-13);
  CHECK_THROWS_AS(t.at(4), CoverageError);
  CHECK_THROWS_AS(dipole_table(p, 1, 3, DipoleMethod::semiclassical, {FourierRoute::automatic, OrbitEnergy::midpoint}),
                  DomainError);
  const DipoleTable e = dipole_table(p, 3, 10, DipoleMethod::exact);
  CHECK(e.l_max() == 3);
}

TEST_CASE("Coulomb semiclassical and exact dipoles approach each other") {
  const PotentialSpec p = PotentialSpec::coulomb(1.0);
  const DipoleTable sc = dipole_table(p, 80, 3, DipoleMethod::semiclassical, {FourierRoute::automatic, OrbitEnergy::midpoint});
  for (int l = 1; l <= 3; ++l) {
    CHECK(std::abs(sc.at(l).d) == doctest::Approx(std::abs(exact_dipole(p, 80, 80 - l))).epsilon(0.02));
  }
  CHECK_THROWS_AS(exact_dipole(PotentialSpec::power_law(1.0, 4.0, false), 2, 1), UnsupportedError);
}
