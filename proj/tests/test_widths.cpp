#include <doctest.h>

#include <cmath>

#include "levelwidth/errors.hpp"
#include "levelwidth/widths.hpp"

using namespace lw;
constexpr double pi = 3.14159265358979323846;

TEST_CASE("oscillator widths are n gamma") {
  const PotentialSpec p = PotentialSpec::harmonic(1.4, 0.6);
  const LevelSpectrum s = quantize(p, 12);
  for (int n : {1, 4, 12}) {
    const WidthReport r = ohmic_width(s, dipole_table(p, n, n, DipoleMethod::exact), 0.03, n);
    CHECK(r.Gamma == doctest::Approx(0.03 * n).epsilon(1e-13));
    CHECK(r.contributions.size() == static_cast<std::size_t>(n));
  }
  CHECK(ohmic_width(s, dipole_table(p, 1, 1, DipoleMethod::exact), 0.03, 0).Gamma == 0.0);
}

TEST_CASE("power bath with s = 1 reproduces the ohmic bath") {
  const PotentialSpec p = PotentialSpec::box(1.0, 2.0);
  const LevelSpectrum s = quantize(p, 30);
  const DipoleTable d = dipole_table(p, 30, 30, DipoleMethod::exact);
  const double ohmic = golden_rule_width(s, d, BathSpec::ohmic(0.01, 2.0), 30).Gamma;
  const double power = golden_rule_width(s, d, BathSpec::power(1.0, 0.02), 30).Gamma;
  const double drude = golden_rule_width(s, d, BathSpec::ohmic_drude(0.01, 100.0, 2.0), 30).Gamma;
  CHECK(power == doctest::Approx(ohmic).epsilon(1e-14));
  CHECK(drude < ohmic);
}

TEST_CASE("widths are linear in the coupling") {
  const PotentialSpec p = PotentialSpec::half_harmonic(1.0);
  const LevelSpectrum s = quantize(p, 20);
  const DipoleTable d = dipole_table(p, 20, 20, DipoleMethod::exact);
  CHECK(ohmic_width(s, d, 0.07, 20).Gamma == doctest::Approx(7.0 * ohmic_width(s, d, 0.01, 20).Gamma).epsilon(1e-13));
}

TEST_CASE("large-n half-oscillator and box widths approach their prefactors") {
  const PotentialSpec half = PotentialSpec::half_harmonic(1.0);
  const LevelSpectrum s = quantize(half, 100);
  const double c = ohmic_width(s, dipole_table(half, 100, 100, DipoleMethod::exact), 1.0, 100).Gamma / 100;
  CHECK(c == doctest::Approx(8 / (pi * pi)).epsilon(0.005));
}

TEST_CASE("semiclassical spacing uses the orbit period") {
  const PotentialSpec p = PotentialSpec::harmonic(1.0);
  const LevelSpectrum s = quantize(p, 5);
  const DipoleTable d = dipole_table(p, 5, 5, DipoleMethod::semiclassical, {FourierRoute::automatic, OrbitEnergy::midpoint});
  CHECK(golden_rule_width(s, d, BathSpec::ohmic(0.1), 5, SpacingMode::semiclassical).Gamma ==
        doctest::Approx(0.5).epsilon(1e-12));
  CHECK(golden_rule_width(s, d, BathSpec::ohmic(0.1), 5, SpacingMode::exact).Gamma == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("incomplete exact tables and bad baths raise") {
  const PotentialSpec p = PotentialSpec::box(1.0);
  const LevelSpectrum s = quantize(p, 10);
  CHECK_THROWS_AS(ohmic_width(s, dipole_table(p, 10, 4, DipoleMethod::exact), 0.1, 10), CoverageError);
  CHECK_THROWS_AS(ohmic_width(s, dipole_table(p, 9, 9, DipoleMethod::exact), 0.1, 10), DomainError);
  CHECK_THROWS_AS(BathSpec::ohmic(-1.0), DomainError);
  CHECK_THROWS_AS(BathSpec::ohmic_drude(0.1, 0.0), DomainError);
}

TEST_CASE("Thomas-Reiche-Kuhn sums") {
  const PotentialSpec ho = PotentialSpec::harmonic(2.0, 0.5);
  CHECK(oscillator_strengths(quantize(ho, 8), transition_dipoles(ho, 7, 8), ho).trk_sum ==
        doctest::Approx(1.0).epsilon(1e-14));
  const PotentialSpec box = PotentialSpec::box(1.0);
  const OscillatorStrengths fb = oscillator_strengths(quantize(box, 600), transition_dipoles(box, 3, 600), box);
  CHECK(fb.trk_sum == doctest::Approx(1.0).epsilon(1e-4));
  CHECK(fb.trk_sum < 1.0);
  const PotentialSpec half = PotentialSpec::half_harmonic(1.0);
  CHECK(oscillator_strengths(quantize(half, 200), transition_dipoles(half, 2, 200), half).trk_sum ==
        doctest::Approx(1.0).epsilon(1e-3));
  const PotentialSpec c = PotentialSpec::coulomb(1.0);
  const OscillatorStrengths fc = oscillator_strengths(quantize(c, 100), transition_dipoles(c, 0, 100), c);
  // The continuum carries the missing strength; the bound part settles near 0.337.
  CHECK(fc.trk_sum < 1.0);
  CHECK(fc.trk_sum == doctest::Approx(0.337).epsilon(2e-3));
}
