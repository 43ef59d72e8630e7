#include "levelwidth/wkb.hpp"

#include <cmath>

#include "levelwidth/classical.hpp"
#include "levelwidth/errors.hpp"
#include "levelwidth/numerics.hpp"

namespace lw {

using numerics::pi;

double LevelSpectrum::energy(int n) const {
  for (const Level& l : levels) {
    if (l.n == n) return l.E;
  }
  throw DomainError("level " + std::to_string(n) + " not in spectrum");
}

double quantization_offset(const PotentialSpec& p) {
  const int walls = wall_count(p);
  const int smooth = 2 - walls;
  return (smooth + 2.0 * walls) / 4.0;
}

bool has_exact_spectrum(const PotentialSpec& p) { return p.family != Family::power_law; }

double exact_energy(const PotentialSpec& p, double n) {
  const double h = p.hbar;
  switch (p.family) {
    case Family::box:
      return h * h * pi * pi * (n + 1.0) * (n + 1.0) / (2.0 * p.M * p.L * p.L);
    case Family::harmonic:
      return h * p.omega0 * (n + 0.5);
    case Family::half_harmonic:
      return h * p.omega0 * (2.0 * n + 1.5);
    case Family::coulomb:
      return -p.M * p.A * p.A / (2.0 * h * h * (n + 1.0) * (n + 1.0));
    case Family::power_law:
      break;
  }
  throw UnsupportedError("no closed-form spectrum for a generic power law");
}

double wkb_energy(const PotentialSpec& p, double n) {
  if (!(n >= 0.0)) throw DomainError("quantum number must be non-negative");
  const double target = 2.0 * pi * p.hbar * (n + quantization_offset(p));
  const PowerLawForm form = power_law_form(p);
  const double sign = form.exponent < 0.0 ? -1.0 : 1.0;
  // S(E) scales as |E|^k for a single power law (k = 1/2 for the box); one
  // reference orbit gives an initial guess that the bracket then verifies.
  const double k = p.family == Family::box ? 0.5 : (2.0 + form.exponent) / (2.0 * form.exponent);
  const double s_ref = action(p, sign);
  const double guess = sign * std::pow(target / s_ref, 1.0 / k);
  // Work in the magnitude so the bracket never crosses E = 0.
  auto g = [&](double m) { return action(p, sign * m) - target; };
  double width = 1e-9;
  for (int expand = 0; expand < 40; ++expand, width *= 8.0) {
    const double lo = std::abs(guess) * std::max(1.0 - width, 1e-3);
    const double hi = std::abs(guess) * (1.0 + width);
    const double glo = g(lo);
    const double ghi = g(hi);
    if ((glo <= 0.0) != (ghi <= 0.0) || glo == 0.0 || ghi == 0.0) {
      const double m = numerics::find_root(g, lo, hi, 1e-15 * std::abs(guess));
      return sign * m;
    }
  }
  throw QuantizationError("quantization root not bracketed for n = " + numerics::format_shortest(n));
}

double level_energy(const PotentialSpec& p, double n, QuantizationRoute route) {
  if (route == QuantizationRoute::automatic && has_exact_spectrum(p)) return exact_energy(p, n);
  return wkb_energy(p, n);
}

LevelSpectrum quantize(const PotentialSpec& p, int n_max, QuantizationRoute route) {
  if (n_max < 0) throw DomainError("n_max must be non-negative");
  validate(p);
  LevelSpectrum spec;
  spec.nu = quantization_offset(p);
  const bool exact = route == QuantizationRoute::automatic && has_exact_spectrum(p);
  spec.method = exact ? SpectrumMethod::exact_analytic : SpectrumMethod::wkb;
  spec.levels.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    spec.levels.push_back({n, exact ? exact_energy(p, n) : wkb_energy(p, n)});
  }
  return spec;
}

double airy_scale(const PotentialSpec& p, double q_turn) {
  const double slope = std::abs(derivative(p, q_turn));
  return std::cbrt(p.hbar * p.hbar / (p.M * slope));
}

double wavefunction(const PotentialSpec& p, double E, double q, bool enforce_airy_margin) {
  const OrbitMap map(p, E, 1e-12);
  const TurningPoints tp = turning_points(p, E);
  if (!(q >= tp.q1 && q <= tp.q2)) throw DomainError("wavefunction: coordinate outside the allowed region");
  if (enforce_airy_margin) {
    if (!tp.q1_is_wall && q - tp.q1 < airy_scale(p, tp.q1)) {
      throw DomainError("wavefunction: inside the Airy region of the left turning point");
    }
    if (!tp.q2_is_wall && tp.q2 - q < airy_scale(p, tp.q2)) {
      throw DomainError("wavefunction: inside the Airy region of the right turning point");
    }
  }
  const double u = map.u_of_q(q);
  auto density = [&map](double x) {
    const double dq = map.dq_du(x);
    return dq == 0.0 || map.q_of_u(x) == map.q1() ? 0.0 : map.momentum(x) * dq;
  };
  double phase_action = 0.0;
  if (u > 0.0) {
    const double edges[2] = {0.0, u};
    phase_action = numerics::integrate_adaptive(density, edges, 1e-13, 1e-300).value;
  }
  const double p_local = map.momentum(u);
  const double phi0 = tp.q1_is_wall ? 0.5 * pi : 0.25 * pi;
  return std::sqrt(4.0 * p.M / (map.period() * p_local)) * std::cos(phase_action / p.hbar - phi0);
}

double level_spacing(const PotentialSpec& p, double E, int l) {
  if (l < 1) throw DomainError("level_spacing: l must be >= 1");
  return 2.0 * pi * p.hbar * l / period(p, E);
}

}  // namespace lw
