#ifndef LEVELWIDTH_DIPOLE_HPP
#define LEVELWIDTH_DIPOLE_HPP

#include <vector>

#include "levelwidth/classical.hpp"
#include "levelwidth/potentials.hpp"

namespace lw {

enum class DipoleMethod { exact, semiclassical };

/// How the Fourier coefficients of q(t) are evaluated.
///  uniform_samples: FFT of uniform-time samples (spectral for analytic orbits)
///  graded_time:     time form on Gauss-Legendre panels graded in u, each
///                   spanning at most a few radians of the highest harmonic
///  q_integral:      -(1/pi l) int sin(2 pi l t(q)/T) dq, adaptive
///  automatic:       uniform_samples for smooth analytic wells (no wall, even
///                   integer exponent up to 8), graded_time otherwise
enum class FourierRoute { automatic, uniform_samples, graded_time, q_integral };

/// Energy of the classical orbit used for d_{n,n-l}: the level E_n itself,
/// or the energy at the midpoint quantum number n - l/2.
enum class OrbitEnergy { level, midpoint };

struct DipoleEntry {
  int l = 0;
  double d = 0.0;
  /// Period of the orbit the entry was taken from (0 for exact entries).
  double period = 0.0;
};

struct DipoleTable {
  int n = 0;
  std::vector<DipoleEntry> entries;
  DipoleMethod method = DipoleMethod::exact;
  PotentialSpec potential;
  OrbitEnergy orbit_energy = OrbitEnergy::level;

  /// Entry for a given l; throws CoverageError if absent.
  const DipoleEntry& at(int l) const;
  int l_max() const { return entries.empty() ? 0 : entries.back().l; }
};

struct DipoleOptions {
  FourierRoute route = FourierRoute::automatic;
  OrbitEnergy orbit_energy = OrbitEnergy::level;
};

/// <m|q|n> in closed form (Coulomb through the momentum-space integral).
/// Throws UnsupportedError for generic power laws.
double exact_dipole(const PotentialSpec& p, int n, int m);

/// Momentum-space overlap integral of the Coulomb dipole.
double coulomb_overlap_integral(int n, int m);

/// Large-n asymptotic form of the Coulomb dipole d_{nm}, n > m.
double coulomb_dipole_asymptotic(const PotentialSpec& p, int n, int m);

/// Route actually used for an orbit of this potential.
FourierRoute resolve_route(const PotentialSpec& p, FourierRoute route);

/// d_l = (1/T) int_0^T q(t) cos(2 pi l t / T) dt for l = 1..l_max
/// (element l-1). The orbit starts at q1 at t = 0.
std::vector<double> fourier_coefficients(const Orbit& orbit, int l_max,
                                         FourierRoute route = FourierRoute::automatic);

double semiclassical_dipole(const Orbit& orbit, int l, FourierRoute route = FourierRoute::automatic);

/// Exact: d_{n,n-l} for l = 1..min(l_max, n). Semiclassical: l = 1..l_max.
DipoleTable dipole_table(const PotentialSpec& p, int n, int l_max, DipoleMethod method,
                         const DipoleOptions& options = {});

}  // namespace lw

#endif  // LEVELWIDTH_DIPOLE_HPP
