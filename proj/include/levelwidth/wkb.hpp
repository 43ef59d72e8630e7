#ifndef LEVELWIDTH_WKB_HPP
#define LEVELWIDTH_WKB_HPP

#include <vector>

#include "levelwidth/potentials.hpp"

namespace lw {

enum class SpectrumMethod { exact_analytic, wkb };
enum class QuantizationRoute { automatic, wkb };

struct Level {
  int n = 0;
  double E = 0.0;
};

struct LevelSpectrum {
  std::vector<Level> levels;
  double nu = 0.0;
  SpectrumMethod method = SpectrumMethod::wkb;

  double energy(int n) const;
};

/// nu = mu / 4 with mu = 1 per smooth turning point and 2 per hard wall.
double quantization_offset(const PotentialSpec& p);

/// True for the families with closed-form spectra.
bool has_exact_spectrum(const PotentialSpec& p);

/// Closed-form E_n, also for non-integer n. Throws UnsupportedError for
/// generic power laws.
double exact_energy(const PotentialSpec& p, double n);

/// Solve S(E) = 2 pi hbar (n + nu) for real n >= 0.
double wkb_energy(const PotentialSpec& p, double n);

/// Exact energy where available, otherwise the WKB root.
double level_energy(const PotentialSpec& p, double n, QuantizationRoute route = QuantizationRoute::automatic);

/// Levels n = 0..n_max. The automatic route returns closed-form energies for
/// the analytic families and WKB roots otherwise.
LevelSpectrum quantize(const PotentialSpec& p, int n_max, QuantizationRoute route = QuantizationRoute::automatic);

/// Width of the Airy region around a smooth turning point.
double airy_scale(const PotentialSpec& p, double q_turn);

/// Semiclassical eigenfunction at energy E. The phase is referenced to q1:
/// pi/4 after a smooth turning point, pi/2 after a hard wall. With
/// enforce_airy_margin, points within the Airy scale of a smooth turning
/// point are rejected.
double wavefunction(const PotentialSpec& p, double E, double q, bool enforce_airy_margin = true);

/// 2 pi hbar l / T(E).
double level_spacing(const PotentialSpec& p, double E, int l);

}  // namespace lw

#endif  // LEVELWIDTH_WKB_HPP
