#ifndef LEVELWIDTH_DOS_HPP
#define LEVELWIDTH_DOS_HPP

#include <array>
#include <complex>
#include <vector>

#include "levelwidth/wkb.hpp"

namespace lw {

/// Ohmically damped oscillator with Drude-regularized damping kernel
/// gamma_hat(nu) = gamma / (1 + nu / omega_c).
struct DampedOscillator {
  double omega0 = 1.0;
  double gamma = 0.0;
  double omega_c = 50.0;
  double hbar = 1.0;
};

void validate(const DampedOscillator& osc);

/// lambda_i with nu^3 + omega_c nu^2 + (omega0^2 + gamma omega_c) nu + omega0^2 omega_c
/// = prod (nu + lambda_i). Their sum is omega_c.
std::array<std::complex<double>, 3> damping_roots(const DampedOscillator& osc);

/// ln Z from the Matsubara product, n = 1..N explicitly and the remainder
/// n > N summed analytically from the large-nu expansion of the factors.
/// N_terms = 0 picks N past the cutoff scale. With tail = false the bare
/// truncated product is returned.
double log_partition_function(const DampedOscillator& osc, double beta, int N_terms = 0, bool tail = true);
double partition_function(const DampedOscillator& osc, double beta, int N_terms = 0, bool tail = true);

/// ln Z for complex beta from the Gamma-function closed form of the product.
std::complex<double> log_partition_function(const DampedOscillator& osc, std::complex<double> beta);

/// Ground-state energy of system plus bath from the beta -> infinity
/// asymptote of the closed form.
double ground_energy_exact(const DampedOscillator& osc);

/// Slope of a least-squares line through -ln Z over beta hbar omega0 in [20, 40].
double ground_energy_estimate(const DampedOscillator& osc);

struct DosCurve {
  /// Energies measured from ground_energy.
  std::vector<double> E_grid;
  std::vector<double> rho;
  /// Estimated transform error per point (0 for model curves).
  std::vector<double> error;
  double omega0 = 0.0;
  double gamma = 0.0;
  double omega_c = 0.0;
  double ground_energy = 0.0;
};

struct InverseLaplaceOptions {
  /// Trapezoid nodes on the half contour.
  int nodes = 1200;
  /// Use the fitted ground energy (default) or the exact asymptote.
  bool fitted_ground_energy = true;
};

/// rho(E) of the excited spectrum by numerical inversion of
/// Z(beta) e^{beta E_g} - 1 (the ground-state delta has unit weight and is
/// removed) along a hyperbolic deformation of the Bromwich line.
DosCurve inverse_laplace_dos(const DampedOscillator& osc, const std::vector<double>& E_grid,
                             const InverseLaplaceOptions& options = {});

/// Sum of unit-weight Lorentzians for levels n >= 1 with FWHM widths[n],
/// energies measured from E_0.
DosCurve lorentzian_dos(const LevelSpectrum& spectrum, const std::vector<double>& widths,
                        const std::vector<double>& E_grid);

struct LorentzianPeak {
  double center = 0.0;
  double fwhm = 0.0;
  double weight = 0.0;
};

/// Least-squares fit of a sum of Lorentzians plus a linear background to a
/// curve, starting from the given centers and widths.
std::vector<LorentzianPeak> fit_lorentzian_peaks(const DosCurve& curve, const std::vector<LorentzianPeak>& guess,
                                                 double E_lo, double E_hi);

}  // namespace lw

#endif  // LEVELWIDTH_DOS_HPP
