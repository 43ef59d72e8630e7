#ifndef LEVELWIDTH_SCALING_HPP
#define LEVELWIDTH_SCALING_HPP

#include <vector>

#include "levelwidth/dipole.hpp"

namespace lw {

/// Dimensionless orbit of sign(E) = qdot'^2/2 + sign(A)|q'|^alpha, which
/// depends on alpha and the wall only.
struct ScaledSystem {
  double alpha = 0.0;
  bool wall = false;
  int sign_A = 1;
  int sign_E = 1;
  double S_prime = 0.0;
  double T_prime = 0.0;
  /// d_l' for l = 1..l_max (element l-1).
  std::vector<double> d_prime;
};

ScaledSystem scaled_orbit(double alpha, bool wall, int l_max = 1000,
                          FourierRoute route = FourierRoute::automatic);

/// Power-law fit |d_l| ~ C l^-exponent over the last decade of the series.
struct TailFit {
  double exponent = 0.0;
  double C = 0.0;
  int survivors = 0;
  int window = 0;
  /// The series fell below the noise floor before the last decade; exponent
  /// is then the local slope of the last survivors (+inf if only one).
  bool super_algebraic = false;
};

/// Entries below 1e-12 of the largest magnitude are excluded. Needs at least
/// 30 survivors in the window unless the series decayed into the floor;
/// otherwise throws FitError.
TailFit tail_exponent(const std::vector<double>& d);

/// sum_{l} l d_l^2 over the series plus the power-law tail beyond it.
struct WeightedSum {
  double raw = 0.0;
  double tail = 0.0;
  TailFit fit;
};
WeightedSum weighted_square_sum(const std::vector<double>& d);

struct Prefactor {
  double alpha = 0.0;
  bool wall = false;
  double c = 0.0;
  /// Magnitude of the tail extrapolation, as an error bound.
  double c_err = 0.0;
  /// Without tail extrapolation.
  double c_raw = 0.0;
  double tail_exponent = 0.0;
};

/// c = 8 pi^2 sum l d_l'^2 / (S' T'), so that Gamma_n ~ c gamma n.
Prefactor width_prefactor(double alpha, bool wall, int l_max = 1000);
Prefactor width_prefactor(const ScaledSystem& sys);

/// E_n from the scaled action. include_offset replaces n by n + nu.
double energy_from_n(double alpha, double A, double M, double hbar, double S_prime, double n,
                     bool wall, bool include_offset = false);

/// Default scan grid, with the wall switched on for alpha < 0.
std::vector<double> default_alpha_grid();

}  // namespace lw

#endif  // LEVELWIDTH_SCALING_HPP
