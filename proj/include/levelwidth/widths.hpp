#ifndef LEVELWIDTH_WIDTHS_HPP
#define LEVELWIDTH_WIDTHS_HPP

#include <vector>

#include "levelwidth/dipole.hpp"
#include "levelwidth/wkb.hpp"

namespace lw {

enum class BathKind { ohmic, ohmic_drude, power };

/// Bath spectral density J(omega):
///   ohmic        M gamma omega
///   ohmic_drude  M gamma omega / (1 + omega^2 / omega_c^2)
///   power        prefactor omega^s
struct BathSpec {
  BathKind kind = BathKind::ohmic;
  double gamma = 0.0;
  double omega_c = 0.0;
  double s_exponent = 1.0;
  double prefactor = 0.0;
  double M = 1.0;

  static BathSpec ohmic(double gamma, double M = 1.0);
  static BathSpec ohmic_drude(double gamma, double omega_c, double M = 1.0);
  static BathSpec power(double s, double prefactor);
};

void validate(const BathSpec& b);
double spectral_density(const BathSpec& b, double omega);

/// Which energy differences enter the width sum. automatic: exact level
/// differences for exact tables, 2 pi hbar l / T for semiclassical ones.
enum class SpacingMode { automatic, semiclassical, exact };

struct WidthContribution {
  int l = 0;
  double dGamma = 0.0;
};

struct WidthReport {
  int n = 0;
  /// Sum over the available downward transitions.
  double Gamma = 0.0;
  /// Gamma plus a power-law estimate of transitions l_max < l <= n missing
  /// from a truncated semiclassical table (equal to Gamma otherwise).
  double Gamma_extrapolated = 0.0;
  std::vector<WidthContribution> contributions;
};

/// Zero-temperature golden-rule width (2/hbar) sum_{m<n} |d_nm|^2 J((E_n-E_m)/hbar).
/// Exact tables must cover l = 1..n; semiclassical tables contribute
/// l = 1..min(n, l_max).
WidthReport golden_rule_width(const LevelSpectrum& spec, const DipoleTable& dip, const BathSpec& bath, int n,
                              SpacingMode spacing = SpacingMode::automatic);

/// Ohmic specialization with the system mass, (2 M gamma / hbar^2) sum |d|^2 dE.
WidthReport ohmic_width(const LevelSpectrum& spec, const DipoleTable& dip, double gamma, int n,
                        SpacingMode spacing = SpacingMode::automatic);

/// Dipoles <m|q|n> for m = 0..m_max, m != n (exact route).
struct TransitionDipoles {
  int n = 0;
  std::vector<int> m;
  std::vector<double> d;
};
TransitionDipoles transition_dipoles(const PotentialSpec& p, int n, int m_max);

struct OscillatorStrengths {
  std::vector<int> m;
  /// Absorption-positive f_{n->m} = (2M/hbar^2)(E_m - E_n)|d_nm|^2.
  std::vector<double> f;
  double trk_sum = 0.0;
  int m_max = 0;
};
OscillatorStrengths oscillator_strengths(const LevelSpectrum& spec, const TransitionDipoles& dip,
                                         const PotentialSpec& p);

}  // namespace lw

#endif  // LEVELWIDTH_WIDTHS_HPP
