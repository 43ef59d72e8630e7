#ifndef LEVELWIDTH_POTENTIALS_HPP
#define LEVELWIDTH_POTENTIALS_HPP

#include <string>
#include <string_view>

namespace lw {

enum class Family { power_law, box, harmonic, half_harmonic, coulomb };

/// A one-dimensional confining potential. Build through the factories; they
/// validate. Every family is a single power law a|q|^e on its allowed region,
/// optionally closed by hard walls.
struct PotentialSpec {
  Family family = Family::harmonic;
  double A = 0.0;       // power_law amplitude, coulomb strength (V = -A/q)
  double alpha = 0.0;   // power_law exponent
  double L = 0.0;       // box length, box is [0, L]
  double omega0 = 0.0;  // harmonic families
  double M = 1.0;
  double hbar = 1.0;
  bool left_wall = false;  // hard wall at q = 0
  bool box_pair = false;   // walls at 0 and L

  static PotentialSpec power_law(double A, double alpha, bool wall, double M = 1.0, double hbar = 1.0);
  static PotentialSpec box(double L, double M = 1.0, double hbar = 1.0);
  static PotentialSpec harmonic(double omega0, double M = 1.0, double hbar = 1.0);
  static PotentialSpec half_harmonic(double omega0, double M = 1.0, double hbar = 1.0);
  static PotentialSpec coulomb(double A, double M = 1.0, double hbar = 1.0);
};

/// Throws DomainError if the invariants of the family are violated.
void validate(const PotentialSpec& p);

/// V = a |q|^exponent. For the box a = 0 and exponent = 0.
struct PowerLawForm {
  double a = 0.0;
  double exponent = 0.0;
};
PowerLawForm power_law_form(const PotentialSpec& p);

/// True when the allowed region is symmetric about q = 0 (no wall).
bool is_symmetric(const PotentialSpec& p);

double evaluate(const PotentialSpec& p, double q);
/// dV/dq, used for the Airy scale of smooth turning points.
double derivative(const PotentialSpec& p, double q);

/// Lowest energy of the continuum of bound motion: bounded orbits exist for
/// E above this value (and below 0 for attractive negative exponents).
bool admits_bounded_motion(const PotentialSpec& p, double E);

struct TurningPoints {
  double q1 = 0.0;
  double q2 = 0.0;
  bool q1_is_wall = false;
  bool q2_is_wall = false;
};

/// Classical turning points at E. Walls replace turning points.
TurningPoints turning_points(const PotentialSpec& p, double E);

/// Number of hard walls and smooth turning points (Maslov counting).
int wall_count(const PotentialSpec& p);

/// Parse `powerlaw:A=..,alpha=..[,wall]`, `box:L=..`, `harmonic:omega=..`,
/// `halfharmonic:omega=..`, `coulomb:A=..`, each with optional `,M=..,hbar=..`.
PotentialSpec parse_potential(std::string_view text);
std::string to_string(const PotentialSpec& p);
std::string family_name(Family f);

}  // namespace lw

#endif  // LEVELWIDTH_POTENTIALS_HPP
