#ifndef LEVELWIDTH_CLASSICAL_HPP
#define LEVELWIDTH_CLASSICAL_HPP

#include <memory>
#include <vector>

#include "levelwidth/potentials.hpp"

namespace lw {

/// One half period of bounded motion, parametrized by u in [0, 1]:
/// q(u) = q1 + (q2 - q1) s^kappa with s = sin^2(pi u / 2). The substitution
/// removes the 1/p singularity at smooth turning points; kappa > 1 next to a
/// divergent wall softens the cusp of q(t). The time of flight t(u) is
/// tabulated on adaptive Gauss-Kronrod panels and refined inside a panel
/// with Gauss-Legendre.
class OrbitMap {
 public:
  OrbitMap(const PotentialSpec& p, double E, double rel_tol = 1e-13);

  const PotentialSpec& potential() const { return p_; }
  double energy() const { return E_; }
  double q1() const { return q1_; }
  double q2() const { return q2_; }
  double period() const { return period_; }
  double action() const { return action_; }
  double kappa() const { return kappa_; }

  double q_of_u(double u) const;
  double dq_du(double u) const;
  /// Momentum magnitude at q(u), evaluated without cancellation near the
  /// turning points.
  double momentum(double u) const;
  /// dt/du = M/p * dq/du.
  double dt_du(double u) const;
  /// Time since leaving q1.
  double t_of_u(double u) const;
  /// Inverse of t_of_u on [0, T/2].
  double u_of_t(double t) const;
  double u_of_q(double q) const;

  /// Natural breakpoints in u (endpoints plus the q = 0 crossing of a
  /// symmetric well).
  const std::vector<double>& breakpoints() const { return breaks_; }
  /// Panel edges of the time table and the time at each edge.
  const std::vector<double>& panel_edges() const { return edges_; }
  const std::vector<double>& panel_times() const { return times_; }

 private:
  void distances(double u, double& d1, double& d2) const;
  double time_in_panel(std::size_t j, double u) const;

  PotentialSpec p_;
  double E_;
  double q1_ = 0.0;
  double q2_ = 0.0;
  double delta_ = 0.0;
  double a_ = 0.0;
  double exponent_ = 0.0;
  double v_turn_ = 0.0;
  double kappa_ = 1.0;
  double period_ = 0.0;
  double action_ = 0.0;
  std::vector<double> breaks_;
  std::vector<double> edges_;
  std::vector<double> times_;
};

/// One classical period at energy E with uniform-time samples
/// q(k T / N_t), k = 0..N_t-1, starting at q1.
struct Orbit {
  double E = 0.0;
  double q1 = 0.0;
  double q2 = 0.0;
  double T = 0.0;
  double S = 0.0;
  std::vector<double> samples;
  std::shared_ptr<const OrbitMap> map;

  /// q(t) for any t (periodic extension).
  double position_at(double t) const;
  /// Time of flight from q1 to q, in [0, T/2].
  double time_at(double q) const;
};

double period(const PotentialSpec& p, double E);
double action(const PotentialSpec& p, double E);
double time_of_flight(const PotentialSpec& p, double E, double q);
/// N_t must be even and at least 64.
Orbit trajectory(const PotentialSpec& p, double E, int N_t = 4096);

/// Orbit without uniform-time samples, for routes that only need the map.
Orbit classical_orbit(const PotentialSpec& p, double E);

/// Uniform-time samples q(k T / N_t), k = 0..N_t-1, from an orbit map.
std::vector<double> sample_orbit(const OrbitMap& map, int N_t);

}  // namespace lw

#endif  // LEVELWIDTH_CLASSICAL_HPP
