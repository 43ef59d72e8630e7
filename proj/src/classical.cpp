#include "levelwidth/classical.hpp"

#include <algorithm>
#include <cmath>

#include "levelwidth/errors.hpp"
#include "levelwidth/numerics.hpp"

namespace lw {

using numerics::pi;

namespace {

constexpr int panel_order = 20;

}  // namespace

OrbitMap::OrbitMap(const PotentialSpec& p, double E, double rel_tol) : p_(p), E_(E) {
  validate(p);
  const TurningPoints tp = turning_points(p, E);
  q1_ = tp.q1;
  q2_ = tp.q2;
  delta_ = q2_ - q1_;
  const PowerLawForm form = power_law_form(p);
  a_ = form.a;
  exponent_ = form.exponent;
  v_turn_ = p.family == Family::box ? E : a_ * std::pow(q2_, exponent_);
  // Near a divergent wall p ~ q^(e/2); kappa (2 + e) >= 2 keeps both the
  // action and the time integrands regular in u.
  kappa_ = exponent_ < 0.0 ? std::max(2.0, 2.0 / (2.0 + exponent_)) : 1.0;

  breaks_ = {0.0, 1.0};
  if (is_symmetric(p)) breaks_ = {0.0, 0.5, 1.0};

  auto f = [this](double u) { return dt_du(u); };
  const std::vector<double> start = numerics::graded_edges(breaks_, 4, 0);
  numerics::QuadResult table = numerics::integrate_adaptive(f, start, rel_tol, 0.0, 50000);
  if (!table.converged) {
    throw ConvergenceError("time-of-flight table did not converge", table.error / std::abs(table.value));
  }
  edges_.reserve(table.segments.size() + 1);
  times_.reserve(table.segments.size() + 1);
  double t = 0.0;
  for (const numerics::Segment& s : table.segments) {
    edges_.push_back(s.a);
    times_.push_back(t);
    t += s.value;
  }
  edges_.push_back(1.0);
  times_.push_back(t);
  period_ = 2.0 * t;

  auto g = [this](double u) {
    const double dq = dq_du(u);
    return dq == 0.0 || q_of_u(u) == q1_ ? 0.0 : momentum(u) * dq;
  };
  const numerics::QuadResult s = numerics::integrate_adaptive(g, start, rel_tol, 0.0, 50000);
  if (!s.converged) throw ConvergenceError("action integral did not converge", s.error / std::abs(s.value));
  action_ = 2.0 * s.value;
}

void OrbitMap::distances(double u, double& d1, double& d2) const {
  const double sn = std::sin(0.5 * pi * u);
  const double cs = std::sin(0.5 * pi * (1.0 - u));
  const double s = sn * sn;
  const double c = cs * cs;
  if (kappa_ == 1.0) {
    d1 = delta_ * s;
    d2 = delta_ * c;
  } else if (kappa_ == 2.0) {
    d1 = delta_ * s * s;
    d2 = delta_ * c * (1.0 + s);
  } else {
    d1 = delta_ * std::pow(s, kappa_);
    d2 = s < 0.5 ? delta_ - d1 : -delta_ * std::expm1(kappa_ * std::log1p(-c));
  }
}

double OrbitMap::q_of_u(double u) const {
  double d1 = 0.0;
  double d2 = 0.0;
  distances(u, d1, d2);
  return d1 <= d2 ? q1_ + d1 : q2_ - d2;
}

double OrbitMap::dq_du(double u) const {
  const double sn = std::sin(0.5 * pi * u);
  const double s = sn * sn;
  const double base = delta_ * 0.5 * pi * std::sin(pi * u);
  if (kappa_ == 1.0) return base;
  return base * kappa_ * std::pow(s, kappa_ - 1.0);
}

double OrbitMap::momentum(double u) const {
  if (p_.family == Family::box) return std::sqrt(2.0 * p_.M * E_);
  double d1 = 0.0;
  double d2 = 0.0;
  distances(u, d1, d2);
  // V(q) = V(q2) (|q|/q2)^e, with |q|/q2 taken from whichever distance is small.
  const double q = d1 <= d2 ? q1_ + d1 : q2_ - d2;
  const double r = (q >= 0.0 ? d2 : d1) / q2_;
  const double x = std::abs(q) / q2_;
  const double log_x = x < 0.5 ? std::log(x) : std::log1p(-r);
  const double kinetic = -v_turn_ * std::expm1(exponent_ * log_x);
  return std::sqrt(2.0 * p_.M * std::max(kinetic, 0.0));
}

double OrbitMap::dt_du(double u) const {
  const double dq = dq_du(u);
  if (dq == 0.0) return 0.0;
  return p_.M * dq / momentum(u);
}

double OrbitMap::time_in_panel(std::size_t j, double u) const {
  const double a = edges_[j];
  if (u <= a) return times_[j];
  auto f = [this](double x) { return dt_du(x); };
  return times_[j] + numerics::integrate_gauss(f, a, u, panel_order);
}

double OrbitMap::t_of_u(double u) const {
  if (!(u >= 0.0 && u <= 1.0)) throw DomainError("orbit parameter outside [0, 1]");
  if (u == 1.0) return times_.back();
  const auto it = std::upper_bound(edges_.begin(), edges_.end(), u);
  const std::size_t j = static_cast<std::size_t>(std::distance(edges_.begin(), it)) - 1;
  return time_in_panel(j, u);
}

double OrbitMap::u_of_t(double t) const {
  const double half = times_.back();
  if (!(t >= 0.0 && t <= half * (1.0 + 1e-14))) throw DomainError("time outside the half period");
  if (t <= 0.0) return 0.0;
  if (t >= half) return 1.0;
  const auto it = std::upper_bound(times_.begin(), times_.end(), t);
  const std::size_t j = static_cast<std::size_t>(std::distance(times_.begin(), it)) - 1;
  double lo = edges_[j];
  double hi = edges_[j + 1];
  const double t_lo = times_[j];
  const double t_hi = times_[j + 1];
  double x = lo + (hi - lo) * (t - t_lo) / (t_hi - t_lo);
  for (int iter = 0; iter < 100; ++iter) {
    const double g = time_in_panel(j, x) - t;
    if (std::abs(g) <= 2.0 * numerics::eps * t) return x;
    if (g > 0.0) {
      hi = x;
    } else {
      lo = x;
    }
    const double slope = dt_du(x);
    double next = slope > 0.0 ? x - g / slope : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - x) <= 2.0 * numerics::eps * std::max(std::abs(x), 1e-300) || hi - lo <= 4.0 * numerics::eps) {
      return next;
    }
    x = next;
  }
  throw ResolutionError("orbit inversion failed to converge", t);
}

double OrbitMap::u_of_q(double q) const {
  if (!(q >= q1_ && q <= q2_)) throw DomainError("coordinate outside the classically allowed region");
  const double x = (q - q1_) / delta_;
  const double s = kappa_ == 1.0 ? x : std::pow(x, 1.0 / kappa_);
  return 2.0 / pi * std::asin(std::sqrt(std::clamp(s, 0.0, 1.0)));
}

double Orbit::position_at(double t) const {
  double tau = std::fmod(t, T);
  if (tau < 0.0) tau += T;
  if (tau > 0.5 * T) tau = T - tau;
  return map->q_of_u(map->u_of_t(std::min(tau, map->period() * 0.5)));
}

double Orbit::time_at(double q) const { return map->t_of_u(map->u_of_q(q)); }

double period(const PotentialSpec& p, double E) { return OrbitMap(p, E).period(); }

double action(const PotentialSpec& p, double E) { return OrbitMap(p, E).action(); }

double time_of_flight(const PotentialSpec& p, double E, double q) {
  const OrbitMap map(p, E);
  return map.t_of_u(map.u_of_q(q));
}

std::vector<double> sample_orbit(const OrbitMap& map, int N_t) {
  if (N_t < 64 || N_t % 2 != 0) throw DomainError("trajectory: N_t must be even and >= 64");
  std::vector<double> samples(static_cast<std::size_t>(N_t), 0.0);
  const int half = N_t / 2;
  const double T = map.period();
  for (int k = 0; k <= half; ++k) {
    const double t = T * k / N_t;
    samples[static_cast<std::size_t>(k)] = k == half ? map.q2() : map.q_of_u(map.u_of_t(t));
  }
  for (int k = half + 1; k < N_t; ++k) {
    samples[static_cast<std::size_t>(k)] = samples[static_cast<std::size_t>(N_t - k)];
  }
  return samples;
}

Orbit classical_orbit(const PotentialSpec& p, double E) {
  auto map = std::make_shared<const OrbitMap>(p, E);
  Orbit orbit;
  orbit.E = E;
  orbit.q1 = map->q1();
  orbit.q2 = map->q2();
  orbit.T = map->period();
  orbit.S = map->action();
  orbit.map = std::move(map);
  return orbit;
}

Orbit trajectory(const PotentialSpec& p, double E, int N_t) {
  if (N_t < 64 || N_t % 2 != 0) throw DomainError("trajectory: N_t must be even and >= 64");
  Orbit orbit = classical_orbit(p, E);
  orbit.samples = sample_orbit(*orbit.map, N_t);
  return orbit;
}

}  // namespace lw
