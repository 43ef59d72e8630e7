#include "levelwidth/dipole.hpp"

#include <cmath>
#include <complex>
#include <mutex>

#include <unsupported/Eigen/FFT>

#include "levelwidth/errors.hpp"
#include "levelwidth/numerics.hpp"
#include "levelwidth/wkb.hpp"

namespace lw {

using numerics::pi;

const DipoleEntry& DipoleTable::at(int l) const {
  for (const DipoleEntry& e : entries) {
    if (e.l == l) return e;
  }
  throw CoverageError("dipole table for n = " + std::to_string(n) + " has no entry for l = " + std::to_string(l), l);
}

double coulomb_overlap_integral(int n, int m) {
  if (n < 0 || m < 0) throw DomainError("coulomb_overlap_integral: negative quantum number");
  const double a = n + 1.0;
  const double b = m + 1.0;
  // u = tan(theta) maps [0, inf) onto [0, pi/2); du = sec^2 dtheta.
  auto f = [a, b](double theta) {
    const double u = std::tan(theta);
    const double sec2 = 1.0 + u * u;
    const double phase = 2.0 * a * std::atan(a * u) - 2.0 * b * std::atan(b * u);
    return u * std::sin(phase) * sec2 / ((1.0 + a * a * u * u) * (1.0 + b * b * u * u));
  };
  const double breaks[2] = {0.0, 0.5 * pi};
  const std::vector<double> edges = numerics::graded_edges(breaks, 64, 6);
  const numerics::QuadResult r = numerics::integrate_adaptive(f, edges, 1e-11, 1e-16 / (a * b), 200000);
  if (!r.converged) throw ConvergenceError("Coulomb overlap integral", r.error);
  return r.value;
}

double coulomb_dipole_asymptotic(const PotentialSpec& p, int n, int m) {
  if (p.family != Family::coulomb) throw UnsupportedError("asymptotic dipole only for coulomb");
  if (!(n > m) || m < 1) throw DomainError("coulomb_dipole_asymptotic needs n > m >= 1");
  const double sign = (n - m + 1) % 2 == 0 ? 1.0 : -1.0;
  const double nm = static_cast<double>(n) * m;
  const double diff = static_cast<double>(n) * n - static_cast<double>(m) * m;
  return sign * std::pow(2.0, 4.0 / 3.0) * std::pow(3.0, 1.0 / 6.0) * p.hbar * p.hbar / (p.M * pi * p.A) *
         std::tgamma(2.0 / 3.0) * std::pow(nm, 11.0 / 6.0) / std::pow(diff, 5.0 / 3.0);
}

double exact_dipole(const PotentialSpec& p, int n, int m) {
  validate(p);
  if (n < 0 || m < 0) throw DomainError("exact_dipole: negative quantum number");
  if (n == m) throw DomainError("exact_dipole: needs n != m");
  switch (p.family) {
    case Family::harmonic: {
      const double scale = std::sqrt(p.hbar / (2.0 * p.M * p.omega0));
      if (m == n - 1) return scale * std::sqrt(static_cast<double>(n));
      if (m == n + 1) return scale * std::sqrt(n + 1.0);
      return 0.0;
    }
    case Family::box: {
      if ((n - m) % 2 == 0) return 0.0;
      const double a = n + 1.0;
      const double b = m + 1.0;
      const double diff = a * a - b * b;
      return -8.0 * p.L / (pi * pi) * a * b / (diff * diff);
    }
    case Family::half_harmonic: {
      // Odd oscillator states; factorials balanced in log space.
      const double log_mag = 0.5 * (std::lgamma(2.0 * n + 2.0) + std::lgamma(2.0 * m + 2.0)) -
                             std::lgamma(n + 1.0) - std::lgamma(m + 1.0) - (n + m - 1.0) * std::log(2.0);
      const double k = n - m;
      const double sign = (n - m + 1) % 2 == 0 ? 1.0 : -1.0;
      return sign * std::exp(log_mag) / (4.0 * k * k - 1.0) * std::sqrt(p.hbar / (p.M * pi * p.omega0));
    }
    case Family::coulomb: {
      const double a = n + 1.0;
      const double b = m + 1.0;
      const double pref = 8.0 * p.hbar * p.hbar / (p.M * pi * p.A);
      return pref * std::pow(a * b, 2.5) / (a * a - b * b) * coulomb_overlap_integral(n, m);
    }
    case Family::power_law:
      break;
  }
  throw UnsupportedError("no exact dipoles for a generic power law; use the semiclassical route");
}

FourierRoute resolve_route(const PotentialSpec& p, FourierRoute route) {
  if (route != FourierRoute::automatic) return route;
  if (!is_symmetric(p)) return FourierRoute::graded_time;
  const double e = power_law_form(p).exponent;
  const bool even_integer = e > 0.0 && e <= 8.0 && std::floor(e / 2.0) * 2.0 == e;
  return even_integer ? FourierRoute::uniform_samples : FourierRoute::graded_time;
}

namespace {

constexpr int panel_nodes = 16;
constexpr double max_panel_phase = 3.0;

// Integration matrix on Gauss-Legendre nodes: (S f)_i = int_{-1}^{x_i} p(x) dx
// for the interpolating polynomial p of f.
const Eigen::MatrixXd& integration_matrix() {
  static std::once_flag once;
  static Eigen::MatrixXd S;
  std::call_once(once, [] {
    const numerics::GaussRule& rule = numerics::gauss_legendre(panel_nodes);
    const int n = panel_nodes;
    // P(k, i) = P_k(x_i) for k = 0..n.
    Eigen::MatrixXd P(n + 1, n);
    for (int i = 0; i < n; ++i) {
      const double x = rule.nodes[i];
      P(0, i) = 1.0;
      P(1, i) = x;
      for (int k = 2; k <= n; ++k) P(k, i) = ((2.0 * k - 1.0) * x * P(k - 1, i) - (k - 1.0) * P(k - 2, i)) / k;
    }
    S.resize(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        // L_j = sum_k c_jk P_k with c_jk = w_j P_k(x_j) (2k+1)/2; integrate term by term.
        double s = 0.5 * rule.weights[j] * (rule.nodes[i] + 1.0);
        for (int k = 1; k < n; ++k) {
          s += 0.5 * rule.weights[j] * P(k, j) * (P(k + 1, i) - P(k - 1, i));
        }
        S(i, j) = s;
      }
    }
  });
  return S;
}

// Quadrature nodes of the time form: phase 2 pi t_k / T and weight
// (2/T) q_k dt_k, so that d_l = sum_k W_k cos(l theta_k).
struct PhaseNodes {
  Eigen::ArrayXd theta;
  Eigen::ArrayXd weight;
};

PhaseNodes time_form_nodes(const OrbitMap& map, int l_max) {
  const numerics::GaussRule& rule = numerics::gauss_legendre(panel_nodes);
  const Eigen::MatrixXd& S = integration_matrix();
  const double T = map.period();
  const double dt_max = max_panel_phase * T / (2.0 * pi * std::max(l_max, 1));
  const std::vector<double>& edges = map.panel_edges();
  const std::vector<double>& times = map.panel_times();

  std::vector<double> theta;
  std::vector<double> weight;
  Eigen::VectorXd f(panel_nodes);
  Eigen::VectorXd qv(panel_nodes);
  for (std::size_t j = 0; j + 1 < edges.size(); ++j) {
    const double dt = times[j + 1] - times[j];
    const int pieces = std::max(1, static_cast<int>(std::ceil(dt / dt_max)));
    const double h = (edges[j + 1] - edges[j]) / pieces;
    double t_left = times[j];
    for (int k = 0; k < pieces; ++k) {
      const double a = edges[j] + k * h;
      const double b = k + 1 == pieces ? edges[j + 1] : a + h;
      const double half = 0.5 * (b - a);
      for (int i = 0; i < panel_nodes; ++i) {
        const double u = a + half * (rule.nodes[i] + 1.0);
        f[i] = map.dt_du(u);
        qv[i] = map.q_of_u(u);
      }
      const Eigen::VectorXd t_nodes = (S * f) * half;
      for (int i = 0; i < panel_nodes; ++i) {
        theta.push_back(2.0 * pi * (t_left + t_nodes[i]) / T);
        weight.push_back(2.0 / T * rule.weights[i] * half * f[i] * qv[i]);
      }
      t_left += half * rule.weights.dot(f);
    }
  }
  PhaseNodes nodes;
  nodes.theta = Eigen::Map<const Eigen::ArrayXd>(theta.data(), static_cast<Eigen::Index>(theta.size()));
  nodes.weight = Eigen::Map<const Eigen::ArrayXd>(weight.data(), static_cast<Eigen::Index>(weight.size()));
  return nodes;
}

std::vector<double> graded_time_coefficients(const OrbitMap& map, int l_max) {
  const PhaseNodes nodes = time_form_nodes(map, l_max);
  std::vector<double> d(static_cast<std::size_t>(l_max), 0.0);
  const Eigen::ArrayXcd step = nodes.theta.unaryExpr([](double x) { return std::polar(1.0, x); });
  Eigen::ArrayXcd power = step;
  constexpr int reseed = 64;
  for (int l = 1; l <= l_max; ++l) {
    if (l % reseed == 0) {
      power = nodes.theta.unaryExpr([l](double x) { return std::polar(1.0, l * x); });
    }
    d[static_cast<std::size_t>(l - 1)] = (nodes.weight * power.real()).sum();
    power *= step;
  }
  return d;
}

std::vector<double> uniform_coefficients(const Orbit& orbit, int l_max) {
  std::vector<double> samples = orbit.samples;
  if (static_cast<int>(samples.size()) < 8 * l_max || samples.size() < 64) {
    int N = 4096;
    while (N < 8 * l_max) N *= 2;
    samples = sample_orbit(*orbit.map, N);
  }
  const int N = static_cast<int>(samples.size());
  if (l_max >= N / 2) throw ResolutionError("harmonic beyond the Nyquist limit of the orbit samples", N / 2 - 1);
  Eigen::FFT<double> fft;
  std::vector<std::complex<double>> spectrum;
  fft.fwd(spectrum, samples);
  std::vector<double> d(static_cast<std::size_t>(l_max));
  for (int l = 1; l <= l_max; ++l) d[static_cast<std::size_t>(l - 1)] = spectrum[static_cast<std::size_t>(l)].real() / N;
  return d;
}

double q_integral_coefficient(const OrbitMap& map, int l) {
  const double T = map.period();
  auto f = [&map, l, T](double u) {
    return std::sin(2.0 * pi * l * map.t_of_u(u) / T) * map.dq_du(u);
  };
  const double breaks[2] = {0.0, 1.0};
  const std::vector<double> edges = numerics::graded_edges(breaks, std::max(4, 2 * l), 2);
  const double scale = map.q2() - map.q1();
  const numerics::QuadResult r = numerics::integrate_adaptive(f, edges, 1e-11, 1e-14 * scale, 100000);
  if (!r.converged) throw ConvergenceError("q-integral dipole", r.error);
  return -r.value / (pi * l);
}

}  // namespace

std::vector<double> fourier_coefficients(const Orbit& orbit, int l_max, FourierRoute route) {
  if (l_max < 1) throw DomainError("fourier_coefficients: l_max must be >= 1");
  if (!orbit.map) throw DomainError("fourier_coefficients: orbit has no map");
  switch (resolve_route(orbit.map->potential(), route)) {
    case FourierRoute::uniform_samples:
      return uniform_coefficients(orbit, l_max);
    case FourierRoute::q_integral: {
      std::vector<double> d(static_cast<std::size_t>(l_max));
      for (int l = 1; l <= l_max; ++l) d[static_cast<std::size_t>(l - 1)] = q_integral_coefficient(*orbit.map, l);
      return d;
    }
    case FourierRoute::graded_time:
    case FourierRoute::automatic:
      break;
  }
  return graded_time_coefficients(*orbit.map, l_max);
}

double semiclassical_dipole(const Orbit& orbit, int l, FourierRoute route) {
  if (l < 1) throw DomainError("semiclassical_dipole: l must be >= 1");
  if (resolve_route(orbit.map->potential(), route) == FourierRoute::q_integral) {
    return q_integral_coefficient(*orbit.map, l);
  }
  return fourier_coefficients(orbit, l, route).back();
}

DipoleTable dipole_table(const PotentialSpec& p, int n, int l_max, DipoleMethod method, const DipoleOptions& options) {
  validate(p);
  if (n < 1) throw DomainError("dipole_table: n must be >= 1");
  if (l_max < 1) throw DomainError("dipole_table: l_max must be >= 1");
  DipoleTable table;
  table.n = n;
  table.method = method;
  table.potential = p;
  table.orbit_energy = options.orbit_energy;
  if (method == DipoleMethod::exact) {
    const int top = std::min(l_max, n);
    for (int l = 1; l <= top; ++l) table.entries.push_back({l, exact_dipole(p, n, n - l), 0.0});
    return table;
  }
  if (options.orbit_energy == OrbitEnergy::level) {
    const Orbit orbit = classical_orbit(p, level_energy(p, n));
    const std::vector<double> d = fourier_coefficients(orbit, l_max, options.route);
    for (int l = 1; l <= l_max; ++l) table.entries.push_back({l, d[static_cast<std::size_t>(l - 1)], orbit.T});
    return table;
  }
  for (int l = 1; l <= l_max; ++l) {
    const double mid = n - 0.5 * l;
    if (mid < 0.0) throw DomainError("midpoint orbit energy needs l <= 2n");
    const Orbit orbit = classical_orbit(p, level_energy(p, mid));
    table.entries.push_back({l, semiclassical_dipole(orbit, l, options.route), orbit.T});
  }
  return table;
}

}  // namespace lw
