#include "levelwidth/dos.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>
#include <unsupported/Eigen/LevenbergMarquardt>
#include <unsupported/Eigen/NumericalDiff>

#include "levelwidth/errors.hpp"
#include "levelwidth/numerics.hpp"
#include "levelwidth/special.hpp"

namespace lw {

using numerics::pi;
using cplx = std::complex<double>;

void validate(const DampedOscillator& osc) {
  if (!(osc.omega0 > 0.0) || !std::isfinite(osc.omega0)) throw DomainError("damped oscillator: omega0 must be positive");
  if (!(osc.gamma >= 0.0) || !(osc.gamma < osc.omega0)) {
    throw DomainError("damped oscillator: need 0 <= gamma < omega0");
  }
  if (!(osc.omega_c > 0.0) || !std::isfinite(osc.omega_c)) throw DomainError("damped oscillator: omega_c must be positive");
  if (!(osc.hbar > 0.0) || !std::isfinite(osc.hbar)) throw DomainError("damped oscillator: hbar must be positive");
}

std::array<cplx, 3> damping_roots(const DampedOscillator& osc) {
  validate(osc);
  // lambda^3 - e1 lambda^2 + e2 lambda - e3 = 0
  const double e1 = osc.omega_c;
  const double e2 = osc.omega0 * osc.omega0 + osc.gamma * osc.omega_c;
  const double e3 = osc.omega0 * osc.omega0 * osc.omega_c;
  Eigen::Matrix3d companion;
  companion << e1, -e2, e3, 1.0, 0.0, 0.0, 0.0, 1.0, 0.0;
  const Eigen::EigenSolver<Eigen::Matrix3d> solver(companion, false);
  std::array<cplx, 3> roots;
  for (int i = 0; i < 3; ++i) {
    cplx z = solver.eigenvalues()[i];
    for (int it = 0; it < 4; ++it) {
      const cplx f = ((z - e1) * z + e2) * z - e3;
      const cplx df = (3.0 * z - 2.0 * e1) * z + e2;
      if (df == 0.0) break;
      z -= f / df;
    }
    roots[static_cast<std::size_t>(i)] = z;
  }
  // Real root first, then the complex pair with Im > 0 leading.
  std::sort(roots.begin(), roots.end(), [](cplx a, cplx b) { return std::abs(a.imag()) < std::abs(b.imag()) ||
                                                                    (std::abs(a.imag()) == std::abs(b.imag()) && a.imag() > b.imag()); });
  return roots;
}

double log_partition_function(const DampedOscillator& osc, double beta, int N_terms, bool tail) {
  validate(osc);
  if (!(beta > 0.0) || !std::isfinite(beta)) throw DomainError("partition function: beta must be positive");
  if (N_terms < 0) throw DomainError("partition function: negative term count");
  const double x = 2.0 * pi / (osc.hbar * beta);
  const double w2 = osc.omega0 * osc.omega0;
  double R = osc.omega_c;
  for (const cplx& l : damping_roots(osc)) R = std::max(R, std::abs(l));
  int N = N_terms;
  if (N == 0 || (tail && N * x < 4.0 * R)) {
    N = std::max(N, static_cast<int>(std::ceil(4.0 * R / x)) + 16);
  }

  double log_z = -std::log(osc.hbar * beta * osc.omega0);
  for (int n = 1; n <= N; ++n) {
    const double nu = n * x;
    const double g = osc.gamma / (1.0 + nu / osc.omega_c);
    log_z -= std::log1p((nu * g + w2) / (nu * nu));
  }
  if (!tail) return log_z;

  // ln f(nu) = sum_{k>=2} (-1)^k (P_k - omega_c^k) / (k nu^k) with power sums
  // P_k of the roots from Newton's identities, all scaled by x^-k.
  const double e1 = osc.omega_c / x;
  const double e2 = (w2 + osc.gamma * osc.omega_c) / (x * x);
  const double e3 = w2 * osc.omega_c / (x * x * x);
  double p1 = e1;
  double p2 = e1 * p1 - 2.0 * e2;
  double p3 = e1 * p2 - e2 * p1 + 3.0 * e3;
  double c_pow = e1 * e1;
  double sum = 0.0;
  const double a = N + 1.0;
  for (int k = 2; k <= 80; ++k) {
    double pk = 0.0;
    if (k == 2) {
      pk = p2;
    } else if (k == 3) {
      pk = p3;
      c_pow *= e1;
    } else {
      pk = e1 * p3 - e2 * p2 + e3 * p1;
      p1 = p2;
      p2 = p3;
      p3 = pk;
      c_pow *= e1;
    }
    const double term = ((k % 2 == 0) ? 1.0 : -1.0) * (pk - c_pow) / k * special::hurwitz_zeta(k, a);
    sum += term;
    if (k > 4 && std::abs(term) <= 1e-18 * std::max(std::abs(sum), 1e-300)) break;
  }
  return log_z + sum;
}

double partition_function(const DampedOscillator& osc, double beta, int N_terms, bool tail) {
  return std::exp(log_partition_function(osc, beta, N_terms, tail));
}

namespace {

cplx log_z_closed(const DampedOscillator& osc, const std::array<cplx, 3>& roots, cplx beta) {
  const cplx b = osc.hbar * beta / (2.0 * pi);
  cplx out = -std::log(osc.hbar * beta * osc.omega0);
  for (const cplx& l : roots) out += special::log_gamma(1.0 + l * b);
  out -= special::log_gamma(1.0 + osc.omega_c * b);
  return out;
}

}  // namespace

cplx log_partition_function(const DampedOscillator& osc, cplx beta) {
  return log_z_closed(osc, damping_roots(osc), beta);
}

double ground_energy_exact(const DampedOscillator& osc) {
  const std::array<cplx, 3> roots = damping_roots(osc);
  cplx s = -osc.omega_c * std::log(osc.omega_c);
  for (const cplx& l : roots) s += l * std::log(l);
  return -osc.hbar / (2.0 * pi) * s.real();
}

double ground_energy_estimate(const DampedOscillator& osc) {
  validate(osc);
  const int points = 41;
  Eigen::VectorXd x(points);
  Eigen::VectorXd y(points);
  for (int i = 0; i < points; ++i) {
    const double bw = 20.0 + 20.0 * i / (points - 1);
    const double beta = bw / (osc.hbar * osc.omega0);
    x[i] = beta;
    y[i] = -log_partition_function(osc, beta);
  }
  return numerics::fit_line(x, y).slope;
}

namespace {

cplx expm1(cplx z) {
  const double s = std::sin(0.5 * z.imag());
  return {std::expm1(z.real()) * std::cos(z.imag()) - 2.0 * s * s, std::exp(z.real()) * std::sin(z.imag())};
}

}  // namespace

DosCurve inverse_laplace_dos(const DampedOscillator& osc, const std::vector<double>& E_grid,
                             const InverseLaplaceOptions& options) {
  validate(osc);
  if (!(osc.gamma > 0.0)) throw DomainError("inverse_laplace_dos: undamped spectrum has no density");
  if (options.nodes < 16 || options.nodes % 2 != 0) throw DomainError("inverse_laplace_dos: nodes must be even and >= 16");
  const std::array<cplx, 3> roots = damping_roots(osc);
  // Singularities of Z sit on rays at angle pi/2 + delta; the contour's
  // asymptotic angle pi/2 + a must stay inside them.
  const cplx lc = roots[1];
  const double delta = std::atan(lc.real() / std::abs(lc.imag()));
  if (!(delta > 1e-4)) throw ResolutionError("inverse_laplace_dos: damping too weak to resolve", delta);
  const double a = 0.5 * delta;

  DosCurve out;
  out.omega0 = osc.omega0;
  out.gamma = osc.gamma;
  out.omega_c = osc.omega_c;
  out.ground_energy = options.fitted_ground_energy ? ground_energy_estimate(osc) : ground_energy_exact(osc);
  out.E_grid = E_grid;
  out.rho.reserve(E_grid.size());
  out.error.reserve(E_grid.size());

  const int N = options.nodes;
  for (double E : E_grid) {
    if (!(E > 0.0) || !std::isfinite(E)) throw DomainError("inverse_laplace_dos: energies must be positive");
    const double mu = 6.0 / E;
    const double u_max = std::acosh((1.0 + 60.0 / (mu * E)) / std::sin(a));
    const double h = u_max / N;
    double sum_all = 0.0;
    double sum_even = 0.0;
    for (int k = 0; k <= N; ++k) {
      const double u = k * h;
      const cplx w = cplx(-a, u);
      const cplx s = mu * (1.0 + std::sin(w));
      const cplx f = expm1(log_z_closed(osc, roots, s) + s * out.ground_energy);
      const double term = (f * std::exp(s * E) * std::cos(w)).real() * ((k == 0 || k == N) ? 0.5 : 1.0);
      sum_all += term;
      if (k % 2 == 0) sum_even += term;
    }
    // The coarse rule uses every second node with the same end weights.
    const double rho = mu / pi * h * sum_all;
    const double rho_coarse = mu / pi * 2.0 * h * sum_even;
    out.rho.push_back(rho);
    out.error.push_back(std::abs(rho - rho_coarse));
  }
  return out;
}

DosCurve lorentzian_dos(const LevelSpectrum& spectrum, const std::vector<double>& widths,
                        const std::vector<double>& E_grid) {
  if (spectrum.levels.empty()) throw DomainError("lorentzian_dos: empty spectrum");
  DosCurve out;
  out.ground_energy = spectrum.energy(0);
  out.E_grid = E_grid;
  out.rho.assign(E_grid.size(), 0.0);
  out.error.assign(E_grid.size(), 0.0);
  for (const Level& level : spectrum.levels) {
    if (level.n == 0) continue;
    if (level.n >= static_cast<int>(widths.size())) throw CoverageError("lorentzian_dos: no width for level", level.n);
    const double G = widths[static_cast<std::size_t>(level.n)];
    if (!(G > 0.0)) throw DomainError("lorentzian_dos: widths must be positive");
    const double c = level.E - out.ground_energy;
    for (std::size_t i = 0; i < E_grid.size(); ++i) {
      const double d = E_grid[i] - c;
      out.rho[i] += G / (2.0 * pi) / (d * d + 0.25 * G * G);
    }
  }
  return out;
}

namespace {

struct PeakResidual {
  using Scalar = double;
  using InputType = Eigen::VectorXd;
  using ValueType = Eigen::VectorXd;
  using JacobianType = Eigen::MatrixXd;
  using QRSolver = Eigen::ColPivHouseholderQR<Eigen::MatrixXd>;
  enum { InputsAtCompileTime = Eigen::Dynamic, ValuesAtCompileTime = Eigen::Dynamic };

  Eigen::VectorXd E;
  Eigen::VectorXd rho;
  int peaks = 0;

  int inputs() const { return 3 * peaks + 2; }
  int values() const { return static_cast<int>(E.size()); }

  int operator()(const Eigen::VectorXd& x, Eigen::VectorXd& r) const {
    for (Eigen::Index i = 0; i < E.size(); ++i) {
      double model = x[3 * peaks] + x[3 * peaks + 1] * E[i];
      for (int k = 0; k < peaks; ++k) {
        const double c = x[3 * k];
        const double G = x[3 * k + 1];
        const double d = E[i] - c;
        model += x[3 * k + 2] * G / (2.0 * pi) / (d * d + 0.25 * G * G);
      }
      r[i] = model - rho[i];
    }
    return 0;
  }
};

}  // namespace

std::vector<LorentzianPeak> fit_lorentzian_peaks(const DosCurve& curve, const std::vector<LorentzianPeak>& guess,
                                                 double E_lo, double E_hi) {
  if (guess.empty()) throw DomainError("fit_lorentzian_peaks: no starting peaks");
  PeakResidual f;
  f.peaks = static_cast<int>(guess.size());
  std::vector<double> e;
  std::vector<double> r;
  for (std::size_t i = 0; i < curve.E_grid.size(); ++i) {
    if (curve.E_grid[i] >= E_lo && curve.E_grid[i] <= E_hi) {
      e.push_back(curve.E_grid[i]);
      r.push_back(curve.rho[i]);
    }
  }
  if (static_cast<int>(e.size()) < 2 * f.inputs()) throw DomainError("fit_lorentzian_peaks: too few points in the window");
  f.E = Eigen::Map<Eigen::VectorXd>(e.data(), static_cast<Eigen::Index>(e.size()));
  f.rho = Eigen::Map<Eigen::VectorXd>(r.data(), static_cast<Eigen::Index>(r.size()));

  Eigen::VectorXd x = Eigen::VectorXd::Zero(f.inputs());
  for (int k = 0; k < f.peaks; ++k) {
    x[3 * k] = guess[static_cast<std::size_t>(k)].center;
    x[3 * k + 1] = guess[static_cast<std::size_t>(k)].fwhm;
    x[3 * k + 2] = guess[static_cast<std::size_t>(k)].weight;
  }
  Eigen::NumericalDiff<PeakResidual> numdiff(f);
  Eigen::LevenbergMarquardt<Eigen::NumericalDiff<PeakResidual>> lm(numdiff);
  lm.setMaxfev(4000);
  const Eigen::LevenbergMarquardtSpace::Status status = lm.minimize(x);
  if (status == Eigen::LevenbergMarquardtSpace::ImproperInputParameters) {
    throw FitError("fit_lorentzian_peaks: improper input");
  }
  std::vector<LorentzianPeak> out;
  for (int k = 0; k < f.peaks; ++k) {
    out.push_back({x[3 * k], std::abs(x[3 * k + 1]), x[3 * k + 2]});
  }
  return out;
}

}  // namespace lw
