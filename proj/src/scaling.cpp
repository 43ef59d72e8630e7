#include "levelwidth/scaling.hpp"

#include <cmath>
#include <limits>

#include "levelwidth/errors.hpp"
#include "levelwidth/numerics.hpp"
#include "levelwidth/special.hpp"
#include "levelwidth/wkb.hpp"

namespace lw {

using numerics::pi;

ScaledSystem scaled_orbit(double alpha, bool wall, int l_max, FourierRoute route) {
  if (!(alpha > -2.0) || alpha == 0.0 || !std::isfinite(alpha)) {
    throw DomainError("scaled_orbit: need alpha > -2 and alpha != 0");
  }
  if (alpha < 0.0 && !wall) throw DomainError("scaled_orbit: alpha < 0 needs the wall");
  ScaledSystem sys;
  sys.alpha = alpha;
  sys.wall = wall;
  sys.sign_A = alpha > 0.0 ? 1 : -1;
  sys.sign_E = sys.sign_A;
  const PotentialSpec p = PotentialSpec::power_law(sys.sign_A, alpha, wall);
  const Orbit orbit = classical_orbit(p, sys.sign_E);
  sys.S_prime = orbit.S;
  sys.T_prime = orbit.T;
  sys.d_prime = fourier_coefficients(orbit, l_max, route);
  return sys;
}

TailFit tail_exponent(const std::vector<double>& d) {
  const int L = static_cast<int>(d.size());
  double peak = 0.0;
  for (double v : d) peak = std::max(peak, std::abs(v));
  if (!(peak > 0.0)) throw FitError("tail_exponent: series is identically zero");
  const double floor = 1e-12 * peak;

  TailFit fit;
  std::vector<double> x;
  std::vector<double> y;
  for (int l = 1; l <= L; ++l) {
    if (10 * l <= L) continue;
    ++fit.window;
    const double v = std::abs(d[static_cast<std::size_t>(l - 1)]);
    if (v > floor) {
      x.push_back(std::log(static_cast<double>(l)));
      y.push_back(std::log(v));
    }
  }
  fit.survivors = static_cast<int>(x.size());
  auto line = [](const std::vector<double>& xs, const std::vector<double>& ys) {
    return numerics::fit_line(Eigen::Map<const Eigen::VectorXd>(xs.data(), static_cast<Eigen::Index>(xs.size())),
                              Eigen::Map<const Eigen::VectorXd>(ys.data(), static_cast<Eigen::Index>(ys.size())));
  };
  if (fit.survivors >= 30) {
    const numerics::LineFit lf = line(x, y);
    fit.exponent = -lf.slope;
    fit.C = std::exp(lf.intercept);
    return fit;
  }
  if (fit.survivors < fit.window) {
    // Decayed into the noise floor: report the local slope of the last
    // survivors anywhere in the series.
    std::vector<double> xs;
    std::vector<double> ys;
    for (int l = L; l >= 1 && xs.size() < 10; --l) {
      const double v = std::abs(d[static_cast<std::size_t>(l - 1)]);
      if (v > floor) {
        xs.insert(xs.begin(), std::log(static_cast<double>(l)));
        ys.insert(ys.begin(), std::log(v));
      }
    }
    fit.super_algebraic = true;
    fit.exponent = xs.size() < 2 ? std::numeric_limits<double>::infinity() : -line(xs, ys).slope;
    return fit;
  }
  throw FitError("tail_exponent: fewer than 30 entries in the last decade");
}

WeightedSum weighted_square_sum(const std::vector<double>& d) {
  WeightedSum out;
  for (std::size_t i = 0; i < d.size(); ++i) out.raw += static_cast<double>(i + 1) * d[i] * d[i];
  out.fit = tail_exponent(d);
  if (out.fit.super_algebraic) return out;
  const double s = 2.0 * out.fit.exponent - 1.0;
  if (!(s > 1.0)) throw FitError("weighted_square_sum: tail decays too slowly to converge");
  const double density = static_cast<double>(out.fit.survivors) / out.fit.window;
  out.tail = density * out.fit.C * out.fit.C * special::hurwitz_zeta(s, d.size() + 1.0);
  return out;
}

Prefactor width_prefactor(const ScaledSystem& sys) {
  Prefactor pf;
  pf.alpha = sys.alpha;
  pf.wall = sys.wall;
  const double norm = 8.0 * pi * pi / (sys.S_prime * sys.T_prime);
  try {
    const WeightedSum w = weighted_square_sum(sys.d_prime);
    pf.c_raw = norm * w.raw;
    pf.c = norm * (w.raw + w.tail);
    pf.c_err = norm * std::abs(w.tail);
    pf.tail_exponent = w.fit.exponent;
  } catch (const FitError&) {
    // No usable tail: report the partial sum and bound the truncation by the
    // weight of the last decade.
    double raw = 0.0;
    double last = 0.0;
    const std::size_t L = sys.d_prime.size();
    for (std::size_t i = 0; i < L; ++i) {
      const double term = static_cast<double>(i + 1) * sys.d_prime[i] * sys.d_prime[i];
      raw += term;
      if (10 * (i + 1) > L) last += term;
    }
    pf.c_raw = pf.c = norm * raw;
    pf.c_err = norm * last;
    pf.tail_exponent = std::numeric_limits<double>::quiet_NaN();
  }
  return pf;
}

Prefactor width_prefactor(double alpha, bool wall, int l_max) { return width_prefactor(scaled_orbit(alpha, wall, l_max)); }

double energy_from_n(double alpha, double A, double M, double hbar, double S_prime, double n, bool wall,
                     bool include_offset) {
  if (!(alpha > -2.0) || alpha == 0.0) throw DomainError("energy_from_n: need alpha > -2 and alpha != 0");
  if (!(S_prime > 0.0) || !(M > 0.0) || !(hbar > 0.0) || A == 0.0) throw DomainError("energy_from_n: bad parameters");
  const double nu = include_offset ? (wall ? 0.75 : 0.5) : 0.0;
  const double base = std::pow(2.0 * pi * hbar / S_prime, 2.0 * alpha) * A * A / std::pow(M, alpha);
  const double magnitude = std::pow(base, 1.0 / (2.0 + alpha)) * std::pow(n + nu, 2.0 * alpha / (2.0 + alpha));
  return alpha > 0.0 ? magnitude : -magnitude;
}

std::vector<double> default_alpha_grid() { return {-1.9, -1.5, -1.0, -0.5, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0}; }

}  // namespace lw
