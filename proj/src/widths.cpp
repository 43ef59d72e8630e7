#include "levelwidth/widths.hpp"

#include <cmath>

#include "levelwidth/errors.hpp"
#include "levelwidth/numerics.hpp"
#include "levelwidth/special.hpp"

namespace lw {

BathSpec BathSpec::ohmic(double gamma, double M) {
  BathSpec b;
  b.kind = BathKind::ohmic;
  b.gamma = gamma;
  b.M = M;
  validate(b);
  return b;
}

BathSpec BathSpec::ohmic_drude(double gamma, double omega_c, double M) {
  BathSpec b = ohmic(gamma, M);
  b.kind = BathKind::ohmic_drude;
  b.omega_c = omega_c;
  validate(b);
  return b;
}

BathSpec BathSpec::power(double s, double prefactor) {
  BathSpec b;
  b.kind = BathKind::power;
  b.s_exponent = s;
  b.prefactor = prefactor;
  validate(b);
  return b;
}

void validate(const BathSpec& b) {
  switch (b.kind) {
    case BathKind::ohmic_drude:
      if (!(b.omega_c > 0.0) || !std::isfinite(b.omega_c)) throw DomainError("bath: omega_c must be positive");
      [[fallthrough]];
    case BathKind::ohmic:
      if (!(b.gamma > 0.0) || !std::isfinite(b.gamma)) throw DomainError("bath: gamma must be positive");
      if (!(b.M > 0.0) || !std::isfinite(b.M)) throw DomainError("bath: mass must be positive");
      break;
    case BathKind::power:
      if (!(b.prefactor > 0.0) || !std::isfinite(b.prefactor)) throw DomainError("bath: prefactor must be positive");
      if (!(b.s_exponent > 0.0) || !std::isfinite(b.s_exponent)) throw DomainError("bath: exponent must be positive");
      break;
  }
}

double spectral_density(const BathSpec& b, double omega) {
  if (!(omega >= 0.0)) throw DomainError("spectral density needs omega >= 0");
  switch (b.kind) {
    case BathKind::ohmic:
      return b.M * b.gamma * omega;
    case BathKind::ohmic_drude: {
      const double x = omega / b.omega_c;
      return b.M * b.gamma * omega / (1.0 + x * x);
    }
    case BathKind::power:
      return b.prefactor * std::pow(omega, b.s_exponent);
  }
  return 0.0;
}

namespace {

// Power-law estimate of sum_{l=first}^{last} c_l from the last decade of the
// computed contributions; 0 when no clean fit exists.
double contribution_tail(const std::vector<WidthContribution>& c, int first, int last) {
  if (first > last || c.size() < 30) return 0.0;
  const int l_top = c.back().l;
  std::vector<double> x;
  std::vector<double> y;
  for (const WidthContribution& w : c) {
    if (10 * w.l > l_top && w.dGamma > 0.0) {
      x.push_back(std::log(static_cast<double>(w.l)));
      y.push_back(std::log(w.dGamma));
    }
  }
  if (x.size() < 30) return 0.0;
  const numerics::LineFit fit = numerics::fit_line(Eigen::Map<const Eigen::VectorXd>(x.data(), static_cast<Eigen::Index>(x.size())),
                                                   Eigen::Map<const Eigen::VectorXd>(y.data(), static_cast<Eigen::Index>(y.size())));
  const double k = -fit.slope;
  if (!(k > 1.0)) return 0.0;
  int window = 0;
  for (const WidthContribution& w : c) window += 10 * w.l > l_top ? 1 : 0;
  const double density = static_cast<double>(x.size()) / window;
  return density * std::exp(fit.intercept) *
         (special::hurwitz_zeta(k, first) - special::hurwitz_zeta(k, last + 1.0));
}

}  // namespace

WidthReport golden_rule_width(const LevelSpectrum& spec, const DipoleTable& dip, const BathSpec& bath, int n,
                              SpacingMode spacing) {
  validate(bath);
  if (n < 0) throw DomainError("golden_rule_width: negative level");
  if (n != dip.n && n != 0) {
    throw DomainError("golden_rule_width: dipole table is for n = " + std::to_string(dip.n));
  }
  WidthReport report;
  report.n = n;
  if (n == 0) return report;
  const bool exact_table = dip.method == DipoleMethod::exact;
  const bool use_exact = spacing == SpacingMode::exact || (spacing == SpacingMode::automatic && exact_table);
  const int top = exact_table ? n : std::min(n, dip.l_max());
  const double hbar = dip.potential.hbar;
  const double E_n = use_exact ? spec.energy(n) : 0.0;
  for (int l = 1; l <= top; ++l) {
    const DipoleEntry& e = dip.at(l);
    double dE = 0.0;
    if (use_exact) {
      dE = E_n - spec.energy(n - l);
    } else {
      if (!(e.period > 0.0)) throw DomainError("golden_rule_width: entry has no orbit period for the spacing");
      dE = 2.0 * numerics::pi * hbar * l / e.period;
    }
    const double contribution = 2.0 / hbar * e.d * e.d * spectral_density(bath, dE / hbar);
    report.contributions.push_back({l, contribution});
    report.Gamma += contribution;
  }
  report.Gamma_extrapolated = report.Gamma + contribution_tail(report.contributions, top + 1, n);
  return report;
}

WidthReport ohmic_width(const LevelSpectrum& spec, const DipoleTable& dip, double gamma, int n, SpacingMode spacing) {
  return golden_rule_width(spec, dip, BathSpec::ohmic(gamma, dip.potential.M), n, spacing);
}

TransitionDipoles transition_dipoles(const PotentialSpec& p, int n, int m_max) {
  if (n < 0 || m_max < 0) throw DomainError("transition_dipoles: negative quantum number");
  TransitionDipoles t;
  t.n = n;
  for (int m = 0; m <= m_max; ++m) {
    if (m == n) continue;
    t.m.push_back(m);
    t.d.push_back(exact_dipole(p, n, m));
  }
  return t;
}

OscillatorStrengths oscillator_strengths(const LevelSpectrum& spec, const TransitionDipoles& dip,
                                         const PotentialSpec& p) {
  OscillatorStrengths out;
  const double E_n = spec.energy(dip.n);
  for (std::size_t i = 0; i < dip.m.size(); ++i) {
    const double f = 2.0 * p.M / (p.hbar * p.hbar) * (spec.energy(dip.m[i]) - E_n) * dip.d[i] * dip.d[i];
    out.m.push_back(dip.m[i]);
    out.f.push_back(f);
    out.trk_sum += f;
    out.m_max = std::max(out.m_max, dip.m[i]);
  }
  return out;
}

}  // namespace lw
