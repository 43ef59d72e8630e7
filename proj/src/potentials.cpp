#include "levelwidth/potentials.hpp"

#include <cmath>
#include <map>
#include <vector>

#include "levelwidth/errors.hpp"
#include "levelwidth/numerics.hpp"

namespace lw {

PotentialSpec PotentialSpec::power_law(double A, double alpha, bool wall, double M, double hbar) {
  PotentialSpec p;
  p.family = Family::power_law;
  p.A = A;
  p.alpha = alpha;
  p.left_wall = wall;
  p.M = M;
  p.hbar = hbar;
  validate(p);
  return p;
}

PotentialSpec PotentialSpec::box(double L, double M, double hbar) {
  PotentialSpec p;
  p.family = Family::box;
  p.L = L;
  p.box_pair = true;
  p.M = M;
  p.hbar = hbar;
  validate(p);
  return p;
}

PotentialSpec PotentialSpec::harmonic(double omega0, double M, double hbar) {
  PotentialSpec p;
  p.family = Family::harmonic;
  p.omega0 = omega0;
  p.M = M;
  p.hbar = hbar;
  validate(p);
  return p;
}

PotentialSpec PotentialSpec::half_harmonic(double omega0, double M, double hbar) {
  PotentialSpec p = harmonic(omega0, M, hbar);
  p.family = Family::half_harmonic;
  p.left_wall = true;
  return p;
}

PotentialSpec PotentialSpec::coulomb(double A, double M, double hbar) {
  PotentialSpec p;
  p.family = Family::coulomb;
  p.A = A;
  p.left_wall = true;
  p.M = M;
  p.hbar = hbar;
  validate(p);
  return p;
}

void validate(const PotentialSpec& p) {
  if (!(p.M > 0.0) || !std::isfinite(p.M)) throw DomainError("mass must be positive");
  if (!(p.hbar > 0.0) || !std::isfinite(p.hbar)) throw DomainError("hbar must be positive");
  switch (p.family) {
    case Family::power_law:
      if (!std::isfinite(p.alpha) || !std::isfinite(p.A)) throw DomainError("power law: non-finite parameter");
      if (p.alpha == 0.0) throw DomainError("power law: alpha must be nonzero");
      if (!(p.alpha > -2.0)) throw DomainError("power law: alpha must exceed -2");
      if (p.A == 0.0 || (p.A > 0.0) != (p.alpha > 0.0)) {
        throw DomainError("power law: sign(A) must equal sign(alpha) for a confining well");
      }
      if (p.alpha < 0.0 && !p.left_wall) throw DomainError("power law: alpha < 0 needs the wall at q = 0");
      if (p.box_pair) throw DomainError("power law: box walls not allowed");
      break;
    case Family::box:
      if (!(p.L > 0.0) || !std::isfinite(p.L)) throw DomainError("box: L must be positive");
      if (!p.box_pair) throw DomainError("box: needs its wall pair");
      break;
    case Family::harmonic:
    case Family::half_harmonic:
      if (!(p.omega0 > 0.0) || !std::isfinite(p.omega0)) throw DomainError("oscillator: omega must be positive");
      if (p.left_wall != (p.family == Family::half_harmonic)) throw DomainError("oscillator: wall mismatch");
      break;
    case Family::coulomb:
      if (!(p.A > 0.0) || !std::isfinite(p.A)) throw DomainError("coulomb: A must be positive");
      if (!p.left_wall) throw DomainError("coulomb: needs the wall at q = 0");
      break;
  }
}

PowerLawForm power_law_form(const PotentialSpec& p) {
  switch (p.family) {
    case Family::power_law:
      return {p.A, p.alpha};
    case Family::harmonic:
    case Family::half_harmonic:
      return {0.5 * p.M * p.omega0 * p.omega0, 2.0};
    case Family::coulomb:
      return {-p.A, -1.0};
    case Family::box:
      return {0.0, 0.0};
  }
  return {};
}

bool is_symmetric(const PotentialSpec& p) { return !p.left_wall && !p.box_pair; }

namespace {

void check_region(const PotentialSpec& p, double q) {
  if (!std::isfinite(q)) throw DomainError("coordinate is not finite");
  if (p.box_pair && (q < 0.0 || q > p.L)) throw DomainError("coordinate outside the box [0, L]");
  if (p.left_wall && q < 0.0) throw DomainError("coordinate left of the wall at q = 0");
}

}  // namespace

double evaluate(const PotentialSpec& p, double q) {
  check_region(p, q);
  if (p.family == Family::box) return 0.0;
  const PowerLawForm f = power_law_form(p);
  if (f.exponent < 0.0 && q == 0.0) throw DivergenceError("potential diverges at q = 0");
  return f.a * std::pow(std::abs(q), f.exponent);
}

double derivative(const PotentialSpec& p, double q) {
  check_region(p, q);
  if (p.family == Family::box) return 0.0;
  const PowerLawForm f = power_law_form(p);
  if (q == 0.0) {
    if (f.exponent < 1.0) throw DivergenceError("potential derivative diverges at q = 0");
    return f.exponent == 1.0 ? f.a : 0.0;
  }
  const double s = q > 0.0 ? 1.0 : -1.0;
  return s * f.a * f.exponent * std::pow(std::abs(q), f.exponent - 1.0);
}

bool admits_bounded_motion(const PotentialSpec& p, double E) {
  if (!std::isfinite(E)) return false;
  const PowerLawForm f = power_law_form(p);
  if (f.exponent < 0.0) return E < 0.0;
  return E > 0.0;
}

TurningPoints turning_points(const PotentialSpec& p, double E) {
  if (!admits_bounded_motion(p, E)) {
    throw NoOrbitError("no bounded classical motion at E = " + numerics::format_shortest(E));
  }
  TurningPoints tp;
  if (p.family == Family::box) {
    tp.q1 = 0.0;
    tp.q2 = p.L;
    tp.q1_is_wall = tp.q2_is_wall = true;
    return tp;
  }
  // Every family is a single power law, so V(q) = E inverts in closed form.
  const PowerLawForm f = power_law_form(p);
  const double q2 = std::pow(E / f.a, 1.0 / f.exponent);
  tp.q2 = q2;
  if (p.left_wall) {
    tp.q1 = 0.0;
    tp.q1_is_wall = true;
  } else {
    tp.q1 = -q2;
  }
  return tp;
}

int wall_count(const PotentialSpec& p) {
  if (p.box_pair) return 2;
  return p.left_wall ? 1 : 0;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::power_law: return "powerlaw";
    case Family::box: return "box";
    case Family::harmonic: return "harmonic";
    case Family::half_harmonic: return "halfharmonic";
    case Family::coulomb: return "coulomb";
  }
  return "unknown";
}

PotentialSpec parse_potential(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw DomainError("potential spec needs 'family:params'");
  const std::string family(text.substr(0, colon));
  std::map<std::string, double> values;
  bool wall = false;
  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    if (item.empty()) throw DomainError("empty field in potential spec");
    if (item == "wall") {
      wall = true;
      continue;
    }
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw DomainError("expected key=value, got '" + std::string(item) + "'");
    const std::string key(item.substr(0, eq));
    if (values.count(key)) throw DomainError("duplicate key '" + key + "'");
    values[key] = numerics::parse_double(item.substr(eq + 1));
  }
  auto take = [&](const std::string& key) {
    const auto it = values.find(key);
    if (it == values.end()) throw DomainError(family + ": missing '" + key + "'");
    const double v = it->second;
    values.erase(it);
    return v;
  };
  auto take_or = [&](const std::string& key, double fallback) {
    return values.count(key) ? take(key) : fallback;
  };
  const double M = take_or("M", 1.0);
  const double hbar = take_or("hbar", 1.0);
  PotentialSpec p;
  if (family == "powerlaw") {
    const double A = take("A");
    const double alpha = take("alpha");
    p = PotentialSpec::power_law(A, alpha, wall, M, hbar);
    wall = false;
  } else if (family == "box") {
    p = PotentialSpec::box(take("L"), M, hbar);
  } else if (family == "harmonic") {
    p = PotentialSpec::harmonic(take("omega"), M, hbar);
  } else if (family == "halfharmonic") {
    p = PotentialSpec::half_harmonic(take("omega"), M, hbar);
  } else if (family == "coulomb") {
    p = PotentialSpec::coulomb(take("A"), M, hbar);
  } else {
    throw DomainError("unknown potential family '" + family + "'");
  }
  if (wall) throw DomainError(family + ": 'wall' flag only applies to powerlaw");
  if (!values.empty()) throw DomainError(family + ": unknown key '" + values.begin()->first + "'");
  return p;
}

std::string to_string(const PotentialSpec& p) {
  using numerics::format_shortest;
  std::string s = family_name(p.family) + ":";
  switch (p.family) {
    case Family::power_law:
      s += "A=" + format_shortest(p.A) + ",alpha=" + format_shortest(p.alpha);
      if (p.left_wall) s += ",wall";
      break;
    case Family::box:
      s += "L=" + format_shortest(p.L);
      break;
    case Family::harmonic:
    case Family::half_harmonic:
      s += "omega=" + format_shortest(p.omega0);
      break;
    case Family::coulomb:
      s += "A=" + format_shortest(p.A);
      break;
  }
  s += ",M=" + format_shortest(p.M) + ",hbar=" + format_shortest(p.hbar);
  return s;
}

}  // namespace lw
