// levelwidth: spectra, dipoles, golden-rule widths, scaling prefactors and
// damped-oscillator densities of states as deterministic CSV or JSON.
//
// Exit status: 0 success, 2 invalid input, 3 numerical failure. verify exits
// 1 when a criterion fails.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "levelwidth/acceptance.hpp"
#include "levelwidth/dipole.hpp"
#include "levelwidth/dos.hpp"
#include "levelwidth/errors.hpp"
#include "levelwidth/numerics.hpp"
#include "levelwidth/potentials.hpp"
#include "levelwidth/scaling.hpp"
#include "levelwidth/widths.hpp"
#include "levelwidth/wkb.hpp"

namespace {

using json = nlohmann::ordered_json;
using lw::numerics::format_shortest;

struct RunConfig {
  std::string command;
  std::string potential;
  std::string bath = "ohmic";
  double gamma = 0.01;
  int levels = 10;
  int n = 10;
  int lmax = 0;
  std::string method = "exact";
  std::string route = "automatic";
  std::string orbit_energy = "level";
  double alpha = 0.0;
  bool wall = false;
  std::vector<double> alphas;
  double omega0 = 1.0;
  double omega_c = 50.0;
  double emax = 60.0;
  double de = 0.02;
  int nodes = 1200;
  std::string model = "laplace";
  std::string out;
  bool json = false;
};

json to_json(const RunConfig& c) {
  json j;
  j["command"] = c.command;
  if (c.command == "spectrum" || c.command == "dipoles" || c.command == "widths") j["potential"] = c.potential;
  if (c.command == "spectrum" || c.command == "widths") j["levels"] = c.levels;
  if (c.command == "spectrum" || c.command == "dipoles" || c.command == "widths") j["method"] = c.method;
  if (c.command == "dipoles") {
    j["n"] = c.n;
    j["lmax"] = c.lmax;
    j["route"] = c.route;
    j["orbit_energy"] = c.orbit_energy;
  }
  if (c.command == "widths") {
    j["bath"] = c.bath;
    j["gamma"] = c.gamma;
    j["lmax"] = c.lmax;
    j["route"] = c.route;
    j["orbit_energy"] = c.orbit_energy;
  }
  if (c.command == "prefactor") {
    j["alpha"] = c.alpha;
    j["wall"] = c.wall;
    j["lmax"] = c.lmax;
  }
  if (c.command == "scan-alpha") {
    j["alphas"] = c.alphas;
    j["lmax"] = c.lmax;
  }
  if (c.command == "dos") {
    j["model"] = c.model;
    j["omega0"] = c.omega0;
    j["gamma"] = c.gamma;
    j["omega_c"] = c.omega_c;
    j["emax"] = c.emax;
    j["de"] = c.de;
    j["nodes"] = c.nodes;
  }
  return j;
}

using Cell = std::variant<double, long long, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

std::string csv_cell(const Cell& c) {
  if (const double* d = std::get_if<double>(&c)) return format_shortest(*d);
  if (const long long* i = std::get_if<long long>(&c)) return std::to_string(*i);
  const std::string& s = std::get<std::string>(c);
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char ch : s) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + "\"";
}

json json_cell(const Cell& c) {
  if (const double* d = std::get_if<double>(&c)) {
    if (std::isfinite(*d)) return *d;
    return format_shortest(*d);
  }
  if (const long long* i = std::get_if<long long>(&c)) return *i;
  return std::get<std::string>(c);
}

std::string render(const RunConfig& config, const std::string& echo, const Table& t) {
  std::ostringstream os;
  if (config.json) {
    json doc;
    doc["config"] = to_json(config);
    doc["columns"] = t.columns;
    json rows = json::array();
    for (const auto& row : t.rows) {
      json r = json::array();
      for (const Cell& c : row) r.push_back(json_cell(c));
      rows.push_back(r);
    }
    doc["rows"] = rows;
    os << doc.dump(2) << '\n';
    return os.str();
  }
  os << "# " << echo << '\n';
  os << "# " << to_json(config).dump() << '\n';
  os << "# ";
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i]);
    os << '\n';
  }
  return os.str();
}

lw::FourierRoute parse_route(const std::string& s) {
  if (s == "automatic") return lw::FourierRoute::automatic;
  if (s == "uniform") return lw::FourierRoute::uniform_samples;
  if (s == "graded") return lw::FourierRoute::graded_time;
  if (s == "q-integral") return lw::FourierRoute::q_integral;
  throw lw::DomainError("unknown route '" + s + "'");
}

lw::DipoleOptions dipole_options(const RunConfig& c) {
  return {parse_route(c.route), c.orbit_energy == "midpoint" ? lw::OrbitEnergy::midpoint : lw::OrbitEnergy::level};
}

bool exact_method(const RunConfig& c) { return c.method == "exact"; }

// ohmic | drude:<omega_c> | power:<s>, with J = M gamma omega^s for the power form.
lw::BathSpec parse_bath(const std::string& text, double gamma, double M) {
  if (text == "ohmic") return lw::BathSpec::ohmic(gamma, M);
  const auto colon = text.find(':');
  if (colon != std::string::npos) {
    const std::string kind = text.substr(0, colon);
    const double value = lw::numerics::parse_double(std::string_view(text).substr(colon + 1));
    if (kind == "drude") return lw::BathSpec::ohmic_drude(gamma, value, M);
    if (kind == "power") {
      if (!(gamma > 0.0)) throw lw::DomainError("bath: gamma must be positive");
      return lw::BathSpec::power(value, M * gamma);
    }
  }
  throw lw::DomainError("unknown bath '" + text + "' (ohmic, drude:<omega_c>, power:<s>)");
}

Table run_spectrum(const RunConfig& c) {
  const lw::PotentialSpec p = lw::parse_potential(c.potential);
  const lw::LevelSpectrum s =
      lw::quantize(p, c.levels, exact_method(c) ? lw::QuantizationRoute::automatic : lw::QuantizationRoute::wkb);
  Table t{{"n", "E_n"}, {}};
  for (const lw::Level& level : s.levels) t.rows.push_back({static_cast<long long>(level.n), level.E});
  return t;
}

Table run_dipoles(const RunConfig& c) {
  const lw::PotentialSpec p = lw::parse_potential(c.potential);
  const int lmax = c.lmax > 0 ? c.lmax : c.n;
  const lw::DipoleTable d = lw::dipole_table(
      p, c.n, lmax, exact_method(c) ? lw::DipoleMethod::exact : lw::DipoleMethod::semiclassical, dipole_options(c));
  Table t{{"l", "m", "d"}, {}};
  for (const lw::DipoleEntry& e : d.entries) {
    t.rows.push_back({static_cast<long long>(e.l), static_cast<long long>(c.n - e.l), e.d});
  }
  return t;
}

Table run_widths(const RunConfig& c) {
  const lw::PotentialSpec p = lw::parse_potential(c.potential);
  const lw::BathSpec bath = parse_bath(c.bath, c.gamma, p.M);
  const bool exact = exact_method(c);
  const lw::LevelSpectrum s =
      lw::quantize(p, c.levels, exact ? lw::QuantizationRoute::automatic : lw::QuantizationRoute::wkb);
  Table t{{"n", "E_n", "Gamma_n", "Gamma_over_gamma_n", "Gamma_raw"}, {}};
  for (int n = 1; n <= c.levels; ++n) {
    const int lmax = c.lmax > 0 ? c.lmax : n;
    const lw::DipoleTable d = lw::dipole_table(
        p, n, exact ? n : lmax, exact ? lw::DipoleMethod::exact : lw::DipoleMethod::semiclassical, dipole_options(c));
    const lw::WidthReport r = lw::golden_rule_width(s, d, bath, n);
    t.rows.push_back({static_cast<long long>(n), s.energy(n), r.Gamma_extrapolated,
                      r.Gamma_extrapolated / (c.gamma * n), r.Gamma});
  }
  return t;
}

Table run_prefactor(const RunConfig& c) {
  const lw::Prefactor pf = lw::width_prefactor(c.alpha, c.wall, c.lmax > 0 ? c.lmax : 1000);
  return {{"alpha", "c", "c_err"}, {{pf.alpha, pf.c, pf.c_err}}};
}

Table run_scan(const RunConfig& c) {
  const std::vector<double> alphas = c.alphas.empty() ? lw::default_alpha_grid() : c.alphas;
  Table t{{"alpha", "wall", "c", "c_err", "tail_exponent"}, {}};
  for (double a : alphas) {
    const lw::Prefactor pf = lw::width_prefactor(a, a < 0.0, c.lmax > 0 ? c.lmax : 1000);
    t.rows.push_back({a, static_cast<long long>(pf.wall), pf.c, pf.c_err, pf.tail_exponent});
  }
  return t;
}

Table run_dos(const RunConfig& c) {
  if (!(c.de > 0.0) || !(c.emax > c.de)) throw lw::DomainError("dos: need 0 < de < emax");
  const long long count = std::llround(std::floor(c.emax / c.de + 1e-9));
  std::vector<double> grid;
  for (long long i = 1; i <= count; ++i) grid.push_back(static_cast<double>(i) * c.de);
  lw::DosCurve curve;
  if (c.model == "laplace") {
    lw::DampedOscillator osc{c.omega0, c.gamma, c.omega_c, 1.0};
    lw::InverseLaplaceOptions options;
    options.nodes = c.nodes;
    curve = lw::inverse_laplace_dos(osc, grid, options);
  } else if (c.model == "lorentzian") {
    const lw::PotentialSpec p = lw::PotentialSpec::harmonic(c.omega0);
    const int top = static_cast<int>(std::ceil(c.emax / c.omega0)) + 20;
    const lw::LevelSpectrum s = lw::quantize(p, top);
    std::vector<double> widths(static_cast<std::size_t>(top) + 1, 0.0);
    for (int n = 1; n <= top; ++n) {
      widths[static_cast<std::size_t>(n)] = lw::ohmic_width(s, lw::dipole_table(p, n, n, lw::DipoleMethod::exact), c.gamma, n).Gamma;
    }
    curve = lw::lorentzian_dos(s, widths, grid);
  } else {
    throw lw::DomainError("unknown dos model '" + c.model + "' (laplace, lorentzian)");
  }
  Table t{{"E", "rho", "error"}, {}};
  for (std::size_t i = 0; i < grid.size(); ++i) t.rows.push_back({curve.E_grid[i], curve.rho[i], curve.error[i]});
  return t;
}

Table run_verify(bool& all_pass) {
  const auto progress = [](const std::vector<lw::CriterionResult>& lines) {
    for (const lw::CriterionResult& r : lines) {
      std::fprintf(stderr, "%s %s (%.2f s)\n", r.pass ? "PASS" : "FAIL", r.id.c_str(), r.seconds);
    }
  };
  const std::vector<lw::CriterionResult> results = lw::run_acceptance(progress);
  all_pass = lw::all_passed(results);
  Table t{{"id", "result", "measured", "target", "description"}, {}};
  for (const lw::CriterionResult& r : results) {
    t.rows.push_back({r.id, std::string(r.pass ? "pass" : "fail"), r.measured, r.target, r.description});
  }
  return t;
}

std::string echo_command(int argc, char** argv) {
  std::string s = "levelwidth";
  for (int i = 1; i < argc; ++i) {
    s += ' ';
    s += argv[i];
  }
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Level widths of damped one-dimensional systems"};
  app.require_subcommand(1);
  RunConfig config;

  const auto add_output = [&](CLI::App* sub) {
    sub->add_option("--out", config.out, "Write output to this file instead of stdout");
    sub->add_flag("--json", config.json, "Emit one JSON document with the config echo and the results");
  };
  const auto add_method = [&](CLI::App* sub) {
    sub->add_option("--method", config.method, "exact or semiclassical")
        ->check(CLI::IsMember({"exact", "semiclassical"}));
  };
  const auto add_dipole_flags = [&](CLI::App* sub) {
    sub->add_option("--route", config.route, "Fourier route for semiclassical dipoles")
        ->check(CLI::IsMember({"automatic", "uniform", "graded", "q-integral"}));
    sub->add_option("--orbit-energy", config.orbit_energy, "Orbit energy for d_{n,n-l}: level or midpoint")
        ->check(CLI::IsMember({"level", "midpoint"}));
  };

  CLI::App* spectrum = app.add_subcommand("spectrum", "Energy levels n = 0..levels");
  spectrum->add_option("--potential", config.potential, "Potential spec, e.g. box:L=1")->required();
  spectrum->add_option("--levels", config.levels, "Highest level")->check(CLI::NonNegativeNumber);
  add_method(spectrum);
  add_output(spectrum);

  CLI::App* dipoles = app.add_subcommand("dipoles", "Dipoles d_{n,n-l}");
  dipoles->add_option("--potential", config.potential, "Potential spec")->required();
  dipoles->add_option("--n", config.n, "Level n")->check(CLI::NonNegativeNumber);
  dipoles->add_option("--lmax", config.lmax, "Highest l (default n)")->check(CLI::NonNegativeNumber);
  add_method(dipoles);
  add_dipole_flags(dipoles);
  add_output(dipoles);

  CLI::App* widths = app.add_subcommand("widths", "Golden-rule widths for n = 1..levels");
  widths->add_option("--potential", config.potential, "Potential spec")->required();
  widths->add_option("--bath", config.bath, "ohmic, drude:<omega_c> or power:<s>");
  widths->add_option("--gamma", config.gamma, "Damping rate gamma");
  widths->add_option("--levels", config.levels, "Highest level")->check(CLI::PositiveNumber);
  widths->add_option("--lmax", config.lmax, "Highest l for semiclassical dipoles (default n)")
      ->check(CLI::NonNegativeNumber);
  add_method(widths);
  add_dipole_flags(widths);
  add_output(widths);

  CLI::App* prefactor = app.add_subcommand("prefactor", "Width prefactor c(alpha)");
  prefactor->add_option("--alpha", config.alpha, "Power-law exponent")->required();
  prefactor->add_flag("--wall", config.wall, "Hard wall at q = 0");
  prefactor->add_option("--lmax", config.lmax, "Harmonics in the sum (default 1000)")->check(CLI::NonNegativeNumber);
  add_output(prefactor);

  CLI::App* scan = app.add_subcommand("scan-alpha", "c(alpha) over a grid, wall on for alpha < 0");
  scan->add_option("--alpha", config.alphas, "Exponents (default grid)")->delimiter(',');
  scan->add_option("--lmax", config.lmax, "Harmonics in the sum (default 1000)")->check(CLI::NonNegativeNumber);
  add_output(scan);

  CLI::App* dos = app.add_subcommand("dos", "Density of states of the damped oscillator above the ground state");
  dos->add_option("--model", config.model, "laplace or lorentzian")->check(CLI::IsMember({"laplace", "lorentzian"}));
  dos->add_option("--omega0", config.omega0, "Oscillator frequency");
  CLI::Option* dos_gamma = dos->add_option("--gamma", config.gamma, "Damping rate (default 0.2)");
  dos->add_option("--omega-c", config.omega_c, "Drude cutoff");
  dos->add_option("--emax", config.emax, "Largest energy above the ground state");
  dos->add_option("--de", config.de, "Energy step");
  dos->add_option("--nodes", config.nodes, "Contour nodes");
  add_output(dos);

  CLI::App* verify = app.add_subcommand("verify", "Run the acceptance table");
  add_output(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  CLI::App* chosen = app.get_subcommands().front();
  config.command = chosen->get_name();
  const std::string echo = echo_command(argc, argv);
  if (chosen == dos && dos_gamma->count() == 0) config.gamma = 0.2;

  int status = 0;
  Table table;
  try {
    if (chosen == spectrum) table = run_spectrum(config);
    if (chosen == dipoles) table = run_dipoles(config);
    if (chosen == widths) table = run_widths(config);
    if (chosen == prefactor) table = run_prefactor(config);
    if (chosen == scan) table = run_scan(config);
    if (chosen == dos) table = run_dos(config);
    if (chosen == verify) {
      bool all_pass = false;
      table = run_verify(all_pass);
      status = all_pass ? 0 : 1;
    }
  } catch (const lw::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const lw::NoOrbitError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const lw::CoverageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const lw::Error& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return 3;
  }

  const std::string text = render(config, echo, table);
  if (config.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream file(config.out, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot write " << config.out << '\n';
      return 2;
    }
    file << text;
  }
  return status;
}
