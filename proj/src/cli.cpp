#include "susyext/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <system_error>

#include <CLI11.hpp>
#include <json.hpp>

#include "susyext/analytic_states.hpp"
#include "susyext/numerics.hpp"
#include "susyext/pct.hpp"
#include "susyext/potentials.hpp"
#include "susyext/verify.hpp"

namespace susyext {

namespace {

using json = nlohmann::ordered_json;

struct IoError : Error {
  using Error::Error;
};

struct SystemArgs {
  std::string system;
  std::optional<double> A, B, P, Q, Bp, omega, l, Z;
  std::optional<int> n;
};

void add_system_options(CLI::App* sub, SystemArgs& s) {
  sub->add_option("--system", s.system, "morse, morse-ext, scarf2, radial, radial-ext, coulomb, coulomb-ext")
      ->required();
  sub->add_option("--A", s.A, "Morse depth parameter A");
  sub->add_option("--B", s.B, "Morse range parameter B");
  sub->add_option("--P", s.P, "extension constant P");
  sub->add_option("--Q", s.Q, "extension constant Q");
  sub->add_option("--Bp", s.Bp, "Scarf II coupling B'");
  sub->add_option("--omega", s.omega, "oscillator frequency");
  sub->add_option("--l", s.l, "angular momentum");
  sub->add_option("--Z", s.Z, "Coulomb charge");
  sub->add_option("--n", s.n, "level index");
}

double need(const std::optional<double>& v, const char* name, const std::string& system) {
  if (!v) throw InvalidParameter(name, std::string("--") + name + " is required for system " + system);
  return *v;
}

int need(const std::optional<int>& v, const char* name, const std::string& system) {
  if (!v) throw InvalidParameter(name, std::string("--") + name + " is required for system " + system);
  return *v;
}

bool is_radial(System s) {
  return s == System::radial || s == System::radial_ext || s == System::coulomb || s == System::coulomb_ext;
}

SuperpotentialSpec morse_ext_spec(const SystemArgs& a) {
  return {MorseParams(need(a.A, "A", a.system), need(a.B, "B", a.system)),
          ExtensionParams(need(a.P, "P", a.system), need(a.Q, "Q", a.system))};
}

RadialExtParams radial_ext_params(const SystemArgs& a) {
  return {need(a.omega, "omega", a.system), need(a.l, "l", a.system), need(a.n, "n", a.system),
          need(a.P, "P", a.system), need(a.Q, "Q", a.system)};
}

CoulombExtParams coulomb_ext_params(const SystemArgs& a) {
  return {need(a.Z, "Z", a.system), need(a.l, "l", a.system), need(a.n, "n", a.system), need(a.P, "P", a.system),
          need(a.Q, "Q", a.system)};
}

json params_json(System s, const SystemArgs& a) {
  json j;
  auto put = [&](const char* k, const auto& v) {
    if (v) j[k] = *v;
  };
  switch (s) {
    case System::morse:
      put("A", a.A), put("B", a.B);
      break;
    case System::morse_ext:
      put("A", a.A), put("B", a.B), put("P", a.P), put("Q", a.Q);
      break;
    case System::scarf2:
      put("A", a.A), put("Bp", a.Bp);
      break;
    case System::radial:
      put("omega", a.omega), put("l", a.l);
      break;
    case System::radial_ext:
      put("omega", a.omega), put("l", a.l), put("n", a.n), put("P", a.P), put("Q", a.Q);
      break;
    case System::coulomb:
      put("Z", a.Z), put("l", a.l);
      break;
    case System::coulomb_ext:
      put("Z", a.Z), put("l", a.l), put("n", a.n), put("P", a.P), put("Q", a.Q);
      break;
  }
  return j;
}

std::function<double(double)> potential_of(System s, const SystemArgs& a) {
  switch (s) {
    case System::morse: {
      const MorseParams p(need(a.A, "A", a.system), need(a.B, "B", a.system));
      return [p](double x) { return v_morse(x, p); };
    }
    case System::morse_ext: {
      const auto spec = morse_ext_spec(a);
      return [spec](double x) { return v_morse_ext(x, spec); };
    }
    case System::scarf2: {
      const ScarfParams p(need(a.A, "A", a.system), need(a.Bp, "Bp", a.system));
      return [p](double z) { return v_scarf2(z, p); };
    }
    case System::radial: {
      const double omega = need(a.omega, "omega", a.system);
      const double l = need(a.l, "l", a.system);
      if (!(omega > 0.0)) throw InvalidParameter("omega", "omega must be > 0");
      return [omega, l](double r) { return v_radial(r, omega, l); };
    }
    case System::radial_ext: {
      const auto p = radial_ext_params(a);
      return [p](double r) { return v_radial_ext(r, p); };
    }
    case System::coulomb: {
      const double Z = need(a.Z, "Z", a.system);
      const double l = need(a.l, "l", a.system);
      if (!(Z > 0.0)) throw InvalidParameter("Z", "Z must be > 0");
      return [Z, l](double r) { return v_coulomb(r, Z, l); };
    }
    case System::coulomb_ext: {
      const auto p = coulomb_ext_params(a);
      return [p](double r) { return v_coulomb_ext(r, p); };
    }
  }
  throw InvalidParameter("system", "unsupported system");
}

std::function<double(double)> wavefunction_of(System s, const SystemArgs& a, int n) {
  switch (s) {
    case System::morse:
      return morse_state(n, MorseParams(need(a.A, "A", a.system), need(a.B, "B", a.system))).wavefunction;
    case System::morse_ext:
      return morse_ext_state(n, morse_ext_spec(a)).wavefunction;
    case System::scarf2:
      return scarf2_state(n, ScarfParams(need(a.A, "A", a.system), need(a.Bp, "Bp", a.system))).wavefunction;
    case System::radial:
      return radial_state(n, need(a.omega, "omega", a.system), need(a.l, "l", a.system)).wavefunction;
    case System::radial_ext:
      return radial_ext_state(radial_ext_params(a)).wavefunction;
    case System::coulomb:
      return coulomb_state(n, need(a.Z, "Z", a.system), need(a.l, "l", a.system)).wavefunction;
    case System::coulomb_ext:
      return coulomb_ext_state(coulomb_ext_params(a)).wavefunction;
  }
  throw InvalidParameter("system", "unsupported system");
}

double parse_double(std::string_view text, const char* field) {
  double v = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || !std::isfinite(v)) {
    throw InvalidParameter(field, "cannot parse '" + std::string(text) + "' as a number");
  }
  return v;
}

GridSpec parse_grid(const std::string& text) {
  const auto c1 = text.find(':');
  const auto c2 = c1 == std::string::npos ? std::string::npos : text.find(':', c1 + 1);
  if (c2 == std::string::npos) throw InvalidParameter("grid", "expected min:max:count");
  const double lo = parse_double(std::string_view(text).substr(0, c1), "grid");
  const double hi = parse_double(std::string_view(text).substr(c1 + 1, c2 - c1 - 1), "grid");
  std::size_t count = 0;
  const auto tail = std::string_view(text).substr(c2 + 1);
  const auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), count);
  if (ec != std::errc() || ptr != tail.data() + tail.size()) throw InvalidParameter("grid", "bad count in grid");
  return GridSpec(lo, hi, count);
}

// Radial grids lose their nodes at r <= 0.
GridSpec positive_part(const GridSpec& g) {
  std::size_t i0 = 0;
  while (i0 < g.count() && !(g.node(i0) > 0.0)) ++i0;
  if (g.count() - i0 < 3) throw InvalidParameter("grid", "radial grid needs at least 3 nodes with r > 0");
  if (i0 == 0) return g;
  return GridSpec(g.node(i0), g.x_max(), g.count() - i0);
}

std::string fmt(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

void write_curve(std::ostream& os, const std::string& format, const char* xname, const char* yname,
                 const GridSpec& grid, const std::vector<double>& ys) {
  if (format == "json") {
    json j;
    j[xname] = grid.nodes();
    j[yname] = ys;
    os << j.dump(2) << '\n';
    return;
  }
  std::string text = std::string(xname) + "," + yname + "\n";
  for (std::size_t i = 0; i < ys.size(); ++i) {
    text += fmt(grid.node(i));
    text += ',';
    text += fmt(ys[i]);
    text += '\n';
  }
  os << text;
}

void emit(const std::optional<std::string>& path, std::ostream& out, const std::function<void(std::ostream&)>& write) {
  if (!path) {
    write(out);
    return;
  }
  std::ofstream file(*path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + *path + "' for writing");
  write(file);
  file.flush();
  if (!file) throw IoError("write to '" + *path + "' failed");
}

// ---- spectrum --------------------------------------------------------------------

struct SpectrumSetup {
  std::function<double(double)> V;
  GridSpec domain{0.0, 1.0, 3};
  SolveOptions options;
  std::vector<double> analytic;
  std::size_t default_levels = 1;
};

std::vector<double> morse_ladder(double A) {
  std::vector<double> e;
  for (int n = 0; n < A; ++n) e.push_back(-(A - n) * (A - n));
  return e;
}

SpectrumSetup spectrum_setup(System s, const SystemArgs& a, std::optional<std::size_t> levels) {
  SpectrumSetup st;
  st.V = potential_of(s, a);
  constexpr double h0 = 0.02;
  switch (s) {
    case System::morse:
    case System::morse_ext:
    case System::scarf2: {
      const double A = need(a.A, "A", a.system);
      double center = 0.0;
      if (s == System::morse) {
        center = std::log(need(a.B, "B", a.system) / (A + 0.5));
      } else if (s == System::morse_ext) {
        const auto spec = morse_ext_spec(a);
        center = spec.ext.has_shift() ? spec.ext.q() : std::log(spec.morse.B() / (A + 0.5));
      }
      st.analytic = morse_ladder(A);
      st.default_levels = st.analytic.size();
      st.domain = suggest_line_domain(center, A, h0);
      st.options.anchor = center;
      break;
    }
    case System::radial: {
      const double omega = need(a.omega, "omega", a.system);
      const double l = need(a.l, "l", a.system);
      st.default_levels = 3;
      const std::size_t k = levels.value_or(st.default_levels);
      for (std::size_t n = 0; n < k; ++n) st.analytic.push_back(radial_osc_energy(static_cast<int>(n), omega, l));
      st.domain = suggest_radial_domain(8.0 * std::max(1.0, std::sqrt(std::abs(st.analytic.back())) / omega), h0);
      break;
    }
    case System::radial_ext: {
      const auto p = radial_ext_params(a);
      st.analytic = {radial_ext_energy(p)};
      st.default_levels = static_cast<std::size_t>(p.n() + 1);
      st.domain = suggest_radial_domain(8.0 * std::max(1.0, std::sqrt(std::abs(st.analytic[0])) / p.omega()), h0);
      break;
    }
    case System::coulomb: {
      const double Z = need(a.Z, "Z", a.system);
      const double l = need(a.l, "l", a.system);
      st.default_levels = 3;
      const std::size_t k = levels.value_or(st.default_levels);
      for (std::size_t n = 0; n < k; ++n) st.analytic.push_back(coulomb_energy(static_cast<int>(n), Z, l));
      const double nl = static_cast<double>(k) + l;
      st.domain = suggest_radial_domain(8.0 * std::max(1.0, nl * nl / Z), h0);
      break;
    }
    case System::coulomb_ext: {
      const auto p = coulomb_ext_params(a);
      st.analytic = {coulomb_ext_energy(p)};
      st.default_levels = static_cast<std::size_t>(p.n() + 1);
      const double nl = p.n() + p.l() + 1.0;
      st.domain = suggest_radial_domain(8.0 * std::max(1.0, nl * nl / p.Z()), h0);
      break;
    }
  }
  if (is_radial(s)) st.options.box = BoxKind::half_line;
  if (s == System::morse || s == System::morse_ext || s == System::scarf2) {
    const std::size_t k = levels.value_or(st.default_levels);
    if (st.analytic.size() > k) st.analytic.resize(k);
  }
  return st;
}

unsigned thread_cap() {
  const char* env = std::getenv("SUSY_EXTEND_THREADS");
  if (env == nullptr || *env == '\0') return 0;
  unsigned v = 0;
  const std::string_view text(env);
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || v == 0) {
    throw InvalidParameter("SUSY_EXTEND_THREADS", "must be a positive integer");
  }
  return v;
}

// ---- verify --------------------------------------------------------------------

std::string report_table(const VerificationReport& report) {
  std::size_t width = 5;
  for (const auto& r : report.rows) width = std::max(width, r.name.size());
  std::ostringstream os;
  os << std::left;
  os.width(static_cast<std::streamsize>(width));
  os << "check" << "  result  value                    tolerance\n";
  for (const auto& r : report.rows) {
    os.width(static_cast<std::streamsize>(width));
    os << r.name << "  " << (r.passed ? "PASS  " : "FAIL  ");
    std::string v = fmt(r.value);
    v.resize(std::max<std::size_t>(v.size(), 24), ' ');
    os << "  " << v << " " << to_string(r.comparison) << " " << fmt(r.tolerance) << '\n';
  }
  os << (report.passed() ? "overall: PASS" : "overall: FAIL") << " (" << report.rows.size() << " checks)\n";
  return os.str();
}

json report_json(const VerificationReport& report, Suite suite, std::uint64_t seed) {
  json j;
  j["suite"] = std::string(to_string(suite));
  j["seed"] = seed;
  j["passed"] = report.passed();
  json rows = json::array();
  for (const auto& r : report.rows) {
    json row;
    row["name"] = r.name;
    row["value"] = r.value;
    row["tolerance"] = r.tolerance;
    row["comparison"] = std::string(to_string(r.comparison));
    row["passed"] = r.passed;
    json params;
    for (const auto& [k, v] : r.params) params[k] = v;
    row["params"] = params;
    rows.push_back(row);
  }
  j["checks"] = rows;
  return j;
}

std::pair<std::string, double> parse_override(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0) throw InvalidParameter("override-tol", "expected name=value");
  return {text.substr(0, eq), parse_double(std::string_view(text).substr(eq + 1), "override-tol")};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Isospectral extensions of the Morse potential: potentials, spectra, PCT maps, verification"};
  app.name("susyext");
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  // potential
  SystemArgs pot_args;
  std::string pot_grid;
  std::optional<std::string> pot_out;
  std::string pot_format = "csv";
  auto* potential = app.add_subcommand("potential", "Sample a potential on a grid (CSV)");
  add_system_options(potential, pot_args);
  potential->add_option("--grid", pot_grid, "min:max:count")->required();
  potential->add_option("--out", pot_out, "output file (default stdout)");
  potential->add_option("--format", pot_format)->check(CLI::IsMember({"csv", "json"}));

  // spectrum
  SystemArgs spec_args;
  std::optional<long long> spec_levels;
  double spec_tol = 1e-6;
  std::string spec_format = "json";
  auto* spectrum = app.add_subcommand("spectrum", "Numeric bound spectrum against the closed forms (JSON)");
  add_system_options(spectrum, spec_args);
  spectrum->add_option("--levels", spec_levels, "number of lowest levels to compute");
  spectrum->add_option("--tol", spec_tol, "eigenvalue tolerance");
  spectrum->add_option("--format", spec_format)->check(CLI::IsMember({"json"}));

  // wavefunction
  SystemArgs wf_args;
  std::string wf_grid;
  std::optional<std::string> wf_out;
  std::string wf_format = "csv";
  auto* wavefunction = app.add_subcommand("wavefunction", "Sample a normalized closed-form eigenfunction (CSV)");
  add_system_options(wavefunction, wf_args);
  wavefunction->add_option("--grid", wf_grid, "min:max:count")->required();
  wavefunction->add_option("--out", wf_out, "output file (default stdout)");
  wavefunction->add_option("--format", wf_format)->check(CLI::IsMember({"csv", "json"}));

  // pct
  std::string pct_from, pct_to;
  std::optional<double> pct_A, pct_B, pct_P, pct_Q, pct_omega, pct_l, pct_Z;
  std::optional<int> pct_n;
  auto* pct = app.add_subcommand("pct", "Parameter maps between Morse, oscillator, Coulomb and Scarf II (JSON)");
  pct->add_option("--from", pct_from)->required()->check(CLI::IsMember({"morse", "radial", "coulomb"}));
  pct->add_option("--to", pct_to)->required()->check(CLI::IsMember({"morse", "radial", "coulomb", "scarf"}));
  pct->add_option("--A", pct_A);
  pct->add_option("--B", pct_B);
  pct->add_option("--P", pct_P);
  pct->add_option("--Q", pct_Q);
  pct->add_option("--omega", pct_omega);
  pct->add_option("--l", pct_l);
  pct->add_option("--Z", pct_Z);
  pct->add_option("--n", pct_n);

  // verify
  std::string suite_name;
  std::uint64_t seed = 42;
  std::vector<std::string> overrides;
  std::string verify_format = "both";
  VerifyConfig vcfg;
  auto* verify = app.add_subcommand("verify", "Run a verification suite; exit 0 iff every check passes");
  verify->add_option("suite", suite_name, "identities, spectra, qes, pct or all")->required();
  verify->add_option("--seed", seed, "seed for randomized property checks");
  verify->add_option("--override-tol", overrides, "replace a check tolerance: name=value")->allow_extra_args(false);
  verify->add_option("--format", verify_format)->check(CLI::IsMember({"table", "json", "both"}));
  verify->add_option("--A", vcfg.morse.A);
  verify->add_option("--B", vcfg.morse.B);
  verify->add_option("--P", vcfg.morse.P);
  verify->add_option("--Q", vcfg.morse.Q);
  verify->add_option("--omega", vcfg.radial.omega);
  verify->add_option("--radial-l", vcfg.radial.l);
  verify->add_option("--radial-n", vcfg.radial.n);
  verify->add_option("--radial-P", vcfg.radial.P);
  verify->add_option("--radial-Q", vcfg.radial.Q);
  verify->add_option("--Z", vcfg.coulomb.Z);
  verify->add_option("--coulomb-l", vcfg.coulomb.l);
  verify->add_option("--coulomb-n", vcfg.coulomb.n);
  verify->add_option("--coulomb-P", vcfg.coulomb.P);
  verify->add_option("--coulomb-Q", vcfg.coulomb.Q);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return exit_usage;
  }

  std::string diagnostic_system;
  try {
    if (potential->parsed()) {
      const System s = system_from_string(pot_args.system);
      GridSpec grid = parse_grid(pot_grid);
      if (is_radial(s)) grid = positive_part(grid);
      const auto V = potential_of(s, pot_args);
      std::vector<double> ys(grid.count());
      for (std::size_t i = 0; i < ys.size(); ++i) ys[i] = V(grid.node(i));
      emit(pot_out, out,
           [&](std::ostream& os) { write_curve(os, pot_format, is_radial(s) ? "r" : "x", "V", grid, ys); });
      return exit_ok;
    }

    if (spectrum->parsed()) {
      const System s = system_from_string(spec_args.system);
      diagnostic_system = spec_args.system;
      if (spec_levels && *spec_levels < 1) throw InvalidParameter("levels", "--levels must be >= 1");
      if (!(spec_tol > 0.0)) throw InvalidParameter("tol", "--tol must be > 0");
      std::optional<std::size_t> levels;
      if (spec_levels) levels = static_cast<std::size_t>(*spec_levels);
      auto st = spectrum_setup(s, spec_args, levels);
      st.options.parallel = thread_cap() != 1;
      const std::size_t k = levels.value_or(st.default_levels);
      const auto res = solve_bound_states(st.V, st.domain, k, spec_tol, st.options);
      json j;
      j["system"] = spec_args.system;
      j["params"] = params_json(s, spec_args);
      j["analytic_energies"] = st.analytic;
      j["numeric_energies"] = res.energies;
      j["residuals"] = res.residuals;
      j["h"] = res.h;
      j["extrapolated"] = res.extrapolated;
      out << j.dump(2) << '\n';
      return exit_ok;
    }

    if (wavefunction->parsed()) {
      const System s = system_from_string(wf_args.system);
      const int n = need(wf_args.n, "n", wf_args.system);
      GridSpec grid = parse_grid(wf_grid);
      if (is_radial(s)) grid = positive_part(grid);
      const auto psi = normalize(SampledFunction::sample(grid, wavefunction_of(s, wf_args, n)));
      const auto vals = psi.values();
      emit(wf_out, out, [&](std::ostream& os) {
        write_curve(os, wf_format, is_radial(s) ? "r" : "x", "psi", grid, std::vector<double>(vals.begin(), vals.end()));
      });
      return exit_ok;
    }

    if (pct->parsed()) {
      const std::string sys = pct_from;
      json j;
      j["from"] = pct_from;
      j["to"] = pct_to;
      if (pct_from == "morse" && pct_to == "radial") {
        const MorseParams p(need(pct_A, "A", sys), need(pct_B, "B", sys));
        const auto img = morse_to_radial(p, need(pct_n, "n", sys));
        j["omega"] = img.omega, j["l"] = img.l, j["E"] = img.energy;
      } else if (pct_from == "morse" && pct_to == "coulomb") {
        const MorseParams p(need(pct_A, "A", sys), need(pct_B, "B", sys));
        const auto img = morse_to_coulomb(p, need(pct_n, "n", sys));
        j["Z"] = img.Z, j["l"] = img.l, j["E"] = img.energy;
      } else if (pct_from == "morse" && pct_to == "scarf") {
        const SuperpotentialSpec spec{MorseParams(need(pct_A, "A", sys), need(pct_B, "B", sys)),
                                      ExtensionParams(need(pct_P, "P", sys), need(pct_Q, "Q", sys))};
        const auto img = morse_to_scarf(spec);
        j["A"] = img.scarf.A(), j["Bp"] = img.scarf.Bp(), j["q"] = img.q;
      } else if (pct_from == "radial" && pct_to == "morse") {
        const int n = need(pct_n, "n", sys);
        const auto p = radial_to_morse(need(pct_omega, "omega", sys), need(pct_l, "l", sys), n);
        j["A"] = p.A(), j["B"] = p.B(), j["E"] = morse_energy(n, p);
      } else if (pct_from == "coulomb" && pct_to == "morse") {
        const int n = need(pct_n, "n", sys);
        const auto p = coulomb_to_morse(need(pct_Z, "Z", sys), need(pct_l, "l", sys), n);
        j["A"] = p.A(), j["B"] = p.B(), j["E"] = morse_energy(n, p);
      } else {
        throw InvalidParameter("to", "unsupported map " + pct_from + " -> " + pct_to);
      }
      out << j.dump(2) << '\n';
      return exit_ok;
    }

    if (verify->parsed()) {
      const Suite suite = suite_from_string(suite_name);
      vcfg.seed = seed;
      vcfg.threads = thread_cap();
      for (const auto& o : overrides) vcfg.tolerance_overrides.insert(parse_override(o));
      const auto report = run_suite(suite, vcfg);
      if (verify_format != "json") out << report_table(report);
      if (verify_format == "both") out << '\n';
      if (verify_format != "table") out << report_json(report, suite, seed).dump(2) << '\n';
      return report.passed() ? exit_ok : exit_verification_failed;
    }
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << '\n';
    return exit_io;
  } catch (const ConvergenceError& e) {
    json j;
    j["error"] = "convergence";
    j["message"] = e.what();
    if (!diagnostic_system.empty()) j["system"] = diagnostic_system;
    out << j.dump(2) << '\n';
    err << "convergence error: " << e.what() << '\n';
    return exit_convergence;
  } catch (const Error& e) {
    err << "usage error: " << e.what() << '\n';
    return exit_usage;
  }
  err << "usage error: no command\n";
  return exit_usage;
}

}  // namespace susyext
