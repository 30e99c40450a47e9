#include "susyext/analytic_states.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "susyext/numerics.hpp"
#include "susyext/pct.hpp"

namespace susyext {

namespace {

constexpr std::array<std::pair<System, std::string_view>, 7> kSystemNames{{
    {System::morse, "morse"},
    {System::morse_ext, "morse-ext"},
    {System::scarf2, "scarf2"},
    {System::radial, "radial"},
    {System::radial_ext, "radial-ext"},
    {System::coulomb, "coulomb"},
    {System::coulomb_ext, "coulomb-ext"},
}};

void check_level(int n, double A) {
  if (n < 0 || !(n < A)) {
    throw LevelError("level n = " + std::to_string(n) + " is not bound for A = " + std::to_string(A));
  }
}

void check_radius(double r) {
  if (!(r > 0.0)) throw DomainError("radial coordinate must be > 0");
}

// log cosh z without overflow.
double log_cosh(double z) {
  const double a = std::abs(z);
  return a + std::log1p(std::exp(-2.0 * a)) - std::numbers::ln2;
}

// exp(log_scale) * poly(s), keeping |s|^n inside the exponent when |s| > 1.
double scaled_poly(const RomanovskiPolynomial& poly, double z, double log_scale) {
  const int n = poly.n();
  if (std::abs(z) <= 1.0) {
    const double s = std::sinh(z);
    return std::exp(log_scale) * poly(s);
  }
  // sinh z = sign * exp(log_abs_s); beyond |z| ~ 700 use the asymptotic log.
  const double sign = z > 0.0 ? 1.0 : -1.0;
  double log_abs_s;
  double inv_s;
  if (std::abs(z) < 700.0) {
    const double s = std::sinh(z);
    log_abs_s = std::log(std::abs(s));
    inv_s = 1.0 / s;
  } else {
    log_abs_s = std::abs(z) - std::numbers::ln2;
    inv_s = 0.0;
  }
  // sum_k c_k s^k = s^n sum_k c_k t^{n-k}, t = 1/s
  const auto& c = poly.coefficients();
  double acc = 0.0;
  for (int k = 0; k <= n; ++k) acc = acc * inv_s + c[static_cast<std::size_t>(k)];
  const double sn_sign = (n % 2 == 0) ? 1.0 : sign;
  const double expo = log_scale + n * log_abs_s;
  if (expo < -745.0) return 0.0;
  return sn_sign * std::exp(expo) * acc;
}

double scarf_state_value(int n, double z, double A, double Bp, double prefactor_log) {
  const auto rp = RomanovskiParams{-2.0 * Bp, 0.5 - A};
  const RomanovskiPolynomial poly(n, rp.a, rp.b);
  const double s_atan = std::atan(std::sinh(z));  // atan(+-inf) = +-pi/2
  return scaled_poly(poly, z, prefactor_log - Bp * s_atan);
}

SuperpotentialSpec radial_spec(const RadialExtParams& p) {
  return {radial_to_morse(p.omega(), p.l(), p.n()), ExtensionParams(p.P(), p.Q())};
}

SuperpotentialSpec coulomb_spec(const CoulombExtParams& p) {
  return {coulomb_to_morse(p.Z(), p.l(), p.n()), ExtensionParams(p.P(), p.Q())};
}

}  // namespace

std::string_view to_string(System s) noexcept {
  for (const auto& [sys, name] : kSystemNames) {
    if (sys == s) return name;
  }
  return "unknown";
}

System system_from_string(std::string_view name) {
  for (const auto& [sys, n] : kSystemNames) {
    if (n == name) return sys;
  }
  throw InvalidParameter("system", "unknown system '" + std::string(name) + "'");
}

double morse_energy(int n, const MorseParams& p) {
  check_level(n, p.A());
  const double d = p.A() - n;
  return -d * d;
}

double morse_wavefunction(int n, double x, const MorseParams& p) {
  check_level(n, p.A());
  const double A = p.A();
  const double B = p.B();
  const double log_y = std::log(2.0 * B) - x;
  const double y = std::exp(log_y);
  const double expo = (A - n) * log_y - 0.5 * y;
  if (expo < -745.0) return 0.0;
  return std::exp(expo) * laguerre(n, 2.0 * (A - n), y);
}

RomanovskiParams scarf_romanovski_params(const ScarfParams& p) { return {-2.0 * p.Bp(), 0.5 - p.A()}; }

double scarf2_wavefunction(int n, double z, const ScarfParams& p) {
  check_level(n, p.A());
  return scarf_state_value(n, z, p.A(), p.Bp(), -p.A() * log_cosh(z));
}

double morse_ext_wavefunction(int n, double x, const SuperpotentialSpec& spec) {
  check_level(n, spec.morse.A());
  const auto image = morse_to_scarf(spec);
  return scarf2_wavefunction(n, x - image.q, image.scarf);
}

double morse_ext_wavefunction_sinh_prefactor(int n, double x, const SuperpotentialSpec& spec) {
  check_level(n, spec.morse.A());
  const auto image = morse_to_scarf(spec);
  const double z = x - image.q;
  const double A = image.scarf.A();
  const double Bp = image.scarf.Bp();
  const double log_abs_sinh = std::abs(z) < 700.0 ? std::log(std::abs(std::sinh(z))) : std::abs(z) - std::numbers::ln2;
  return scarf_state_value(n, z, A, Bp, A * log_abs_sinh);
}

double radial_osc_energy(int n, double omega, double l) { return omega * (2.0 * n + l + 1.5); }

double radial_osc_wavefunction(int n, double r, double omega, double l) {
  check_radius(r);
  const double y = 0.5 * omega * r * r;
  return std::pow(r, l + 1.0) * std::exp(-0.5 * y) * laguerre(n, l + 0.5, y);
}

double radial_ext_energy(const RadialExtParams& p) { return radial_osc_energy(p.n(), p.omega(), p.l()); }

double radial_ext_wavefunction(double r, const RadialExtParams& p) {
  check_radius(r);
  const auto spec = radial_spec(p);
  return std::sqrt(r) * morse_ext_wavefunction(p.n(), pct_coordinate(r, PctTarget::radial), spec);
}

double radial_ext_wavefunction_printed(double r, const RadialExtParams& p, PrintedRomanovski reading) {
  check_radius(r);
  const int n = p.n();
  const double l = p.l();
  const double w = p.omega();
  const double P = p.P();
  const double q = q_of(p.Q());
  const double em = std::exp(-q);
  const double ep = std::exp(q);
  const double r2 = r * r;
  const double r4 = r2 * r2;
  const double s = (em - ep * r4) / (2.0 * r2);
  const double b = reading == PrintedRomanovski::as_printed ? -n - l + 0.25 : -n - 0.5 * l + 0.25;
  const double a = -(2.0 * P - 0.25 * w) * em;
  return std::pow(r, 2.0 * n + l + 1.0) * std::pow(em + ep * r4, -0.5 * (2.0 * n + l + 0.5)) *
         std::exp(-(P - 0.125 * w) * em * std::atan(s)) * romanovski(n, a, b, s);
}

double coulomb_energy(int n, double Z, double l) {
  const double k = n + l + 1.0;
  return -Z * Z / (k * k);
}

double coulomb_wavefunction(int n, double r, double Z, double l) {
  check_radius(r);
  const double k = n + l + 1.0;
  return std::pow(r, l + 1.0) * std::exp(-Z * r / k) * laguerre(n, 2.0 * l + 1.0, 2.0 * Z * r / k);
}

double coulomb_ext_energy(const CoulombExtParams& p) { return coulomb_energy(p.n(), p.Z(), p.l()); }

double coulomb_ext_wavefunction(double r, const CoulombExtParams& p) {
  check_radius(r);
  const auto spec = coulomb_spec(p);
  return std::sqrt(r) * morse_ext_wavefunction(p.n(), pct_coordinate(r, PctTarget::coulomb), spec);
}

double coulomb_ext_wavefunction_inverse_root(double r, const CoulombExtParams& p) {
  check_radius(r);
  const auto spec = coulomb_spec(p);
  return morse_ext_wavefunction(p.n(), pct_coordinate(r, PctTarget::coulomb), spec) / std::sqrt(r);
}

double coulomb_ext_wavefunction_printed(double r, const CoulombExtParams& p, PrintedRomanovski reading) {
  check_radius(r);
  const int n = p.n();
  const double l = p.l();
  const double Z = p.Z();
  const double P = p.P();
  const double K = n + l + 1.0;
  const double q = q_of(p.Q());
  const double em = std::exp(-q);
  const double ep = std::exp(q);
  const double s = (em - ep * r * r) / (2.0 * r);
  const double b = reading == PrintedRomanovski::as_printed ? -n - P : -n - l;
  const double a = -(2.0 * P - Z / K) * em;
  return std::pow(r, K) * std::pow(em + ep * r * r, -n - l - 0.5) *
         std::exp(-(P - 0.5 * Z / K) * em * std::atan(s)) * romanovski(n, a, b, s);
}

BoundState morse_state(int n, const MorseParams& p) {
  return {n, morse_energy(n, p), [n, p](double x) { return morse_wavefunction(n, x, p); }, System::morse};
}

BoundState morse_ext_state(int n, const SuperpotentialSpec& spec) {
  // Same closed-form spectrum as the plain Morse potential for every (P, Q).
  const double E = morse_energy(n, spec.morse);
  morse_to_scarf(spec);  // DomainError for Q = 0
  return {n, E, [n, spec](double x) { return morse_ext_wavefunction(n, x, spec); }, System::morse_ext};
}

BoundState scarf2_state(int n, const ScarfParams& p) {
  check_level(n, p.A());
  const double d = p.A() - n;
  return {n, -d * d, [n, p](double z) { return scarf2_wavefunction(n, z, p); }, System::scarf2};
}

BoundState radial_state(int n, double omega, double l) {
  return {n, radial_osc_energy(n, omega, l), [=](double r) { return radial_osc_wavefunction(n, r, omega, l); },
          System::radial};
}

BoundState radial_ext_state(const RadialExtParams& p) {
  q_of(p.Q());
  return {p.n(), radial_ext_energy(p), [p](double r) { return radial_ext_wavefunction(r, p); }, System::radial_ext};
}

BoundState coulomb_state(int n, double Z, double l) {
  return {n, coulomb_energy(n, Z, l), [=](double r) { return coulomb_wavefunction(n, r, Z, l); }, System::coulomb};
}

BoundState coulomb_ext_state(const CoulombExtParams& p) {
  q_of(p.Q());
  return {p.n(), coulomb_ext_energy(p), [p](double r) { return coulomb_ext_wavefunction(r, p); },
          System::coulomb_ext};
}

SampledFunction normalize(const SampledFunction& psi) {
  std::vector<double> sq(psi.size());
  for (std::size_t i = 0; i < sq.size(); ++i) sq[i] = psi[i] * psi[i];
  const double norm2 = quadrature(SampledFunction(psi.grid(), std::move(sq)));
  if (!(norm2 > 0.0) || !std::isfinite(norm2) || norm2 < 1e-300) {
    throw DegenerateError("cannot normalize: L2 norm vanishes or underflows");
  }
  const double floor = 1e-9 * psi.max_abs();
  double sign = 1.0;
  for (double v : psi.values()) {
    if (std::abs(v) > floor) {
      sign = v > 0.0 ? 1.0 : -1.0;
      break;
    }
  }
  const double scale = sign / std::sqrt(norm2);
  std::vector<double> out(psi.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = scale * psi[i];
  return SampledFunction(psi.grid(), std::move(out));
}

int count_nodes(const SampledFunction& psi) {
  const double floor = 1e-9 * psi.max_abs();
  int nodes = 0;
  int last_sign = 0;
  for (double v : psi.values()) {
    if (!(std::abs(v) > floor)) continue;
    const int s = v > 0.0 ? 1 : -1;
    if (last_sign != 0 && s != last_sign) ++nodes;
    last_sign = s;
  }
  return nodes;
}

SampledFunction ladder_state(int n, const SuperpotentialSpec& spec, const GridSpec& grid) {
  const double A = spec.morse.A();
  if (n < 0 || n >= A) throw LevelError("ladder_state: level " + std::to_string(n) + " is not bound");
  const auto base = spec.with_A(A - n);
  auto psi = SampledFunction::sample(grid, [&](double x) { return morse_ext_wavefunction(0, x, base); });
  for (int k = n - 1; k >= 0; --k) psi = ladder_raise(psi, A - k, spec);
  return psi;
}

SampledFunction ladder_state_extrapolated(int n, const SuperpotentialSpec& spec, const GridSpec& grid) {
  const GridSpec fine(grid.x_min(), grid.x_max(), 2 * grid.count() - 1);
  const auto coarse_psi = ladder_state(n, spec, grid);
  const auto fine_psi = ladder_state(n, spec, fine);
  std::vector<double> v(grid.count());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = (16.0 * fine_psi[2 * i] - coarse_psi[i]) / 15.0;
  return SampledFunction(grid, std::move(v));
}

}  // namespace susyext
