#include "susyext/pct.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "susyext/potentials.hpp"

namespace susyext {

namespace {

void check_level(const MorseParams& p, int n) {
  if (n < 0 || !(n < p.A())) {
    throw LevelError("level n = " + std::to_string(n) + " is not bound for A = " + std::to_string(p.A()));
  }
}

void check_radius(double r) {
  if (!(r > 0.0)) throw DomainError("radial coordinate must be > 0");
}

}  // namespace

RadialImage morse_to_radial(const MorseParams& p, int n) {
  check_level(p, n);
  const double A = p.A();
  const double B = p.B();
  return {4.0 * B, 2.0 * (A - n) - 0.5, 4.0 * B * (2.0 * A + 1.0)};
}

MorseParams radial_to_morse(double omega, double l, int n) {
  if (!(omega > 0.0)) throw InvalidParameter("omega", "must be > 0");
  if (!(l >= 0.0)) throw InvalidParameter("l", "must be >= 0");
  if (n < 0) throw InvalidParameter("n", "must be >= 0");
  return MorseParams(n + 0.5 * l + 0.25, 0.25 * omega);
}

CoulombImage morse_to_coulomb(const MorseParams& p, int n) {
  check_level(p, n);
  const double A = p.A();
  const double B = p.B();
  if (!(A - n > 0.5)) {
    throw DomainError("Coulomb image needs A - n > 1/2 (l = A - n - 1/2 would be negative)");
  }
  return {0.5 * B * (2.0 * A + 1.0), A - n - 0.5, -B * B};
}

MorseParams coulomb_to_morse(double Z, double l, int n) {
  if (!(Z > 0.0)) throw InvalidParameter("Z", "must be > 0");
  if (!(l >= 0.0)) throw InvalidParameter("l", "must be >= 0");
  if (n < 0) throw InvalidParameter("n", "must be >= 0");
  return MorseParams(n + l + 0.5, Z / (n + l + 1.0));
}

ScarfImage morse_to_scarf(const SuperpotentialSpec& spec) {
  const double q = spec.ext.q();
  const double Bp = 0.5 * (2.0 * spec.ext.P() - spec.morse.B()) * std::exp(-q);
  return {ScarfParams(spec.morse.A(), Bp), q};
}

double pct_coordinate(double r, PctTarget target) {
  check_radius(r);
  // Both maps are strictly decreasing bijections (0, inf) -> (-inf, inf).
  return target == PctTarget::radial ? -2.0 * std::log(r) : -std::log(r);
}

RealFunction pullback_wavefunction(RealFunction psi_x, PctTarget target) {
  return [psi = std::move(psi_x), target](double r) {
    const double x = pct_coordinate(r, target);
    return std::sqrt(r) * psi(x);
  };
}

SampledFunction pullback_wavefunction(const SampledFunction& psi_x, const GridSpec& r_grid, PctTarget target) {
  const GridSpec& g = psi_x.grid();
  const double h = g.spacing();
  const std::size_t N = g.count();
  if (N < 4) throw DomainError("cubic interpolation needs at least 4 source samples");
  std::vector<double> out(r_grid.count(), 0.0);
  for (std::size_t j = 0; j < out.size(); ++j) {
    const double r = r_grid.node(j);
    if (!(r > 0.0)) continue;
    const double x = pct_coordinate(r, target);
    if (x < g.x_min() || x > g.x_max()) continue;
    const double t = (x - g.x_min()) / h;
    auto i0 = static_cast<std::ptrdiff_t>(std::floor(t)) - 1;
    i0 = std::clamp<std::ptrdiff_t>(i0, 0, static_cast<std::ptrdiff_t>(N) - 4);
    double value = 0.0;
    for (int a = 0; a < 4; ++a) {
      double w = 1.0;
      for (int b = 0; b < 4; ++b) {
        if (b != a) w *= (t - static_cast<double>(i0 + b)) / static_cast<double>(a - b);
      }
      value += w * psi_x[static_cast<std::size_t>(i0 + a)];
    }
    out[j] = std::sqrt(r) * value;
  }
  return SampledFunction(r_grid, std::move(out));
}

double pct_potential_residual(const SuperpotentialSpec& spec, int n, PctTarget target, double r) {
  check_radius(r);
  const double A = spec.morse.A();
  const double E = -(A - n) * (A - n);
  const double x = pct_coordinate(r, target);
  const double V = v_morse_ext(x, spec);
  const double P = spec.ext.P();
  const double Q = spec.ext.Q();
  if (target == PctTarget::radial) {
    const auto img = morse_to_radial(spec.morse, n);
    const double direct = 4.0 * (V - E) / (r * r) - 0.25 / (r * r) + img.energy;
    return v_radial_ext(r, RadialExtParams(img.omega, img.l, n, P, Q)) - direct;
  }
  const auto img = morse_to_coulomb(spec.morse, n);
  const double direct = (V - E) / (r * r) - 0.25 / (r * r) + img.energy;
  return v_coulomb_ext(r, CoulombExtParams(img.Z, img.l, n, P, Q)) - direct;
}

}  // namespace susyext
