#include "susyext/potentials.hpp"

#include <cmath>

#include "susyext/pct.hpp"

namespace susyext {

namespace {

double sech(double z) { return 1.0 / std::cosh(z); }

void check_radius(double r) {
  if (!(r > 0.0)) throw DomainError("radial coordinate must be > 0");
}

SuperpotentialSpec radial_spec(const RadialExtParams& p) {
  return {radial_to_morse(p.omega(), p.l(), p.n()), ExtensionParams(p.P(), p.Q())};
}

SuperpotentialSpec coulomb_spec(const CoulombExtParams& p) {
  return {coulomb_to_morse(p.Z(), p.l(), p.n()), ExtensionParams(p.P(), p.Q())};
}

}  // namespace

double v_morse(double x, const MorseParams& p) {
  const double u = std::exp(-x);
  const double B = p.B();
  return B * B * u * u - B * (2.0 * p.A() + 1.0) * u;
}

double v_morse_ext(double x, const SuperpotentialSpec& spec) {
  const double A = spec.morse.A();
  const double B = spec.morse.B();
  const double P = spec.ext.P();
  const double Q = spec.ext.Q();
  if (P == 0.0 && Q == 0.0) return v_morse(x, spec.morse);

  const double D = 2.0 * P - B;
  const double c1 = (2.0 * A + 1.0) * D;
  const double c2 = D * D - 4.0 * A * (A + 1.0) * Q;
  const double c3 = -(2.0 * A + 1.0) * D * Q;
  const double u = std::exp(-x);
  if (Q * u * u <= 1.0) {
    const double den = 1.0 + Q * u * u;
    return u * (c1 + u * (c2 + u * c3)) / (den * den);
  }
  // Divide numerator and denominator by u^4 so nothing overflows as x -> -inf.
  const double v = std::exp(x);
  const double den = v * v + Q;
  return v * (c3 + v * (c2 + v * c1)) / (den * den);
}

double v_morse_ext_printed(double x, const SuperpotentialSpec& spec) {
  const double A = spec.morse.A();
  const double B = spec.morse.B();
  const double P = spec.ext.P();
  const double Q = spec.ext.Q();
  const double e1 = std::exp(-x);
  const double e2 = e1 * e1;
  const double e3 = e2 * e1;
  const double e4 = e2 * e2;
  const double e5 = e4 * e1;
  const double e6 = e3 * e3;
  const double k = 2.0 * A + 1.0;
  const double braces = 2.0 * P * k * e1 + 4.0 * (P * (P - B) - A * (A + 1.0) * Q) * e2 -
                        k * (2.0 * P - 3.0 * B) * Q * e3 - 2.0 * Q * B * B * e4 + k * B * Q * Q * e5 -
                        B * B * Q * Q * e6;
  const double den = 1.0 + Q * e2;
  return v_morse(x, spec.morse) + braces / (den * den);
}

double v_scarf2(double z, const ScarfParams& p) {
  const double A = p.A();
  const double Bp = p.Bp();
  const double s = sech(z);
  return (Bp * Bp - A * (A + 1.0)) * s * s + Bp * (2.0 * A + 1.0) * s * std::tanh(z);
}

double scarf_equivalence_residual(double x, const SuperpotentialSpec& spec) {
  const auto image = morse_to_scarf(spec);
  return v_morse_ext(x, spec) - v_scarf2(x - image.q, image.scarf);
}

double v_radial(double r, double omega, double l) {
  check_radius(r);
  return 0.25 * omega * omega * r * r + l * (l + 1.0) / (r * r);
}

double v_coulomb(double r, double Z, double l) {
  check_radius(r);
  return -2.0 * Z / r + l * (l + 1.0) / (r * r);
}

double v_radial_ext(double r, const RadialExtParams& p) {
  check_radius(r);
  const auto spec = radial_spec(p);
  const double A = spec.morse.A();
  const double n = p.n();
  const double E = -(A - n) * (A - n);
  const double E_fixed = p.omega() * (2.0 * n + p.l() + 1.5);
  const double x = -2.0 * std::log(r);
  return 4.0 * (v_morse_ext(x, spec) - E) / (r * r) - 0.25 / (r * r) + E_fixed;
}

double v_radial_ext_printed(double r, const RadialExtParams& p) {
  check_radius(r);
  const double w = p.omega();
  const double l = p.l();
  const double P = p.P();
  const double Q = p.Q();
  const double N = 2.0 * p.n() + l + 1.5;
  const double r2 = r * r;
  const double r4 = r2 * r2;
  const double r6 = r4 * r2;
  const double r8 = r4 * r4;
  const double r10 = r8 * r2;
  const double braces = (P * (4.0 * P - w) + Q) * r2 - Q * w * w * r6 / 8.0 - Q * Q * w * w * r10 / 16.0 +
                        N * (2.0 * P - (2.0 * P - 0.75 * w) * Q * r4 + 0.25 * Q * Q * w * r8) - N * N * Q * r2;
  const double den = 1.0 + Q * r4;
  return 0.25 * w * w * r2 + l * (l + 1.0) / r2 + 4.0 * braces / (den * den);
}

double v_coulomb_ext(double r, const CoulombExtParams& p) {
  check_radius(r);
  const auto spec = coulomb_spec(p);
  const double A = spec.morse.A();
  const double B = spec.morse.B();
  const double n = p.n();
  const double E = -(A - n) * (A - n);
  const double E_fixed = -B * B;
  const double x = -std::log(r);
  return (v_morse_ext(x, spec) - E) / (r * r) - 0.25 / (r * r) + E_fixed;
}

double v_coulomb_ext_printed(double r, const CoulombExtParams& p, CentrifugalReading reading) {
  check_radius(r);
  const double Z = p.Z();
  const double l = p.l();
  const double P = p.P();
  const double Q = p.Q();
  const double K = p.n() + l + 1.0;
  const double r2 = r * r;
  const double centrifugal = reading == CentrifugalReading::inverse_square ? l * (l + 1.0) / r2 : l * (l + 1.0) / r;
  const double braces = 4.0 * P * P + Q + 6.0 * Z * Q * r + 2.0 * Z * Q * Q * r2 * r +
                        4.0 * P * K * (1.0 / r - Q * r) - 4.0 * Q * K * K - 4.0 * P * Z / K -
                        Q * Z * Z / (K * K) * r2 * (2.0 + Q * r2);
  const double den = 1.0 + Q * r2;
  return -2.0 * Z / r + centrifugal + braces / (den * den);
}

}  // namespace susyext
