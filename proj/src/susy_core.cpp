#include "susyext/susy_core.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "susyext/numerics.hpp"

namespace susyext {

namespace {

void check_Q(double Q) {
  if (!(Q >= 0.0)) throw DomainError("Q must be >= 0, got " + std::to_string(Q));
}

double sech(double z) { return 1.0 / std::cosh(z); }

// B' = (2P - B) e^{-q} / 2, the Scarf II coupling of the shifted form.
double scarf_coupling(double B, double P, double Q) { return 0.5 * (2.0 * P - B) / std::sqrt(Q); }

}  // namespace

double x1(double x, double Q) {
  check_Q(Q);
  if (Q == 0.0) return 1.0;
  return std::tanh(x - q_of(Q));
}

double x1_prime(double x, double Q) {
  check_Q(Q);
  if (Q == 0.0) return 0.0;
  const double s = sech(x - q_of(Q));
  return s * s;
}

double x2(double x, double B, double P, double Q) {
  check_Q(Q);
  if (Q == 0.0) return (2.0 * P - B) * std::exp(-x);
  return scarf_coupling(B, P, Q) * sech(x - q_of(Q));
}

double x2_prime(double x, double B, double P, double Q) {
  check_Q(Q);
  if (Q == 0.0) return -(2.0 * P - B) * std::exp(-x);
  const double z = x - q_of(Q);
  return -scarf_coupling(B, P, Q) * sech(z) * std::tanh(z);
}

double w0(double x, const MorseParams& p) { return p.A() - p.B() * std::exp(-x); }

double phi(double x, const SuperpotentialSpec& spec) {
  const double A = spec.morse.A();
  const double B = spec.morse.B();
  const double P = spec.ext.P();
  const double Q = spec.ext.Q();
  if (Q == 0.0) return 2.0 * P * std::exp(-x);
  // (2P e^x - 2AQ + BQ e^{-x}) / (e^{2x} + Q), scaled by e^{-2x} or by 1/Q
  // depending on which exponential dominates.
  if (x >= 0.0) {
    const double u = std::exp(-x);
    return (2.0 * P * u - 2.0 * A * Q * u * u + B * Q * u * u * u) / (1.0 + Q * u * u);
  }
  const double v = std::exp(x);
  return (2.0 * P * v - 2.0 * A * Q + B * Q / v) / (v * v + Q);
}

double superpotential(double x, double a, const SuperpotentialSpec& spec) {
  const double B = spec.morse.B();
  const double P = spec.ext.P();
  const double Q = spec.ext.Q();
  return a * x1(x, Q) + x2(x, B, P, Q);
}

double superpotential(double x, const SuperpotentialSpec& spec) {
  return superpotential(x, spec.morse.A(), spec);
}

double superpotential_prime(double x, double a, const SuperpotentialSpec& spec) {
  const double B = spec.morse.B();
  const double P = spec.ext.P();
  const double Q = spec.ext.Q();
  return a * x1_prime(x, Q) + x2_prime(x, B, P, Q);
}

double superpotential_prime(double x, const SuperpotentialSpec& spec) {
  return superpotential_prime(x, spec.morse.A(), spec);
}

double riccati_residual(double x, double Q) {
  const double X = x1(x, Q);
  return x1_prime(x, Q) + X * X - 1.0;
}

double linear_residual(double x, double B, double P, double Q) {
  return x2_prime(x, B, P, Q) + x1(x, Q) * x2(x, B, P, Q);
}

double shape_invariance_residual(double x, const SuperpotentialSpec& spec) {
  const double A = spec.morse.A();
  const double W = superpotential(x, A, spec);
  const double Wp = superpotential_prime(x, A, spec);
  const double W1 = superpotential(x, A - 1.0, spec);
  const double W1p = superpotential_prime(x, A - 1.0, spec);
  const double lhs = W * W + Wp - A * A;
  const double rhs = W1 * W1 - W1p - (A - 1.0) * (A - 1.0);
  return lhs - rhs;
}

double partner_potential(double x, const SuperpotentialSpec& spec, Branch branch) {
  const double A = spec.morse.A();
  const double W = superpotential(x, A, spec);
  const double Wp = superpotential_prime(x, A, spec);
  const double sign = branch == Branch::plus ? -1.0 : 1.0;
  return W * W + sign * Wp - A * A;
}

namespace {

SampledFunction apply_first_order(const SampledFunction& psi, double a, const SuperpotentialSpec& spec,
                                  double derivative_sign) {
  const double peak = psi.max_abs();
  const double floor = 1e-8 * peak;
  const std::size_t N = psi.size();
  if (!(std::abs(psi[0]) < floor) || !(std::abs(psi[N - 1]) < floor)) {
    throw BoundaryError("ladder operator input has not decayed at the grid ends");
  }
  const auto d = first_derivative(psi);
  std::vector<double> out(N);
  for (std::size_t i = 0; i < N; ++i) {
    const double x = psi.grid().node(i);
    out[i] = derivative_sign * d[i] + superpotential(x, a, spec) * psi[i];
  }
  return SampledFunction(psi.grid(), std::move(out));
}

}  // namespace

SampledFunction ladder_raise(const SampledFunction& psi, double a, const SuperpotentialSpec& spec) {
  return apply_first_order(psi, a, spec, -1.0);
}

SampledFunction ladder_lower(const SampledFunction& psi, double a, const SuperpotentialSpec& spec) {
  return apply_first_order(psi, a, spec, +1.0);
}

}  // namespace susyext
