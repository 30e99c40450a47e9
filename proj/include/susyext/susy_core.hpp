#pragma once

#include "susyext/domain.hpp"

namespace susyext {

/// W(x, A) = A X1(x) + X2(x) together with the constants that fix X1, X2.
struct SuperpotentialSpec {
  MorseParams morse;
  ExtensionParams ext;

  /// Same (B, P, Q) with a different A. The new A must stay positive.
  SuperpotentialSpec with_A(double A) const { return {MorseParams(A, morse.B()), ext}; }
};

// Riccati solution X1 = 1 - 2Q/(e^{2x} + Q) = tanh(x - q) and its derivative.
double x1(double x, double Q);
double x1_prime(double x, double Q);

// Linear solution X2 = (2P - B) e^x / (e^{2x} + Q) and its derivative.
double x2(double x, double B, double P, double Q);
double x2_prime(double x, double B, double P, double Q);

/// Plain Morse superpotential W0 = A - B e^{-x}.
double w0(double x, const MorseParams& p);

/// Extension term phi = W - W0.
double phi(double x, const SuperpotentialSpec& spec);

/// W(x, a) for an arbitrary real a, with (B, P, Q) taken from spec. The
/// one-argument overload uses a = A.
double superpotential(double x, double a, const SuperpotentialSpec& spec);
double superpotential(double x, const SuperpotentialSpec& spec);
double superpotential_prime(double x, double a, const SuperpotentialSpec& spec);
double superpotential_prime(double x, const SuperpotentialSpec& spec);

/// X1' + X1^2 - 1.
double riccati_residual(double x, double Q);
/// X2' + X1 X2.
double linear_residual(double x, double B, double P, double Q);
/// [W^2 + W' - A^2](A) - [W^2 - W' - (A-1)^2](A-1), all derivatives analytic.
double shape_invariance_residual(double x, const SuperpotentialSpec& spec);

enum class Branch { plus, minus };

/// V^(+/-) = W^2 -/+ W' + eps with factorization energy eps = -A^2.
double partner_potential(double x, const SuperpotentialSpec& spec, Branch branch);

/// A^dagger(a) psi = -psi' + W(x, a) psi, with a 4th-order derivative stencil.
/// Throws BoundaryError unless psi has decayed below 1e-8 max|psi| at both ends.
SampledFunction ladder_raise(const SampledFunction& psi, double a, const SuperpotentialSpec& spec);

/// A(a) psi = psi' + W(x, a) psi. Same stencil and precondition as ladder_raise.
SampledFunction ladder_lower(const SampledFunction& psi, double a, const SuperpotentialSpec& spec);

}  // namespace susyext
