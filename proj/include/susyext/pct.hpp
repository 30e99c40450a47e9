#pragma once

#include <functional>

#include "susyext/domain.hpp"
#include "susyext/susy_core.hpp"

namespace susyext {

/// Image of the Morse problem at level n under r = e^{-x/2}. Only this one
/// level survives the map; `energy` is the eigenvalue it is pinned to.
struct RadialImage {
  double omega;
  double l;
  double energy;
};

struct CoulombImage {
  double Z;
  double l;
  double energy;
};

struct ScarfImage {
  ScarfParams scarf;
  double q;
};

/// omega = 4B, l + 1/2 = 2(A - n), E~ = 4B(2A + 1). LevelError unless 0 <= n < A.
RadialImage morse_to_radial(const MorseParams& p, int n);
/// B = omega/4, A = n + l/2 + 1/4.
MorseParams radial_to_morse(double omega, double l, int n);

/// 2Z = B(2A + 1), l + 1/2 = A - n, E~ = -B^2. LevelError unless 0 <= n < A,
/// DomainError when A - n <= 1/2 (negative l).
CoulombImage morse_to_coulomb(const MorseParams& p, int n);
/// A = n + l + 1/2, B = Z/(n + l + 1).
MorseParams coulomb_to_morse(double Z, double l, int n);

/// z = x - q, Q = e^{2q}, B' = (2P - B) e^{-q}/2. DomainError for Q = 0.
ScarfImage morse_to_scarf(const SuperpotentialSpec& spec);

enum class PctTarget { radial, coulomb };

/// x(r): -2 ln r for the oscillator map, -ln r for the Coulomb map.
double pct_coordinate(double r, PctTarget target);

using RealFunction = std::function<double(double)>;

/// psi~(r) = r^{1/2} psi(x(r)). The returned callable throws DomainError for r <= 0.
RealFunction pullback_wavefunction(RealFunction psi_x, PctTarget target);

/// Pullback of a sampled x-space function onto an r grid by 4-point (cubic)
/// Lagrange interpolation. Adds O(h^4) interpolation error on top of the
/// samples; prefer the callable overload when a closed form exists. Nodes
/// whose x(r) falls outside the source grid are set to zero.
SampledFunction pullback_wavefunction(const SampledFunction& psi_x, const GridSpec& r_grid, PctTarget target);

/// V~(r) - [c (V_ext(x(r)) - E_n)/r^2 - 1/(4r^2) + E~_n], c = 4 (radial) or 1 (Coulomb),
/// where V~ is the extended potential built from the mapped parameters.
double pct_potential_residual(const SuperpotentialSpec& spec, int n, PctTarget target, double r);

}  // namespace susyext
