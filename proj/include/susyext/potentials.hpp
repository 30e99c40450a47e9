#pragma once

#include "susyext/domain.hpp"
#include "susyext/susy_core.hpp"

namespace susyext {

/// V_{A,B}(x) = B^2 e^{-2x} - B(2A+1) e^{-x}.
double v_morse(double x, const MorseParams& p);

/// Isospectrally extended Morse potential V_{A,B,ext}(x).
///
/// Evaluated through the collected rational form
///   [(2A+1)D u + (D^2 - 4A(A+1)Q) u^2 - (2A+1)DQ u^3] / (1 + Q u^2)^2,
/// u = e^{-x}, D = 2P - B, which is algebraically identical to the six-term
/// correction over (1 + Q e^{-2x})^2 but free of the e^{-2x}-sized
/// cancellation for x << 0. Returns v_morse exactly when P = Q = 0.
double v_morse_ext(double x, const SuperpotentialSpec& spec);

/// The six-term expression exactly as printed: V_{A,B} plus the correction
/// over (1 + Q e^{-2x})^2. Cross-check only; loses accuracy for x << 0.
double v_morse_ext_printed(double x, const SuperpotentialSpec& spec);

/// [B'^2 - A(A+1)] sech^2 z + B'(2A+1) sech z tanh z.
double v_scarf2(double z, const ScarfParams& p);

/// v_morse_ext(x) - v_scarf2(x - q) with B' = (2P - B) e^{-q}/2. DomainError for Q = 0.
double scarf_equivalence_residual(double x, const SuperpotentialSpec& spec);

/// Plain radial oscillator w^2 r^2/4 + l(l+1)/r^2.
double v_radial(double r, double omega, double l);

/// Plain Coulomb -2Z/r + l(l+1)/r^2.
double v_coulomb(double r, double Z, double l);

/// Extended radial oscillator, obtained by transforming v_morse_ext through
/// r = e^{-x/2}: 4(V(x(r)) - E_n)/r^2 - 1/(4r^2) + E~_n with A = n + l/2 + 1/4,
/// B = w/4. DomainError for r <= 0.
double v_radial_ext(double r, const RadialExtParams& p);

/// The closed-form extended radial oscillator as printed (cross-check oracle).
double v_radial_ext_printed(double r, const RadialExtParams& p);

/// Extended Coulomb potential through r = e^{-x}: (V(x(r)) - E_n)/r^2 - 1/(4r^2) + E~_n
/// with A = n + l + 1/2, B = Z/(n + l + 1). DomainError for r <= 0.
double v_coulomb_ext(double r, const CoulombExtParams& p);

/// How to read the centrifugal term of the printed extended Coulomb formula,
/// which prints l(l+1)/r.
enum class CentrifugalReading { inverse_square, as_printed };

double v_coulomb_ext_printed(double r, const CoulombExtParams& p,
                             CentrifugalReading reading = CentrifugalReading::inverse_square);

}  // namespace susyext
