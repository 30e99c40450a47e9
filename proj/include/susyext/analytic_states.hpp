#pragma once

#include <functional>
#include <string_view>

#include "susyext/domain.hpp"
#include "susyext/polynomials.hpp"
#include "susyext/susy_core.hpp"

namespace susyext {

enum class System { morse, morse_ext, scarf2, radial, radial_ext, coulomb, coulomb_ext };

std::string_view to_string(System s) noexcept;
/// Inverse of to_string; throws InvalidParameter("system", ...) for unknown names.
System system_from_string(std::string_view name);

/// A closed-form bound state. The wavefunction is unnormalized.
struct BoundState {
  int n;
  double energy;
  std::function<double(double)> wavefunction;
  System system;
};

// ---- Morse and its isospectral extension -----------------------------------

/// E_n = -(A - n)^2. LevelError unless 0 <= n < A.
double morse_energy(int n, const MorseParams& p);

/// (2B e^{-x})^{A-n} exp(-B e^{-x}) L_n^{(2A-2n)}(2B e^{-x}), evaluated in log space.
double morse_wavefunction(int n, double x, const MorseParams& p);

/// Romanovski parameters (a, b) of the level-n extended-Morse polynomial:
/// a = -(2P - B) e^{-q} = -2B', b = 1/2 - A. The same pair for every n.
struct RomanovskiParams {
  double a;
  double b;
};
RomanovskiParams scarf_romanovski_params(const ScarfParams& p);

/// (cosh z)^{-A} exp(-B' atan(sinh z)) R_n^{(-2B', 1/2-A)}(sinh z). Equals 1 at z = 0 for n = 0.
double scarf2_wavefunction(int n, double z, const ScarfParams& p);

/// Extended-Morse level n: scarf2_wavefunction at z = x - q.
/// LevelError unless 0 <= n < A; DomainError for Q = 0.
double morse_ext_wavefunction(int n, double x, const SuperpotentialSpec& spec);

/// The prefactor as printed, |sinh(x-q)|^A in place of (cosh(x-q))^{-A}
/// (real only for x > q). Kept to demonstrate that it does not solve the
/// Schroedinger equation.
double morse_ext_wavefunction_sinh_prefactor(int n, double x, const SuperpotentialSpec& spec);

// ---- Radial oscillator --------------------------------------------------------

double radial_osc_energy(int n, double omega, double l);
/// r^{l+1} exp(-w r^2/4) L_n^{(l+1/2)}(w r^2/2).
double radial_osc_wavefunction(int n, double r, double omega, double l);

/// The single known level of the extended oscillator: w(2n + l + 3/2).
double radial_ext_energy(const RadialExtParams& p);
/// r^{1/2} psi_ext(-2 ln r) with A = n + l/2 + 1/4, B = w/4. DomainError for r <= 0 or Q = 0.
double radial_ext_wavefunction(double r, const RadialExtParams& p);

/// Which Romanovski second parameter the printed closed forms use.
enum class PrintedRomanovski {
  as_printed,  // -n-l+1/4 (oscillator) and -n-P (Coulomb)
  derived,     // 1/2 - A under the respective parameter map
};

/// The printed closed form r^{2n+l+1}(e^{-q} + e^q r^4)^{-(2n+l+1/2)/2} exp[...] R_n(...).
double radial_ext_wavefunction_printed(double r, const RadialExtParams& p,
                                       PrintedRomanovski reading = PrintedRomanovski::derived);

// ---- Coulomb -------------------------------------------------------------------

double coulomb_energy(int n, double Z, double l);
/// r^{l+1} exp(-Zr/(n+l+1)) L_n^{(2l+1)}(2Zr/(n+l+1)).
double coulomb_wavefunction(int n, double r, double Z, double l);

double coulomb_ext_energy(const CoulombExtParams& p);
/// r^{1/2} psi_ext(-ln r) with A = n + l + 1/2, B = Z/(n+l+1).
double coulomb_ext_wavefunction(double r, const CoulombExtParams& p);

/// Same pullback with the printed factor r^{-1/2}; not an eigenfunction.
double coulomb_ext_wavefunction_inverse_root(double r, const CoulombExtParams& p);

double coulomb_ext_wavefunction_printed(double r, const CoulombExtParams& p,
                                        PrintedRomanovski reading = PrintedRomanovski::derived);

// ---- Bound-state records -------------------------------------------------------

BoundState morse_state(int n, const MorseParams& p);
BoundState morse_ext_state(int n, const SuperpotentialSpec& spec);
BoundState scarf2_state(int n, const ScarfParams& p);
BoundState radial_state(int n, double omega, double l);
BoundState radial_ext_state(const RadialExtParams& p);
BoundState coulomb_state(int n, double Z, double l);
BoundState coulomb_ext_state(const CoulombExtParams& p);

// ---- Sampled helpers -----------------------------------------------------------

/// Scale to unit L2 norm under Simpson quadrature. The first sample above
/// 1e-9 max|psi| is made positive. DegenerateError if the norm underflows.
SampledFunction normalize(const SampledFunction& psi);

/// Strict sign changes among samples with |value| > 1e-9 max|psi|.
int count_nodes(const SampledFunction& psi);

/// Level n of the extended Morse problem built by the SUSY ladder:
/// A^dagger(A) ... A^dagger(A-n+1) applied to the ground state at A - n.
/// Unnormalized. LevelError unless 0 <= n < A.
SampledFunction ladder_state(int n, const SuperpotentialSpec& spec, const GridSpec& grid);

/// ladder_state on grid and on its 2x refinement, combined as (16 psi_{h/2} - psi_h)/15.
SampledFunction ladder_state_extrapolated(int n, const SuperpotentialSpec& spec, const GridSpec& grid);

}  // namespace susyext
