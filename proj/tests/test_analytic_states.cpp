#include <cmath>
#include <numbers>

#include "doctest.h"
#include "susyext/analytic_states.hpp"
#include "susyext/numerics.hpp"
#include "susyext/pct.hpp"
#include "susyext/potentials.hpp"

using namespace susyext;

namespace {

SuperpotentialSpec default_spec() { return {MorseParams(3.5, 1.0), ExtensionParams(0.4, 2.0)}; }

template <class Psi, class Pot>
double residual_on(const GridSpec& g, Psi&& psi, Pot&& pot, double E) {
  return schrodinger_residual(SampledFunction::sample(g, psi), SampledFunction::sample(g, pot), E);
}

template <class F>
double log_slope(F&& f, double r1, double r2) {
  return (std::log(std::abs(f(r2))) - std::log(std::abs(f(r1)))) / (std::log(r2) - std::log(r1));
}

}  // namespace

TEST_CASE("system names round trip") {
  for (auto s : {System::morse, System::morse_ext, System::scarf2, System::radial, System::radial_ext, System::coulomb,
                 System::coulomb_ext})
    CHECK(system_from_string(to_string(s)) == s);
  CHECK(to_string(System::morse_ext) == "morse-ext");
  CHECK_THROWS_AS(system_from_string("hydrogen"), InvalidParameter);
}

TEST_CASE("morse energies") {
  const MorseParams p(3.5, 1.0);
  CHECK(morse_energy(0, p) == -12.25);
  CHECK(morse_energy(3, p) == -0.25);
  CHECK_THROWS_AS(morse_energy(4, p), LevelError);
  CHECK_THROWS_AS(morse_energy(-1, p), LevelError);
  for (int n = 0; n < 3; ++n) {
    CHECK(morse_energy(n, p) < morse_energy(n + 1, p));
    CHECK(morse_energy(n + 1, p) < 0.0);
  }
}

TEST_CASE("morse wavefunctions") {
  const MorseParams p(3.5, 1.0);
  const GridSpec g(-6.0, 14.0, 4001);
  const auto psi0 = SampledFunction::sample(g, [&](double x) { return morse_wavefunction(0, x, p); });
  CHECK(count_nodes(psi0) == 0);
  const auto psi1 = SampledFunction::sample(g, [&](double x) { return morse_wavefunction(1, x, p); });
  CHECK(count_nodes(psi1) == 1);
  CHECK(std::abs(morse_wavefunction(1, std::log(1.0 / 3.0), p)) < 1e-12);
  CHECK_THROWS_AS(morse_wavefunction(4, 0.0, p), LevelError);
  CHECK(residual_on(
            g, [&](double x) { return morse_wavefunction(0, x, p); }, [&](double x) { return v_morse(x, p); }, -12.25) <=
        1e-8);
  const GridSpec fine(-6.0, 14.0, 8001);
  for (int n = 1; n < 4; ++n) {
    const double res = residual_on(
        fine, [&](double x) { return morse_wavefunction(n, x, p); }, [&](double x) { return v_morse(x, p); },
        morse_energy(n, p));
    CHECK(res <= 1e-8);
  }
}

TEST_CASE("extended Morse wavefunctions") {
  const auto s = default_spec();
  const double q = q_of(2.0);
  CHECK(morse_ext_wavefunction(0, q, s) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(morse_ext_wavefunction(4, 0.0, s), LevelError);
  CHECK_THROWS_AS(morse_ext_wavefunction(0, 0.0, {s.morse, ExtensionParams(0.4, 0.0)}), DomainError);

  const GridSpec g(q - 16.0, q + 32.0, 9601);
  for (int n = 0; n < 4; ++n) {
    const auto psi = SampledFunction::sample(g, [&](double x) { return morse_ext_wavefunction(n, x, s); });
    CHECK(count_nodes(psi) == n);
    const double res = residual_on(
        g, [&](double x) { return morse_ext_wavefunction(n, x, s); }, [&](double x) { return v_morse_ext(x, s); },
        morse_energy(n, s.morse));
    CHECK(res <= 1e-6);
  }
}

TEST_CASE("node theorem for every system up to n = 4") {
  const SuperpotentialSpec s{MorseParams(5.5, 1.0), ExtensionParams(-0.7, 3.0)};
  const double q = q_of(3.0);
  const GridSpec line(q - 25.0, q + 40.0, 13001);
  const GridSpec half(1e-3, 25.0, 10001);
  for (int n = 0; n <= 4; ++n) {
    CHECK(count_nodes(SampledFunction::sample(line, [&](double x) { return morse_wavefunction(n, x, s.morse); })) == n);
    CHECK(count_nodes(SampledFunction::sample(line, [&](double x) { return morse_ext_wavefunction(n, x, s); })) == n);
    CHECK(count_nodes(SampledFunction::sample(line, [&](double z) { return scarf2_wavefunction(n, z, ScarfParams(5.5, 0.8)); })) == n);
    CHECK(count_nodes(SampledFunction::sample(half, [&](double r) { return radial_osc_wavefunction(n, r, 2.0, 1.0); })) == n);
    CHECK(count_nodes(SampledFunction::sample(half, [&](double r) { return coulomb_wavefunction(n, r, 4.0, 2.0); })) == n);
    const RadialExtParams rp(2.0, 1.0, n, 0.3, 1.5);
    CHECK(count_nodes(SampledFunction::sample(half, [&](double r) { return radial_ext_wavefunction(r, rp); })) == n);
    const CoulombExtParams cp(4.0, 2.0, n, 0.3, 1.5);
    const GridSpec wide(1e-3, 60.0, 20001);
    CHECK(count_nodes(SampledFunction::sample(wide, [&](double r) { return coulomb_ext_wavefunction(r, cp); })) == n);
  }
}

TEST_CASE("radial oscillator") {
  CHECK(radial_osc_energy(0, 2.0, 0.0) == 3.0);
  CHECK(radial_osc_energy(2, 2.0, 1.0) == 13.0);
  const GridSpec g(0.01, 8.0, 3201);
  for (int n = 0; n < 3; ++n) {
    const double res = residual_on(
        g, [&](double r) { return radial_osc_wavefunction(n, r, 2.0, 1.0); },
        [&](double r) { return v_radial(r, 2.0, 1.0); }, radial_osc_energy(n, 2.0, 1.0));
    CHECK(res <= 1e-8);
  }
}

TEST_CASE("extended radial oscillator") {
  const RadialExtParams p(2.0, 1.0, 2, 0.3, 1.5);
  CHECK(radial_ext_energy(p) == 13.0);
  // Regular at the centrifugal barrier: psi ~ r^{l+1}. The printed prefactor r^{2n+l+1} is
  // cancelled by the degree-n polynomial in an argument that grows like r^{-2}.
  CHECK(std::abs(log_slope([&](double r) { return radial_ext_wavefunction(r, p); }, 1e-4, 2e-4) - (1.0 + 1.0)) <= 1e-3);

  const GridSpec g(0.005, 60.0, 12000);
  const double res = residual_on(
      g, [&](double r) { return radial_ext_wavefunction(r, p); }, [&](double r) { return v_radial_ext(r, p); }, 13.0);
  CHECK(res <= 1e-6);

  double lo = INFINITY, hi = -INFINITY;
  for (int i = 0; i <= 270; ++i) {
    const double r = 0.3 + 0.01 * i;
    const double ratio = radial_ext_wavefunction_printed(r, p) / radial_ext_wavefunction(r, p);
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
  }
  CHECK((hi - lo) <= 1e-8 * std::abs(hi));

  lo = INFINITY, hi = -INFINITY;
  for (int i = 0; i <= 270; ++i) {
    const double r = 0.3 + 0.01 * i;
    const double ratio = radial_ext_wavefunction_printed(r, p, PrintedRomanovski::as_printed) / radial_ext_wavefunction(r, p);
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
  }
  CHECK((hi - lo) > 1e-2 * std::abs(hi));
  CHECK_THROWS_AS(radial_ext_wavefunction(0.0, p), DomainError);
  CHECK_THROWS_AS(radial_ext_wavefunction(1.0, RadialExtParams(2.0, 1.0, 2, 0.3, 0.0)), DomainError);
}

TEST_CASE("coulomb") {
  CHECK(coulomb_energy(0, 1.0, 0.0) == -1.0);
  CHECK(coulomb_energy(1, 4.0, 2.0) == -1.0);
  const GridSpec g(0.01, 30.0, 6001);
  for (int n = 0; n < 3; ++n) {
    const double res = residual_on(
        g, [&](double r) { return coulomb_wavefunction(n, r, 4.0, 2.0); },
        [&](double r) { return v_coulomb(r, 4.0, 2.0); }, coulomb_energy(n, 4.0, 2.0));
    CHECK(res <= 1e-8);
  }
}

TEST_CASE("extended Coulomb") {
  const CoulombExtParams p(4.0, 2.0, 1, 0.3, 1.5);
  CHECK(coulomb_ext_energy(p) == -1.0);
  CHECK(std::abs(log_slope([&](double r) { return coulomb_ext_wavefunction(r, p); }, 1e-4, 2e-4) - (2.0 + 1.0)) <= 1e-3);

  const GridSpec g(0.005, 60.0, 12000);
  const double res = residual_on(
      g, [&](double r) { return coulomb_ext_wavefunction(r, p); }, [&](double r) { return v_coulomb_ext(r, p); }, -1.0);
  CHECK(res <= 1e-6);
  const double wrong = residual_on(
      g, [&](double r) { return coulomb_ext_wavefunction_inverse_root(r, p); },
      [&](double r) { return v_coulomb_ext(r, p); }, -1.0);
  CHECK(wrong > 1e-2);

  double lo = INFINITY, hi = -INFINITY;
  for (int i = 0; i <= 270; ++i) {
    const double r = 0.3 + 0.01 * i;
    const double ratio = coulomb_ext_wavefunction_printed(r, p) / coulomb_ext_wavefunction(r, p);
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
  }
  CHECK((hi - lo) <= 1e-8 * std::abs(hi));
  CHECK_THROWS_AS(coulomb_ext_wavefunction(1.0, CoulombExtParams(4.0, 2.0, 1, 0.3, 0.0)), DomainError);
}

TEST_CASE("sinh prefactor is not an eigenfunction") {
  const auto s = default_spec();
  const double q = q_of(2.0);
  const GridSpec g(q + 0.5, q + 3.0, 2501);
  for (int n = 0; n < 4; ++n) {
    const double res = residual_on(
        g, [&](double x) { return morse_ext_wavefunction_sinh_prefactor(n, x, s); },
        [&](double x) { return v_morse_ext(x, s); }, morse_energy(n, s.morse));
    CHECK(res > 1e-2);
  }
}

TEST_CASE("normalize and count_nodes") {
  const GridSpec g(0.0, std::numbers::pi, 1001);
  const auto f = SampledFunction::sample(g, [](double x) { return std::sin(x) * std::exp(-x); });
  const auto n1 = normalize(f);
  const auto sq = SampledFunction::sample(g, [&](double) { return 0.0; });
  std::vector<double> squares(n1.values().begin(), n1.values().end());
  for (double& v : squares) v *= v;
  CHECK(std::abs(quadrature(SampledFunction(g, squares)) - 1.0) <= 1e-12);
  CHECK_THROWS_AS(normalize(sq), DegenerateError);

  std::vector<double> scaled(f.values().begin(), f.values().end());
  for (double& v : scaled) v *= -7.0;
  const auto n2 = normalize(SampledFunction(g, scaled));
  for (std::size_t i = 0; i < g.count(); ++i) CHECK(n2[i] == doctest::Approx(n1[i]).epsilon(1e-13).scale(1.0));

  const GridSpec wide(0.0, 3.5 * std::numbers::pi, 701);
  CHECK(count_nodes(SampledFunction::sample(wide, [](double x) { return std::sin(x + 0.1); })) == 3);
  CHECK(count_nodes(SampledFunction::sample(wide, [](double x) { return 1e-12 * std::sin(40 * x) + (x < 5 ? 1.0 : -1.0); })) == 1);
}

TEST_CASE("state records") {
  const auto s = default_spec();
  const auto st = morse_ext_state(2, s);
  CHECK(st.n == 2);
  CHECK(st.energy == -2.25);
  CHECK(st.system == System::morse_ext);
  CHECK(st.wavefunction(0.3) == morse_ext_wavefunction(2, 0.3, s));
  CHECK(radial_ext_state(RadialExtParams(2.0, 1.0, 2, 0.3, 1.5)).energy == 13.0);
  CHECK(coulomb_ext_state(CoulombExtParams(4.0, 2.0, 1, 0.3, 1.5)).energy == -1.0);
  CHECK_THROWS_AS(morse_state(4, s.morse), LevelError);
}

TEST_CASE("ladder states match the Romanovski closed form") {
  const SuperpotentialSpec s{MorseParams(5.5, 1.0), ExtensionParams(0.4, 2.0)};
  const double q = q_of(2.0);
  const GridSpec g(q - 40.0, q + 40.0, 3201);
  for (int n = 0; n <= 4; ++n) {
    const auto ladder = ladder_state_extrapolated(n, s, g);
    const auto exact = SampledFunction::sample(g, [&](double x) { return morse_ext_wavefunction(n, x, s); });
    CHECK(overlap(ladder, exact) > 1.0 - 1e-6);
  }
  CHECK_THROWS_AS(ladder_state(6, s, g), LevelError);
}
