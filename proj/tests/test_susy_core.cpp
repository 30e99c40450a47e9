#include <cmath>
#include <limits>
#include <random>

#include "doctest.h"
#include "susyext/analytic_states.hpp"
#include "susyext/numerics.hpp"
#include "susyext/potentials.hpp"
#include "susyext/susy_core.hpp"

using namespace susyext;

namespace {

SuperpotentialSpec spec(double A, double B, double P, double Q) { return {MorseParams(A, B), ExtensionParams(P, Q)}; }

struct RandomSpec {
  std::mt19937_64 rng;
  explicit RandomSpec(unsigned seed) : rng(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
  SuperpotentialSpec next() { return spec(uniform(0.5, 6.0), uniform(0.1, 5.0), uniform(-3.0, 3.0), uniform(0.0, 10.0)); }
};

}  // namespace

TEST_CASE("x1 examples") {
  CHECK(x1(-3.0, 0.0) == 1.0);
  CHECK(x1(17.0, 0.0) == 1.0);
  CHECK(x1(0.0, 1.0) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(x1(0.0, 3.0) == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK_THROWS_AS(x1(0.0, -1.0), DomainError);
  CHECK(x1(800.0, 2.0) == 1.0);
  CHECK(x1(-800.0, 2.0) == -1.0);
}

TEST_CASE("x2 examples") {
  for (double x : {-4.0, 0.0, 2.5})
    for (double Q : {0.0, 1.0, 7.0}) CHECK(x2(x, 1.0, 0.5, Q) == 0.0);
  CHECK(x2(0.0, 1.0, 1.0, 1.0) == doctest::Approx(0.5));
  CHECK(x2(0.0, 1.0, 1.0, 0.0) == doctest::Approx(1.0));
  CHECK_THROWS_AS(x2(0.0, 1.0, 1.0, -1.0), DomainError);
  CHECK(std::isfinite(x2(800.0, 1.0, 2.0, 0.0)));
}

TEST_CASE("superpotential examples") {
  CHECK(superpotential(0.0, spec(2, 1, 0, 0)) == doctest::Approx(1.0));
  CHECK(superpotential(0.0, spec(1, 1, 1, 1)) == doctest::Approx(0.5));
  CHECK(superpotential(60.0, spec(3.5, 1, 0.4, 2)) == doctest::Approx(3.5).epsilon(1e-12));
  CHECK(superpotential(60.0, spec(3.5, 1, 0.4, 0)) == doctest::Approx(3.5).epsilon(1e-12));
}

TEST_CASE("phi examples") {
  CHECK(phi(1.3, spec(2, 1, 0, 0)) == 0.0);
  CHECK(phi(0.0, spec(2, 1, 0.3, 0)) == doctest::Approx(0.6));
  CHECK(phi(0.0, spec(1, 1, 1, 1)) == doctest::Approx(0.5));
}

TEST_CASE("W decompositions agree") {
  RandomSpec r(11);
  for (int i = 0; i < 500; ++i) {
    const auto s = r.next();
    const double x = r.uniform(-5.0, 10.0);
    const double a = s.morse.A() * x1(x, s.ext.Q()) + x2(x, s.morse.B(), s.ext.P(), s.ext.Q());
    const double b = w0(x, s.morse) + phi(x, s);
    CHECK(std::abs(a - b) <= 1e-13 * (1.0 + std::abs(a) + s.morse.B() * std::exp(-x)));
    CHECK(superpotential(x, s) == doctest::Approx(a).epsilon(1e-13));
  }
}

TEST_CASE("riccati residual") {
  CHECK(riccati_residual(0.0, 0.0) == 0.0);
  CHECK(std::abs(riccati_residual(1.0, 2.0)) <= 1e-12);
  CHECK(std::abs(riccati_residual(-5.0, 0.1)) <= 1e-12);
  RandomSpec r(12);
  for (int i = 0; i < 2000; ++i) {
    const double Q = r.uniform(0.0, 10.0);
    const double q = Q > 0 ? 0.5 * std::log(Q) : 0.0;
    CHECK(std::abs(riccati_residual(q + r.uniform(-20.0, 20.0), Q)) <= 1e-12);
  }
}

TEST_CASE("linear residual") {
  CHECK(linear_residual(0.3, 1.0, 0.5, 2.0) == 0.0);
  CHECK(std::abs(linear_residual(0.0, 1.0, 1.0, 1.0)) <= 1e-12);
  CHECK(std::abs(linear_residual(3.0, 2.0, -1.0, 5.0)) <= 1e-12);
  RandomSpec r(13);
  for (int i = 0; i < 2000; ++i) {
    const auto s = r.next();
    const double Q = s.ext.Q();
    const double q = Q > 0 ? 0.5 * std::log(Q) : 0.0;
    const double x = q + r.uniform(-20.0, 20.0);
    const double scale = 1.0 + std::abs(x2(x, s.morse.B(), s.ext.P(), Q));
    CHECK(std::abs(linear_residual(x, s.morse.B(), s.ext.P(), Q)) <= 1e-12 * scale);
  }
}

TEST_CASE("shape invariance") {
  CHECK(std::abs(shape_invariance_residual(0.7, spec(3.5, 1, 0, 0))) <= 1e-12);
  CHECK(std::abs(shape_invariance_residual(0.0, spec(3.5, 1, 0.4, 2))) <= 1e-10);
  CHECK(std::abs(shape_invariance_residual(5.0, spec(1.2, 0.7, -0.3, 0.5))) <= 1e-10);
  RandomSpec r(14);
  for (int i = 0; i < 2000; ++i) {
    const auto s = r.next();
    const double Q = s.ext.Q();
    const double q = Q > 0 ? 0.5 * std::log(Q) : 0.0;
    CHECK(std::abs(shape_invariance_residual(q + r.uniform(-15.0, 15.0), s)) <= 1e-10);
  }
}

TEST_CASE("partner potential") {
  const auto plain = spec(3.5, 1.3, 0, 0);
  for (double x : {-2.0, 0.0, 1.5, 6.0}) {
    const double u = std::exp(-x);
    CHECK(partner_potential(x, plain, Branch::plus) ==
          doctest::Approx(1.69 * u * u - 1.3 * 8.0 * u).epsilon(1e-13));
  }

  const auto s = spec(2, 1, 0.5, 1);
  CHECK(partner_potential(q_of(1.0), s, Branch::plus) == doctest::Approx(-6.0).epsilon(1e-14));

  RandomSpec r(15);
  for (int i = 0; i < 10; ++i) {
    const auto t = spec(r.uniform(1.5, 6.0), r.uniform(0.1, 5.0), r.uniform(-3.0, 3.0), r.uniform(0.0, 10.0));
    const double x = r.uniform(-3.0, 8.0);
    const double A = t.morse.A();
    const double minus = partner_potential(x, t, Branch::minus);
    // Plus branch at A-1 carrying the factorization energy -A^2 of the original problem.
    const double plus_lower = partner_potential(x, t.with_A(A - 1.0), Branch::plus) + (A - 1.0) * (A - 1.0) - A * A;
    CHECK(std::abs(minus - plus_lower - (2.0 * A - 1.0)) <= 1e-9 * (1.0 + std::abs(minus)));
    const double v = v_morse_ext(x, t);
    CHECK(std::abs(partner_potential(x, t, Branch::plus) - v) <= 1e-10 * (1.0 + std::abs(v)));
  }
}

TEST_CASE("partner potential reaches v_morse as P, Q vanish") {
  const MorseParams m(3.5, 1.0);
  double previous = std::numeric_limits<double>::infinity();
  for (double eps : {1e-3, 1e-6}) {
    const SuperpotentialSpec s{m, ExtensionParams(eps, eps)};
    double worst = 0.0;
    for (int i = 0; i <= 1500; ++i) {
      const double x = -5.0 + 0.01 * i;
      worst = std::max(worst, std::abs(partner_potential(x, s, Branch::plus) - v_morse(x, m)));
    }
    CHECK(worst < previous);
    previous = worst;
  }
}

TEST_CASE("ladder operators") {
  const auto s = spec(3.5, 1, 0.4, 2);
  const double q = q_of(2.0);
  const GridSpec grid(q - 30.0, q + 40.0, 7001);

  SUBCASE("lowering the ground state gives zero") {
    const auto psi0 = SampledFunction::sample(grid, [&](double x) { return morse_ext_wavefunction(0, x, s); });
    const auto out = ladder_lower(psi0, 3.5, s);
    CHECK(out.max_abs() <= 1e-6 * psi0.max_abs());
  }

  SUBCASE("raising the shifted ground state gives level 1") {
    const auto shifted = s.with_A(2.5);
    const auto g = SampledFunction::sample(grid, [&](double x) { return morse_ext_wavefunction(0, x, shifted); });
    const auto raised = ladder_raise(g, 3.5, s);
    const auto exact = SampledFunction::sample(grid, [&](double x) { return morse_ext_wavefunction(1, x, s); });
    CHECK(overlap(raised, exact) > 1.0 - 1e-6);
  }

  SUBCASE("refinement ratio is fourth order") {
    auto discrepancy = [&](std::size_t count) {
      const GridSpec gr(q - 30.0, q + 40.0, count);
      const auto shifted = s.with_A(2.5);
      const auto g = SampledFunction::sample(gr, [&](double x) { return morse_ext_wavefunction(0, x, shifted); });
      const auto raised = ladder_raise(g, 3.5, s);
      // A^dagger(A) psi_0(A-1) = c psi_1(A); fix c at the peak of psi_1.
      const auto exact = SampledFunction::sample(gr, [&](double x) { return morse_ext_wavefunction(1, x, s); });
      std::size_t peak = 0;
      for (std::size_t i = 0; i < exact.size(); ++i)
        if (std::abs(exact[i]) > std::abs(exact[peak])) peak = i;
      double c = 0.0, norm = 0.0;
      for (std::size_t i = 0; i < exact.size(); ++i) {
        c += raised[i] * exact[i];
        norm += exact[i] * exact[i];
      }
      c /= norm;
      double worst = 0.0;
      for (std::size_t i = 0; i < exact.size(); ++i) worst = std::max(worst, std::abs(raised[i] - c * exact[i]));
      return worst / std::abs(c * exact[peak]);
    };
    // The ratio tends to 16 from below (15.92, 15.97, 15.99 on successive halvings).
    const double coarse = discrepancy(5601);
    const double fine = discrepancy(11201);
    CHECK(coarse / fine >= 16.0 * (1.0 - 1e-3));
  }

  SUBCASE("undecayed input is rejected") {
    const GridSpec short_grid(q - 2.0, q + 2.0, 401);
    const auto g = SampledFunction::sample(short_grid, [&](double x) { return morse_ext_wavefunction(0, x, s); });
    CHECK_THROWS_AS(ladder_raise(g, 3.5, s), BoundaryError);
    CHECK_THROWS_AS(ladder_lower(g, 3.5, s), BoundaryError);
  }
}
