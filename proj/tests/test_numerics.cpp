#include <cmath>
#include <future>
#include <numbers>

#include "doctest.h"
#include "susyext/analytic_states.hpp"
#include "susyext/numerics.hpp"
#include "susyext/potentials.hpp"

using namespace susyext;

TEST_CASE("quadrature") {
  CHECK(quadrature(SampledFunction::sample(GridSpec(0.0, 2.0, 9), [](double) { return 1.0; })) == doctest::Approx(2.0).epsilon(1e-15));
  for (std::size_t count : {3u, 5u, 21u, 101u})
    CHECK(quadrature(SampledFunction::sample(GridSpec(0.0, 1.0, count), [](double x) { return x * x; })) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  // Composite Simpson on sin over [0, pi] errs by h^4/90 to leading order (1.08e-8 at 101 points).
  const double h = std::numbers::pi / 100.0;
  const double sin_integral =
      quadrature(SampledFunction::sample(GridSpec(0.0, std::numbers::pi, 101), [](double x) { return std::sin(x); }));
  CHECK(std::abs(sin_integral - 2.0 - std::pow(h, 4) / 90.0) <= 1e-11);
  CHECK(std::abs(quadrature(SampledFunction::sample(GridSpec(0.0, std::numbers::pi, 201), [](double x) { return std::sin(x); })) - 2.0) <= 1e-8);
  CHECK(quadrature(SampledFunction::sample(GridSpec(0.0, 1.0, 4), [](double x) { return x; })) == doctest::Approx(0.5));
}

TEST_CASE("first derivative is fourth order") {
  auto err = [](std::size_t count) {
    const GridSpec g(0.0, 2.0, count);
    const auto f = SampledFunction::sample(g, [](double x) { return std::sin(3 * x); });
    const auto d = first_derivative(f);
    double worst = 0.0;
    for (std::size_t i = 0; i < count; ++i) worst = std::max(worst, std::abs(d[i] - 3 * std::cos(3 * g.node(i))));
    return worst;
  };
  CHECK(err(101) / err(201) > 14.0);
}

TEST_CASE("overlap") {
  const GridSpec g(-10.0, 10.0, 2001);
  const auto a = SampledFunction::sample(g, [](double x) { return std::exp(-x * x); });
  const auto b = SampledFunction::sample(g, [](double x) { return -3.0 * std::exp(-x * x); });
  const auto c = SampledFunction::sample(g, [](double x) { return x * std::exp(-x * x); });
  CHECK(overlap(a, b) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(overlap(a, c) < 1e-14);
}

TEST_CASE("build_hamiltonian") {
  const auto V = SampledFunction::sample(GridSpec(0.0, 1.0, 5), [](double) { return 0.0; });
  const auto T = build_hamiltonian(V);
  REQUIRE(T.size() == 3);
  for (double d : T.diag) CHECK(d == 32.0);
  REQUIRE(T.offdiag.size() == 2);
  for (double e : T.offdiag) CHECK(e == -16.0);
}

TEST_CASE("eigen_lowest") {
  SUBCASE("particle in a box") {
    const auto T = build_hamiltonian(SampledFunction::sample(GridSpec(0.0, 1.0, 2001), [](double) { return 0.0; }));
    const auto E = eigen_lowest(T, 3);
    CHECK(std::abs(E[0] / (std::numbers::pi * std::numbers::pi) - 1.0) <= 1e-4);
    CHECK(E[0] < E[1]);
    CHECK(E[1] < E[2]);
  }
  SUBCASE("harmonic oscillator") {
    const auto V = SampledFunction::sample(GridSpec(-8.0, 8.0, 2001), [](double x) { return x * x; });
    const auto T = build_hamiltonian(V);
    const auto E = eigen_lowest(T, 4);
    CHECK(std::abs(E[0] - 1.0) <= 1e-5);
    for (double level : {0.5, 2.0, 4.0, 6.5}) {
      std::size_t below = 0;
      for (double e : E) below += e < level;
      CHECK(sturm_count(T, level) == below);
    }
    const auto shifted = build_hamiltonian(SampledFunction::sample(GridSpec(-8.0, 8.0, 2001), [](double x) { return x * x + 2.5; }));
    const auto S = eigen_lowest(shifted, 4);
    for (int i = 0; i < 4; ++i) CHECK(std::abs(S[i] - E[i] - 2.5) <= 1e-10);
  }
}

TEST_CASE("eigenvectors") {
  const GridSpec g(-8.0, 8.0, 1601);
  const auto T = build_hamiltonian(SampledFunction::sample(g, [](double x) { return x * x; }));
  const auto pairs = eigen_lowest_with_vectors(T, 3);
  REQUIRE(pairs.vectors.size() == 3);
  for (std::size_t k = 0; k < 3; ++k) {
    const auto& v = pairs.vectors[k];
    double norm = 0.0, res = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      norm += v[i] * v[i];
      double tv = T.diag[i] * v[i];
      if (i > 0) tv += T.offdiag[i - 1] * v[i - 1];
      if (i + 1 < v.size()) tv += T.offdiag[i] * v[i + 1];
      res += (tv - pairs.values[k] * v[i]) * (tv - pairs.values[k] * v[i]);
    }
    CHECK(norm == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::sqrt(res) <= 1e-8 * (T.diag[0] + 2 * std::abs(T.offdiag[0])));
    for (std::size_t j = 0; j < k; ++j) {
      double dot = 0.0;
      for (std::size_t i = 0; i < v.size(); ++i) dot += v[i] * pairs.vectors[j][i];
      CHECK(std::abs(dot) < 1e-10);
    }
  }
}

TEST_CASE("second-order convergence of the raw scheme") {
  auto e0 = [](std::size_t count) {
    const auto V = SampledFunction::sample(GridSpec(-8.0, 8.0, count), [](double x) { return x * x; });
    return eigen_lowest(build_hamiltonian(V), 1)[0];
  };
  const double coarse = std::abs(e0(401) - 1.0);
  const double fine = std::abs(e0(801) - 1.0);
  CHECK(coarse / fine >= 3.8);
}

TEST_CASE("solve_bound_states") {
  SUBCASE("extended Morse spectrum") {
    const SuperpotentialSpec s{MorseParams(3.5, 1.0), ExtensionParams(0.4, 2.0)};
    const double q = q_of(2.0);
    SolveOptions opt;
    opt.anchor = q;
    const auto res = solve_bound_states([&](double x) { return v_morse_ext(x, s); }, suggest_line_domain(q, 3.5, 0.02), 4,
                                        1e-7, opt);
    REQUIRE(res.energies.size() == 4);
    const double expected[] = {-12.25, -6.25, -2.25, -0.25};
    for (int n = 0; n < 4; ++n) CHECK(std::abs(res.energies[n] - expected[n]) <= 1e-6);
    CHECK(res.extrapolated);
    for (double r : res.residuals) CHECK(r >= 0.0);
  }
  SUBCASE("plain radial oscillator") {
    SolveOptions opt;
    opt.box = BoxKind::half_line;
    const auto res = solve_bound_states([](double r) { return v_radial(r, 2.0, 1.0); }, suggest_radial_domain(8.0, 0.01),
                                        3, 1e-7, opt);
    const double expected[] = {5.0, 9.0, 13.0};
    for (int n = 0; n < 3; ++n) CHECK(std::abs(res.energies[n] - expected[n]) <= 1e-6);
  }
  SUBCASE("eigenvectors are unit normalized and ordered") {
    SolveOptions opt;
    opt.want_vectors = true;
    const auto res = solve_bound_states([](double x) { return x * x; }, GridSpec(-6.0, 6.0, 601), 3, 1e-7, opt);
    REQUIRE(res.eigenvectors.has_value());
    for (std::size_t n = 0; n < 3; ++n) {
      const auto& v = (*res.eigenvectors)[n];
      std::vector<double> sq(v.values().begin(), v.values().end());
      for (double& x : sq) x *= x;
      CHECK(quadrature(SampledFunction(v.grid(), sq)) == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(count_nodes(v) == static_cast<int>(n));
      if (n > 0) CHECK(res.energies[n] > res.energies[n - 1]);
    }
  }
  SUBCASE("radial solves never touch r = 0") {
    SolveOptions opt;
    opt.box = BoxKind::half_line;
    auto V = [](double r) {
      if (r <= 0.0) throw DomainError("sampled r = 0");
      return v_coulomb(r, 1.0, 0.0);
    };
    CHECK_NOTHROW(solve_bound_states(V, suggest_radial_domain(40.0, 0.02), 1, 1e-6, opt));
  }
  SUBCASE("unreachable tolerance raises") {
    SolveOptions opt;
    opt.max_intervals = 4096;
    CHECK_THROWS_AS(solve_bound_states([](double x) { return x * x; }, GridSpec(-6.0, 6.0, 101), 1, 1e-15, opt),
                    ConvergenceError);
  }
  SUBCASE("concurrent solves agree") {
    auto job = [] { return solve_bound_states([](double x) { return x * x; }, GridSpec(-6.0, 6.0, 401), 2, 1e-8).energies; };
    auto a = std::async(std::launch::async, job);
    auto b = std::async(std::launch::async, job);
    CHECK(a.get() == b.get());
  }
}

TEST_CASE("schrodinger_residual") {
  const MorseParams p(3.5, 1.0);
  auto residual = [&](std::size_t count, double E) {
    const GridSpec g(-6.0, 14.0, count);
    return schrodinger_residual(SampledFunction::sample(g, [&](double x) { return morse_wavefunction(0, x, p); }),
                                SampledFunction::sample(g, [&](double x) { return v_morse(x, p); }), E);
  };
  CHECK(residual(4001, -12.25) <= 1e-8);
  CHECK(residual(4001, -12.0) > 1e-2);
  CHECK(residual(401, -12.25) / residual(801, -12.25) >= 12.0);
  const GridSpec g(0.0, 1.0, 11);
  CHECK_THROWS_AS(schrodinger_residual(SampledFunction::sample(g, [](double) { return 0.0; }),
                                       SampledFunction::sample(g, [](double) { return 0.0; }), 0.0),
                  DegenerateError);
}

TEST_CASE("domain suggestions") {
  const auto line = suggest_line_domain(0.5, 3.5, 0.01);
  CHECK(line.x_min() == doctest::Approx(-7.5));
  CHECK(line.x_max() == doctest::Approx(0.5 + 8.0 / 0.5));
  CHECK(line.spacing() <= 0.01 + 1e-12);
  const auto half = suggest_radial_domain(10.0, 0.05);
  CHECK(half.x_min() == 0.0);
  CHECK(half.x_max() == doctest::Approx(10.0));
}
