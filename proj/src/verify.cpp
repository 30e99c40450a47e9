#include "susyext/verify.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <functional>
#include <future>
#include <limits>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <thread>
#include <tuple>

#include "susyext/analytic_states.hpp"
#include "susyext/numerics.hpp"
#include "susyext/pct.hpp"
#include "susyext/polynomials.hpp"
#include "susyext/potentials.hpp"
#include "susyext/susy_core.hpp"

namespace susyext {

namespace {

using Params = std::vector<std::pair<std::string, double>>;

struct Outcome {
  double value;
  Params params;
};

struct CheckDef {
  std::string_view name;
  Suite suite;
  double tolerance;
  Comparison comparison;
  Outcome (*run)(const VerifyConfig&, std::mt19937_64&);
};

constexpr int kIdentitySamples = 10000;
constexpr int kPctTuples = 100;

SuperpotentialSpec morse_spec(const MorseTuple& m) { return {MorseParams(m.A, m.B), ExtensionParams(m.P, m.Q)}; }

RadialExtParams radial_params(const RadialTuple& t) { return {t.omega, t.l, t.n, t.P, t.Q}; }

CoulombExtParams coulomb_params(const CoulombTuple& t) { return {t.Z, t.l, t.n, t.P, t.Q}; }

Params morse_fields(const MorseTuple& m) { return {{"A", m.A}, {"B", m.B}, {"P", m.P}, {"Q", m.Q}}; }

Params radial_fields(const RadialTuple& t) {
  return {{"omega", t.omega}, {"l", t.l}, {"n", t.n}, {"P", t.P}, {"Q", t.Q}};
}

Params coulomb_fields(const CoulombTuple& t) { return {{"Z", t.Z}, {"l", t.l}, {"n", t.n}, {"P", t.P}, {"Q", t.Q}}; }

double uniform(std::mt19937_64& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

// Random extended-Morse tuple from A in (0.5, 6), B in (0.1, 5), P in (-3, 3), Q in (0, 10].
SuperpotentialSpec random_spec(std::mt19937_64& rng) {
  const double A = uniform(rng, 0.5, 6.0);
  const double B = uniform(rng, 0.1, 5.0);
  const double P = uniform(rng, -3.0, 3.0);
  const double Q = uniform(rng, 1e-3, 10.0);
  return {MorseParams(A, B), ExtensionParams(P, Q)};
}

double ulp_distance(double a, double b) {
  if (a == b) return 0.0;
  if (std::signbit(a) != std::signbit(b)) return std::numeric_limits<double>::infinity();
  const auto ia = std::bit_cast<std::int64_t>(a);
  const auto ib = std::bit_cast<std::int64_t>(b);
  return static_cast<double>(ia > ib ? ia - ib : ib - ia);
}

// max |r_i / median - 1|
double ratio_spread(std::vector<double> ratios) {
  if (ratios.empty()) throw DegenerateError("no samples for ratio test");
  auto sorted = ratios;
  std::nth_element(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(sorted.size() / 2), sorted.end());
  const double median = sorted[sorted.size() / 2];
  double worst = 0.0;
  for (double r : ratios) worst = std::max(worst, std::abs(r / median - 1.0));
  return worst;
}

double relative_gap(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(a)); }

GridSpec grid_with_spacing(double lo, double hi, double h) {
  return GridSpec(lo, hi, static_cast<std::size_t>(std::llround((hi - lo) / h)) + 1);
}

SolveOptions solve_options(const VerifyConfig& config) {
  SolveOptions o;
  o.parallel = config.threads != 1;
  return o;
}

// ---- identities ----------------------------------------------------------------

Outcome check_riccati(const VerifyConfig& config, std::mt19937_64& rng) {
  double worst = 0.0;
  for (int i = 0; i < kIdentitySamples; ++i) {
    const double Q = uniform(rng, 0.0, 10.0);
    const double x = uniform(rng, -20.0, 20.0);
    worst = std::max(worst, std::abs(riccati_residual(x, Q)));
  }
  return {worst, {{"samples", kIdentitySamples}, {"seed", static_cast<double>(config.seed)}}};
}

Outcome check_linear(const VerifyConfig& config, std::mt19937_64& rng) {
  double worst = 0.0;
  for (int i = 0; i < kIdentitySamples; ++i) {
    const auto spec = random_spec(rng);
    const double x = uniform(rng, -20.0, 20.0);
    worst = std::max(worst, std::abs(linear_residual(x, spec.morse.B(), spec.ext.P(), spec.ext.Q())));
  }
  return {worst, {{"samples", kIdentitySamples}, {"seed", static_cast<double>(config.seed)}}};
}

Outcome check_shape_invariance(const VerifyConfig& config, std::mt19937_64& rng) {
  double worst = 0.0;
  for (int i = 0; i < kIdentitySamples; ++i) {
    const auto spec = random_spec(rng);
    const double x = uniform(rng, -20.0, 20.0);
    worst = std::max(worst, std::abs(shape_invariance_residual(x, spec)));
  }
  return {worst, {{"samples", kIdentitySamples}, {"seed", static_cast<double>(config.seed)}}};
}

Outcome check_scarf_equivalence(const VerifyConfig& config, std::mt19937_64& rng) {
  double worst = 0.0;
  for (int i = 0; i < kIdentitySamples; ++i) {
    const auto spec = random_spec(rng);
    const double x = uniform(rng, -20.0, 20.0);
    worst = std::max(worst, std::abs(scarf_equivalence_residual(x, spec)));
  }
  return {worst, {{"samples", kIdentitySamples}, {"seed", static_cast<double>(config.seed)}}};
}

Outcome check_partner_potential(const VerifyConfig& config, std::mt19937_64& rng) {
  double worst = 0.0;
  for (int i = 0; i < kIdentitySamples; ++i) {
    const auto spec = random_spec(rng);
    const double x = uniform(rng, -20.0, 20.0);
    const double v = v_morse_ext(x, spec);
    worst = std::max(worst, relative_gap(v, partner_potential(x, spec, Branch::plus)));
  }
  return {worst, {{"samples", kIdentitySamples}, {"seed", static_cast<double>(config.seed)}}};
}

Outcome check_morse_limit(const VerifyConfig& config, std::mt19937_64&) {
  const MorseParams p(config.morse.A, config.morse.B);
  const SuperpotentialSpec spec{p, ExtensionParams(0.0, 0.0)};
  double worst = 0.0;
  for (const double x : grid_with_spacing(-5.0, 10.0, 0.01).nodes()) {
    worst = std::max(worst, std::abs(v_morse_ext(x, spec) - v_morse(x, p)));
  }
  return {worst, {{"A", config.morse.A}, {"B", config.morse.B}, {"P", 0.0}, {"Q", 0.0}}};
}

Outcome check_romanovski_ode(const VerifyConfig& config, std::mt19937_64& rng) {
  double worst = 0.0;
  for (int i = 0; i < 2000; ++i) {
    const int n = std::uniform_int_distribution<int>(0, 6)(rng);
    const double a = uniform(rng, -4.0, 4.0);
    const double b = uniform(rng, -6.0, -0.5);
    const double s = uniform(rng, -3.0, 3.0);
    const RomanovskiPolynomial R(n, a, b);
    const auto& c = R.coefficients();
    double y = 0.0, dy = 0.0, d2y = 0.0, scale = 0.0;
    for (std::size_t k = 0; k < c.size(); ++k) {
      const double kk = static_cast<double>(k);
      y += c[k] * std::pow(s, kk);
      if (k >= 1) dy += kk * c[k] * std::pow(s, kk - 1.0);
      if (k >= 2) d2y += kk * (kk - 1.0) * c[k] * std::pow(s, kk - 2.0);
      scale += std::abs(c[k]) * std::pow(std::abs(s), kk) * (1.0 + kk * kk);
    }
    const double lambda = -n * (2.0 * b + n - 1.0);
    const double res = (1.0 + s * s) * d2y + (2.0 * b * s + a) * dy + lambda * y;
    if (scale > 0.0) worst = std::max(worst, std::abs(res) / (scale * (1.0 + std::abs(lambda))));
  }
  return {worst, {{"samples", 2000}, {"seed", static_cast<double>(config.seed)}}};
}

Outcome check_morse_ext_residual(const VerifyConfig& config, std::mt19937_64&) {
  const auto spec = morse_spec(config.morse);
  const double q = spec.ext.q();
  const auto grid = grid_with_spacing(q - 16.0, q + 32.0, 0.005);
  const auto V = SampledFunction::sample(grid, [&](double x) { return v_morse_ext(x, spec); });
  double worst = 0.0;
  int levels = 0;
  for (int n = 0; n < spec.morse.A(); ++n, ++levels) {
    const auto psi = SampledFunction::sample(grid, [&](double x) { return morse_ext_wavefunction(n, x, spec); });
    worst = std::max(worst, schrodinger_residual(psi, V, morse_energy(n, spec.morse)));
  }
  auto params = morse_fields(config.morse);
  params.emplace_back("levels", levels);
  params.emplace_back("h", grid.spacing());
  return {worst, params};
}

Outcome check_morse_ext_nodes(const VerifyConfig& config, std::mt19937_64&) {
  const auto spec = morse_spec(config.morse);
  const double q = spec.ext.q();
  const auto grid = grid_with_spacing(q - 16.0, q + 32.0, 0.005);
  int mismatches = 0;
  for (int n = 0; n < spec.morse.A(); ++n) {
    const auto psi = SampledFunction::sample(grid, [&](double x) { return morse_ext_wavefunction(n, x, spec); });
    if (count_nodes(psi) != n) ++mismatches;
  }
  return {static_cast<double>(mismatches), morse_fields(config.morse)};
}

// Ladder states at A and, for levels up to 4, at A + 2.
std::vector<SuperpotentialSpec> ladder_specs(const MorseTuple& m) {
  std::vector<SuperpotentialSpec> specs{morse_spec(m)};
  if (m.A <= 4.0) specs.push_back({MorseParams(m.A + 2.0, m.B), ExtensionParams(m.P, m.Q)});
  return specs;
}

constexpr double kLadderHalfWidth = 40.0;
constexpr double kLadderSpacing = 0.025;

Outcome check_ladder_overlap(const VerifyConfig& config, std::mt19937_64&) {
  double worst = 0.0;
  for (const auto& spec : ladder_specs(config.morse)) {
    const double q = spec.ext.q();
    const auto grid = grid_with_spacing(q - kLadderHalfWidth, q + kLadderHalfWidth, kLadderSpacing);
    for (int n = 0; n < spec.morse.A() && n <= 4; ++n) {
      const auto ladder = ladder_state_extrapolated(n, spec, grid);
      const auto exact = SampledFunction::sample(grid, [&](double x) { return morse_ext_wavefunction(n, x, spec); });
      worst = std::max(worst, 1.0 - overlap(ladder, exact));
    }
  }
  auto params = morse_fields(config.morse);
  params.emplace_back("h", kLadderSpacing);
  return {worst, params};
}

Outcome check_ladder_romanovski(const VerifyConfig& config, std::mt19937_64&) {
  double worst = 0.0;
  for (const auto& spec : ladder_specs(config.morse)) {
    const double q = spec.ext.q();
    const auto scarf = morse_to_scarf(spec).scarf;
    const auto rp = scarf_romanovski_params(scarf);
    const auto grid = grid_with_spacing(q - kLadderHalfWidth, q + kLadderHalfWidth, kLadderSpacing);
    for (int n = 0; n < spec.morse.A() && n <= 4; ++n) {
      const auto ladder = ladder_state_extrapolated(n, spec, grid);
      const RomanovskiPolynomial R(n, rp.a, rp.b);
      double rmax = 0.0;
      for (std::size_t i = 0; i < grid.count(); ++i) {
        const double z = grid.node(i) - q;
        if (std::abs(z) <= 3.0) rmax = std::max(rmax, std::abs(R(std::sinh(z))));
      }
      std::vector<double> ratios;
      for (std::size_t i = 0; i < grid.count(); ++i) {
        const double z = grid.node(i) - q;
        if (std::abs(z) > 3.0) continue;
        const double s = std::sinh(z);
        const double r = R(s);
        if (std::abs(r) < 0.05 * rmax) continue;
        const double prefactor = std::exp(-scarf.A() * std::log(std::cosh(z)) - scarf.Bp() * std::atan(s));
        ratios.push_back(ladder[i] / (prefactor * r));
      }
      worst = std::max(worst, ratio_spread(std::move(ratios)));
    }
  }
  auto params = morse_fields(config.morse);
  params.emplace_back("h", kLadderSpacing);
  return {worst, params};
}

Outcome check_erratum_sinh(const VerifyConfig& config, std::mt19937_64&) {
  const auto spec = morse_spec(config.morse);
  const double q = spec.ext.q();
  const auto grid = grid_with_spacing(q + 0.5, q + 3.0, 0.005);
  const auto V = SampledFunction::sample(grid, [&](double x) { return v_morse_ext(x, spec); });
  double smallest = std::numeric_limits<double>::infinity();
  for (int n = 0; n < spec.morse.A(); ++n) {
    const auto psi = SampledFunction::sample(
        grid, [&](double x) { return morse_ext_wavefunction_sinh_prefactor(n, x, spec); });
    smallest = std::min(smallest, schrodinger_residual(psi, V, morse_energy(n, spec.morse)));
  }
  return {smallest, morse_fields(config.morse)};
}

Outcome check_erratum_inverse_root(const VerifyConfig& config, std::mt19937_64&) {
  const auto p = coulomb_params(config.coulomb);
  const auto grid = grid_with_spacing(0.05, 40.0, 0.005);
  const auto V = SampledFunction::sample(grid, [&](double r) { return v_coulomb_ext(r, p); });
  const auto psi =
      SampledFunction::sample(grid, [&](double r) { return coulomb_ext_wavefunction_inverse_root(r, p); });
  return {schrodinger_residual(psi, V, coulomb_ext_energy(p)), coulomb_fields(config.coulomb)};
}

Outcome check_radial_printed_potential(const VerifyConfig& config, std::mt19937_64&) {
  const auto p = radial_params(config.radial);
  double worst = 0.0;
  for (const double r : grid_with_spacing(0.05, 20.0, 0.01).nodes()) {
    worst = std::max(worst, relative_gap(v_radial_ext(r, p), v_radial_ext_printed(r, p)));
  }
  return {worst, radial_fields(config.radial)};
}

Outcome check_coulomb_printed_potential(const VerifyConfig& config, std::mt19937_64&) {
  const auto p = coulomb_params(config.coulomb);
  double worst = 0.0;
  for (const double r : grid_with_spacing(0.05, 20.0, 0.01).nodes()) {
    worst = std::max(worst, relative_gap(v_coulomb_ext(r, p), v_coulomb_ext_printed(r, p)));
  }
  return {worst, coulomb_fields(config.coulomb)};
}

// ---- spectra -------------------------------------------------------------------

std::vector<double> morse_ext_levels(const SuperpotentialSpec& spec, const VerifyConfig& config, double tol) {
  const int k = static_cast<int>(std::ceil(spec.morse.A()));
  auto options = solve_options(config);
  options.anchor = spec.ext.q();
  const auto domain = suggest_line_domain(spec.ext.q(), spec.morse.A(), 0.02);
  return solve_bound_states([&](double x) { return v_morse_ext(x, spec); }, domain, static_cast<std::size_t>(k), tol,
                            options)
      .energies;
}

Outcome check_morse_ext_levels(const VerifyConfig& config, std::mt19937_64&) {
  const auto spec = morse_spec(config.morse);
  const auto levels = morse_ext_levels(spec, config, 1e-7);
  double worst = 0.0;
  for (std::size_t n = 0; n < levels.size(); ++n) {
    worst = std::max(worst, std::abs(levels[n] - morse_energy(static_cast<int>(n), spec.morse)));
  }
  return {worst, morse_fields(config.morse)};
}

Outcome check_isospectral(const VerifyConfig& config, std::mt19937_64&) {
  const auto a = morse_ext_levels(morse_spec(config.morse), config, 1e-7);
  MorseTuple other = config.morse;
  other.P = -1.0;
  other.Q = 5.0;
  const auto b = morse_ext_levels(morse_spec(other), config, 1e-7);
  double worst = 0.0;
  for (std::size_t n = 0; n < a.size(); ++n) worst = std::max(worst, std::abs(a[n] - b[n]));
  auto params = morse_fields(config.morse);
  params.emplace_back("P2", other.P);
  params.emplace_back("Q2", other.Q);
  return {worst, params};
}

Outcome check_morse_levels(const VerifyConfig& config, std::mt19937_64&) {
  const MorseParams p(config.morse.A, config.morse.B);
  const int k = static_cast<int>(std::ceil(p.A()));
  const double center = std::log(p.B() / (p.A() + 0.5));  // potential minimum
  auto options = solve_options(config);
  options.anchor = center;
  const auto res = solve_bound_states([&](double x) { return v_morse(x, p); },
                                      suggest_line_domain(center, p.A(), 0.02), static_cast<std::size_t>(k), 1e-7,
                                      options);
  double worst = 0.0;
  for (int n = 0; n < k; ++n) worst = std::max(worst, std::abs(res.energies[n] - morse_energy(n, p)));
  return {worst, {{"A", p.A()}, {"B", p.B()}}};
}

Outcome check_radial_levels(const VerifyConfig& config, std::mt19937_64&) {
  const double omega = config.radial.omega;
  const double l = config.radial.l;
  auto options = solve_options(config);
  options.box = BoxKind::half_line;
  const double extent = 8.0 * std::max(1.0, std::sqrt(radial_osc_energy(2, omega, l)) / omega);
  const auto res = solve_bound_states([&](double r) { return v_radial(r, omega, l); },
                                      suggest_radial_domain(extent, 0.02), 3, 1e-7, options);
  double worst = 0.0;
  for (int n = 0; n < 3; ++n) worst = std::max(worst, std::abs(res.energies[n] - radial_osc_energy(n, omega, l)));
  return {worst, {{"omega", omega}, {"l", l}}};
}

// ---- QES -----------------------------------------------------------------------

struct QesSolve {
  SpectralResult result;
  double exact;
  std::function<double(double)> psi;
  std::function<double(double)> V;
};

QesSolve solve_radial_qes(const VerifyConfig& config) {
  const auto p = radial_params(config.radial);
  const double E = radial_ext_energy(p);
  auto options = solve_options(config);
  options.box = BoxKind::half_line;
  options.want_vectors = true;
  const double extent = 8.0 * std::max(1.0, std::sqrt(E) / p.omega());
  auto V = [p](double r) { return v_radial_ext(r, p); };
  auto res = solve_bound_states(V, suggest_radial_domain(extent, 0.02), static_cast<std::size_t>(p.n() + 1), 1e-6,
                                options);
  return {std::move(res), E, [p](double r) { return radial_ext_wavefunction(r, p); }, V};
}

QesSolve solve_coulomb_qes(const VerifyConfig& config) {
  const auto p = coulomb_params(config.coulomb);
  const double E = coulomb_ext_energy(p);
  auto options = solve_options(config);
  options.box = BoxKind::half_line;
  options.want_vectors = true;
  const double nl = p.n() + p.l() + 1.0;
  const double extent = 8.0 * std::max(1.0, nl * nl / p.Z());
  auto V = [p](double r) { return v_coulomb_ext(r, p); };
  auto res = solve_bound_states(V, suggest_radial_domain(extent, 0.02), static_cast<std::size_t>(p.n() + 1), 1e-6,
                                options);
  return {std::move(res), E, [p](double r) { return coulomb_ext_wavefunction(r, p); }, V};
}

std::size_t nearest_level(const std::vector<double>& energies, double E) {
  std::size_t best = 0;
  for (std::size_t j = 1; j < energies.size(); ++j) {
    if (std::abs(energies[j] - E) < std::abs(energies[best] - E)) best = j;
  }
  return best;
}

Outcome qes_energy(const QesSolve& s, Params params) {
  const auto j = nearest_level(s.result.energies, s.exact);
  params.emplace_back("numeric", s.result.energies[j]);
  params.emplace_back("exact", s.exact);
  return {std::abs(s.result.energies[j] - s.exact), std::move(params)};
}

Outcome qes_overlap(const QesSolve& s, Params params) {
  const auto j = nearest_level(s.result.energies, s.exact);
  const auto& vec = (*s.result.eigenvectors)[j];
  const auto exact = SampledFunction::sample(vec.grid(), [&](double r) { return r > 0.0 ? s.psi(r) : 0.0; });
  params.emplace_back("R", s.result.domain.x_max());
  params.emplace_back("h", s.result.h);
  return {1.0 - overlap(vec, exact), std::move(params)};
}

Outcome qes_residual(const QesSolve& s, double extent, Params params) {
  const auto grid = grid_with_spacing(0.005, extent, 0.005);
  const auto psi = SampledFunction::sample(grid, s.psi);
  const auto V = SampledFunction::sample(grid, s.V);
  params.emplace_back("h", grid.spacing());
  return {schrodinger_residual(psi, V, s.exact), std::move(params)};
}

QesSolve residual_only(const std::function<double(double)>& psi, const std::function<double(double)>& V, double E) {
  return {SpectralResult{}, E, psi, V};
}

// The energy and overlap checks share one eigensolve per parameter tuple.
template <class Key>
const QesSolve& cached_solve(const Key& key, QesSolve (*solve)(const VerifyConfig&), const VerifyConfig& config) {
  static std::mutex mutex;
  static std::map<Key, std::shared_future<QesSolve>> cache;
  std::shared_future<QesSolve> fut;
  bool owner = false;
  std::promise<QesSolve> promise;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(key);
    if (it == cache.end()) {
      fut = promise.get_future().share();
      cache.emplace(key, fut);
      owner = true;
    } else {
      fut = it->second;
    }
  }
  if (owner) {
    try {
      promise.set_value(solve(config));
    } catch (...) {
      promise.set_exception(std::current_exception());
      std::lock_guard lock(mutex);
      cache.erase(key);
    }
  }
  return fut.get();
}

const QesSolve& radial_qes(const VerifyConfig& config) {
  const auto& t = config.radial;
  return cached_solve(std::tuple(t.omega, t.l, t.n, t.P, t.Q), solve_radial_qes, config);
}

const QesSolve& coulomb_qes(const VerifyConfig& config) {
  const auto& t = config.coulomb;
  return cached_solve(std::tuple(t.Z, t.l, t.n, t.P, t.Q), solve_coulomb_qes, config);
}

Outcome check_radial_energy(const VerifyConfig& config, std::mt19937_64&) {
  return qes_energy(radial_qes(config), radial_fields(config.radial));
}

Outcome check_radial_overlap(const VerifyConfig& config, std::mt19937_64&) {
  return qes_overlap(radial_qes(config), radial_fields(config.radial));
}

Outcome check_radial_residual(const VerifyConfig& config, std::mt19937_64&) {
  const auto p = radial_params(config.radial);
  return qes_residual(residual_only([p](double r) { return radial_ext_wavefunction(r, p); },
                                    [p](double r) { return v_radial_ext(r, p); }, radial_ext_energy(p)),
                      60.0, radial_fields(config.radial));
}

Outcome check_coulomb_energy(const VerifyConfig& config, std::mt19937_64&) {
  return qes_energy(coulomb_qes(config), coulomb_fields(config.coulomb));
}

Outcome check_coulomb_overlap(const VerifyConfig& config, std::mt19937_64&) {
  return qes_overlap(coulomb_qes(config), coulomb_fields(config.coulomb));
}

Outcome check_coulomb_residual(const VerifyConfig& config, std::mt19937_64&) {
  const auto p = coulomb_params(config.coulomb);
  return qes_residual(residual_only([p](double r) { return coulomb_ext_wavefunction(r, p); },
                                    [p](double r) { return v_coulomb_ext(r, p); }, coulomb_ext_energy(p)),
                      60.0, coulomb_fields(config.coulomb));
}

double closed_form_ratio(const std::function<double(double)>& a, const std::function<double(double)>& b) {
  std::vector<double> ratios;
  for (const double r : grid_with_spacing(0.1, 6.0, 0.01).nodes()) {
    const double vb = b(r);
    if (std::abs(vb) > 1e-200) ratios.push_back(a(r) / vb);
  }
  return ratio_spread(std::move(ratios));
}

Outcome check_radial_printed_form(const VerifyConfig& config, std::mt19937_64&) {
  const auto p = radial_params(config.radial);
  const double spread = closed_form_ratio([p](double r) { return radial_ext_wavefunction_printed(r, p); },
                                          [p](double r) { return radial_ext_wavefunction(r, p); });
  return {spread, radial_fields(config.radial)};
}

Outcome check_coulomb_printed_form(const VerifyConfig& config, std::mt19937_64&) {
  const auto p = coulomb_params(config.coulomb);
  const double spread = closed_form_ratio([p](double r) { return coulomb_ext_wavefunction_printed(r, p); },
                                          [p](double r) { return coulomb_ext_wavefunction(r, p); });
  return {spread, coulomb_fields(config.coulomb)};
}

// ---- PCT -----------------------------------------------------------------------

// Random (A, B, n) with 0 <= n < A - 1/2.
struct MorseLevel {
  MorseParams p;
  int n;
};

MorseLevel random_level(std::mt19937_64& rng) {
  const int n = std::uniform_int_distribution<int>(0, 3)(rng);
  return {MorseParams(n + uniform(rng, 0.6, 5.0), uniform(rng, 0.1, 5.0)), n};
}

Outcome pct_tuples(const VerifyConfig& config, std::mt19937_64& rng,
                   const std::function<double(const MorseLevel&)>& worst_of) {
  double worst = 0.0;
  for (int i = 0; i < kPctTuples; ++i) worst = std::max(worst, worst_of(random_level(rng)));
  return {worst, {{"tuples", kPctTuples}, {"seed", static_cast<double>(config.seed)}}};
}

Outcome check_radial_round_trip(const VerifyConfig& config, std::mt19937_64& rng) {
  return pct_tuples(config, rng, [](const MorseLevel& m) {
    const auto img = morse_to_radial(m.p, m.n);
    const auto back = radial_to_morse(img.omega, img.l, m.n);
    return std::max(ulp_distance(back.A(), m.p.A()), ulp_distance(back.B(), m.p.B()));
  });
}

Outcome check_coulomb_round_trip(const VerifyConfig& config, std::mt19937_64& rng) {
  return pct_tuples(config, rng, [](const MorseLevel& m) {
    const auto img = morse_to_coulomb(m.p, m.n);
    const auto back = coulomb_to_morse(img.Z, img.l, m.n);
    return std::max(ulp_distance(back.A(), m.p.A()), ulp_distance(back.B(), m.p.B()));
  });
}

Outcome check_radial_energy_identity(const VerifyConfig& config, std::mt19937_64& rng) {
  return pct_tuples(config, rng, [](const MorseLevel& m) {
    const auto img = morse_to_radial(m.p, m.n);
    return ulp_distance(img.energy, radial_osc_energy(m.n, img.omega, img.l));
  });
}

Outcome check_coulomb_energy_identity(const VerifyConfig& config, std::mt19937_64& rng) {
  return pct_tuples(config, rng, [](const MorseLevel& m) {
    const auto img = morse_to_coulomb(m.p, m.n);
    return ulp_distance(img.energy, coulomb_energy(m.n, img.Z, img.l));
  });
}

Outcome pullback_ratio(const VerifyConfig& config, std::mt19937_64& rng, PctTarget target) {
  double worst = 0.0;
  constexpr int tuples = 20;
  for (int i = 0; i < tuples; ++i) {
    const auto m = random_level(rng);
    const auto pulled = pullback_wavefunction([m](double x) { return morse_wavefunction(m.n, x, m.p); }, target);
    std::function<double(double)> plain;
    double extent;
    if (target == PctTarget::radial) {
      const auto img = morse_to_radial(m.p, m.n);
      plain = [m, img](double r) { return radial_osc_wavefunction(m.n, r, img.omega, img.l); };
      extent = 3.0 * std::sqrt((2.0 * m.n + img.l + 1.5) / img.omega) + 0.5;
    } else {
      const auto img = morse_to_coulomb(m.p, m.n);
      plain = [m, img](double r) { return coulomb_wavefunction(m.n, r, img.Z, img.l); };
      extent = 3.0 * (m.n + img.l + 1.0) * (m.n + img.l + 1.0) / img.Z + 0.5;
    }
    std::vector<double> ratios;
    const double rmax = extent;
    for (const double r : grid_with_spacing(rmax / 200.0, rmax, rmax / 200.0).nodes()) {
      const double b = plain(r);
      if (std::abs(b) > 1e-200) ratios.push_back(pulled(r) / b);
    }
    worst = std::max(worst, ratio_spread(std::move(ratios)));
  }
  return {worst, {{"tuples", tuples}, {"seed", static_cast<double>(config.seed)}}};
}

Outcome check_radial_pullback(const VerifyConfig& config, std::mt19937_64& rng) {
  return pullback_ratio(config, rng, PctTarget::radial);
}

Outcome check_coulomb_pullback(const VerifyConfig& config, std::mt19937_64& rng) {
  return pullback_ratio(config, rng, PctTarget::coulomb);
}

Outcome potential_map(const VerifyConfig& config, std::mt19937_64& rng, PctTarget target) {
  double worst = 0.0;
  for (int i = 0; i < kPctTuples; ++i) {
    const auto m = random_level(rng);
    const SuperpotentialSpec spec{m.p, ExtensionParams(uniform(rng, -3.0, 3.0), uniform(rng, 0.01, 10.0))};
    for (int j = 0; j < 20; ++j) {
      const double r = std::exp(uniform(rng, -3.0, 3.0));
      worst = std::max(worst, std::abs(pct_potential_residual(spec, m.n, target, r)));
    }
  }
  return {worst, {{"tuples", kPctTuples}, {"seed", static_cast<double>(config.seed)}}};
}

Outcome check_radial_potential_map(const VerifyConfig& config, std::mt19937_64& rng) {
  return potential_map(config, rng, PctTarget::radial);
}

Outcome check_coulomb_potential_map(const VerifyConfig& config, std::mt19937_64& rng) {
  return potential_map(config, rng, PctTarget::coulomb);
}

// Kept sorted by name.
const std::vector<CheckDef>& registry() {
  static const std::vector<CheckDef> checks = [] {
    std::vector<CheckDef> c{
        {"identities.coulomb_printed_potential", Suite::identities, 1e-9, Comparison::at_most,
         check_coulomb_printed_potential},
        {"identities.erratum_coulomb_inverse_root", Suite::identities, 1e-2, Comparison::at_least,
         check_erratum_inverse_root},
        {"identities.erratum_sinh_prefactor", Suite::identities, 1e-2, Comparison::at_least, check_erratum_sinh},
        {"identities.ladder_overlap_deficit", Suite::identities, 1e-6, Comparison::at_most, check_ladder_overlap},
        {"identities.ladder_romanovski_ratio", Suite::identities, 1e-8, Comparison::at_most,
         check_ladder_romanovski},
        {"identities.linear", Suite::identities, 1e-9, Comparison::at_most, check_linear},
        {"identities.morse_ext_nodes", Suite::identities, 0.0, Comparison::at_most, check_morse_ext_nodes},
        {"identities.morse_ext_residual", Suite::identities, 1e-6, Comparison::at_most, check_morse_ext_residual},
        {"identities.morse_limit", Suite::identities, 0.0, Comparison::at_most, check_morse_limit},
        {"identities.partner_potential", Suite::identities, 1e-9, Comparison::at_most, check_partner_potential},
        {"identities.radial_printed_potential", Suite::identities, 1e-9, Comparison::at_most,
         check_radial_printed_potential},
        {"identities.riccati", Suite::identities, 1e-9, Comparison::at_most, check_riccati},
        {"identities.romanovski_ode", Suite::identities, 1e-12, Comparison::at_most, check_romanovski_ode},
        {"identities.scarf_equivalence", Suite::identities, 1e-9, Comparison::at_most, check_scarf_equivalence},
        {"identities.shape_invariance", Suite::identities, 1e-9, Comparison::at_most, check_shape_invariance},
        {"pct.coulomb_energy_identity_ulps", Suite::pct, 4.0, Comparison::at_most, check_coulomb_energy_identity},
        {"pct.coulomb_potential_map", Suite::pct, 1e-9, Comparison::at_most, check_coulomb_potential_map},
        {"pct.coulomb_pullback_ratio", Suite::pct, 1e-10, Comparison::at_most, check_coulomb_pullback},
        {"pct.coulomb_round_trip_ulps", Suite::pct, 4.0, Comparison::at_most, check_coulomb_round_trip},
        {"pct.radial_energy_identity_ulps", Suite::pct, 4.0, Comparison::at_most, check_radial_energy_identity},
        {"pct.radial_potential_map", Suite::pct, 1e-9, Comparison::at_most, check_radial_potential_map},
        {"pct.radial_pullback_ratio", Suite::pct, 1e-10, Comparison::at_most, check_radial_pullback},
        {"pct.radial_round_trip_ulps", Suite::pct, 4.0, Comparison::at_most, check_radial_round_trip},
        {"qes.coulomb_energy", Suite::qes, 1e-5, Comparison::at_most, check_coulomb_energy},
        {"qes.coulomb_overlap_deficit", Suite::qes, 1e-5, Comparison::at_most, check_coulomb_overlap},
        {"qes.coulomb_printed_form_ratio", Suite::qes, 1e-10, Comparison::at_most, check_coulomb_printed_form},
        {"qes.coulomb_residual", Suite::qes, 1e-6, Comparison::at_most, check_coulomb_residual},
        {"qes.radial_energy", Suite::qes, 1e-5, Comparison::at_most, check_radial_energy},
        {"qes.radial_overlap_deficit", Suite::qes, 1e-5, Comparison::at_most, check_radial_overlap},
        {"qes.radial_printed_form_ratio", Suite::qes, 1e-10, Comparison::at_most, check_radial_printed_form},
        {"qes.radial_residual", Suite::qes, 1e-6, Comparison::at_most, check_radial_residual},
        {"spectra.isospectral_pq", Suite::spectra, 2e-6, Comparison::at_most, check_isospectral},
        {"spectra.morse_ext_levels", Suite::spectra, 1e-6, Comparison::at_most, check_morse_ext_levels},
        {"spectra.morse_levels", Suite::spectra, 1e-6, Comparison::at_most, check_morse_levels},
        {"spectra.radial_levels", Suite::spectra, 1e-6, Comparison::at_most, check_radial_levels},
    };
    std::sort(c.begin(), c.end(), [](const CheckDef& a, const CheckDef& b) { return a.name < b.name; });
    return c;
  }();
  return checks;
}

const CheckDef* find_check(std::string_view name) {
  for (const auto& c : registry()) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::uint64_t name_hash(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
  for (const char ch : s) {
    h ^= static_cast<unsigned char>(ch);
    h *= 1099511628211ULL;
  }
  return h;
}

VerificationRow execute(const CheckDef& def, const VerifyConfig& config) {
  std::seed_seq seq{static_cast<std::uint32_t>(config.seed), static_cast<std::uint32_t>(config.seed >> 32),
                    static_cast<std::uint32_t>(name_hash(def.name)), static_cast<std::uint32_t>(name_hash(def.name) >> 32)};
  std::mt19937_64 rng(seq);
  auto outcome = def.run(config, rng);
  double tol = def.tolerance;
  if (const auto it = config.tolerance_overrides.find(std::string(def.name)); it != config.tolerance_overrides.end()) {
    tol = it->second;
  }
  const bool passed = std::isfinite(outcome.value) &&
                      (def.comparison == Comparison::at_most ? outcome.value <= tol : outcome.value >= tol);
  return {std::string(def.name), outcome.value, tol, def.comparison, passed, std::move(outcome.params)};
}

}  // namespace

std::string_view to_string(Comparison c) noexcept { return c == Comparison::at_most ? "<=" : ">="; }

bool VerificationReport::passed() const noexcept {
  return std::all_of(rows.begin(), rows.end(), [](const VerificationRow& r) { return r.passed; });
}

std::string_view to_string(Suite s) noexcept {
  switch (s) {
    case Suite::identities:
      return "identities";
    case Suite::spectra:
      return "spectra";
    case Suite::qes:
      return "qes";
    case Suite::pct:
      return "pct";
    case Suite::all:
      return "all";
  }
  return "all";
}

Suite suite_from_string(std::string_view name) {
  for (const Suite s : {Suite::identities, Suite::spectra, Suite::qes, Suite::pct, Suite::all}) {
    if (to_string(s) == name) return s;
  }
  throw InvalidParameter("suite", "unknown suite '" + std::string(name) + "'");
}

std::vector<std::string> suite_checks(Suite s) {
  std::vector<std::string> names;
  for (const auto& c : registry()) {
    if (s == Suite::all || c.suite == s) names.emplace_back(c.name);
  }
  return names;
}

VerificationRow run_check(std::string_view name, const VerifyConfig& config) {
  const auto* def = find_check(name);
  if (def == nullptr) throw InvalidParameter("check", "unknown check '" + std::string(name) + "'");
  return execute(*def, config);
}

VerificationReport run_suite(Suite s, const VerifyConfig& config) {
  for (const auto& [name, tol] : config.tolerance_overrides) {
    if (find_check(name) == nullptr) throw InvalidParameter("override-tol", "unknown check '" + name + "'");
  }
  std::vector<const CheckDef*> selected;
  for (const auto& c : registry()) {
    if (s == Suite::all || c.suite == s) selected.push_back(&c);
  }

  std::vector<std::optional<VerificationRow>> rows(selected.size());
  std::vector<std::exception_ptr> errors(selected.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < selected.size(); i = next++) {
      try {
        rows[i] = execute(*selected[i], config);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  unsigned threads = config.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : config.threads;
  threads = std::min<unsigned>(threads, static_cast<unsigned>(selected.size()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  VerificationReport report;
  for (auto& r : rows) report.rows.push_back(std::move(*r));
  return report;
}

}  // namespace susyext
