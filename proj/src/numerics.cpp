#include "susyext/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <future>
#include <string>

#include "susyext/analytic_states.hpp"

namespace susyext {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void require_same_grid(const GridSpec& a, const GridSpec& b) {
  if (a.count() != b.count() || a.x_min() != b.x_min() || a.x_max() != b.x_max()) {
    throw DomainError("sampled functions live on different grids");
  }
}

double matrix_norm1(const TridiagonalMatrix& T) {
  const std::size_t m = T.size();
  double norm = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    double row = std::abs(T.diag[i]);
    if (i > 0) row += std::abs(T.offdiag[i - 1]);
    if (i + 1 < m) row += std::abs(T.offdiag[i]);
    norm = std::max(norm, row);
  }
  return norm;
}

double pivot_floor(const TridiagonalMatrix& T) {
  double bmax = 1.0;
  for (double b : T.offdiag) bmax = std::max(bmax, b * b);
  return std::numeric_limits<double>::min() * bmax;
}

// Solves (T - sigma I) x = rhs in place by Gaussian elimination with partial
// pivoting (same factorization as LAPACK dgttrf/dgtts2).
void solve_shifted(const TridiagonalMatrix& T, double sigma, double tiny, std::vector<double>& x) {
  const std::size_t n = T.size();
  if (n == 1) {
    const double d = T.diag[0] - sigma;
    x[0] /= (d == 0.0 ? tiny : d);
    return;
  }
  std::vector<double> d(n), dl(T.offdiag), du(T.offdiag), du2(n >= 2 ? n - 2 : 0, 0.0);
  std::vector<std::uint8_t> swapped(n - 1, 0);
  for (std::size_t i = 0; i < n; ++i) d[i] = T.diag[i] - sigma;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (std::abs(d[i]) >= std::abs(dl[i])) {
      if (d[i] == 0.0) d[i] = tiny;
      const double fact = dl[i] / d[i];
      dl[i] = fact;
      d[i + 1] -= fact * du[i];
    } else {
      const double fact = d[i] / dl[i];
      d[i] = dl[i];
      dl[i] = fact;
      const double temp = du[i];
      du[i] = d[i + 1];
      d[i + 1] = temp - fact * d[i + 1];
      if (i + 2 < n) {
        du2[i] = du[i + 1];
        du[i + 1] = -fact * du[i + 1];
      }
      swapped[i] = 1;
    }
  }
  if (d[n - 1] == 0.0) d[n - 1] = tiny;

  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (!swapped[i]) {
      x[i + 1] -= dl[i] * x[i];
    } else {
      const double temp = x[i];
      x[i] = x[i + 1];
      x[i + 1] = temp - dl[i] * x[i];
    }
  }
  x[n - 1] /= d[n - 1];
  x[n - 2] = (x[n - 2] - du[n - 2] * x[n - 1]) / d[n - 2];
  for (std::size_t ii = n - 2; ii-- > 0;) {
    x[ii] = (x[ii] - du[ii] * x[ii + 1] - du2[ii] * x[ii + 2]) / d[ii];
  }
}

double norm2(const std::vector<double>& v) {
  double s = 0.0;
  for (double a : v) s += a * a;
  return std::sqrt(s);
}

double residual_norm(const TridiagonalMatrix& T, double lambda, const std::vector<double>& v) {
  const std::size_t n = T.size();
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double r = (T.diag[i] - lambda) * v[i];
    if (i > 0) r += T.offdiag[i - 1] * v[i - 1];
    if (i + 1 < n) r += T.offdiag[i] * v[i + 1];
    s += r * r;
  }
  return std::sqrt(s);
}

// Deterministic start vectors for inverse iteration.
std::vector<double> start_vector(std::size_t n, std::uint64_t seed) {
  std::vector<double> v(n);
  std::uint64_t state = seed * 6364136223846793005ULL + 1442695040888963407ULL;
  for (auto& a : v) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    a = static_cast<double>(state >> 11) * (1.0 / 9007199254740992.0) - 0.5;
  }
  return v;
}

std::vector<double> levels_on_grid(const std::function<double(double)>& V, double x_lo, double x_hi, std::size_t M,
                                   std::size_t k) {
  const double h = (x_hi - x_lo) / static_cast<double>(M);
  std::vector<double> interior(M - 1);
  for (std::size_t i = 1; i < M; ++i) interior[i - 1] = V(x_lo + static_cast<double>(i) * h);
  return eigen_lowest(build_hamiltonian(interior, h), k);
}

}  // namespace

std::vector<double> first_derivative(const SampledFunction& f) {
  const std::size_t N = f.size();
  if (N < 5) throw DomainError("first_derivative needs at least 5 samples");
  const double c = 1.0 / (12.0 * f.grid().spacing());
  std::vector<double> d(N);
  d[0] = c * (-25.0 * f[0] + 48.0 * f[1] - 36.0 * f[2] + 16.0 * f[3] - 3.0 * f[4]);
  d[1] = c * (-3.0 * f[0] - 10.0 * f[1] + 18.0 * f[2] - 6.0 * f[3] + f[4]);
  for (std::size_t i = 2; i + 2 < N; ++i) {
    d[i] = c * (f[i - 2] - 8.0 * f[i - 1] + 8.0 * f[i + 1] - f[i + 2]);
  }
  d[N - 2] = c * (3.0 * f[N - 1] + 10.0 * f[N - 2] - 18.0 * f[N - 3] + 6.0 * f[N - 4] - f[N - 5]);
  d[N - 1] = c * (25.0 * f[N - 1] - 48.0 * f[N - 2] + 36.0 * f[N - 3] - 16.0 * f[N - 4] + 3.0 * f[N - 5]);
  return d;
}

double quadrature(const SampledFunction& f) {
  const std::size_t N = f.size();
  const double h = f.grid().spacing();
  const std::size_t simpson_end = (N % 2 == 1) ? N : N - 1;  // odd node count for Simpson
  double sum = f[0] + f[simpson_end - 1];
  for (std::size_t i = 1; i + 1 < simpson_end; ++i) sum += (i % 2 == 1 ? 4.0 : 2.0) * f[i];
  double total = sum * h / 3.0;
  if (simpson_end != N) total += 0.5 * h * (f[N - 2] + f[N - 1]);
  return total;
}

double overlap(const SampledFunction& a, const SampledFunction& b) {
  require_same_grid(a.grid(), b.grid());
  const std::size_t N = a.size();
  std::vector<double> ab(N), aa(N), bb(N);
  for (std::size_t i = 0; i < N; ++i) {
    ab[i] = a[i] * b[i];
    aa[i] = a[i] * a[i];
    bb[i] = b[i] * b[i];
  }
  const GridSpec& g = a.grid();
  const double na = quadrature(SampledFunction(g, std::move(aa)));
  const double nb = quadrature(SampledFunction(g, std::move(bb)));
  if (!(na > 0.0) || !(nb > 0.0)) throw DegenerateError("overlap of a zero function");
  return std::abs(quadrature(SampledFunction(g, std::move(ab)))) / std::sqrt(na * nb);
}

TridiagonalMatrix build_hamiltonian(const SampledFunction& V) {
  const auto v = V.values();
  return build_hamiltonian(v.subspan(1, v.size() - 2), V.grid().spacing());
}

TridiagonalMatrix build_hamiltonian(std::span<const double> interior_V, double h) {
  if (interior_V.empty()) throw DomainError("Hamiltonian needs at least one interior node");
  const double inv_h2 = 1.0 / (h * h);
  TridiagonalMatrix T;
  T.diag.resize(interior_V.size());
  for (std::size_t i = 0; i < interior_V.size(); ++i) T.diag[i] = 2.0 * inv_h2 + interior_V[i];
  T.offdiag.assign(interior_V.size() - 1, -inv_h2);
  return T;
}

std::size_t sturm_count(const TridiagonalMatrix& T, double E) {
  const double pivmin = pivot_floor(T);
  std::size_t count = 0;
  double d = T.diag[0] - E;
  if (std::abs(d) < pivmin) d = -pivmin;
  if (d < 0.0) ++count;
  for (std::size_t i = 1; i < T.size(); ++i) {
    const double b = T.offdiag[i - 1];
    d = T.diag[i] - E - b * b / d;
    if (std::abs(d) < pivmin) d = -pivmin;
    if (d < 0.0) ++count;
  }
  return count;
}

std::vector<double> eigen_lowest(const TridiagonalMatrix& T, std::size_t k) {
  const std::size_t m = T.size();
  if (k < 1 || k > m) throw DomainError("eigen_lowest: k must be in [1, matrix size]");
  // Gershgorin bounds.
  double glo = std::numeric_limits<double>::infinity();
  double ghi = -glo;
  for (std::size_t i = 0; i < m; ++i) {
    double radius = 0.0;
    if (i > 0) radius += std::abs(T.offdiag[i - 1]);
    if (i + 1 < m) radius += std::abs(T.offdiag[i]);
    glo = std::min(glo, T.diag[i] - radius);
    ghi = std::max(ghi, T.diag[i] + radius);
  }
  const double widen = kEps * std::max(std::abs(glo), std::abs(ghi)) * m + pivot_floor(T);
  glo -= widen;
  ghi += widen;

  std::vector<double> values(k);
  double lo_start = glo;
  for (std::size_t j = 0; j < k; ++j) {
    double lo = lo_start;  // sturm_count(lo) <= j
    double hi = ghi;       // sturm_count(hi) >= j + 1
    for (int it = 0; it < 200; ++it) {
      const double mid = lo + 0.5 * (hi - lo);
      if (mid <= lo || mid >= hi) break;
      if (hi - lo <= 2.0 * kEps * std::max(std::abs(lo), std::abs(hi))) break;
      if (sturm_count(T, mid) >= j + 1) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    values[j] = lo + 0.5 * (hi - lo);
    lo_start = lo;
  }
  return values;
}

EigenPairs eigen_lowest_with_vectors(const TridiagonalMatrix& T, std::size_t k) {
  EigenPairs out;
  out.values = eigen_lowest(T, k);
  const std::size_t n = T.size();
  const double tnorm = matrix_norm1(T);
  const double tiny = kEps * tnorm;
  const double accept = 100.0 * std::sqrt(static_cast<double>(n)) * kEps * tnorm;

  for (std::size_t j = 0; j < k; ++j) {
    const double lambda = out.values[j];
    bool done = false;
    std::vector<double> v;
    for (int restart = 0; restart < 4 && !done; ++restart) {
      v = start_vector(n, 1000 * j + restart + 1);
      for (int it = 0; it < 8; ++it) {
        solve_shifted(T, lambda, tiny, v);
        for (const auto& u : out.vectors) {
          double dot = 0.0;
          for (std::size_t i = 0; i < n; ++i) dot += u[i] * v[i];
          for (std::size_t i = 0; i < n; ++i) v[i] -= dot * u[i];
        }
        const double nv = norm2(v);
        if (!(nv > 0.0) || !std::isfinite(nv)) break;
        for (auto& a : v) a /= nv;
        if (it >= 1 && residual_norm(T, lambda, v) <= accept) {
          done = true;
          break;
        }
      }
    }
    if (!done) {
      throw ConvergenceError("inverse iteration did not converge for level " + std::to_string(j));
    }
    out.vectors.push_back(std::move(v));
  }
  return out;
}

SpectralResult solve_bound_states(const std::function<double(double)>& V, const GridSpec& domain, std::size_t k,
                                  double tol, const SolveOptions& options) {
  if (k < 1) throw DomainError("solve_bound_states: k must be >= 1");
  if (!(tol > 0.0)) throw DomainError("solve_bound_states: tol must be > 0");
  if (options.box == BoxKind::half_line && domain.x_min() < 0.0) {
    throw DomainError("half-line box must start at x_min >= 0");
  }

  double x_lo = domain.x_min();
  double x_hi = domain.x_max();
  const double anchor = std::isnan(options.anchor) ? 0.5 * (x_lo + x_hi) : options.anchor;
  std::size_t M = domain.count() - 1;
  if (M % 2 == 1) ++M;
  M = std::max<std::size_t>(M, 8);
  double h = (x_hi - x_lo) / static_cast<double>(M);
  const auto policy = options.parallel ? std::launch::async : std::launch::deferred;

  auto run = [&](std::size_t intervals) {
    if (intervals < k + 1) throw DomainError("grid too coarse for the requested number of levels");
    return levels_on_grid(V, x_lo, x_hi, intervals, k);
  };

  std::optional<std::vector<double>> previous;
  SpectralResult result;
  for (int doubling = 0;; ++doubling) {
    M = static_cast<std::size_t>(std::llround((x_hi - x_lo) / h));
    if (M % 2 == 1) ++M;
    auto f_coarse = std::async(policy, run, M / 2);
    auto f_mid = std::async(policy, run, M);
    std::vector<double> fine = run(2 * M);
    std::vector<double> coarse = f_coarse.get();
    std::vector<double> mid = f_mid.get();

    std::vector<double> extrapolated(k);
    std::vector<double> estimate(k);
    for (;;) {
      double worst = 0.0;
      for (std::size_t j = 0; j < k; ++j) {
        const double r1 = (4.0 * mid[j] - coarse[j]) / 3.0;
        const double r2 = (4.0 * fine[j] - mid[j]) / 3.0;
        extrapolated[j] = r2;
        estimate[j] = std::abs(r2 - r1);
        worst = std::max(worst, estimate[j]);
      }
      if (worst <= tol) break;
      if (4 * M > options.max_intervals) {
        throw ConvergenceError("grid refinement limit reached with error estimate " + std::to_string(worst) +
                               " above tol " + std::to_string(tol));
      }
      M *= 2;
      coarse = std::move(mid);
      mid = std::move(fine);
      fine = run(2 * M);
    }
    h = (x_hi - x_lo) / static_cast<double>(M);

    bool converged = false;
    if (previous) {
      double change = 0.0;
      for (std::size_t j = 0; j < k; ++j) change = std::max(change, std::abs(extrapolated[j] - (*previous)[j]));
      converged = change < tol;
    }
    if (converged) {
      result.energies = extrapolated;
      result.error_estimates = estimate;
      result.domain_doublings = doubling;
      break;
    }
    if (doubling >= options.max_doublings) {
      throw ConvergenceError("levels still moving after " + std::to_string(options.max_doublings) +
                             " domain doublings");
    }
    previous = extrapolated;
    if (options.box == BoxKind::line) {
      x_lo = anchor - 2.0 * (anchor - x_lo);
      x_hi = anchor + 2.0 * (x_hi - anchor);
    } else {
      x_hi = x_lo + 2.0 * (x_hi - x_lo);
    }
  }

  // Eigenvectors and residuals on the finest grid of the final box.
  const std::size_t fine_intervals = 2 * M;
  const double hf = (x_hi - x_lo) / static_cast<double>(fine_intervals);
  std::vector<double> interior(fine_intervals - 1);
  for (std::size_t i = 1; i < fine_intervals; ++i) interior[i - 1] = V(x_lo + static_cast<double>(i) * hf);
  const auto T = build_hamiltonian(interior, hf);
  const auto pairs = eigen_lowest_with_vectors(T, k);
  const double tnorm = matrix_norm1(T);

  result.h = hf;
  result.extrapolated = true;
  result.domain = GridSpec(x_lo, x_hi, fine_intervals + 1);
  result.residuals.resize(k);
  std::vector<SampledFunction> vectors;
  for (std::size_t j = 0; j < k; ++j) {
    result.residuals[j] = residual_norm(T, pairs.values[j], pairs.vectors[j]) / tnorm;
    if (options.want_vectors) {
      std::vector<double> full(fine_intervals + 1, 0.0);
      std::copy(pairs.vectors[j].begin(), pairs.vectors[j].end(), full.begin() + 1);
      vectors.push_back(normalize(SampledFunction(result.domain, std::move(full))));
    }
  }
  if (options.want_vectors) result.eigenvectors = std::move(vectors);
  return result;
}

double schrodinger_residual(const SampledFunction& psi, const SampledFunction& V, double E) {
  require_same_grid(psi.grid(), V.grid());
  const std::size_t N = psi.size();
  if (N < 5) throw DomainError("schrodinger_residual needs at least 5 samples");
  const double h = psi.grid().spacing();
  const double c = 1.0 / (12.0 * h * h);
  double res2 = 0.0;
  double norm = 0.0;
  for (std::size_t i = 2; i + 2 < N; ++i) {
    const double d2 = c * (-psi[i - 2] + 16.0 * psi[i - 1] - 30.0 * psi[i] + 16.0 * psi[i + 1] - psi[i + 2]);
    const double r = -d2 + (V[i] - E) * psi[i];
    res2 += r * r;
    norm += psi[i] * psi[i];
  }
  if (!(norm > 0.0)) throw DegenerateError("schrodinger_residual of a zero function");
  return std::sqrt(res2 / norm);
}

GridSpec suggest_line_domain(double center, double A, double h) {
  const double right = 8.0 / (A - std::ceil(A) + 1.0);
  const double lo = center - 8.0;
  const double hi = center + right;
  const auto intervals = static_cast<std::size_t>(std::max(8.0, std::round((hi - lo) / h)));
  return GridSpec(lo, hi, intervals + 1);
}

GridSpec suggest_radial_domain(double extent, double h) {
  const auto intervals = static_cast<std::size_t>(std::max(8.0, std::round(extent / h)));
  return GridSpec(0.0, extent, intervals + 1);
}

}  // namespace susyext
