#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "susyext/domain.hpp"

namespace susyext {

/// First derivative with the 4th-order central stencil and 4th-order
/// one-sided closures at the two nodes nearest each end. Needs count >= 5.
std::vector<double> first_derivative(const SampledFunction& f);

/// Simpson rule; an even node count falls back to the trapezoid on the last panel.
double quadrature(const SampledFunction& f);

/// |<a, b>| / (||a|| ||b||) under Simpson quadrature. Grids must match.
double overlap(const SampledFunction& a, const SampledFunction& b);

/// Symmetric tridiagonal matrix: diag[0..m-1], offdiag[0..m-2].
struct TridiagonalMatrix {
  std::vector<double> diag;
  std::vector<double> offdiag;

  std::size_t size() const noexcept { return diag.size(); }
};

/// -d^2/dx^2 + V with the 3-point stencil on the interior nodes (Dirichlet ends):
/// diag = 2/h^2 + V_i, offdiag = -1/h^2, size count - 2.
TridiagonalMatrix build_hamiltonian(const SampledFunction& V);
/// Same from interior samples only, for potentials that cannot be sampled at the ends.
TridiagonalMatrix build_hamiltonian(std::span<const double> interior_V, double h);

/// Number of eigenvalues strictly below E (Sturm sequence / LDL^T inertia).
std::size_t sturm_count(const TridiagonalMatrix& T, double E);

/// The k smallest eigenvalues, ascending, by Sturm bisection.
std::vector<double> eigen_lowest(const TridiagonalMatrix& T, std::size_t k);

struct EigenPairs {
  std::vector<double> values;
  std::vector<std::vector<double>> vectors;  // unit 2-norm
};

/// Eigenvalues by bisection, eigenvectors by inverse iteration.
/// ConvergenceError if inverse iteration stalls after its restarts.
EigenPairs eigen_lowest_with_vectors(const TridiagonalMatrix& T, std::size_t k);

enum class BoxKind {
  line,       // (-inf, inf): both ends move out on doubling
  half_line,  // (0, inf): x_min stays put, only x_max moves
};

struct SolveOptions {
  BoxKind box = BoxKind::line;
  /// Fixed point of domain doubling on the line; NaN means the domain midpoint.
  double anchor = std::numeric_limits<double>::quiet_NaN();
  bool want_vectors = false;
  int max_doublings = 6;
  /// Upper bound on grid intervals of the finest solve.
  std::size_t max_intervals = std::size_t{1} << 21;
  bool parallel = true;
};

struct SpectralResult {
  std::vector<double> energies;  // Richardson-extrapolated, ascending
  std::optional<std::vector<SampledFunction>> eigenvectors;  // finest grid, unit Simpson norm
  double h = 0.0;                                            // spacing of the finest grid
  bool extrapolated = false;
  std::vector<double> residuals;        // ||(T - E)v|| / (||T||_1 ||v||) on the finest grid
  std::vector<double> error_estimates;  // |R(h, h/2) - R(2h, h)| per level
  GridSpec domain{0.0, 1.0, 3};
  int domain_doublings = 0;
};

/// Lowest k levels of -d^2/dx^2 + V on a Dirichlet box.
///
/// For each box the levels are computed at spacings 2h, h, h/2 and
/// extrapolated as R = (4E_{h/2} - E_h)/3; h is halved until two successive
/// extrapolations agree within tol. The box is then doubled until no level
/// moves by tol or more. V is evaluated on interior nodes only.
SpectralResult solve_bound_states(const std::function<double(double)>& V, const GridSpec& domain, std::size_t k,
                                  double tol, const SolveOptions& options = {});

/// ||(-D2 + V - E) psi|| / ||psi|| over nodes 2..count-3, D2 the 5-point 4th-order stencil.
double schrodinger_residual(const SampledFunction& psi, const SampledFunction& V, double E);

/// Line box [center - 8, center + 8/(A - ceil(A) + 1)] with spacing close to h.
GridSpec suggest_line_domain(double center, double A, double h);
/// Half-line box [0, extent] with spacing close to h.
GridSpec suggest_radial_domain(double extent, double h);

}  // namespace susyext
