#include "susyext/domain.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace susyext {

namespace {

void require(bool ok, const char* field, const char* what) {
  if (!ok) throw InvalidParameter(field, what);
}

void require_finite(double v, const char* field) {
  require(std::isfinite(v), field, "must be finite");
}

}  // namespace

double q_of(double Q) {
  if (!(Q > 0.0) || !std::isfinite(Q)) {
    throw DomainError("q_of: Q must be positive and finite, got " + std::to_string(Q));
  }
  return 0.5 * std::log(Q);
}

MorseParams::MorseParams(double A, double B) : A_(A), B_(B) {
  require_finite(A, "A");
  require_finite(B, "B");
  require(A > 0.0, "A", "must be > 0");
  require(B > 0.0, "B", "must be > 0");
}

ExtensionParams::ExtensionParams(double P, double Q) : P_(P), Q_(Q) {
  require_finite(P, "P");
  require_finite(Q, "Q");
  // Q < 0 puts the pole of X1 at e^{2x} = -Q on the real line.
  require(Q >= 0.0, "Q", "must be >= 0");
}

double ExtensionParams::q() const {
  if (!has_shift()) throw DomainError("shift q = ln(Q)/2 is undefined for Q = 0");
  return q_of(Q_);
}

ScarfParams::ScarfParams(double A, double Bp) : A_(A), Bp_(Bp) {
  require_finite(A, "A");
  require_finite(Bp, "Bp");
  require(A > 0.0, "A", "must be > 0");
}

RadialExtParams::RadialExtParams(double omega, double l, int n, double P, double Q)
    : omega_(omega), l_(l), n_(n), P_(P), Q_(Q) {
  require_finite(omega, "omega");
  require_finite(l, "l");
  require_finite(P, "P");
  require_finite(Q, "Q");
  require(omega > 0.0, "omega", "must be > 0");
  require(l >= 0.0, "l", "must be >= 0");
  require(n >= 0, "n", "must be >= 0");
  require(Q >= 0.0, "Q", "must be >= 0");
}

CoulombExtParams::CoulombExtParams(double Z, double l, int n, double P, double Q)
    : Z_(Z), l_(l), n_(n), P_(P), Q_(Q) {
  require_finite(Z, "Z");
  require_finite(l, "l");
  require_finite(P, "P");
  require_finite(Q, "Q");
  require(Z > 0.0, "Z", "must be > 0");
  require(l >= 0.0, "l", "must be >= 0");
  require(n >= 0, "n", "must be >= 0");
  require(Q >= 0.0, "Q", "must be >= 0");
}

GridSpec::GridSpec(double x_min, double x_max, std::size_t count)
    : x_min_(x_min), x_max_(x_max), count_(count) {
  require_finite(x_min, "x_min");
  require_finite(x_max, "x_max");
  require(x_min < x_max, "x_max", "must exceed x_min");
  require(count >= 3, "count", "must be >= 3");
}

double GridSpec::node(std::size_t i) const noexcept {
  if (i + 1 == count_) return x_max_;
  return x_min_ + static_cast<double>(i) * spacing();
}

std::vector<double> GridSpec::nodes() const {
  std::vector<double> x(count_);
  for (std::size_t i = 0; i < count_; ++i) x[i] = node(i);
  return x;
}

SampledFunction::SampledFunction(GridSpec grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
  require(values_.size() == grid_.count(), "values", "length must equal grid count");
  require(std::all_of(values_.begin(), values_.end(), [](double v) { return std::isfinite(v); }),
          "values", "must all be finite");
}

double SampledFunction::max_abs() const noexcept {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace susyext
