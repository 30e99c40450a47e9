#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "susyext/errors.hpp"

namespace susyext {

/// Half-log of the extension constant: Q = e^{2q}. Throws DomainError for Q <= 0.
double q_of(double Q);

/// Plain Morse parameters of V_{A,B}(x) = B^2 e^{-2x} - B(2A+1) e^{-x}.
class MorseParams {
 public:
  MorseParams(double A, double B);
  double A() const noexcept { return A_; }
  double B() const noexcept { return B_; }

 private:
  double A_;
  double B_;
};

/// Integration constants (P, Q) of the extended superpotential.
///
/// Q = 0 is the plain-Morse limit; every closed form that needs the shift
/// q = ln(Q)/2 rejects it with DomainError.
class ExtensionParams {
 public:
  ExtensionParams(double P, double Q);
  double P() const noexcept { return P_; }
  double Q() const noexcept { return Q_; }
  bool has_shift() const noexcept { return Q_ > 0.0; }
  double q() const;  // throws DomainError when Q == 0

 private:
  double P_;
  double Q_;
};

class ScarfParams {
 public:
  ScarfParams(double A, double Bp);
  double A() const noexcept { return A_; }
  double Bp() const noexcept { return Bp_; }

 private:
  double A_;
  double Bp_;
};

/// Extended radial oscillator: frequency, effective (real) angular momentum,
/// the single carried-over level n, and the extension constants.
class RadialExtParams {
 public:
  RadialExtParams(double omega, double l, int n, double P, double Q);
  double omega() const noexcept { return omega_; }
  double l() const noexcept { return l_; }
  int n() const noexcept { return n_; }
  double P() const noexcept { return P_; }
  double Q() const noexcept { return Q_; }

 private:
  double omega_;
  double l_;
  int n_;
  double P_;
  double Q_;
};

class CoulombExtParams {
 public:
  CoulombExtParams(double Z, double l, int n, double P, double Q);
  double Z() const noexcept { return Z_; }
  double l() const noexcept { return l_; }
  int n() const noexcept { return n_; }
  double P() const noexcept { return P_; }
  double Q() const noexcept { return Q_; }

 private:
  double Z_;
  double l_;
  int n_;
  double P_;
  double Q_;
};

/// Uniform grid x_i = x_min + i*h, i = 0..count-1.
class GridSpec {
 public:
  GridSpec(double x_min, double x_max, std::size_t count);
  double x_min() const noexcept { return x_min_; }
  double x_max() const noexcept { return x_max_; }
  std::size_t count() const noexcept { return count_; }
  double spacing() const noexcept { return (x_max_ - x_min_) / static_cast<double>(count_ - 1); }
  double node(std::size_t i) const noexcept;
  std::vector<double> nodes() const;

 private:
  double x_min_;
  double x_max_;
  std::size_t count_;
};

class SampledFunction {
 public:
  SampledFunction(GridSpec grid, std::vector<double> values);

  template <class F>
  static SampledFunction sample(const GridSpec& grid, F&& f) {
    std::vector<double> v(grid.count());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = f(grid.node(i));
    return SampledFunction(grid, std::move(v));
  }

  const GridSpec& grid() const noexcept { return grid_; }
  std::span<const double> values() const noexcept { return values_; }
  double operator[](std::size_t i) const noexcept { return values_[i]; }
  std::size_t size() const noexcept { return values_.size(); }
  double max_abs() const noexcept;

 private:
  GridSpec grid_;
  std::vector<double> values_;
};

}  // namespace susyext
