#pragma once

#include <vector>

namespace susyext {

/// Generalized Laguerre L_n^{(alpha)}(y) by the three-term recurrence
/// (k+1) L_{k+1} = (2k + 1 + alpha - y) L_k - (k + alpha) L_{k-1}.
double laguerre(int n, double alpha, double y);

/// Romanovski polynomial R_n^{(a,b)} in explicit monomial form.
///
/// Defined by the Rodrigues formula
///   R_n(s) = (1+s^2)^{1-b} e^{-a atan s} d^n/ds^n [(1+s^2)^{b-1+n} e^{a atan s}],
/// i.e. weight (1+s^2)^{b-1} e^{a atan s}. Each derivative maps
/// (1+s^2)^c e^{a atan s} p(s) to (1+s^2)^{c-1} e^{a atan s} [(2cs + a) p + (1+s^2) p'],
/// so the coefficients follow from n applications of that step.
class RomanovskiPolynomial {
 public:
  RomanovskiPolynomial(int n, double a, double b);

  int n() const noexcept { return n_; }
  /// Coefficients c_0..c_n of s^0..s^n; c_n may vanish for special (a, b).
  const std::vector<double>& coefficients() const noexcept { return coeffs_; }
  double operator()(double s) const noexcept;

 private:
  int n_;
  std::vector<double> coeffs_;
};

double romanovski(int n, double a, double b, double s);

}  // namespace susyext
