#include "susyext/polynomials.hpp"

#include <cmath>
#include <stdexcept>

#include "susyext/errors.hpp"

namespace susyext {

double laguerre(int n, double alpha, double y) {
  if (n < 0) throw DomainError("laguerre: degree must be >= 0");
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = 1.0 + alpha - y;
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0 + alpha - y) * cur - (k + alpha) * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

RomanovskiPolynomial::RomanovskiPolynomial(int n, double a, double b) : n_(n), coeffs_{1.0} {
  if (n < 0) throw DomainError("romanovski: degree must be >= 0");
  double c = b - 1.0 + n;
  for (int step = 0; step < n; ++step) {
    const std::size_t deg = coeffs_.size() - 1;
    std::vector<double> next(deg + 2, 0.0);
    for (std::size_t k = 0; k <= deg; ++k) {
      const double pk = coeffs_[k];
      next[k + 1] += 2.0 * c * pk;  // 2cs p
      next[k] += a * pk;            // a p
      if (k >= 1) {
        // (1 + s^2) p', with p' = sum k p_k s^{k-1}
        next[k - 1] += static_cast<double>(k) * pk;
        next[k + 1] += static_cast<double>(k) * pk;
      }
    }
    coeffs_ = std::move(next);
    c -= 1.0;
  }
}

double RomanovskiPolynomial::operator()(double s) const noexcept {
  double v = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * s + *it;
  return v;
}

double romanovski(int n, double a, double b, double s) { return RomanovskiPolynomial(n, a, b)(s); }

}  // namespace susyext
