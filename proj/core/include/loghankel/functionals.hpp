#pragma once

#include <vector>

#include "loghankel/series.hpp"

namespace loghankel {

struct InverseTriple {
  Complex A2, A3, A4;
};

// Logarithmic coefficients Gamma_n of the inverse function:
// log(f^{-1}(w)/w) = 2 sum_n Gamma_n w^n.
struct LogInvTriple {
  Complex gamma1, gamma2, gamma3;
};

// Logarithmic coefficients gamma_1..gamma_n of f itself:
// log(f(z)/z) = 2 sum_k gamma_k z^k. Requires n <= f.order() - 1.
std::vector<Complex> log_coeffs(const TruncatedSeries& f, int n);

// First coefficients of the compositional inverse, as polynomials in a2..a4.
inline InverseTriple inverse_coeffs_from_a(Complex a2, Complex a3, Complex a4) {
  return {-a2, 2.0 * (a2 * a2) - a3,
          -a4 + 5.0 * (a2 * a3) - 5.0 * (a2 * a2 * a2)};
}
InverseTriple inverse_coeffs(const TruncatedSeries& f);

// Gamma_1..Gamma_3 as polynomials in a2..a4.
inline LogInvTriple log_inverse_coeffs_from_a(Complex a2, Complex a3,
                                              Complex a4) {
  return {-0.5 * a2, -0.5 * a3 + 0.75 * (a2 * a2),
          -0.5 * a4 + 2.0 * (a2 * a3) - (5.0 / 3.0) * (a2 * a2 * a2)};
}
LogInvTriple log_inverse_coeffs(const TruncatedSeries& f);

// Second Hankel determinant Gamma_1 Gamma_3 - Gamma_2^2 of the logarithmic
// inverse coefficients. Complex-valued; take |.| at comparison sites so the
// e^{4 i theta} rotation covariance stays observable.
inline Complex h21_from_a234(Complex a2, Complex a3, Complex a4) {
  const LogInvTriple g = log_inverse_coeffs_from_a(a2, a3, a4);
  return g.gamma1 * g.gamma3 - g.gamma2 * g.gamma2;
}
Complex h21_log_inverse(const TruncatedSeries& f);

// Independent second path: the same determinant as a degree-4 polynomial
// (13 a2^4 - 12 a2^2 a3 - 12 a3^2 + 12 a2 a4) / 48.
inline Complex h21_quartic(Complex a2, Complex a3, Complex a4) {
  const Complex a2sq = a2 * a2;
  return (13.0 * (a2sq * a2sq) - 12.0 * (a2sq * a3) - 12.0 * (a3 * a3) +
          12.0 * (a2 * a4)) /
         48.0;
}

}  // namespace loghankel
