#include "loghankel/functionals.hpp"

#include <cmath>
#include <stdexcept>

namespace loghankel {

namespace {

void check_normalized(const TruncatedSeries& f, const char* what) {
  if (std::abs(f[0]) > 1e-12 || std::abs(f[1] - Complex(1.0)) > 1e-12) {
    throw std::domain_error(std::string(what) +
                            ": series must be normalized (c0=0, c1=1)");
  }
}

void check_has_a4(const TruncatedSeries& f, const char* what) {
  if (f.order() < 4) {
    throw std::range_error(std::string(what) + ": order must be >= 4");
  }
}

}  // namespace

std::vector<Complex> log_coeffs(const TruncatedSeries& f, int n) {
  check_normalized(f, "log_coeffs");
  if (n < 1 || n > f.order() - 1) {
    throw std::range_error("log_coeffs: n must be in [1, order-1]");
  }
  const TruncatedSeries l = log_over_lead(f);
  std::vector<Complex> g(static_cast<size_t>(n));
  for (int k = 1; k <= n; ++k) g[static_cast<size_t>(k - 1)] = 0.5 * l[k];
  return g;
}

InverseTriple inverse_coeffs(const TruncatedSeries& f) {
  check_normalized(f, "inverse_coeffs");
  check_has_a4(f, "inverse_coeffs");
  return inverse_coeffs_from_a(f[2], f[3], f[4]);
}

LogInvTriple log_inverse_coeffs(const TruncatedSeries& f) {
  check_normalized(f, "log_inverse_coeffs");
  check_has_a4(f, "log_inverse_coeffs");
  return log_inverse_coeffs_from_a(f[2], f[3], f[4]);
}

Complex h21_log_inverse(const TruncatedSeries& f) {
  check_normalized(f, "h21_log_inverse");
  check_has_a4(f, "h21_log_inverse");
  return h21_from_a234(f[2], f[3], f[4]);
}

}  // namespace loghankel
