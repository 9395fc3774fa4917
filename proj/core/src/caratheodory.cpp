#include "loghankel/caratheodory.hpp"

#include <algorithm>
#include <cmath>

namespace loghankel {

TruncatedSeries herglotz_series(const HerglotzMixture& m, int order) {
  double total = 0.0;
  for (const HerglotzAtom& a : m.atoms) {
    if (!std::isfinite(a.weight) || !std::isfinite(a.angle) || a.weight < 0.0) {
      throw std::domain_error("herglotz_series: invalid atom");
    }
    total += a.weight;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw std::domain_error("herglotz_series: weights must sum to 1");
  }
  std::vector<Complex> c(static_cast<size_t>(order) + 1, Complex(0.0));
  c[0] = Complex(total);
  for (int n = 1; n <= order; ++n) {
    Complex acc(0.0);
    for (const HerglotzAtom& a : m.atoms) {
      acc += a.weight * std::polar(1.0, static_cast<double>(n) * a.angle);
    }
    c[static_cast<size_t>(n)] = 2.0 * acc;
  }
  return TruncatedSeries(std::move(c));
}

bool is_caratheodory_approx(const TruncatedSeries& p, int grid) {
  if (std::abs(p[0] - Complex(1.0)) > 1e-9) return false;
  for (int n = 1; n <= p.order(); ++n) {
    if (std::abs(p[n]) > 2.0 + 1e-9) return false;
  }
  const int g = std::max(grid, 4);
  const double two_pi = 2.0 * std::acos(-1.0);
  for (int i = 1; i <= g; ++i) {
    const double r = 0.95 * static_cast<double>(i) / static_cast<double>(g);
    // A true member differs from its partial sum by at most
    // sum_{n>N} 2 r^n = 2 r^{N+1} / (1 - r), so only dips below that
    // allowance are conclusive.
    const double tail =
        2.0 * std::pow(r, static_cast<double>(p.order() + 1)) / (1.0 - r);
    for (int j = 0; j < g; ++j) {
      const double phi = two_pi * static_cast<double>(j) / static_cast<double>(g);
      const Complex z = std::polar(r, phi);
      if (p.eval(z).real() < -1e-9 - tail) return false;
    }
  }
  return true;
}

}  // namespace loghankel
