#include "loghankel/series.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace loghankel {

namespace {

constexpr double kNormTol = 1e-12;

bool finite(Complex c) {
  return std::isfinite(c.real()) && std::isfinite(c.imag());
}

void check_same_order(const TruncatedSeries& a, const TruncatedSeries& b,
                      const char* what) {
  if (a.order() != b.order()) {
    throw std::invalid_argument(std::string(what) + ": order mismatch");
  }
}

// Cauchy product of coefficient vectors, truncated at order n_max.
std::vector<Complex> conv(const std::vector<Complex>& a,
                          const std::vector<Complex>& b, int n_max) {
  std::vector<Complex> c(static_cast<size_t>(n_max) + 1, Complex(0.0));
  for (int i = 0; i <= n_max && i < static_cast<int>(a.size()); ++i) {
    if (a[static_cast<size_t>(i)] == Complex(0.0)) continue;
    const int j_hi = std::min(n_max - i, static_cast<int>(b.size()) - 1);
    for (int j = 0; j <= j_hi; ++j) {
      c[static_cast<size_t>(i + j)] +=
          a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)];
    }
  }
  return c;
}

}  // namespace

TruncatedSeries::TruncatedSeries(int order) {
  if (order < kMinOrder) {
    throw std::invalid_argument("TruncatedSeries: order must be >= 3");
  }
  coeffs_.assign(static_cast<size_t>(order) + 1, Complex(0.0));
}

TruncatedSeries::TruncatedSeries(std::vector<Complex> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (static_cast<int>(coeffs_.size()) < kMinOrder + 1) {
    throw std::invalid_argument("TruncatedSeries: order must be >= 3");
  }
  for (Complex c : coeffs_) {
    if (!finite(c)) {
      throw std::invalid_argument("TruncatedSeries: non-finite coefficient");
    }
  }
}

TruncatedSeries TruncatedSeries::constant(Complex c0, int order) {
  TruncatedSeries s(order);
  s.coeffs_[0] = c0;
  return s;
}

TruncatedSeries TruncatedSeries::identity(int order) {
  TruncatedSeries s(order);
  s.coeffs_[1] = Complex(1.0);
  return s;
}

Complex TruncatedSeries::eval(Complex z) const {
  Complex acc(0.0);
  for (int k = order(); k >= 0; --k) acc = acc * z + coeffs_[static_cast<size_t>(k)];
  return acc;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  check_same_order(a, b, "operator+");
  std::vector<Complex> c(a.coeffs());
  for (size_t k = 0; k < c.size(); ++k) c[k] += b.coeffs()[k];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  check_same_order(a, b, "operator-");
  std::vector<Complex> c(a.coeffs());
  for (size_t k = 0; k < c.size(); ++k) c[k] -= b.coeffs()[k];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries operator*(Complex s, const TruncatedSeries& a) {
  std::vector<Complex> c(a.coeffs());
  for (Complex& v : c) v *= s;
  return TruncatedSeries(std::move(c));
}

TruncatedSeries operator*(double s, const TruncatedSeries& a) {
  return Complex(s) * a;
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  check_same_order(a, b, "mul");
  return TruncatedSeries(conv(a.coeffs(), b.coeffs(), a.order()));
}

TruncatedSeries compose(const TruncatedSeries& outer,
                        const TruncatedSeries& inner) {
  check_same_order(outer, inner, "compose");
  if (std::abs(inner[0]) > kNormTol) {
    throw std::domain_error("compose: inner constant term must be 0");
  }
  const int n = outer.order();
  // Horner from the top; truncation is exact because inner has no constant
  // term, so outer[k] only influences orders >= k.
  std::vector<Complex> acc(static_cast<size_t>(n) + 1, Complex(0.0));
  acc[0] = outer[n];
  for (int k = n - 1; k >= 0; --k) {
    acc = conv(acc, inner.coeffs(), n);
    acc[0] += outer[k];
  }
  return TruncatedSeries(std::move(acc));
}

namespace {

void check_normalized(const TruncatedSeries& f, const char* what) {
  if (std::abs(f[0]) > kNormTol || std::abs(f[1] - Complex(1.0)) > kNormTol) {
    throw std::domain_error(std::string(what) +
                            ": series must be normalized (c0=0, c1=1)");
  }
}

}  // namespace

TruncatedSeries revert(const TruncatedSeries& f) {
  check_normalized(f, "revert");
  const int n = f.order();
  std::vector<Complex> g(static_cast<size_t>(n) + 1, Complex(0.0));
  g[1] = Complex(1.0);
  // Triangular elimination: with g correct below order m, the coefficient m of
  // f(g) depends on g[m] only through the linear term of f, so one subtraction
  // zeroes it without disturbing lower orders.
  for (int m = 2; m <= n; ++m) {
    const TruncatedSeries h = compose(f, TruncatedSeries(g));
    g[static_cast<size_t>(m)] -= h[m];
  }
  return TruncatedSeries(std::move(g));
}

TruncatedSeries exp_series(const TruncatedSeries& s) {
  const int n = s.order();
  std::vector<Complex> e(static_cast<size_t>(n) + 1);
  e[0] = std::exp(s[0]);
  // From E' = S'E:  n E_n = sum_{k=1..n} k S_k E_{n-k}.
  for (int m = 1; m <= n; ++m) {
    Complex acc(0.0);
    for (int k = 1; k <= m; ++k) {
      acc += static_cast<double>(k) * s[k] * e[static_cast<size_t>(m - k)];
    }
    e[static_cast<size_t>(m)] = acc / static_cast<double>(m);
  }
  return TruncatedSeries(std::move(e));
}

TruncatedSeries log_series(const TruncatedSeries& s) {
  if (std::abs(s[0]) <= kNormTol) {
    throw std::domain_error("log_series: constant term must be nonzero");
  }
  const int n = s.order();
  std::vector<Complex> l(static_cast<size_t>(n) + 1);
  l[0] = std::log(s[0]);
  // From u L' = u':  m u_0 L_m = m u_m - sum_{k=1..m-1} u_k (m-k) L_{m-k}.
  for (int m = 1; m <= n; ++m) {
    Complex acc = static_cast<double>(m) * s[m];
    for (int k = 1; k < m; ++k) {
      acc -= s[k] * (static_cast<double>(m - k) * l[static_cast<size_t>(m - k)]);
    }
    l[static_cast<size_t>(m)] = acc / (static_cast<double>(m) * s[0]);
  }
  return TruncatedSeries(std::move(l));
}

TruncatedSeries log_over_lead(const TruncatedSeries& f) {
  check_normalized(f, "log_over_lead");
  return log_series(div_by_z(f));
}

TruncatedSeries pow_real(const TruncatedSeries& p, double alpha) {
  if (!std::isfinite(alpha)) {
    throw std::invalid_argument("pow_real: exponent must be finite");
  }
  if (std::abs(p[0] - Complex(1.0)) > kNormTol) {
    throw std::domain_error("pow_real: constant term must be 1");
  }
  return exp_series(alpha * log_series(p));
}

TruncatedSeries mul_by_z(const TruncatedSeries& s) {
  std::vector<Complex> c(s.coeffs().size() + 1, Complex(0.0));
  for (size_t k = 0; k < s.coeffs().size(); ++k) c[k + 1] = s.coeffs()[k];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries div_by_z(const TruncatedSeries& s) {
  if (std::abs(s[0]) > kNormTol) {
    throw std::domain_error("div_by_z: constant term must be 0");
  }
  std::vector<Complex> c(s.coeffs().begin() + 1, s.coeffs().end());
  return TruncatedSeries(std::move(c));
}

double max_abs_diff(const TruncatedSeries& a, const TruncatedSeries& b) {
  check_same_order(a, b, "max_abs_diff");
  double m = 0.0;
  for (size_t k = 0; k < a.coeffs().size(); ++k) {
    m = std::max(m, std::abs(a.coeffs()[k] - b.coeffs()[k]));
  }
  return m;
}

}  // namespace loghankel
