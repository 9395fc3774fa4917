#include "loghankel/classes.hpp"

#include <cmath>

namespace loghankel {

std::string kind_name(ClassKind kind) {
  return kind == ClassKind::StronglyConvex ? "convex" : "starlike";
}

TruncatedSeries f_from_p(const AlphaClassSpec& spec, const TruncatedSeries& p) {
  spec.validate();
  if (std::abs(p[0] - Complex(1.0)) > 1e-12) {
    throw std::domain_error("f_from_p: p must have constant term 1");
  }
  const TruncatedSeries q = pow_real(p, spec.alpha);
  const int n_out = p.order() + 1;  // a_{N+1} needs q_N and nothing higher
  std::vector<Complex> a(static_cast<size_t>(n_out) + 1, Complex(0.0));
  a[1] = Complex(1.0);
  if (spec.kind == ClassKind::StronglyStarlike) {
    // z f' = f q:  (n-1) a_n = sum_{k=1..n-1} a_k q_{n-k}.
    for (int n = 2; n <= n_out; ++n) {
      Complex acc(0.0);
      for (int k = 1; k < n; ++k) acc += a[static_cast<size_t>(k)] * q[n - k];
      a[static_cast<size_t>(n)] = acc / static_cast<double>(n - 1);
    }
  } else {
    // z f'' = f' (q - 1):  m(m+1) a_{m+1} = sum_{j=0..m-1} (j+1) a_{j+1} q_{m-j}.
    for (int m = 1; m < n_out; ++m) {
      Complex acc(0.0);
      for (int j = 0; j < m; ++j) {
        acc += static_cast<double>(j + 1) * a[static_cast<size_t>(j + 1)] *
               q[m - j];
      }
      a[static_cast<size_t>(m + 1)] =
          acc / static_cast<double>(m * (m + 1));
    }
  }
  return TruncatedSeries(std::move(a));
}

}  // namespace loghankel
