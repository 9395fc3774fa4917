#pragma once

#include <complex>
#include <vector>

namespace loghankel {

using Complex = std::complex<double>;

// Power series truncated at a fixed order N >= 3:
//   c[0] + c[1] z + ... + c[N] z^N.
// Values are immutable after construction; all arithmetic lives in free
// functions that return new series.
class TruncatedSeries {
 public:
  static constexpr int kMinOrder = 3;
  static constexpr int kDefaultOrder = 10;

  TruncatedSeries() : TruncatedSeries(kMinOrder) {}
  explicit TruncatedSeries(int order);
  explicit TruncatedSeries(std::vector<Complex> coeffs);

  static TruncatedSeries constant(Complex c0, int order);
  static TruncatedSeries identity(int order);  // the series z

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  Complex operator[](int k) const { return coeffs_[static_cast<size_t>(k)]; }
  const std::vector<Complex>& coeffs() const { return coeffs_; }

  // Partial-sum evaluation at a point (Horner).
  Complex eval(Complex z) const;

 private:
  std::vector<Complex> coeffs_;
};

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator*(Complex s, const TruncatedSeries& a);
TruncatedSeries operator*(double s, const TruncatedSeries& a);

// Cauchy product truncated at the common order; orders must match.
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

// outer(inner(z)) truncated at the common order. Requires inner[0] == 0, which
// makes the truncation exact for every retained order.
TruncatedSeries compose(const TruncatedSeries& outer,
                        const TruncatedSeries& inner);

// Compositional inverse g of a normalized f (f[0] = 0, f[1] = 1):
// compose(f, g) == identity to order N.
TruncatedSeries revert(const TruncatedSeries& f);

// log(f(z)/z) for normalized f; constant term 0, order N-1.
TruncatedSeries log_over_lead(const TruncatedSeries& f);

// p^alpha = exp(alpha * log p) for p with p[0] = 1. Any finite real exponent.
TruncatedSeries pow_real(const TruncatedSeries& p, double alpha);

// exp of an arbitrary series / log of a series with c0 != 0.
TruncatedSeries exp_series(const TruncatedSeries& s);
TruncatedSeries log_series(const TruncatedSeries& s);

// Multiply by z (order grows by one) / divide by z (requires c0 == 0; order
// shrinks by one).
TruncatedSeries mul_by_z(const TruncatedSeries& s);
TruncatedSeries div_by_z(const TruncatedSeries& s);

// max_k |a[k] - b[k]|; orders must match.
double max_abs_diff(const TruncatedSeries& a, const TruncatedSeries& b);

}  // namespace loghankel
