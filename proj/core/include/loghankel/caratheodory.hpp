#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "loghankel/series.hpp"

namespace loghankel {

// One boundary kernel (1 + e^{i angle} z) / (1 - e^{i angle} z) with convex
// weight.
struct HerglotzAtom {
  double weight = 0.0;
  double angle = 0.0;
};

// Finite convex combination of boundary kernels; every mixture is a genuine
// member of the Caratheodory class with c_n = 2 sum_k weight_k e^{i n angle_k}.
struct HerglotzMixture {
  std::vector<HerglotzAtom> atoms;
};

// The standard two-parameter description of the first three Caratheodory
// moments: c1 real in [0,2], x and w in the closed unit disk.
struct LZParams {
  double c1 = 0.0;
  Complex x{};
  Complex w{};
};

struct CoeffTriple {
  Complex c1, c2, c3;
};

inline constexpr double kLZRangeTol = 1e-12;

// Series expansion of a mixture (validates weights; c_0 = sum of weights).
TruncatedSeries herglotz_series(const HerglotzMixture& m, int order);

// First three moments generated by LZParams:
//   2 c2 = c1^2 + (4 - c1^2) x
//   4 c3 = c1^3 + 2(4 - c1^2) c1 x - c1 (4 - c1^2) x^2
//          + 2(4 - c1^2)(1 - |x|^2) w
// Every admissible (c1, c2, c3) with c1 in [0,2] arises this way, and every
// parameter choice yields an admissible triple.
inline CoeffTriple lz_coefficients(const LZParams& params) {
  const double c = params.c1;
  if (!(c >= -kLZRangeTol && c <= 2.0 + kLZRangeTol) ||
      !(std::norm(params.x) <= 1.0 + kLZRangeTol) ||
      !(std::norm(params.w) <= 1.0 + kLZRangeTol)) {
    throw std::domain_error("lz_coefficients: parameters out of range");
  }
  const double r = 4.0 - c * c;
  const Complex x = params.x;
  const Complex c2 = 0.5 * (c * c + r * x);
  const Complex c3 = 0.25 * (Complex(c * c * c) + (2.0 * r * c) * x -
                             (c * r) * (x * x) +
                             (2.0 * r * (1.0 - std::norm(x))) * params.w);
  return {Complex(c), c2, c3};
}

// Cheap sanity net, not a membership proof: coefficient bounds |c_n| <= 2 and
// a positivity scan of the partial sum on a polar grid with r <= 0.95. The
// positivity threshold carries an allowance for the truncation tail (bounded
// via |c_n| <= 2), so genuine members never fail the scan.
bool is_caratheodory_approx(const TruncatedSeries& p, int grid);

}  // namespace loghankel
