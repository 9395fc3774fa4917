#pragma once

#include <stdexcept>
#include <string>

#include "loghankel/series.hpp"

namespace loghankel {

enum class ClassKind { StronglyConvex, StronglyStarlike };

std::string kind_name(ClassKind kind);  // "convex" / "starlike"

// A strongly convex / strongly starlike class of order alpha in (0,1].
struct AlphaClassSpec {
  ClassKind kind = ClassKind::StronglyStarlike;
  double alpha = 1.0;

  void validate() const {
    if (!(alpha > 0.0 && alpha <= 1.0)) {
      throw std::domain_error("AlphaClassSpec: alpha must be in (0,1]");
    }
  }
};

struct A234 {
  Complex a2, a3, a4;
};

// Coefficients a2..a4 of the class member driven by the Caratheodory moments
// (c1, c2, c3). For the starlike class:
//   a2 = alpha c1
//   a3 = (alpha/4)  (2 c2 + (3 alpha - 1) c1^2)
//   a4 = (alpha/36) (12 c3 + 6(5 alpha - 2) c1 c2 + (17 alpha^2 - 15 alpha + 4) c1^3)
// The convex class has the same polynomials with a2 = alpha c1 / 2 and
// denominators 12 / 144 instead of 4 / 36.
inline A234 a234_closed_form(const AlphaClassSpec& spec, Complex c1, Complex c2,
                             Complex c3) {
  spec.validate();
  const double al = spec.alpha;
  const Complex c1sq = c1 * c1;
  const Complex p3 = 2.0 * c2 + (3.0 * al - 1.0) * c1sq;
  const Complex p4 = 12.0 * c3 + (6.0 * (5.0 * al - 2.0)) * (c1 * c2) +
                     (17.0 * al * al - 15.0 * al + 4.0) * (c1sq * c1);
  if (spec.kind == ClassKind::StronglyStarlike) {
    return {al * c1, (al / 4.0) * p3, (al / 36.0) * p4};
  }
  return {(al / 2.0) * c1, (al / 12.0) * p3, (al / 144.0) * p4};
}

// Solve the defining relation order-by-order for f with f[1] = 1:
//   starlike:  z f' = f * p^alpha
//   convex:    z f'' = f' * (p^alpha - 1)
// Result has order p.order() + 1.
TruncatedSeries f_from_p(const AlphaClassSpec& spec, const TruncatedSeries& p);

}  // namespace loghankel
