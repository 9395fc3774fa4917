#include "loghankel/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "loghankel/caratheodory.hpp"
#include "loghankel/functionals.hpp"

namespace loghankel {

namespace {

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw std::domain_error("bound: alpha must be in (0,1]");
  }
}

double breakpoint_quartic(double a) {
  return 44.0 + 60.0 * a + 155.0 * a * a - 1050.0 * a * a * a -
         1225.0 * a * a * a * a;
}

}  // namespace

double alpha_prime() {
  static const double root = [] {
    double lo = 0.3, hi = 0.5;
    // The quartic is positive at 0.3 and negative at 0.5 with a single sign
    // change; bisect to machine precision.
    for (int i = 0; i < 200 && hi - lo > 0.0; ++i) {
      const double mid = 0.5 * (lo + hi);
      if (breakpoint_quartic(mid) > 0.0) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    return 0.5 * (lo + hi);
  }();
  return root;
}

BoundValue bound_convex(double alpha) {
  check_alpha(alpha);
  if (alpha <= 1.0 / 3.0) return {alpha * alpha / 36.0, 1};
  return {alpha * alpha * (17.0 + 18.0 * alpha + 13.0 * alpha * alpha) /
              (144.0 * (4.0 + 6.0 * alpha + alpha * alpha)),
          2};
}

BoundValue bound_starlike(double alpha) {
  check_alpha(alpha);
  if (alpha < 0.2) return {alpha * alpha / 4.0, 1};
  if (alpha <= alpha_prime()) {
    return {alpha * alpha * (2.0 + 5.0 * alpha + 15.0 * alpha * alpha) /
                (7.0 + 30.0 * alpha + 35.0 * alpha * alpha),
            2};
  }
  return {alpha * alpha * (4.0 + 35.0 * alpha * alpha) / 36.0, 3};
}

BoundValue bound_for(const AlphaClassSpec& spec) {
  return spec.kind == ClassKind::StronglyConvex ? bound_convex(spec.alpha)
                                                : bound_starlike(spec.alpha);
}

double convex_t0(double alpha) {
  return 4.0 * (3.0 * alpha - 1.0) / (4.0 + 6.0 * alpha + alpha * alpha);
}

double starlike_s0(double alpha) {
  return 12.0 * (5.0 * alpha - 1.0) /
         (7.0 + 30.0 * alpha + 35.0 * alpha * alpha);
}

double convex_u2(double alpha) {
  const double a = alpha;
  const double rad =
      52.0 * a * a * a * a + 72.0 * a * a * a + 217.0 * a * a + 144.0 * a + 64.0;
  return 4.0 * (-(4.0 * a * a + 3.0 * a + 8.0) + std::sqrt(rad)) /
         (3.0 * a * a * a + 4.0 * a * a + 12.0 * a + 8.0);
}

double starlike_t2(double alpha) {
  const double a = alpha;
  const double rad = 4.0 + 20.0 * a + 120.0 * a * a + 175.0 * a * a * a +
                     525.0 * a * a * a * a;
  return 12.0 * (2.0 * std::sqrt(rad) - (4.0 + 5.0 * a + 35.0 * a * a)) /
         (8.0 + 35.0 * a + 70.0 * a * a + 175.0 * a * a * a);
}

namespace {

const double kPi = std::acos(-1.0);

// (1 - mu z + z^2)/(1 - z^2) as a two-atom mixture: weights (2 -+ mu)/4 at
// angles 0 and pi. mu = 0 gives (1+z^2)/(1-z^2).
TruncatedSeries two_atom_p(double mu, int order) {
  return herglotz_series(
      HerglotzMixture{{{(2.0 - mu) / 4.0, 0.0}, {(2.0 + mu) / 4.0, kPi}}},
      order);
}

}  // namespace

TruncatedSeries extremal_p(const AlphaClassSpec& spec, int order) {
  spec.validate();
  const double a = spec.alpha;
  if (spec.kind == ClassKind::StronglyConvex) {
    if (a <= 1.0 / 3.0) return two_atom_p(0.0, order);
    return two_atom_p(std::sqrt(convex_t0(a)), order);
  }
  if (a < 0.2) return two_atom_p(0.0, order);
  if (a <= alpha_prime()) return two_atom_p(std::sqrt(starlike_s0(a)), order);
  return herglotz_series(HerglotzMixture{{{1.0, 0.0}}}, order);
}

BoundReport verify_sharpness(const AlphaClassSpec& spec, double tol) {
  spec.validate();
  if (!(tol > 0.0)) {
    throw std::domain_error("verify_sharpness: tol must be positive");
  }
  const double a = spec.alpha;
  BoundReport report;
  report.spec = spec;
  report.tol = tol;
  const BoundValue bv = bound_for(spec);
  report.bound = bv.value;
  report.branch = bv.label();
  report.extremal_p = extremal_p(spec);

  if (spec.kind == ClassKind::StronglyConvex) {
    if (bv.branch == 2) {
      report.constants["t0"] = convex_t0(a);
      report.constants["tau"] = std::sqrt(convex_t0(a));
      report.constants["u2"] = convex_u2(a);
    } else {
      // The half-plane kernel (1+z)/(1-z) realizes only a^2(2+a^2)/144 here;
      // the two-atom extremal (1+z^2)/(1-z^2) attains the stated a^2/36.
      report.note = "branch1 extremal is (1+z^2)/(1-z^2)";
    }
  } else {
    if (bv.branch >= 2) report.constants["alpha_prime"] = alpha_prime();
    if (bv.branch == 2) {
      report.constants["s0"] = starlike_s0(a);
      report.constants["zeta"] = std::sqrt(starlike_s0(a));
    }
    if (bv.branch == 3) report.constants["t2"] = starlike_t2(a);
  }

  const TruncatedSeries f = f_from_p(spec, report.extremal_p);
  report.attained = std::abs(h21_log_inverse(f));
  report.gap = report.bound - report.attained;
  report.passed = std::fabs(report.gap) <= tol;
  return report;
}

}  // namespace loghankel
