#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "loghankel/classes.hpp"
#include "loghankel/series.hpp"

namespace loghankel {

// One piece of a piecewise bound: the value plus a 1-based branch index
// ("branch1", "branch2", ...) counting pieces from small alpha upward.
struct BoundValue {
  double value = 0.0;
  int branch = 1;
  std::string label() const { return "branch" + std::to_string(branch); }
};

// Sharp bound for |H_{2,1}| over the convex class:
//   alpha^2/36                                      for alpha <= 1/3
//   alpha^2 (17+18a+13a^2) / (144 (4+6a+a^2))       for alpha  > 1/3
BoundValue bound_convex(double alpha);

// Sharp bound over the starlike class:
//   alpha^2/4                                       for alpha <  1/5
//   alpha^2 (2+5a+15a^2) / (7+30a+35a^2)            for 1/5 <= alpha <= alpha'
//   alpha^2 (4+35a^2) / 36                          for alpha  > alpha'
BoundValue bound_starlike(double alpha);

BoundValue bound_for(const AlphaClassSpec& spec);

// Unique root in (0,1) of 44 + 60a + 155a^2 - 1050a^3 - 1225a^4, computed by
// bisection on [0.3, 0.5]; the two upper starlike branch formulas agree there.
double alpha_prime();

// Breakpoint constants of the two upper branches.
double convex_t0(double alpha);    // 4(3a-1)/(4+6a+a^2); tau = sqrt(t0)
double starlike_s0(double alpha);  // 12(5a-1)/(7+30a+35a^2); zeta = sqrt(s0)

// Interior case-analysis roots (well defined on all of (0,1]).
double convex_u2(double alpha);
double starlike_t2(double alpha);

// The branch-appropriate extremal Caratheodory series:
//   convex,   alpha <= 1/3        -> (1+z^2)/(1-z^2)
//   convex,   alpha  > 1/3        -> (1-tau z+z^2)/(1-z^2)
//   starlike, alpha <  1/5        -> (1+z^2)/(1-z^2)
//   starlike, 1/5 <= a <= alpha'  -> (1-zeta z+z^2)/(1-z^2)
//   starlike, alpha  > alpha'     -> (1+z)/(1-z)
TruncatedSeries extremal_p(const AlphaClassSpec& spec,
                           int order = TruncatedSeries::kDefaultOrder);

struct BoundReport {
  AlphaClassSpec spec;
  std::string branch;
  double bound = 0.0;
  std::map<std::string, double> constants;
  TruncatedSeries extremal_p;
  double attained = 0.0;
  double gap = 0.0;  // bound - attained
  double tol = 0.0;
  bool passed = false;  // |gap| <= tol
  std::string note;

  // Filled by the optimizer's batch driver.
  std::optional<double> numeric_max;
  std::optional<double> margin;
  std::optional<std::uint64_t> evaluations;
};

// Build the extremal member, push it through the coefficient pipeline, and
// compare |H_{2,1}| against the branch bound. A gap beyond tol is reported in
// the result (passed = false), not thrown.
BoundReport verify_sharpness(const AlphaClassSpec& spec, double tol);

}  // namespace loghankel
