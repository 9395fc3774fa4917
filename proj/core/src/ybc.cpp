#include "loghankel/ybc.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace loghankel {

std::string branch_name(YBranch b) {
  switch (b) {
    case YBranch::I1: return "i1";
    case YBranch::I2: return "i2";
    case YBranch::II1: return "ii1";
    case YBranch::II2: return "ii2";
    case YBranch::R1: return "r1";
    case YBranch::R2: return "r2";
    case YBranch::R3: return "r3";
  }
  return "?";
}

YResult y_closed_form(const YInputs& in) {
  const double A = in.A, B = in.B, C = in.C;
  if (!std::isfinite(A) || !std::isfinite(B) || !std::isfinite(C)) {
    throw std::invalid_argument("y_closed_form: non-finite input");
  }
  const double aA = std::fabs(A), aB = std::fabs(B), aC = std::fabs(C);
  if (A * C >= 0.0) {
    if (aB >= 2.0 * (1.0 - aC)) return {aA + aB + aC, YBranch::I1};
    // Here aB < 2(1-aC) forces aC < 1, so the denominator is positive.
    return {1.0 + aA + B * B / (4.0 * (1.0 - aC)), YBranch::I2};
  }
  // AC < 0 implies C != 0.
  const double disc = -4.0 * A * C * (1.0 / (C * C) - 1.0);
  if (disc <= B * B && aB < 2.0 * (1.0 - aC)) {
    return {1.0 - aA + B * B / (4.0 * (1.0 - aC)), YBranch::II1};
  }
  const double lim = 2.0 * (1.0 + aC);
  if (B * B < std::min(lim * lim, disc)) {
    return {1.0 + aA + B * B / (4.0 * (1.0 + aC)), YBranch::II2};
  }
  // Boundary cases: the angular maximum of |A + B e^{it} + C e^{2it}| sits at
  // an endpoint of cos t or at the interior vertex, depending on where
  // B(|A| - |C|) falls against 4|A||C|.
  if (aC * (aB + 4.0 * aA) <= aA * aB) return {aA + aB - aC, YBranch::R1};
  if (aA * aB <= aC * (aB - 4.0 * aA)) return {-aA + aB + aC, YBranch::R2};
  assert(A * C < 0.0);  // sqrt argument exceeds 1 exactly when AC < 0
  return {(aA + aC) * std::sqrt(1.0 - B * B / (4.0 * A * C)), YBranch::R3};
}

namespace {

double objective(const YInputs& in, double r, double t) {
  const std::complex<double> z = std::polar(r, t);
  return std::abs(std::complex<double>(in.A) + in.B * z + in.C * z * z) + 1.0 -
         r * r;
}

double objective_uv(const YInputs& in, double u, double v) {
  const std::complex<double> z(u, v);
  return std::abs(std::complex<double>(in.A) + in.B * z + in.C * z * z) + 1.0 -
         std::norm(z);
}

// Compass-search maximization in Cartesian coordinates, projected onto the
// closed unit disk.  Polar coordinates are degenerate at the origin (the
// angle has no effect there), so a (r, t) line search cannot leave x = 0
// even when a nearby point is better; Cartesian probes have no such blind
// spot and also handle diagonal ridges.
double compass_polish(const YInputs& in, double u, double v, double h0) {
  double best = objective_uv(in, u, v);
  for (double h = h0; h > 1e-13; h *= 0.5) {
    for (int move = 0; move < 200; ++move) {
      constexpr double du[8] = {1, -1, 0, 0, 1, 1, -1, -1};
      constexpr double dv[8] = {0, 0, 1, -1, 1, -1, 1, -1};
      double bu = u, bv = v, bf = best;
      for (int k = 0; k < 8; ++k) {
        double pu = u + h * du[k], pv = v + h * dv[k];
        const double n = std::hypot(pu, pv);
        if (n > 1.0) { pu /= n; pv /= n; }
        const double f = objective_uv(in, pu, pv);
        if (f > bf) { bf = f; bu = pu; bv = pv; }
      }
      if (bf <= best) break;
      best = bf; u = bu; v = bv;
    }
  }
  return best;
}

}  // namespace

double y_brute_force(const YInputs& in, int radial, int angular) {
  if (radial < 64 || angular < 256) {
    throw std::invalid_argument("y_brute_force: grid too coarse");
  }
  const double two_pi = 2.0 * std::acos(-1.0);
  const double dr = 1.0 / static_cast<double>(radial - 1);
  const double dt = two_pi / static_cast<double>(angular);

  // Coarse grid including the center and the boundary circle; keep a handful
  // of well-separated candidates for polishing.
  struct Cand { double v, r, t; };
  constexpr int kCands = 5;
  Cand top[kCands] = {};
  int n_top = 0;
  for (int i = 0; i < radial; ++i) {
    const double r = static_cast<double>(i) * dr;
    for (int j = 0; j < angular; ++j) {
      const double t = static_cast<double>(j) * dt;
      const double v = objective(in, r, t);
      bool near_existing = false;
      for (int k = 0; k < n_top; ++k) {
        // Near the origin every angle is the same point, so merge on radius
        // alone there; elsewhere require both coordinates to be close.
        const bool both_central = top[k].r <= 2.0 * dr && r <= 2.0 * dr;
        if (both_central ||
            (std::fabs(top[k].r - r) <= 2.0 * dr &&
             std::fabs(std::remainder(top[k].t - t, two_pi)) <= 2.5 * dt)) {
          near_existing = true;
          if (v > top[k].v) top[k] = {v, r, t};
          break;
        }
      }
      if (near_existing) continue;
      if (n_top < kCands) {
        top[n_top++] = {v, r, t};
      } else {
        int worst = 0;
        for (int k = 1; k < kCands; ++k) {
          if (top[k].v < top[worst].v) worst = k;
        }
        if (v > top[worst].v) top[worst] = {v, r, t};
      }
    }
  }

  double best = 0.0;
  for (int k = 0; k < n_top; ++k) {
    const double u = top[k].r * std::cos(top[k].t);
    const double v = top[k].r * std::sin(top[k].t);
    best = std::max(best, compass_polish(in, u, v, 2.0 * dr));
  }
  return best;
}

}  // namespace loghankel
