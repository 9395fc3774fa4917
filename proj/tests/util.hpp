#pragma once

#include <initializer_list>
#include <random>
#include <vector>

#include "loghankel/caratheodory.hpp"
#include "loghankel/series.hpp"

namespace testutil {

inline loghankel::TruncatedSeries from_reals(std::initializer_list<double> v) {
  std::vector<loghankel::Complex> c;
  for (double x : v) c.emplace_back(x);
  return loghankel::TruncatedSeries(std::move(c));
}

// Random f with c0 = 0, c1 = 1 and remaining coefficients of magnitude <= 2.
inline loghankel::TruncatedSeries random_normalized(std::mt19937_64& rng,
                                                    int order) {
  std::uniform_real_distribution<double> d(-1.2, 1.2);
  std::vector<loghankel::Complex> c(static_cast<size_t>(order) + 1);
  c[1] = loghankel::Complex(1.0);
  for (int k = 2; k <= order; ++k) {
    c[static_cast<size_t>(k)] = loghankel::Complex(d(rng), d(rng));
  }
  return loghankel::TruncatedSeries(std::move(c));
}

// Random p with c0 = 1 and modest higher coefficients.
inline loghankel::TruncatedSeries random_unit_lead(std::mt19937_64& rng,
                                                   int order) {
  std::uniform_real_distribution<double> d(-0.8, 0.8);
  std::vector<loghankel::Complex> c(static_cast<size_t>(order) + 1);
  c[0] = loghankel::Complex(1.0);
  for (int k = 1; k <= order; ++k) {
    c[static_cast<size_t>(k)] = loghankel::Complex(d(rng), d(rng));
  }
  return loghankel::TruncatedSeries(std::move(c));
}

inline loghankel::LZParams random_lz(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  std::uniform_real_distribution<double> ang(0.0, 6.283185307179586);
  loghankel::LZParams p;
  p.c1 = 2.0 * u01(rng);
  p.x = std::polar(u01(rng), ang(rng));
  p.w = std::polar(u01(rng), ang(rng));
  return p;
}

// Uniform random weights summing to one.
inline loghankel::HerglotzMixture random_mixture(std::mt19937_64& rng,
                                                 int atoms) {
  std::uniform_real_distribution<double> u01(0.01, 1.0);
  std::uniform_real_distribution<double> ang(0.0, 6.283185307179586);
  loghankel::HerglotzMixture m;
  double total = 0.0;
  for (int k = 0; k < atoms; ++k) {
    m.atoms.push_back({u01(rng), ang(rng)});
    total += m.atoms.back().weight;
  }
  for (auto& a : m.atoms) a.weight /= total;
  return m;
}

}  // namespace testutil
