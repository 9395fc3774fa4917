#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "loghankel/bounds.hpp"
#include "loghankel/caratheodory.hpp"
#include "loghankel/classes.hpp"

namespace loghankel {

struct SearchConfig {
  int grid_c = 41;       // points on the real segment [0, 2]
  int grid_ring = 21;    // modulus points in [0, 1] for x and w
  int grid_angle = 32;   // angle points in [0, 2pi) for x and w
  int top_k = 8;         // grid candidates kept for polishing
  int polish_iters = 60; // coordinate-descent sweeps per candidate
  std::uint64_t seed = 0;

  void validate() const {
    if (grid_c < 4 || grid_ring < 4 || grid_angle < 4 || top_k < 1 ||
        polish_iters < 0) {
      throw std::invalid_argument("SearchConfig: invalid field");
    }
  }
};

struct MaxResult {
  LZParams best_params;
  double value = 0.0;
  std::uint64_t evaluations = 0;
  double bound = 0.0;
  double margin = 0.0;  // bound - value
};

// Deterministic search for the largest |H_{2,1}| over the class: exhaustive
// coarse grid over (c1 in [0,2] real, x and w in the closed disk) -- c1 is
// real WLOG because a disk rotation multiplies the determinant by a unimodular
// factor -- followed by coordinate-wise golden-section polish of the top
// candidates. Grid ties break toward the lexicographically smallest
// (c1, |x|, arg x, |w|, arg w). Identical config => bit-identical result, and
// raising polish_iters never lowers the value (the probe schedule with more
// sweeps extends the shorter one).
MaxResult maximize_h21(const AlphaClassSpec& spec,
                       const SearchConfig& cfg = SearchConfig{});

// Batch driver: per alpha, the closed-form bound, the extremal-function
// sharpness check (tolerance 1e-9), and the numeric maximum, combined into
// one report. Validates every alpha before doing any work.
std::vector<BoundReport> scan_alpha(ClassKind kind,
                                    const std::vector<double>& alphas,
                                    const SearchConfig& cfg = SearchConfig{});

}  // namespace loghankel
