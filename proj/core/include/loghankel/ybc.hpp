#pragma once

#include <string>

namespace loghankel {

struct YInputs {
  double A = 0.0, B = 0.0, C = 0.0;
};

// Which case of the closed form produced the value. I* are the AC >= 0 cases,
// II* the AC < 0 interior-vertex cases, R* the AC < 0 boundary fallback.
enum class YBranch { I1, I2, II1, II2, R1, R2, R3 };

std::string branch_name(YBranch b);

struct YResult {
  double value = 0.0;
  YBranch branch = YBranch::I1;
};

// Closed form of Y(A,B,C) = max over the closed unit disk of
// |A + B z + C z^2| + 1 - |z|^2, for real A, B, C. Ties between adjacent
// branch conditions route to the first matching case; the maximum is
// continuous across every boundary, so routing cannot change the value.
YResult y_closed_form(const YInputs& in);

// Direct evaluation of the defining maximum: polar grid (radial >= 64,
// angular >= 256) followed by golden-section polish around the best grid
// points. Accuracy ~1e-6.
double y_brute_force(const YInputs& in, int radial, int angular);

}  // namespace loghankel
