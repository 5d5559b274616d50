#pragma once

#include <cmath>

namespace pslp {

/// theta0 = 1/2 - (1/4) e log 2 = 0.0289576...; governs the admissible
/// shrink rate of the inequality window.  Single source of truth for every
/// theta0-dependent comparison in the project.
inline double theta0() {
    return 0.5 - 0.25 * std::exp(1.0) * std::log(2.0);
}

/// Largest exponent c for which the headline solvability result applies.
inline constexpr double theorem_c_max = 427.0 / 400.0;

} // namespace pslp
