#pragma once

#include <cmath>
#include <limits>

#include "error.hpp"

namespace enu {

/// 1 - exp(-x) without cancellation for small x.
inline double one_minus_exp_neg(double x) noexcept { return -std::expm1(-x); }

/// Centrifugal factor (D-1)(D-3)/4 + l(l+D-2).
///
/// Accumulated in integers: (l, D+2) and (l+1, D) give bit-identical results.
inline double centrifugal_factor(int l, int D) {
    if (l < 0) throw Error(ErrorCode::InvalidParameter, "l must be non-negative");
    if (D < 2) throw Error(ErrorCode::InvalidParameter, "D must be >= 2");
    const long long four_l = static_cast<long long>(D - 1) * (D - 3) +
                             4LL * l * (l + D - 2);
    return static_cast<double>(four_l) / 4.0;
}

inline void require_positive_radius(double r) {
    if (!(r > 0.0)) throw Error(ErrorCode::NonPositiveRadius, "r must be > 0");
}

inline bool all_finite(std::initializer_list<double> xs) noexcept {
    for (double x : xs)
        if (!std::isfinite(x)) return false;
    return true;
}

}  // namespace enu
