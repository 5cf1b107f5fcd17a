#pragma once

#include <cmath>

#include "error.hpp"

namespace enu {

/// Jacobi polynomial P_n^(A,B)(x) by the three-term recurrence in degree.
inline double jacobi(int n, double A, double B, double x) {
    if (!(A > -1.0) || !(B > -1.0))
        throw Error(ErrorCode::ParameterOutOfDomain, "Jacobi parameters must exceed -1");
    if (n < 0) throw Error(ErrorCode::ParameterOutOfDomain, "degree must be non-negative");
    if (n == 0) return 1.0;

    const double ab = A + B;
    double p_prev = 1.0;
    double p = 0.5 * ((A - B) + (ab + 2.0) * x);
    for (int k = 1; k < n; ++k) {
        const double kk = static_cast<double>(k);
        const double t = 2.0 * kk + ab;
        const double lead = 2.0 * (kk + 1.0) * (kk + ab + 1.0) * t;
        const double mix = (t + 1.0) * ((t + 2.0) * t * x + A * A - B * B);
        const double back = 2.0 * (kk + A) * (kk + B) * (t + 2.0);
        const double next = (mix * p - back * p_prev) / lead;
        p_prev = p;
        p = next;
    }
    return p;
}

}  // namespace enu
