#pragma once

// Parametric Nikiforov-Uvarov engine.
//
// Handles any equation of the form
//
//     psi'' + (c1 - c2 s)/(s(1 - c3 s)) psi'
//           + (-xi1 s^2 + xi2 s - xi3)/(s^2 (1 - c3 s)^2) psi = 0
//
// and produces the derived constants c4..c13, the two k branches that make
// the radicand in pi(s) a perfect square, and the energy condition. The
// Rodrigues construction is not needed here; polynomial parts are evaluated
// through the Jacobi recurrence in jacobi.hpp.

#include <cmath>
#include <utility>

#include "error.hpp"

namespace enu::nu {

struct NUCoefficients {
    double c1 = 0.0;
    double c2 = 0.0;
    double c3 = 0.0;
    double xi1 = 0.0;
    double xi2 = 0.0;
    double xi3 = 0.0;
};

struct NUDerived {
    double c4 = 0.0;
    double c5 = 0.0;
    double c6 = 0.0;
    double c7 = 0.0;
    double c8 = 0.0;
    double c9 = 0.0;
};

/// Exponents of the weight function s^c10 (1 - c3 s)^c11 and of the
/// prefactor s^c12 (1 - c3 s)^c13.
struct WaveFactors {
    double c10 = 0.0;
    double c11 = 0.0;
    double c12 = 0.0;
    double c13 = 0.0;
};

/// Coefficients of the quadratic q2 s^2 + q1 s + q0 under the radical of pi(s).
struct RadicalPolynomial {
    double q2 = 0.0;
    double q1 = 0.0;
    double q0 = 0.0;

    double discriminant() const noexcept { return q1 * q1 - 4.0 * q2 * q0; }
};

struct KBranches {
    double k_plus = 0.0;
    double k_minus = 0.0;
};

inline NUDerived derive_constants(const NUCoefficients& c) noexcept {
    NUDerived d;
    d.c4 = 0.5 * (1.0 - c.c1);
    d.c5 = 0.5 * (c.c2 - 2.0 * c.c3);
    d.c6 = d.c5 * d.c5 + c.xi1;
    d.c7 = 2.0 * d.c4 * d.c5 - c.xi2;
    d.c8 = d.c4 * d.c4 + c.xi3;
    d.c9 = c.c3 * d.c7 + c.c3 * c.c3 * d.c8 + d.c6;
    return d;
}

inline KBranches k_branches(const NUCoefficients& c, const NUDerived& d) {
    const double radicand = d.c8 * d.c9;
    if (radicand < 0.0)
        throw Error(ErrorCode::NegativeRadicand, "c8*c9 < 0: no real k branch");
    const double centre = -(d.c7 + 2.0 * c.c3 * d.c8);
    const double half_gap = 2.0 * std::sqrt(radicand);
    return {centre + half_gap, centre - half_gap};
}

inline RadicalPolynomial radical_polynomial(const NUCoefficients& c, const NUDerived& d,
                                            double k) noexcept {
    return {d.c6 - c.c3 * k, d.c7 + k, d.c8};
}

/// Left side of the parametric energy condition. The square root of c8
/// enters with a caller-chosen sign; the remaining c8 term uses c8 itself.
inline double energy_condition_lhs(int n, const NUCoefficients& c, const NUDerived& d,
                                   double sqrt_c8_signed) {
    if (d.c9 < 0.0) throw Error(ErrorCode::NegativeRadicand, "c9 < 0");
    const double nn = static_cast<double>(n);
    const double sqrt_c9 = std::sqrt(d.c9);
    return (c.c2 - c.c3) * nn + c.c3 * nn * nn - (2.0 * nn + 1.0) * d.c5 +
           (2.0 * nn + 1.0) * (sqrt_c9 + c.c3 * sqrt_c8_signed) + d.c7 +
           2.0 * c.c3 * d.c8 + 2.0 * sqrt_c8_signed * sqrt_c9;
}

/// tau'(s) for the branch kept by the method; must be negative for bound states.
inline double tau_derivative(const NUCoefficients& c, const NUDerived& d) {
    if (d.c8 < 0.0 || d.c9 < 0.0) throw Error(ErrorCode::NegativeRadicand, "c8 or c9 < 0");
    return -2.0 * c.c3 - 2.0 * (std::sqrt(d.c9) + c.c3 * std::sqrt(d.c8));
}

inline WaveFactors wave_factors(const NUCoefficients& c, const NUDerived& d) {
    if (c.c3 == 0.0)
        throw Error(ErrorCode::DegenerateC3, "c3 = 0 (Laguerre limit) is not supported");
    if (d.c8 < 0.0 || d.c9 < 0.0) throw Error(ErrorCode::NegativeRadicand, "c8 or c9 < 0");
    const double sqrt_c8 = std::sqrt(d.c8);
    const double sqrt_c9 = std::sqrt(d.c9);
    WaveFactors w;
    w.c10 = c.c1 + 2.0 * d.c4 + 2.0 * sqrt_c8;
    w.c11 = 1.0 - c.c1 - 2.0 * d.c4 + (2.0 / c.c3) * sqrt_c9;
    w.c12 = d.c4 + sqrt_c8;
    w.c13 = -d.c4 + (sqrt_c9 - d.c5) / c.c3;
    return w;
}

}  // namespace enu::nu
