#pragma once

// Closed-form bound-state spectrum of the D-dimensional radial equation.
//
// With s = exp(-2 alpha r) and the two-term centrifugal model the radial
// equation maps onto the parametric NU form with c1 = c2 = c3 = 1. The
// quantization condition fixes the decay exponent
//
//     mu_bar = [(1-a) gamma + theta - phi - (n^2 + (2n+1) sigma)] / (2 (n + sigma))
//
// and E = -(2 hbar^2 alpha^2 / mu) mu_bar^2 + a V0 / b. The energy is only
// squared-bracket dependent, so a negative bracket still yields a number;
// such states are kept but flagged non-physical.

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "nu_parametric.hpp"
#include "numeric.hpp"
#include "potentials.hpp"

namespace enu {

struct ProblemSpec {
    PotentialParams potential;
    ApproximationParams approx;
    double mass = 1.0;
    double hbar = 1.0;

    void validate() const {
        potential.validate();
        approx.validate();
        if (!(mass > 0.0) || !std::isfinite(mass))
            throw Error(ErrorCode::InvalidParameter, "mass must be > 0");
        if (!(hbar > 0.0) || !std::isfinite(hbar))
            throw Error(ErrorCode::InvalidParameter, "hbar must be > 0");
    }

    /// 2 hbar^2 alpha^2 / mu, the energy unit of the reduced equation.
    double energy_scale() const noexcept {
        return 2.0 * hbar * hbar * potential.alpha * potential.alpha / mass;
    }
};

struct ReducedCoefficients {
    double gamma = 0.0;
    double theta = 0.0;
    double phi = 0.0;
    double A = 0.0;
    double B = 0.0;
    double C = 0.0;
    double sigma = 0.0;
    double v = 0.0;
    double mu_bar = 0.0;
    double eps_sq = 0.0;
    double signed_bracket = 0.0;
};

struct BoundStateResult {
    int n = 0;
    int l = 0;
    int D = 3;
    double energy = 0.0;
    ReducedCoefficients reduced;
    double signed_bracket = 0.0;
    bool physical = false;
    std::optional<std::string> spurious_reason;
};

namespace detail {

inline void check_quantum_numbers(int n, int l, int D) {
    if (n < 0) throw Error(ErrorCode::InvalidParameter, "n must be non-negative");
    if (l < 0) throw Error(ErrorCode::InvalidParameter, "l must be non-negative");
    if (D < 2) throw Error(ErrorCode::InvalidParameter, "D must be >= 2");
}

}  // namespace detail

inline ReducedCoefficients reduce(const ProblemSpec& spec, int n, int l, int D) {
    detail::check_quantum_numbers(n, l, D);
    const PotentialParams& p = spec.potential;
    if (!(p.alpha > 0.0)) throw Error(ErrorCode::InvalidParameter, "alpha must be > 0");

    const double L = centrifugal_factor(l, D);
    const double h2 = spec.hbar * spec.hbar;
    const double four_alpha2 = 4.0 * p.alpha * p.alpha;

    ReducedCoefficients rc;
    rc.gamma = spec.mass * p.V0 / (2.0 * h2 * p.alpha * p.alpha * p.b);
    rc.theta = (2.0 * spec.mass * p.V1 / h2 - spec.approx.omega * L) / four_alpha2;
    rc.phi = (2.0 * spec.mass * p.V2 / h2 + spec.approx.lambda_adj * L) / four_alpha2;
    rc.A = rc.gamma + rc.theta;
    rc.B = (p.a + 1.0) * rc.gamma + rc.theta - rc.phi;
    rc.C = rc.gamma * p.a;

    if (rc.phi < -0.25)
        throw Error(ErrorCode::ComplexV, "phi < -1/4: sqrt(1 + 4 phi) is imaginary");
    rc.v = std::sqrt(1.0 + 4.0 * rc.phi);
    rc.sigma = 0.5 * (1.0 + rc.v);

    const double nn = static_cast<double>(n);
    const double numerator = (1.0 - p.a) * rc.gamma + rc.theta - rc.phi -
                             (nn * nn + (2.0 * nn + 1.0) * rc.sigma);
    rc.signed_bracket = numerator / (2.0 * (nn + rc.sigma));
    rc.mu_bar = std::abs(rc.signed_bracket);
    rc.eps_sq = rc.mu_bar * rc.mu_bar - rc.gamma * p.a;
    return rc;
}

/// NU coefficients of the reduced equation for a given eps^2.
inline nu::NUCoefficients nu_instance(const ReducedCoefficients& rc) noexcept {
    return {1.0, 1.0, 1.0, rc.eps_sq + rc.A, rc.B + 2.0 * rc.eps_sq, rc.C + rc.eps_sq};
}

inline BoundStateResult bound_energy(const ProblemSpec& spec, int n, int l, int D) {
    BoundStateResult result;
    result.n = n;
    result.l = l;
    result.D = D;
    result.reduced = reduce(spec, n, l, D);
    result.signed_bracket = result.reduced.signed_bracket;

    const double scale = std::max({1.0, std::abs(result.reduced.theta),
                                   std::abs(result.reduced.gamma), result.reduced.phi});
    if (std::abs(result.signed_bracket) <= 1e-14 * scale)
        throw Error(ErrorCode::DegenerateState,
                    "quantization bracket vanishes: state is not normalizable");

    result.energy = -spec.energy_scale() * result.reduced.mu_bar * result.reduced.mu_bar +
                    threshold(spec.potential);
    result.physical = result.signed_bracket > 0.0;
    if (!result.physical)
        result.spurious_reason =
            "negative quantization bracket: the decaying solution does not satisfy the "
            "energy condition (energy only reproduced through the squared bracket)";
    return result;
}

/// Hulthen closed form, -(2 hbar^2 alpha^2/mu) [mu V/(4 hbar^2 alpha^2 N) - N/2]^2, N = n+l+1.
inline double hulthen_energy(double V, double alpha, double mass, double hbar, int n, int l) {
    detail::check_quantum_numbers(n, l, 3);
    const double N = static_cast<double>(n + l + 1);
    const double h2a2 = hbar * hbar * alpha * alpha;
    const double bracket = mass * V / (4.0 * h2a2 * N) - 0.5 * N;
    return -2.0 * h2a2 / mass * bracket * bracket;
}

/// Rosen-Morse closed form, including the -V continuum offset.
inline double rosen_morse_energy(double V, double alpha, double mass, double hbar, int n, int l) {
    detail::check_quantum_numbers(n, l, 3);
    const double N = static_cast<double>(n + l + 1);
    const double h2a2 = hbar * hbar * alpha * alpha;
    const double bracket = mass * V / (2.0 * h2a2 * N) - 0.5 * N;
    return -2.0 * h2a2 / mass * bracket * bracket - V;
}

/// Problem whose closed form reduces to hulthen_energy (D = 3).
inline ProblemSpec hulthen_problem(double V, double alpha, double mass = 1.0, double hbar = 1.0) {
    ProblemSpec spec;
    spec.potential = {0.0, V, 0.0, 0.0, 1.0, alpha};
    spec.approx = greene_aldrich_as_improved(alpha);
    spec.mass = mass;
    spec.hbar = hbar;
    return spec;
}

/// Problem whose closed form reduces to rosen_morse_energy (D = 3).
inline ProblemSpec rosen_morse_problem(double V, double alpha, double mass = 1.0,
                                       double hbar = 1.0) {
    ProblemSpec spec;
    spec.potential = {V, 0.0, 0.0, -1.0, 1.0, alpha};
    spec.approx = greene_aldrich_as_improved(alpha);
    spec.mass = mass;
    spec.hbar = hbar;
    return spec;
}

struct LayoutPolicy {
    enum class Kind { Triangular, Rectangular };
    Kind kind = Kind::Rectangular;
    int l_max = 0;

    /// (0, 0) followed by l = 0..n-1 for every n >= 1.
    static LayoutPolicy triangular() { return {Kind::Triangular, 0}; }
    static LayoutPolicy rectangular(int l_max) { return {Kind::Rectangular, l_max}; }
};

struct TableRow {
    int n = 0;
    int l = 0;
    int D = 3;
    std::optional<BoundStateResult> state;
    std::optional<ErrorCode> error;
};

/// (n, l) pairs in emission order.
inline std::vector<std::pair<int, int>> table_states(int n_max, const LayoutPolicy& layout) {
    if (n_max < 0) throw Error(ErrorCode::InvalidParameter, "n_max must be non-negative");
    std::vector<std::pair<int, int>> states;
    for (int n = 0; n <= n_max; ++n) {
        if (layout.kind == LayoutPolicy::Kind::Triangular) {
            const int l_top = n == 0 ? 0 : n - 1;
            for (int l = 0; l <= l_top; ++l) states.emplace_back(n, l);
        } else {
            if (layout.l_max < 0) throw Error(ErrorCode::InvalidParameter, "l_max must be >= 0");
            for (int l = 0; l <= layout.l_max; ++l) states.emplace_back(n, l);
        }
    }
    return states;
}

inline std::vector<TableRow> spectrum_table(const ProblemSpec& spec, int n_max,
                                            const LayoutPolicy& layout,
                                            const std::vector<int>& dims) {
    std::vector<TableRow> rows;
    for (const auto& [n, l] : table_states(n_max, layout)) {
        for (int D : dims) {
            TableRow row{n, l, D, std::nullopt, std::nullopt};
            try {
                row.state = bound_energy(spec, n, l, D);
            } catch (const Error& e) {
                row.error = e.code();
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

}  // namespace enu
