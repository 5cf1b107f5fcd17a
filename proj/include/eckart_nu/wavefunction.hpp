#pragma once

// Radial wavefunctions of the closed-form bound states.
//
// U(r) = s^mu_bar (1 - s)^((1 + v)/2) P_n^(2 mu_bar, v)(1 - 2 s),  s = exp(-2 alpha r),
//
// with R(r) = r^(-(D-1)/2) U(r), so the D-dimensional measure is already
// absorbed and the normalization integral is plain int U^2 dr.

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <vector>

#include "error.hpp"
#include "jacobi.hpp"
#include "numeric.hpp"
#include "potentials.hpp"
#include "quadrature.hpp"
#include "spectrum.hpp"

namespace enu {

struct RadialState {
    int n = 0;
    int l = 0;
    int D = 3;
    double mu_bar = 0.0;
    double v = 0.0;
    double energy = 0.0;
    std::optional<double> normalization;

    double sigma() const noexcept { return 0.5 * (1.0 + v); }
};

/// Builds the state for (n, l, D); throws NoBoundState unless the closed
/// form is physical (positive quantization bracket).
inline RadialState make_radial_state(const ProblemSpec& spec, int n, int l, int D) {
    const BoundStateResult bs = bound_energy(spec, n, l, D);
    if (!bs.physical)
        throw Error(ErrorCode::NoBoundState, *bs.spurious_reason);
    RadialState state{n, l, D, bs.reduced.mu_bar, bs.reduced.v, bs.energy, std::nullopt};
    if (!(state.mu_bar > 0.0) || !(state.v > 0.0))
        throw Error(ErrorCode::NoBoundState, "state is not normalizable");
    return state;
}

inline double radial_u_unnormalized(const ProblemSpec& spec, const RadialState& state, double r) {
    require_positive_radius(r);
    const double x = 2.0 * spec.potential.alpha * r;
    const double s = std::exp(-x);
    const double q = one_minus_exp_neg(x);
    return std::exp(-x * state.mu_bar) * std::pow(q, state.sigma()) *
           jacobi(state.n, 2.0 * state.mu_bar, state.v, 1.0 - 2.0 * s);
}

/// N U(r) when the state carries a normalization, U(r) otherwise.
inline double radial_u(const ProblemSpec& spec, const RadialState& state, double r) {
    return state.normalization.value_or(1.0) * radial_u_unnormalized(spec, state, r);
}

namespace detail {

/// Upper integration limit: at least 60/alpha, stretched for slowly
/// decaying states so that exp(-4 alpha mu_bar r) is negligible.
inline double integration_limit(const ProblemSpec& spec, const RadialState& state) {
    return 60.0 / spec.potential.alpha * std::max(1.0, 1.0 / state.mu_bar);
}

/// 0 followed by a geometric ladder resolving both the power law at the
/// origin and the exponential tail.
inline std::vector<double> radial_breakpoints(const ProblemSpec& spec, const RadialState& state) {
    const double alpha = spec.potential.alpha;
    const double r_hi = integration_limit(spec, state);
    const double scale = state.mu_bar + state.sigma() + state.n + 1.0;
    double r = 1e-3 / (alpha * scale);
    std::vector<double> pts{0.0};
    while (r < r_hi) {
        pts.push_back(r);
        r *= 1.5;
    }
    pts.push_back(r_hi);
    return pts;
}

}  // namespace detail

/// int_0^inf (N U)^2 dr with the state's current normalization, using an
/// adaptive Gauss-Legendre rule of the given order.
inline double norm_integral(const ProblemSpec& spec, const RadialState& state, int order = 10,
                            double rel_tol = 1e-12) {
    auto u2 = [&](double r) {
        if (r <= 0.0) return 0.0;
        const double u = radial_u(spec, state, r);
        return u * u;
    };
    return quad::integrate_adaptive(u2, detail::radial_breakpoints(spec, state), rel_tol, order)
        .value;
}

/// Constant N with int (N U)^2 dr = 1.
inline double normalization(const ProblemSpec& spec, const RadialState& state) {
    RadialState bare = state;
    bare.normalization.reset();
    const double integral = norm_integral(spec, bare);
    if (!(integral > 0.0) || !std::isfinite(integral))
        throw Error(ErrorCode::QuadratureFailure, "norm integral is not positive");
    return 1.0 / std::sqrt(integral);
}

inline RadialState normalized(const ProblemSpec& spec, RadialState state) {
    state.normalization = normalization(spec, state);
    return state;
}

struct RadialWindow {
    double lo;
    double hi;
};

inline RadialWindow default_node_window(const ProblemSpec& spec) {
    return {1e-3 / spec.potential.alpha, 40.0 / spec.potential.alpha};
}

/// Strict sign changes of U over geometrically spaced samples of the window.
/// Exact zeros (underflow in the tail) are skipped.
inline int count_nodes(const ProblemSpec& spec, const RadialState& state, RadialWindow window,
                       int samples = 4000) {
    if (samples < 1000) throw Error(ErrorCode::InvalidParameter, "samples must be >= 1000");
    if (!(window.lo > 0.0) || !(window.hi > window.lo))
        throw Error(ErrorCode::InvalidParameter, "invalid node window");
    const double ratio = std::pow(window.hi / window.lo, 1.0 / (samples - 1));
    int nodes = 0;
    int last_sign = 0;
    double r = window.lo;
    for (int i = 0; i < samples; ++i, r *= ratio) {
        const double u = radial_u_unnormalized(spec, state, r);
        const int sign = (u > 0.0) - (u < 0.0);
        if (sign == 0) continue;
        if (last_sign != 0 && sign != last_sign) ++nodes;
        last_sign = sign;
    }
    return nodes;
}

inline int count_nodes(const ProblemSpec& spec, const RadialState& state) {
    return count_nodes(spec, state, default_node_window(spec));
}

struct ResidualGrid {
    double r_lo = 0.1;
    double r_hi = 15.0;
    double h = 1e-4;
};

/// Max over the grid of |U'' + k(r) U| / max(|U''|, |k U|), where
/// k(r) = (2 mu / hbar^2)(E - V(r)) - L K(r) and K is the two-term
/// centrifugal model the closed form was derived under. U'' uses central
/// differences.
inline double ode_residual(const ProblemSpec& spec, int l, int D, double energy,
                           const std::function<double(double)>& u, const ResidualGrid& grid) {
    if (!(grid.r_lo - grid.h > 0.0) || !(grid.r_hi > grid.r_lo) || !(grid.h > 0.0))
        throw Error(ErrorCode::InvalidParameter, "residual grid must lie inside (0, inf)");
    const double L = centrifugal_factor(l, D);
    const double k_scale = 2.0 * spec.mass / (spec.hbar * spec.hbar);
    const auto count = static_cast<long>(std::floor((grid.r_hi - grid.r_lo) / grid.h)) + 1;

    double worst = 0.0;
    double scale = 0.0;
    double u_prev = u(grid.r_lo - grid.h);
    double u_here = u(grid.r_lo);
    for (long i = 0; i < count; ++i) {
        const double r = grid.r_lo + static_cast<double>(i) * grid.h;
        const double u_next = u(r + grid.h);
        const double d2 = (u_next - 2.0 * u_here + u_prev) / (grid.h * grid.h);
        const double k = k_scale * (energy - eval_combined(spec.potential, r)) -
                         L * approx_inverse_r2_improved(spec.potential.alpha, spec.approx, r);
        worst = std::max(worst, std::abs(d2 + k * u_here));
        scale = std::max({scale, std::abs(d2), std::abs(k * u_here)});
        u_prev = u_here;
        u_here = u_next;
    }
    return scale > 0.0 ? worst / scale : 0.0;
}

inline double ode_residual(const ProblemSpec& spec, const RadialState& state,
                           const ResidualGrid& grid = {}) {
    return ode_residual(
        spec, state.l, state.D, state.energy,
        [&](double r) { return radial_u_unnormalized(spec, state, r); }, grid);
}

}  // namespace enu
