#pragma once

// Finite-difference reference solver for the radial equation
//
//     -(hbar^2 / 2 mu) U'' + V_eff(r) U = E U,   U(0) = U(r_max) = 0,
//
// on a uniform grid. The 3-point operator is symmetric tridiagonal, and its
// lowest eigenvalues are located by Sturm-sequence bisection. It shares no
// code path with the closed form beyond the potential evaluation.

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "potentials.hpp"
#include "spectrum.hpp"

namespace enu::oracle {

/// Uniform grid r_i = r_origin + i h, i = 0..intervals, h = (r_max - r_origin) / intervals.
/// The end points carry the Dirichlet conditions, so the first unknown sits at r_origin + h.
struct GridSpec {
    double r_origin = 0.0;
    double r_max = 40.0;
    int intervals = 8000;

    double step() const noexcept { return (r_max - r_origin) / intervals; }
    int unknowns() const noexcept { return intervals - 1; }

    void validate() const {
        if (intervals < 16) throw Error(ErrorCode::InvalidParameter, "grid needs >= 16 intervals");
        if (!(r_origin >= 0.0) || !(r_max > r_origin))
            throw Error(ErrorCode::InvalidParameter, "grid must satisfy 0 <= r_origin < r_max");
    }

    static GridSpec defaults_for(const PotentialParams& p) { return {0.0, 40.0 / p.alpha, 8000}; }
};

struct TridiagonalOperator {
    std::vector<double> diag;
    std::vector<double> off;
    GridSpec grid;

    std::size_t size() const noexcept { return diag.size(); }
};

/// Tridiagonal operator from arbitrary diagonal potential samples; no
/// minimum grid size, so tiny hand-checkable cases are possible.
template <class Veff>
TridiagonalOperator discretize_potential(Veff&& v_eff, double mass, double hbar, const GridSpec& grid) {
    if (grid.intervals < 2 || !(grid.r_max > grid.r_origin))
        throw Error(ErrorCode::InvalidParameter, "grid needs at least one interior point");
    const double h = grid.step();
    const double kinetic = hbar * hbar / (mass * h * h);
    TridiagonalOperator op;
    op.grid = grid;
    op.diag.resize(grid.unknowns());
    op.off.assign(grid.unknowns() > 0 ? grid.unknowns() - 1 : 0, -0.5 * kinetic);
    for (int i = 0; i < grid.unknowns(); ++i) {
        const double r = grid.r_origin + (i + 1) * h;
        op.diag[i] = kinetic + v_eff(r);
    }
    return op;
}

inline TridiagonalOperator discretize(const ProblemSpec& spec, int l, int D, CentrifugalScheme scheme,
                                      const GridSpec& grid) {
    grid.validate();
    return discretize_potential(
        [&](double r) {
            return effective_potential(spec.potential, spec.approx, l, D, spec.mass, spec.hbar,
                                       scheme, r);
        },
        spec.mass, spec.hbar, grid);
}

/// Number of eigenvalues strictly below x (negative pivots of T - x I).
inline std::size_t count_below(const TridiagonalOperator& op, double x) {
    const double tiny = std::numeric_limits<double>::min();
    std::size_t count = 0;
    double q = 1.0;
    for (std::size_t i = 0; i < op.size(); ++i) {
        const double e2 = i == 0 ? 0.0 : op.off[i - 1] * op.off[i - 1];
        q = (op.diag[i] - x) - (i == 0 ? 0.0 : e2 / q);
        if (q == 0.0) q = -tiny;
        if (q < 0.0) ++count;
    }
    return count;
}

/// Gershgorin interval containing the whole spectrum.
inline std::pair<double, double> spectral_bounds(const TridiagonalOperator& op) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (std::size_t i = 0; i < op.size(); ++i) {
        const double radius = (i > 0 ? std::abs(op.off[i - 1]) : 0.0) +
                              (i + 1 < op.size() ? std::abs(op.off[i]) : 0.0);
        lo = std::min(lo, op.diag[i] - radius);
        hi = std::max(hi, op.diag[i] + radius);
    }
    return {lo, hi};
}

/// Eigenvalue with zero-based ascending index by bisection, refined until the
/// bracket is at the level of floating-point resolution.
inline double eigenvalue_at(const TridiagonalOperator& op, std::size_t index) {
    auto [lo, hi] = spectral_bounds(op);
    const double span = std::max({1.0, std::abs(lo), std::abs(hi)});
    lo -= 1e-12 * span;
    hi += 1e-12 * span;
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (count_below(op, mid) > index)
            hi = mid;
        else
            lo = mid;
        if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(lo), std::abs(hi)))
            break;
    }
    return 0.5 * (lo + hi);
}

inline std::vector<double> lowest_eigenvalues(const TridiagonalOperator& op, std::size_t k) {
    if (k == 0 || k > op.size())
        throw Error(ErrorCode::InvalidParameter, "requested eigenvalue count out of range");
    std::vector<double> values(k);
    for (std::size_t i = 0; i < k; ++i) values[i] = eigenvalue_at(op, i);
    return values;
}

/// Eigenvalues strictly below threshold - 1e-9 count as bound.
inline std::size_t count_bound_states(const TridiagonalOperator& op, double threshold_energy) {
    return count_below(op, threshold_energy - 1e-9);
}

enum class Verdict { Confirmed, Spurious, ApproximationError };

constexpr std::string_view to_string(Verdict v) noexcept {
    switch (v) {
        case Verdict::Confirmed: return "Confirmed";
        case Verdict::Spurious: return "Spurious";
        case Verdict::ApproximationError: return "ApproximationError";
    }
    return "?";
}

struct ComparisonReport {
    int n = 0;
    int l = 0;
    int D = 3;
    CentrifugalScheme scheme = CentrifugalScheme::Exact;
    GridSpec grid;
    double threshold = 0.0;
    std::optional<double> e_closed;
    std::optional<ErrorCode> closed_error;
    bool closed_physical = false;
    std::optional<double> e_oracle;  // empty: NoBoundState
    std::size_t oracle_bound_states = 0;
    std::optional<double> delta;     // e_closed - e_oracle
    Verdict verdict = Verdict::Spurious;
    std::string note;
};

/// Closed form vs. (n+1)-th bound eigenvalue of the discretized problem.
/// Confirmed when |delta| <= rel_tol * max(1, |E_closed|).
inline ComparisonReport compare(const ProblemSpec& spec, int n, int l, int D, CentrifugalScheme scheme,
                                const GridSpec& grid, double rel_tol = 1e-3) {
    ComparisonReport rep;
    rep.n = n;
    rep.l = l;
    rep.D = D;
    rep.scheme = scheme;
    rep.grid = grid;
    rep.threshold = threshold(spec.potential);

    try {
        const BoundStateResult closed = bound_energy(spec, n, l, D);
        rep.e_closed = closed.energy;
        rep.closed_physical = closed.physical;
    } catch (const Error& e) {
        rep.closed_error = e.code();
    }

    const TridiagonalOperator op = discretize(spec, l, D, scheme, grid);
    rep.oracle_bound_states = count_bound_states(op, rep.threshold);
    if (rep.oracle_bound_states > static_cast<std::size_t>(n))
        rep.e_oracle = eigenvalue_at(op, static_cast<std::size_t>(n));
    if (rep.e_closed && rep.e_oracle) rep.delta = *rep.e_closed - *rep.e_oracle;

    if (!rep.e_closed) {
        rep.verdict = Verdict::Spurious;
        rep.note = "closed form has no state here";
    } else if (!rep.closed_physical) {
        rep.verdict = Verdict::Spurious;
        rep.note = rep.e_oracle ? "closed-form state is non-normalizable"
                                : "closed-form state is non-normalizable and no bound state exists";
    } else if (!rep.e_oracle) {
        rep.verdict = Verdict::Spurious;
        rep.note = "no bound state below threshold on this grid";
    } else if (std::abs(*rep.delta) <= rel_tol * std::max(1.0, std::abs(*rep.e_closed))) {
        rep.verdict = Verdict::Confirmed;
    } else {
        rep.verdict = Verdict::ApproximationError;
        rep.note = "closed form and reference differ beyond tolerance";
    }
    return rep;
}

inline ComparisonReport compare(const ProblemSpec& spec, int n, int l, int D, CentrifugalScheme scheme) {
    return compare(spec, n, l, D, scheme, GridSpec::defaults_for(spec.potential));
}

}  // namespace enu::oracle
