#pragma once

// Eckart plus modified deformed Hylleraas potential, its special cases, and
// the centrifugal-term models used to make the radial equation solvable.
//
// Every expression is written in terms of s = exp(-2 alpha r) and the
// cancellation-free 1 - s.

#include <cmath>
#include <optional>
#include <string>
#include <string_view>

#include "error.hpp"
#include "numeric.hpp"

namespace enu {

struct PotentialParams {
    double V0 = 0.0;
    double V1 = 0.0;
    double V2 = 0.0;
    double a = 0.0;
    double b = 1.0;
    double alpha = 1.0;

    void validate() const {
        if (!all_finite({V0, V1, V2, a, b, alpha}))
            throw Error(ErrorCode::InvalidParameter, "potential parameters must be finite");
        if (!(alpha > 0.0)) throw Error(ErrorCode::InvalidParameter, "alpha must be > 0");
        if (b == 0.0) throw Error(ErrorCode::InvalidParameter, "b must be non-zero");
    }
};

/// Adjustable parameters of the two-term centrifugal approximant.
struct ApproximationParams {
    double omega = 0.0;
    double lambda_adj = 0.0;

    void validate() const {
        if (!all_finite({omega, lambda_adj}))
            throw Error(ErrorCode::InvalidParameter, "approximation parameters must be finite");
    }

    /// Negative values are allowed but unusual; returns a message to surface.
    std::optional<std::string> warning() const {
        if (lambda_adj < 0.0 || omega < 0.0)
            return std::string("negative omega/lambda makes the approximant change sign near the origin");
        return std::nullopt;
    }
};

enum class Family { Combined, DeformedHylleraas, Eckart, Hulthen, RosenMorse };

enum class CentrifugalScheme { Exact, GreeneAldrich, Improved };

constexpr std::string_view to_string(CentrifugalScheme scheme) noexcept {
    switch (scheme) {
        case CentrifugalScheme::Exact: return "exact";
        case CentrifugalScheme::GreeneAldrich: return "ga";
        case CentrifugalScheme::Improved: return "improved";
    }
    return "?";
}

namespace detail {

struct ScreenedVariable {
    double s;
    double one_minus_s;
};

inline ScreenedVariable screened(double alpha, double r) {
    require_positive_radius(r);
    const double x = 2.0 * alpha * r;
    return {std::exp(-x), one_minus_exp_neg(x)};
}

}  // namespace detail

inline double eval_combined(const PotentialParams& p, double r) {
    const auto [s, q] = detail::screened(p.alpha, r);
    return (p.V0 / p.b) * (p.a - s) / q - p.V1 * s / q + p.V2 * s / (q * q);
}

/// Continuum threshold, the r -> infinity limit of eval_combined.
inline double threshold(const PotentialParams& p) noexcept { return p.a * p.V0 / p.b; }

/// eval_combined(p, r) - threshold(p) without cancellation:
/// s/(1-s) [(a-1) V0/b - V1 + V2/(1-s)].
inline double excess_over_threshold(const PotentialParams& p, double r) {
    const auto [s, q] = detail::screened(p.alpha, r);
    return s / q * ((p.a - 1.0) * p.V0 / p.b - p.V1 + p.V2 / q);
}

/// Special cases of the combined potential. Hulthen takes its strength from
/// V1 (attractive Eckart term); Rosen-Morse takes it from V0 with a = -1, b = 1.
inline double eval_family(Family family, const PotentialParams& p, double r) {
    switch (family) {
        case Family::Combined:
            return eval_combined(p, r);
        case Family::DeformedHylleraas: {
            PotentialParams q = p;
            q.V1 = q.V2 = 0.0;
            return eval_combined(q, r);
        }
        case Family::Eckart: {
            PotentialParams q = p;
            q.V0 = 0.0;
            return eval_combined(q, r);
        }
        case Family::Hulthen: {
            const auto [s, q] = detail::screened(p.alpha, r);
            return -p.V1 * s / q;
        }
        case Family::RosenMorse: {
            const auto [s, q] = detail::screened(p.alpha, r);
            return -p.V0 * (1.0 + s) / q;
        }
    }
    return 0.0;
}

/// Parameters under which eval_combined reproduces a special family exactly.
inline PotentialParams family_params(Family family, const PotentialParams& p) {
    PotentialParams q = p;
    switch (family) {
        case Family::Combined: break;
        case Family::DeformedHylleraas: q.V1 = q.V2 = 0.0; break;
        case Family::Eckart: q.V0 = 0.0; break;
        case Family::Hulthen:
            q.V0 = q.V2 = 0.0;
            q.a = 0.0;
            q.b = 1.0;
            break;
        case Family::RosenMorse:
            q.V1 = q.V2 = 0.0;
            q.a = -1.0;
            q.b = 1.0;
            break;
    }
    return q;
}

inline double centrifugal_exact(int l, int D, double mass, double hbar, double r) {
    require_positive_radius(r);
    return hbar * hbar / (2.0 * mass) * centrifugal_factor(l, D) / (r * r);
}

/// Greene-Aldrich model of 1/r^2 with screening 2 alpha: 4 alpha^2 s/(1-s)^2.
inline double approx_inverse_r2_ga(double alpha, double r) {
    const auto [s, q] = detail::screened(alpha, r);
    return 4.0 * alpha * alpha * s / (q * q);
}

/// Two-term model of 1/r^2: omega s/(1-s) + lambda s/(1-s)^2.
inline double approx_inverse_r2_improved(double alpha, const ApproximationParams& ap, double r) {
    const auto [s, q] = detail::screened(alpha, r);
    return ap.omega * s / q + ap.lambda_adj * s / (q * q);
}

/// The Greene-Aldrich model expressed as a two-term approximant.
inline ApproximationParams greene_aldrich_as_improved(double alpha) noexcept {
    return {0.0, 4.0 * alpha * alpha};
}

inline double inverse_r2_model(CentrifugalScheme scheme, double alpha,
                               const ApproximationParams& ap, double r) {
    switch (scheme) {
        case CentrifugalScheme::Exact:
            require_positive_radius(r);
            return 1.0 / (r * r);
        case CentrifugalScheme::GreeneAldrich:
            return approx_inverse_r2_ga(alpha, r);
        case CentrifugalScheme::Improved:
            return approx_inverse_r2_improved(alpha, ap, r);
    }
    return 0.0;
}

inline double effective_potential(const PotentialParams& p, const ApproximationParams& ap,
                                  int l, int D, double mass, double hbar,
                                  CentrifugalScheme scheme, double r) {
    const double barrier = hbar * hbar / (2.0 * mass) * centrifugal_factor(l, D);
    return eval_combined(p, r) + barrier * inverse_r2_model(scheme, p.alpha, ap, r);
}

}  // namespace enu
