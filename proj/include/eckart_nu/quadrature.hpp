#pragma once

// Gauss-Legendre rules and an adaptive composite integrator.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "error.hpp"

namespace enu::quad {

struct Rule {
    std::vector<double> nodes;    // on [-1, 1]
    std::vector<double> weights;
};

/// n-point Gauss-Legendre rule; nodes from Newton iteration on P_n.
inline Rule gauss_legendre(int n) {
    if (n < 1) throw Error(ErrorCode::InvalidParameter, "rule order must be >= 1");
    Rule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

template <class F>
double apply(const Rule& rule, F&& f, double lo, double hi) {
    const double half = 0.5 * (hi - lo);
    const double mid = 0.5 * (hi + lo);
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return sum * half;
}

struct Panel {
    double lo;
    double hi;
};

struct Result {
    double value = 0.0;
    double error_estimate = 0.0;
    std::size_t panels = 0;
};

/// Adaptive bisection over the given initial breakpoints. A panel is
/// accepted once the rule on the panel agrees with the rule on its two
/// halves to within rel_tol times the running magnitude of the integral.
template <class F>
Result integrate_adaptive(F&& f, const std::vector<double>& breakpoints, double rel_tol,
                          int order = 10, int max_depth = 48) {
    if (breakpoints.size() < 2) throw Error(ErrorCode::InvalidParameter, "need two breakpoints");
    const Rule rule = gauss_legendre(order);

    struct Item {
        Panel panel;
        double estimate;
        int depth;
    };
    std::vector<Item> stack;
    double magnitude = 0.0;
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        const Panel p{breakpoints[i], breakpoints[i + 1]};
        const double est = apply(rule, f, p.lo, p.hi);
        magnitude += std::abs(est);
        stack.push_back({p, est, 0});
    }
    const std::size_t initial = stack.size();

    Result result;
    while (!stack.empty()) {
        const Item item = stack.back();
        stack.pop_back();
        const double mid = 0.5 * (item.panel.lo + item.panel.hi);
        const double left = apply(rule, f, item.panel.lo, mid);
        const double right = apply(rule, f, mid, item.panel.hi);
        const double refined = left + right;
        const double diff = std::abs(refined - item.estimate);
        const double allowed = rel_tol * std::max(magnitude, 1e-300) / static_cast<double>(initial);
        if (diff <= allowed || diff <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(refined)) {
            result.value += refined;
            result.error_estimate += diff;
            ++result.panels;
            continue;
        }
        if (item.depth >= max_depth)
            throw Error(ErrorCode::QuadratureFailure, "adaptive refinement did not converge");
        stack.push_back({{item.panel.lo, mid}, left, item.depth + 1});
        stack.push_back({{mid, item.panel.hi}, right, item.depth + 1});
    }
    return result;
}

}  // namespace enu::quad
