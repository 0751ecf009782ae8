#pragma once

// Brute-force reference path. Nothing here touches the closed-form radial
// factor: the curve is recovered by solving the implicit equation directly.

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <numbers>
#include <vector>

#include "fermat/core.hpp"
#include "fermat/curve.hpp"
#include "fermat/error.hpp"
#include "fermat/types.hpp"

namespace fermat::oracle {

inline constexpr int bisection_iteration_cap = 200;
inline constexpr double bisection_width = 1e-14;

/// Solve (t cos)^{2N} + (t sin)^{2N} = 1 for t in (0, sqrt 2] by bisection.
/// The left side is strictly increasing in t, so the bracket always holds
/// the root.
[[nodiscard]] inline double bisect_radial_factor(Angle theta, Exponent n)
{
    const double lc = std::log(std::abs(std::cos(theta.radians())));
    const double ls = std::log(std::abs(std::sin(theta.radians())));
    // log of the left side at t; compared against log 1 = 0.
    auto log_lhs = [&](double t) {
        const double lt = std::log(t);
        const double a = n.twice() * (lt + lc);
        const double b = n.twice() * (lt + ls);
        const double hi = std::max(a, b);
        return hi + std::log1p(std::exp(std::min(a, b) - hi));
    };

    double lo = 0.0;
    double hi = std::numbers::sqrt2;
    for (int i = 0; i < bisection_iteration_cap; ++i) {
        if (hi - lo <= bisection_width) {
            return 0.5 * (lo + hi);
        }
        const double mid = 0.5 * (lo + hi);
        if (log_lhs(mid) < 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    std::cerr << "fermat::oracle::bisect_radial_factor: bracket failed to converge\n";
    std::abort();
}

/// x = (1 - y^{2N})^{1/(2N)} for |y| <= 1, via logs.
[[nodiscard]] inline double implicit_solve_x(double y, Exponent n)
{
    if (!(std::abs(y) <= 1.0)) {
        throw Error(ErrorCode::OutOfRange, "implicit_solve_x needs |y| <= 1");
    }
    if (y == 0.0) {
        return 1.0;
    }
    const double y_pow = std::exp(n.twice() * std::log(std::abs(y)));
    const double rest = 1.0 - y_pow; // x^{2N}
    if (rest <= 0.0) {
        return 0.0;
    }
    return std::exp(std::log(rest) / n.twice());
}

/// Reference polyline on L_N at theta_k = 2 pi k / count, built from
/// bisect_radial_factor and inverse_affine only.
[[nodiscard]] inline SampledCurve oracle_polyline(Exponent n, const AffineFrame& frame, std::int64_t count)
{
    if (count < 3) {
        throw Error(ErrorCode::TooFewSamples, "oracle_polyline needs count >= 3");
    }
    std::vector<Angle> thetas;
    std::vector<Point2> points;
    thetas.reserve(static_cast<std::size_t>(count));
    points.reserve(static_cast<std::size_t>(count));
    for (std::int64_t k = 0; k < count; ++k) {
        const Angle theta(two_pi * static_cast<double>(k) / static_cast<double>(count));
        const double t = bisect_radial_factor(theta, n);
        const Point2 uv{t * std::cos(theta.radians()), t * std::sin(theta.radians())};
        thetas.push_back(theta);
        points.push_back(inverse_affine(uv, frame));
    }
    return SampledCurve(n, frame, std::move(thetas), std::move(points), true);
}

} // namespace fermat::oracle
