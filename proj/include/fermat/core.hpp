#pragma once

// Pointwise evaluation of the Fermat curves C_N : x^{2N} + y^{2N} = 1, their
// affine images L_N, and the square limit C_inf = boundary of [-1, 1]^2.
//
// Every power of the form z^{2N} is formed as exp(2N log z) on a ratio that
// is at most 1, so nothing here overflows or underflows harmfully for any
// admissible N.

#include <algorithm>
#include <cmath>
#include <limits>

#include "fermat/error.hpp"
#include "fermat/types.hpp"

namespace fermat {

namespace detail {

    /// r^k for 0 <= r <= 1 and k >= 0, with 0^0 = 1.
    [[nodiscard]] inline double unit_power(double r, double k) noexcept
    {
        if (k == 0.0) {
            return 1.0;
        }
        if (r == 0.0) {
            return 0.0;
        }
        return std::exp(k * std::log(r));
    }

    /// The direction (cos, sin) split into its dominant magnitude m and the
    /// ratio r = min/m, plus t = r^{2N} and e = (1 + t)^{-1/(2N)}. With these,
    /// rho_N = e / m.
    struct Factored {
        double cos = 0.0;
        double sin = 0.0;
        double m = 0.0;
        double r = 0.0;
        double t = 0.0;
        double e = 1.0;
        bool cos_dominant = true;
    };

    [[nodiscard]] inline Factored factor(Angle theta, Exponent n) noexcept
    {
        Factored f;
        f.cos = std::cos(theta.radians());
        f.sin = std::sin(theta.radians());
        const double c = std::abs(f.cos);
        const double s = std::abs(f.sin);
        f.cos_dominant = c >= s;
        f.m = f.cos_dominant ? c : s;
        f.r = (f.cos_dominant ? s : c) / f.m;
        if (f.r == 0.0) {
            return f;
        }
        f.t = unit_power(f.r, n.twice());
        f.e = std::exp(-std::log1p(f.t) / n.twice());
        return f;
    }

    /// Upper end of the range of rho_N, attained on the diagonals.
    [[nodiscard]] inline double radial_factor_max(Exponent n) noexcept
    {
        return std::exp2((static_cast<double>(n.value()) - 1.0) / n.twice());
    }

    /// log(exp(a) + exp(b)) allowing -inf arguments.
    [[nodiscard]] inline double log_sum_exp(double a, double b) noexcept
    {
        const double hi = std::max(a, b);
        const double lo = std::min(a, b);
        if (hi == -std::numeric_limits<double>::infinity()) {
            return hi;
        }
        return hi + std::log1p(std::exp(lo - hi));
    }

    /// Apply the inverse of the frame's linear part to (du, dv).
    [[nodiscard]] inline Point2 solve_linear(const AffineFrame& f, double du, double dv) noexcept
    {
        const double det = f.determinant();
        return {(f.epsilon() * du - f.beta() * dv) / det, (f.alpha() * dv - f.delta() * du) / det};
    }

} // namespace detail

/// rho_N(theta) = (cos^{2N} + sin^{2N})^{-1/(2N)}, the scale that carries the
/// unit direction at theta onto C_N. Evaluated in factored form and clamped
/// to its exact range [1, 2^{(N-1)/(2N)}].
[[nodiscard]] inline double radial_factor(Angle theta, Exponent n) noexcept
{
    const auto f = detail::factor(theta, n);
    const double rho = f.e / f.m;
    return std::clamp(rho, 1.0, detail::radial_factor_max(n));
}

/// Pointwise limit of rho_N as N grows: 1 / max(|cos|, |sin|).
[[nodiscard]] inline double radial_factor_limit(Angle theta) noexcept
{
    const double c = std::abs(std::cos(theta.radians()));
    const double s = std::abs(std::sin(theta.radians()));
    return 1.0 / std::max(c, s);
}

/// Point of C_N in direction theta.
[[nodiscard]] inline Point2 cn_point(Angle theta, Exponent n) noexcept
{
    // (cos/m, sin/m) has one coordinate of magnitude exactly 1, which keeps
    // the dominant coordinate exact to one rounding of e.
    const auto f = detail::factor(theta, n);
    return {f.cos / f.m * f.e, f.sin / f.m * f.e};
}

/// Radial projection of direction theta onto the square boundary.
[[nodiscard]] inline Point2 cinf_point(Angle theta) noexcept
{
    const double c = std::cos(theta.radians());
    const double s = std::sin(theta.radians());
    const double m = std::max(std::abs(c), std::abs(s));
    return {c / m, s / m};
}

/// (alpha x + beta y + gamma, delta x + epsilon y + zeta).
[[nodiscard]] inline Point2 forward_affine(const Point2& p, const AffineFrame& f) noexcept
{
    return {f.alpha() * p.x + f.beta() * p.y + f.gamma(),
            f.delta() * p.x + f.epsilon() * p.y + f.zeta()};
}

/// Solve forward_affine(q, f) = p for q, with one step of residual correction.
[[nodiscard]] inline Point2 inverse_affine(const Point2& p, const AffineFrame& f) noexcept
{
    Point2 q = detail::solve_linear(f, p.x - f.gamma(), p.y - f.zeta());
    const Point2 image = forward_affine(q, f);
    const Point2 fix = detail::solve_linear(f, p.x - image.x, p.y - image.y);
    if (std::isfinite(fix.x) && std::isfinite(fix.y)) {
        q.x += fix.x;
        q.y += fix.y;
    }
    return q;
}

/// (alpha x + beta y + gamma)^{2N} + (delta x + epsilon y + zeta)^{2N} - 1,
/// computed as expm1 of a log-sum-exp. Returns exactly -1 when both mapped
/// coordinates vanish and +inf when the power sum exceeds the double range.
[[nodiscard]] inline double residual_log(const Point2& p, Exponent n, const AffineFrame& f = {}) noexcept
{
    const Point2 uv = forward_affine(p, f);
    if (uv.x == 0.0 && uv.y == 0.0) {
        return -1.0;
    }
    const double a = n.twice() * std::log(std::abs(uv.x));
    const double b = n.twice() * std::log(std::abs(uv.y));
    const double lse = detail::log_sum_exp(a, b);
    if (lse > std::log(std::numeric_limits<double>::max())) {
        return std::numeric_limits<double>::infinity();
    }
    return std::expm1(lse);
}

/// Point of L_N in direction theta: the preimage under the frame of the C_N
/// point. Increasing theta runs counterclockwise in (u, v) space, and
/// clockwise in (x, y) space when the frame determinant is negative.
[[nodiscard]] inline Point2 ln_point(Angle theta, Exponent n, const AffineFrame& f) noexcept
{
    return inverse_affine(cn_point(theta, n), f);
}

/// Affine map carrying C_inf onto the limit shape of L_N. This is the
/// inverse frame map.
[[nodiscard]] inline Point2 limit_map(const Point2& p, const AffineFrame& f) noexcept
{
    return inverse_affine(p, f);
}

/// Recover theta from a point of L_N: the direction of its forward image.
[[nodiscard]] inline Angle theta_of_point(const Point2& p, const AffineFrame& f = {})
{
    const Point2 uv = forward_affine(p, f);
    if (uv.x == 0.0 && uv.y == 0.0) {
        throw Error(ErrorCode::OriginPoint, "forward image is the origin, direction undefined");
    }
    return normalize_angle(std::atan2(uv.y, uv.x));
}

/// d rho_N / d theta, in the same factored form as radial_factor:
///   cos sin m^{-3} (c'^{2N-2} - s'^{2N-2}) e / (1 + t)
/// with c' = |cos|/m and s' = |sin|/m.
[[nodiscard]] inline double radial_factor_derivative(Angle theta, Exponent n) noexcept
{
    const auto f = detail::factor(theta, n);
    const double k = n.twice() - 2.0;
    if (k == 0.0) {
        return 0.0;
    }
    // 1 - r^k, computed without cancellation when r is close to 1.
    const double gap = f.r == 0.0 ? 1.0 : -std::expm1(k * std::log(f.r));
    const double diff = f.cos_dominant ? gap : -gap;
    return f.cos * f.sin / (f.m * f.m * f.m) * diff * f.e / (1.0 + f.t);
}

namespace detail {

    /// Tangent of the C_N parameterization in (u, v) space.
    [[nodiscard]] inline Velocity uv_velocity(Angle theta, Exponent n) noexcept
    {
        const double rho = radial_factor(theta, n);
        const double drho = radial_factor_derivative(theta, n);
        const double c = std::cos(theta.radians());
        const double s = std::sin(theta.radians());
        return {drho * c - rho * s, drho * s + rho * c};
    }

} // namespace detail

/// (dx/dtheta, dy/dtheta) of ln_point.
[[nodiscard]] inline Velocity curve_velocity(Angle theta, Exponent n, const AffineFrame& f = {}) noexcept
{
    const Velocity uv = detail::uv_velocity(theta, n);
    const Point2 xy = detail::solve_linear(f, uv.dx, uv.dy);
    return {xy.x, xy.y};
}

/// |curve_velocity|. For similarity frames the rotation drops out and the
/// speed is |(rho', rho)| / sqrt|det|.
[[nodiscard]] inline double curve_speed(Angle theta, Exponent n, const AffineFrame& f = {}) noexcept
{
    if (f.is_similarity()) {
        const double rho = radial_factor(theta, n);
        const double drho = radial_factor_derivative(theta, n);
        return std::hypot(drho, rho) / std::sqrt(std::abs(f.determinant()));
    }
    return curve_velocity(theta, n, f).norm();
}

} // namespace fermat
