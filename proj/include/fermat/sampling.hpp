#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numbers>
#include <span>
#include <vector>

#include "fermat/core.hpp"
#include "fermat/curve.hpp"
#include "fermat/error.hpp"
#include "fermat/quadrature.hpp"
#include "fermat/types.hpp"

namespace fermat {

inline constexpr double default_arc_tolerance = 1e-10;
inline constexpr int default_gap_resolution = 4096;
/// Nodes of the cumulative arc-length table used by resample_by_arclength.
inline constexpr int arclength_table_nodes = 4096;

/// Samples L_N at theta_k = 2 pi k / count.
[[nodiscard]] inline SampledCurve sample_uniform_theta(Exponent n, const AffineFrame& frame, std::int64_t count)
{
    if (count < 3) {
        throw Error(ErrorCode::TooFewSamples, "need count >= 3, got " + std::to_string(count));
    }
    std::vector<Angle> thetas;
    std::vector<Point2> points;
    thetas.reserve(static_cast<std::size_t>(count));
    points.reserve(static_cast<std::size_t>(count));
    for (std::int64_t k = 0; k < count; ++k) {
        const Angle theta(two_pi * static_cast<double>(k) / static_cast<double>(count));
        thetas.push_back(theta);
        points.push_back(ln_point(theta, n, frame));
    }
    return SampledCurve(n, frame, std::move(thetas), std::move(points), true);
}

/// Samples the open arc lo <= theta <= hi with both endpoints included.
/// Requires 0 <= lo < hi < 2pi.
[[nodiscard]] inline SampledCurve sample_theta_arc(Exponent n, const AffineFrame& frame, double lo, double hi,
                                                   std::int64_t count)
{
    if (count < 3) {
        throw Error(ErrorCode::TooFewSamples, "need count >= 3, got " + std::to_string(count));
    }
    if (!(0.0 <= lo && lo < hi && hi < two_pi)) {
        throw Error(ErrorCode::InvalidArgument, "arc sampling needs 0 <= lo < hi < 2pi");
    }
    std::vector<Angle> thetas;
    std::vector<Point2> points;
    for (std::int64_t k = 0; k < count; ++k) {
        const double w = static_cast<double>(k) / static_cast<double>(count - 1);
        const Angle theta(k + 1 == count ? hi : lo + (hi - lo) * w);
        thetas.push_back(theta);
        points.push_back(ln_point(theta, n, frame));
    }
    return SampledCurve(n, frame, std::move(thetas), std::move(points), false);
}

namespace detail {

    [[nodiscard]] inline double arc_piece(Exponent n, const AffineFrame& frame, double a, double b, double abs_tol,
                                          double rel_tol)
    {
        SimpsonOptions opt;
        opt.abs_tol = abs_tol;
        opt.rel_tol = rel_tol;
        return adaptive_simpson([&](double t) { return curve_speed(Angle(t), n, frame); }, a, b, opt);
    }

} // namespace detail

/// Length of L_N between theta_a and theta_b (0 <= theta_b - theta_a <= 2pi).
/// The span is split at every multiple of pi/4, where the speed bends sharply
/// for large N; the error target tol + tol * length is shared across pieces
/// in proportion to their width.
[[nodiscard]] inline double arc_length(Exponent n, const AffineFrame& frame, Angle theta_a, Angle theta_b,
                                       double tol = default_arc_tolerance)
{
    if (!(tol > 0.0) || !std::isfinite(tol)) {
        throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
    }
    const double a = theta_a.radians();
    const double b = theta_b.radians();
    if (a == b) {
        return 0.0;
    }
    if (!(a < b) || b - a > two_pi * (1.0 + 4.0 * std::numeric_limits<double>::epsilon())) {
        throw Error(ErrorCode::InvalidArgument, "arc_length needs theta_a <= theta_b <= theta_a + 2pi");
    }
    constexpr double quarter = std::numbers::pi / 4.0;
    std::vector<double> breaks{a};
    for (double k = std::floor(a / quarter) + 1.0;; k += 1.0) {
        const double t = k * quarter;
        if (!(t < b)) {
            break;
        }
        if (t > a) {
            breaks.push_back(t);
        }
    }
    breaks.push_back(b);

    const double width = b - a;
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        const double share = (breaks[i + 1] - breaks[i]) / width;
        total += detail::arc_piece(n, frame, breaks[i], breaks[i + 1], tol * share, tol);
    }
    return total;
}

/// Samples L_N at count points spaced equally in arc length, starting at
/// theta = 0. Built from a cumulative length table on a uniform theta grid,
/// then bisection inside the bracketing table cell.
[[nodiscard]] inline SampledCurve resample_by_arclength(Exponent n, const AffineFrame& frame, std::int64_t count,
                                                        double tol = default_arc_tolerance)
{
    if (count < 3) {
        throw Error(ErrorCode::TooFewSamples, "need count >= 3, got " + std::to_string(count));
    }
    if (!(tol > 0.0) || !std::isfinite(tol)) {
        throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
    }
    constexpr int cells = arclength_table_nodes;
    constexpr double root_tol = 1e-10;

    auto node = [](int k) { return two_pi * static_cast<double>(k) / cells; };
    const double piece_abs = tol / cells;

    std::vector<double> cumulative(cells + 1, 0.0);
    for (int k = 0; k < cells; ++k) {
        cumulative[k + 1] = cumulative[k] + detail::arc_piece(n, frame, node(k), node(k + 1), piece_abs, tol);
    }
    const double total = cumulative.back();

    std::vector<Angle> thetas;
    std::vector<Point2> points;
    thetas.reserve(static_cast<std::size_t>(count));
    points.reserve(static_cast<std::size_t>(count));
    for (std::int64_t j = 0; j < count; ++j) {
        const double target = total * static_cast<double>(j) / static_cast<double>(count);
        // Last table node with cumulative <= target.
        const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), target);
        const int cell = std::min(static_cast<int>(it - cumulative.begin()) - 1, cells - 1);
        double lo = node(cell);
        double hi = node(cell + 1);
        double theta = lo;
        if (target - cumulative[cell] > root_tol) {
            for (;;) {
                theta = 0.5 * (lo + hi);
                if (!(lo < theta && theta < hi)) {
                    break;
                }
                const double miss =
                    cumulative[cell] + detail::arc_piece(n, frame, node(cell), theta, piece_abs, tol) - target;
                if (std::abs(miss) <= root_tol) {
                    break;
                }
                (miss < 0.0 ? lo : hi) = theta;
            }
        }
        const Angle angle(theta);
        thetas.push_back(angle);
        points.push_back(ln_point(angle, n, frame));
    }
    return SampledCurve(n, frame, std::move(thetas), std::move(points), true);
}

/// max over theta_k = 2 pi k / resolution of |ln_point - limit_map(cinf_point)|.
[[nodiscard]] inline double convergence_gap(Exponent n, const AffineFrame& frame,
                                            std::int64_t resolution = default_gap_resolution)
{
    if (resolution < 16) {
        throw Error(ErrorCode::InvalidArgument, "convergence_gap needs resolution >= 16");
    }
    double gap = 0.0;
    for (std::int64_t k = 0; k < resolution; ++k) {
        const Angle theta(two_pi * static_cast<double>(k) / static_cast<double>(resolution));
        const Point2 curve = ln_point(theta, n, frame);
        const Point2 limit = limit_map(cinf_point(theta), frame);
        gap = std::max(gap, distance(curve, limit));
    }
    return gap;
}

namespace detail {

    [[nodiscard]] inline double point_segment_distance(const Point2& p, const Point2& a, const Point2& b) noexcept
    {
        const double dx = b.x - a.x;
        const double dy = b.y - a.y;
        const double len2 = dx * dx + dy * dy;
        if (len2 == 0.0) {
            return distance(p, a);
        }
        const double t = std::clamp(((p.x - a.x) * dx + (p.y - a.y) * dy) / len2, 0.0, 1.0);
        return std::hypot(p.x - (a.x + t * dx), p.y - (a.y + t * dy));
    }

    /// max over vertices of `from` of the distance to polyline `to`.
    [[nodiscard]] inline double directed_hausdorff(std::span<const Point2> from, std::span<const Point2> to,
                                                   bool to_closed) noexcept
    {
        const std::size_t segments = to_closed ? to.size() : to.size() - 1;
        double worst = 0.0;
        for (const Point2& p : from) {
            double best = std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < segments; ++i) {
                best = std::min(best, point_segment_distance(p, to[i], to[(i + 1) % to.size()]));
            }
            worst = std::max(worst, best);
        }
        return worst;
    }

} // namespace detail

/// Symmetric Hausdorff distance between two polylines, measured from each
/// polyline's vertices to the other's segments.
[[nodiscard]] inline double polyline_hausdorff(std::span<const Point2> a, bool a_closed, std::span<const Point2> b,
                                               bool b_closed)
{
    if (a.size() < 2 || b.size() < 2) {
        throw Error(ErrorCode::TooFewSamples, "polylines need at least 2 vertices");
    }
    return std::max(detail::directed_hausdorff(a, b, b_closed), detail::directed_hausdorff(b, a, a_closed));
}

[[nodiscard]] inline double polyline_hausdorff(std::span<const Point2> a, std::span<const Point2> b)
{
    return polyline_hausdorff(a, true, b, true);
}

[[nodiscard]] inline double polyline_hausdorff(const SampledCurve& a, const SampledCurve& b)
{
    return polyline_hausdorff(a.points(), a.closed(), b.points(), b.closed());
}

} // namespace fermat
