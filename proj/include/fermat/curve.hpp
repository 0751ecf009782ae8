#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "fermat/core.hpp"
#include "fermat/error.hpp"
#include "fermat/types.hpp"

namespace fermat {

/// Largest |residual_log| accepted for a point said to lie on a curve.
inline constexpr double membership_tolerance = 1e-9;

/// A theta-tagged polyline on L_N. The constructor enforces the invariants:
/// at least three samples, thetas strictly increasing in [0, 2pi), and every
/// point on the curve to within membership_tolerance.
class SampledCurve {
public:
    SampledCurve(Exponent n, AffineFrame frame, std::vector<Angle> thetas, std::vector<Point2> points,
                 bool closed)
        : n_(n)
        , frame_(frame)
        , thetas_(std::move(thetas))
        , points_(std::move(points))
        , closed_(closed)
    {
        if (thetas_.size() != points_.size()) {
            throw Error(ErrorCode::InvalidCurve, "theta and point counts differ");
        }
        if (thetas_.size() < 3) {
            throw Error(ErrorCode::TooFewSamples,
                        "a sampled curve needs at least 3 samples, got " + std::to_string(thetas_.size()));
        }
        for (std::size_t i = 0; i < thetas_.size(); ++i) {
            const double t = thetas_[i].radians();
            if (t < 0.0 || t >= two_pi) {
                throw Error(ErrorCode::InvalidCurve, "theta outside [0, 2pi) at sample " + std::to_string(i));
            }
            if (i > 0 && !(thetas_[i - 1].radians() < t)) {
                throw Error(ErrorCode::InvalidCurve, "thetas not strictly increasing at sample " + std::to_string(i));
            }
            if (!points_[i].finite()) {
                throw Error(ErrorCode::InvalidCurve, "non-finite point at sample " + std::to_string(i));
            }
            if (!(std::abs(residual_log(points_[i], n_, frame_)) <= membership_tolerance)) {
                throw Error(ErrorCode::InvalidCurve, "point off the curve at sample " + std::to_string(i));
            }
        }
    }

    [[nodiscard]] Exponent exponent() const noexcept { return n_; }
    [[nodiscard]] const AffineFrame& frame() const noexcept { return frame_; }
    [[nodiscard]] const std::vector<Angle>& thetas() const noexcept { return thetas_; }
    [[nodiscard]] const std::vector<Point2>& points() const noexcept { return points_; }
    [[nodiscard]] bool closed() const noexcept { return closed_; }
    [[nodiscard]] std::size_t size() const noexcept { return points_.size(); }

private:
    Exponent n_;
    AffineFrame frame_;
    std::vector<Angle> thetas_;
    std::vector<Point2> points_;
    bool closed_;
};

} // namespace fermat
