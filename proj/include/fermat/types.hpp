#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>

#include "fermat/error.hpp"

namespace fermat {

inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// The N of x^{2N} + y^{2N} = 1. Only N is stored; the even exponent 2N is
/// always formed in floating point so it never overflows an integer.
class Exponent {
public:
    static constexpr std::int64_t max_value = 2147483647; // 2^31 - 1

    explicit Exponent(std::int64_t n)
        : n_(n)
    {
        if (n < 1 || n > max_value) {
            throw Error(ErrorCode::InvalidExponent,
                        "N must lie in [1, 2^31-1], got " + std::to_string(n));
        }
    }

    [[nodiscard]] std::int64_t value() const noexcept { return n_; }
    /// 2N as a double (exact for every admissible N).
    [[nodiscard]] double twice() const noexcept { return 2.0 * static_cast<double>(n_); }

    friend bool operator==(Exponent, Exponent) = default;
    friend auto operator<=>(Exponent, Exponent) = default;

private:
    std::int64_t n_;
};

/// A finite angle in radians. Not necessarily canonical; see normalize_angle.
class Angle {
public:
    explicit Angle(double radians)
        : rad_(radians)
    {
        if (!std::isfinite(radians)) {
            throw Error(ErrorCode::InvalidAngle, "angle must be finite");
        }
    }

    [[nodiscard]] double radians() const noexcept { return rad_; }

    friend bool operator==(Angle, Angle) = default;
    friend auto operator<=>(Angle, Angle) = default;

private:
    double rad_;
};

/// Reduce theta to the canonical range [0, 2pi).
[[nodiscard]] inline Angle normalize_angle(double theta)
{
    if (!std::isfinite(theta)) {
        throw Error(ErrorCode::InvalidAngle, "cannot normalize a non-finite angle");
    }
    if (theta >= 0.0 && theta < two_pi) {
        return Angle(theta);
    }
    double r = std::fmod(theta, two_pi);
    if (r < 0.0) {
        r += two_pi;
    }
    // A tiny negative remainder can round up to exactly 2pi.
    if (r >= two_pi) {
        r = 0.0;
    }
    return Angle(r);
}

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    [[nodiscard]] bool finite() const noexcept { return std::isfinite(x) && std::isfinite(y); }
    friend bool operator==(const Point2&, const Point2&) = default;
};

[[nodiscard]] inline double distance(const Point2& a, const Point2& b) noexcept
{
    return std::hypot(a.x - b.x, a.y - b.y);
}

/// Derivative of a curve point with respect to theta.
struct Velocity {
    double dx = 0.0;
    double dy = 0.0;

    [[nodiscard]] double norm() const noexcept { return std::hypot(dx, dy); }
};

/// Coefficients of the map (x, y) -> (alpha x + beta y + gamma,
/// delta x + epsilon y + zeta). Construction rejects non-finite and
/// numerically singular coefficient sets, so every AffineFrame is invertible.
class AffineFrame {
public:
    AffineFrame() = default; // identity

    AffineFrame(double alpha, double beta, double gamma, double delta, double epsilon, double zeta)
        : c_{alpha, beta, gamma, delta, epsilon, zeta}
    {
        for (double v : c_) {
            if (!std::isfinite(v)) {
                throw Error(ErrorCode::InvalidFrame, "frame coefficients must be finite");
            }
        }
        const double det = determinant();
        const double scale = (std::max(std::abs(alpha), std::abs(beta)) + 1.0)
                           * (std::max(std::abs(delta), std::abs(epsilon)) + 1.0);
        if (!(std::abs(det) > 1e-12 * scale)) {
            throw Error(ErrorCode::SingularFrame,
                        "alpha*epsilon - beta*delta = " + std::to_string(det)
                            + " is too close to zero");
        }
    }

    [[nodiscard]] static AffineFrame identity() { return {}; }

    [[nodiscard]] double alpha() const noexcept { return c_[0]; }
    [[nodiscard]] double beta() const noexcept { return c_[1]; }
    [[nodiscard]] double gamma() const noexcept { return c_[2]; }
    [[nodiscard]] double delta() const noexcept { return c_[3]; }
    [[nodiscard]] double epsilon() const noexcept { return c_[4]; }
    [[nodiscard]] double zeta() const noexcept { return c_[5]; }

    /// Coefficients in (alpha, beta, gamma, delta, epsilon, zeta) order.
    [[nodiscard]] const std::array<double, 6>& coefficients() const noexcept { return c_; }

    [[nodiscard]] double determinant() const noexcept { return c_[0] * c_[4] - c_[1] * c_[3]; }

    [[nodiscard]] bool is_identity() const noexcept { return c_ == identity_coefficients; }

    /// True when the linear part is a rotation/reflection times a uniform
    /// scale, so it scales every tangent vector by the same factor.
    [[nodiscard]] bool is_similarity() const noexcept
    {
        return (c_[0] == c_[4] && c_[1] == -c_[3]) || (c_[0] == -c_[4] && c_[1] == c_[3]);
    }

    friend bool operator==(const AffineFrame&, const AffineFrame&) = default;

private:
    static constexpr std::array<double, 6> identity_coefficients{1.0, 0.0, 0.0, 0.0, 1.0, 0.0};
    std::array<double, 6> c_ = identity_coefficients;
};

} // namespace fermat
