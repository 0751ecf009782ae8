#pragma once

#include <cmath>
#include <string>

#include "fermat/error.hpp"

namespace fermat {

struct SimpsonOptions {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_depth = 60;
    int min_depth = 3;
};

namespace detail {

    template <class F>
    struct SimpsonStep {
        F& f;
        const SimpsonOptions& opt;

        static double rule(double a, double b, double fa, double fm, double fb)
        {
            // Grouped so a constant integrand gives exactly (b - a) * f.
            return (b - a) * ((fa + 4.0 * fm + fb) / 6.0);
        }

        double operator()(double a, double b, double fa, double fm, double fb, double whole, double eps,
                          int depth) const
        {
            const double m = 0.5 * (a + b);
            const double lm = 0.5 * (a + m);
            const double rm = 0.5 * (m + b);
            if (!(a < lm && lm < m && m < rm && rm < b) || depth >= opt.max_depth) {
                throw Error(ErrorCode::QuadratureFailure,
                            "adaptive Simpson did not reach the error target near theta = " + std::to_string(m));
            }
            const double flm = f(lm);
            const double frm = f(rm);
            const double left = rule(a, m, fa, flm, fm);
            const double right = rule(m, b, fm, frm, fb);
            const double delta = left + right - whole;
            if (depth >= opt.min_depth && std::abs(delta) <= 15.0 * eps) {
                return left + right + delta / 15.0;
            }
            return (*this)(a, m, fa, flm, fm, left, 0.5 * eps, depth + 1)
                 + (*this)(m, b, fm, frm, fb, right, 0.5 * eps, depth + 1);
        }
    };

} // namespace detail

/// Adaptive Simpson with Richardson correction. The error target on [a, b]
/// is abs_tol + rel_tol * |coarse estimate|, halved at each subdivision.
/// Throws QuadratureFailure when the target is not met by max_depth.
template <class F>
[[nodiscard]] double adaptive_simpson(F&& f, double a, double b, const SimpsonOptions& opt = {})
{
    if (a == b) {
        return 0.0;
    }
    const double fa = f(a);
    const double fb = f(b);
    const double fm = f(0.5 * (a + b));
    const double whole = detail::SimpsonStep<F>::rule(a, b, fa, fm, fb);
    const double eps = opt.abs_tol + opt.rel_tol * std::abs(whole);
    detail::SimpsonStep<F> step{f, opt};
    return step(a, b, fa, fm, fb, whole, eps, 0);
}

} // namespace fermat
