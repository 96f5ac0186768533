#pragma once

// Real-line quadrature for integrands with double-exponential decay.  For
// such integrands the equally weighted trapezoidal rule is the
// double-exponential rule: accuracy improves spectrally as the step shrinks,
// so node doubling gives a reliable error estimate.

#include <cmath>
#include <complex>
#include <cstddef>

#include "zeroscope/core.hpp"

namespace zeroscope::detail {

template <typename R, typename F>
struct LineIntegralResult {
    std::complex<R> value;
    R error_estimate;
};

// Integrate f over [-half_width, half_width] by trapezoid with node doubling
// until successive refinements differ by <= abs_tol.  Throws ToleranceError
// if the budget of doublings is exhausted first.
template <typename R, typename F>
std::complex<R> integrate_line(F&& f, R half_width, R abs_tol, int initial_points,
                               int max_doublings) {
    const R L = half_width;
    std::size_t n = static_cast<std::size_t>(initial_points);
    R h = 2 * L / static_cast<R>(n);

    std::complex<R> sum = (f(-L) + f(L)) * R(0.5);
    for (std::size_t k = 1; k < n; ++k) sum += f(-L + static_cast<R>(k) * h);
    std::complex<R> integral = sum * h;

    for (int level = 0; level < max_doublings; ++level) {
        // refine: midpoints of the current mesh
        std::complex<R> mid{};
        for (std::size_t k = 0; k < n; ++k) mid += f(-L + (static_cast<R>(k) + R(0.5)) * h);
        std::complex<R> refined = integral * R(0.5) + mid * (h * R(0.5));
        const R change = std::abs(refined - integral);
        integral = refined;
        n *= 2;
        h *= R(0.5);
        if (change <= abs_tol) return integral;
    }
    throw ToleranceError("integrate_line: doubling budget exhausted before tolerance was met");
}

}  // namespace zeroscope::detail
