#pragma once

// Scalar special functions: Gamma, the generalized hypergeometric 0F2, the
// quartic-weight generalized Airy function, the imaginary-order K-Bessel
// value K_{ip+eps}(1) as a Fourier integral, the Phi kernel with its first
// two derivatives, and xi on the critical line as the Fourier transform of
// Phi.  Everything is templated on the working precision so callers that
// need headroom below DBL_MIN (deep Phi tails, high-order stencils) can
// instantiate with long double.

#include <cmath>
#include <complex>
#include <limits>

#include "zeroscope/core.hpp"
#include "zeroscope/quadrature.hpp"

namespace zeroscope {

inline constexpr double kPi = 3.14159265358979323846264338327950288;

// Gamma for positive real arguments (all this library needs).  Delegates to
// the C library implementation, which is good to ~15 digits here.
template <typename R = double>
R gamma_fn(R x) {
    if (!(x > 0)) throw DomainError("gamma_fn: argument must be positive");
    return std::tgamma(x);
}

namespace detail {
template <typename R>
bool is_nonpositive_integer(R b) {
    return b <= 0 && std::abs(b - std::round(b)) < std::numeric_limits<R>::epsilon() * 16;
}
}  // namespace detail

// 0F2(; b1, b2; z) = sum_n z^n / ((b1)_n (b2)_n n!).  Terms are accumulated
// until the cutoff criterion holds twice in a row.
template <typename R>
std::complex<R> hyp0f2(R b1, R b2, std::complex<R> z, const EvalTolerances& tol = {}) {
    if (detail::is_nonpositive_integer(b1) || detail::is_nonpositive_integer(b2))
        throw DomainError("hyp0f2: parameters must not be non-positive integers");
    std::complex<R> term{1, 0};
    std::complex<R> sum = term;
    int small_streak = 0;
    for (int n = 0; n < tol.max_series_terms; ++n) {
        term *= z / ((b1 + static_cast<R>(n)) * (b2 + static_cast<R>(n)) * static_cast<R>(n + 1));
        sum += term;
        if (std::abs(term) < static_cast<R>(tol.series_term_cutoff) * std::abs(sum)) {
            if (++small_streak >= 2) return sum;
        } else {
            small_streak = 0;
        }
    }
    throw ConvergenceError("hyp0f2: series did not converge within the term budget");
}

// Momentum-space generalized Airy function (quartic weight),
//   0F2(;1/2,3/4;w^4)/Gamma(3/4) - 2 w^2 0F2(;5/4,3/2;w^4)/Gamma(5/4),
// with w = p + i eps.  Agrees with the Fourier transform of exp(-x^4/256)
// up to the global constant 2*sqrt(pi) (measured and pinned in the tests).
template <typename R>
std::complex<R> generalized_airy(std::complex<R> p, R epsilon, const EvalTolerances& tol = {}) {
    const std::complex<R> w = p + std::complex<R>{0, epsilon};
    const std::complex<R> z = w * w * w * w;
    const std::complex<R> a = hyp0f2<R>(R(0.5), R(0.75), z, tol) / gamma_fn<R>(R(0.75));
    const std::complex<R> b = hyp0f2<R>(R(1.25), R(1.5), z, tol) / gamma_fn<R>(R(1.25));
    return a - R(2) * w * w * b;
}

template <typename R>
std::complex<R> generalized_airy(R p, R epsilon, const EvalTolerances& tol = {}) {
    return generalized_airy(std::complex<R>{p, 0}, epsilon, tol);
}

// (1/sqrt(2 pi)) Int exp(-i p x) exp(-cosh x) exp(-eps x) dx.  Equals
// sqrt(2/pi) * K_{ip+eps}(1); the tests pin the constant against K_0(1).
template <typename R>
std::complex<R> bessel_k_imag(R p, R epsilon, const EvalTolerances& tol = {}) {
    if (!(std::abs(epsilon) < 1))
        throw DomainError("bessel_k_imag: |epsilon| must be < 1 for a decaying integrand");
    tol.validate();
    const R L = static_cast<R>(tol.quadrature_range);
    auto integrand = [&](R x) -> std::complex<R> {
        const R mag = std::exp(-std::cosh(x) - epsilon * x);
        return std::complex<R>{mag * std::cos(p * x), -mag * std::sin(p * x)};
    };
    const std::complex<R> integral =
        detail::integrate_line<R>(integrand, L, static_cast<R>(tol.quadrature_abs_tol),
                                  tol.initial_quadrature_points, tol.max_doublings);
    return integral / std::sqrt(R(2) * static_cast<R>(kPi));
}

// ---------------------------------------------------------------------------
// Phi kernel

template <typename R>
struct PhiEval {
    R value;
    R d1;
    R d2;
};

namespace detail {

// One series term and its first two x-derivatives.  With u = e^x the term is
// (2 pi^2 n^4 u^{9/2} - 3 pi n^2 u^{5/2}) exp(-pi n^2 u^2); differentiation
// maps a monomial c u^m to (c m) u^m - (2 pi n^2 c) u^{m+2}, so the
// derivatives stay short monomial sums in u.
template <typename R>
PhiEval<R> phi_term(int n, R x) {
    const R pi = static_cast<R>(kPi);
    const R n2 = static_cast<R>(n) * static_cast<R>(n);
    const R u = std::exp(x);
    const R damp = std::exp(-pi * n2 * u * u);
    if (damp == 0) return {0, 0, 0};  // deep tail: damping underflows before u^m overflows

    struct Mono {
        R c;
        R m;
    };
    Mono d0[2] = {{2 * pi * pi * n2 * n2, R(4.5)}, {-3 * pi * n2, R(2.5)}};
    Mono d1[4], d2[8];
    auto differentiate = [&](const Mono* in, int len, Mono* out) {
        for (int i = 0; i < len; ++i) {
            out[2 * i] = {in[i].c * in[i].m, in[i].m};
            out[2 * i + 1] = {-2 * pi * n2 * in[i].c, in[i].m + 2};
        }
    };
    differentiate(d0, 2, d1);
    differentiate(d1, 4, d2);

    auto eval = [&](const Mono* ms, int len) {
        R s = 0;
        for (int i = 0; i < len; ++i) s += ms[i].c * std::pow(u, ms[i].m);
        return s * damp;
    };
    return {eval(d0, 2), eval(d1, 4), eval(d2, 8)};
}

}  // namespace detail

// Literal series evaluation of Phi and its first two derivatives.  The
// series converges slowly left of x_min, so callers reach negative x through
// the parity relations instead (see phi_kernel / phi_with_derivatives).
template <typename R>
PhiEval<R> phi_series_direct(R x, const EvalTolerances& tol = {}, R x_min = R(-1)) {
    if (x < x_min) throw DomainError("phi_series_direct: x below the direct-evaluation window");
    PhiEval<R> sum{0, 0, 0};
    int small_streak = 0;
    for (int n = 1; n <= tol.max_series_terms; ++n) {
        const PhiEval<R> t = detail::phi_term(n, x);
        sum.value += t.value;
        sum.d1 += t.d1;
        sum.d2 += t.d2;
        const R scale = std::abs(sum.value) + std::abs(sum.d1) + std::abs(sum.d2);
        const R mag = std::abs(t.value) + std::abs(t.d1) + std::abs(t.d2);
        if (mag == 0) break;  // every later term underflows as well
        if (n >= 2 && mag < static_cast<R>(tol.series_term_cutoff) * scale) {
            if (++small_streak >= 2) break;
        } else {
            small_streak = 0;
        }
        if (n == tol.max_series_terms)
            throw ConvergenceError("phi_series_direct: series converged too slowly");
    }
    return sum;
}

// Phi(x); even in x, strictly positive wherever it is representable in R
// (beyond that the sum underflows to +0).  Negative arguments use the parity
// Phi(-x) = Phi(x), verified against the direct series in the test suite.
template <typename R>
R phi_kernel(R x, const EvalTolerances& tol = {}) {
    const R v = phi_series_direct(std::abs(x), tol).value;
    if (v < 0) throw NumericsError("phi_kernel: series produced a negative value");
    return v;
}

// Phi, Phi', Phi'' with the parity relations (Phi even, Phi' odd).
template <typename R>
PhiEval<R> phi_with_derivatives(R x, const EvalTolerances& tol = {}) {
    PhiEval<R> e = phi_series_direct(std::abs(x), tol);
    if (x < 0) e.d1 = -e.d1;
    return e;
}

// (1/sqrt(2 pi)) Int exp(-i p x) Phi(x) exp(-eps x) dx over the Phi window.
// Real for eps = 0; zeros on the real p axis sit at the critical-line zeros.
template <typename R>
std::complex<R> xi_line(R p, R epsilon, const EvalTolerances& tol = {}) {
    if (!(std::abs(epsilon) <= 0.5)) throw DomainError("xi_line: |epsilon| must be <= 1/2");
    tol.validate();
    const R W = static_cast<R>(tol.phi_half_width);
    auto integrand = [&](R x) -> std::complex<R> {
        const R mag = phi_kernel(x, tol) * std::exp(-epsilon * x);
        return std::complex<R>{mag * std::cos(p * x), -mag * std::sin(p * x)};
    };
    const std::complex<R> integral =
        detail::integrate_line<R>(integrand, W, static_cast<R>(tol.quadrature_abs_tol),
                                  tol.initial_quadrature_points, tol.max_doublings);
    return integral / std::sqrt(R(2) * static_cast<R>(kPi));
}

}  // namespace zeroscope
