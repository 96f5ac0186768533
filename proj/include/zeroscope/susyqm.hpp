#pragma once

// Superpotentials for the three function families, their minus partner
// potentials, zero-energy ground states, finite-difference residuals of the
// first-order (annihilation) and second-order (Hamiltonian) relations, and
// the third-order momentum-space equation obeyed by the quartic family.
//
//   W_1 = g x^3 + eps            V-_1 = g^2 x^6 + 2 eps g x^3 + eps^2 - 3 g x^2
//   W_2 = g sinh x + eps         V-_2 = g^2 sinh^2 x + eps^2 + 2 eps g sinh x - g cosh x
//   W_3 = -Phi'/Phi + eps        V-_3 = -2 eps Phi'/Phi + eps^2 + Phi''/Phi
//
// Ground states are normalized to psi(0) = 1 (the exponential of the
// antiderivative anchored at 0 does that by construction); L2 norms are
// metadata, not normalization.

#include <cmath>
#include <vector>

#include "zeroscope/core.hpp"
#include "zeroscope/specialfn.hpp"

namespace zeroscope {

struct SuperpotentialSpec {
    FunctionId function = FunctionId::F1Quartic;
    double g = 1.0 / 64.0;  // F1 quartic coupling; F2 cosh coupling (1 reproduces exp(-cosh x))
    double epsilon = 0.0;

    void validate() const {
        if (!(g > 0)) throw DomainError("SuperpotentialSpec: g must be positive");
    }
};

inline double superpotential(const SuperpotentialSpec& spec, double x,
                             const EvalTolerances& tol = {}) {
    spec.validate();
    switch (spec.function) {
        case FunctionId::F1Quartic: return spec.g * x * x * x + spec.epsilon;
        case FunctionId::F2Cosh: return spec.g * std::sinh(x) + spec.epsilon;
        case FunctionId::F3Xi: {
            const auto e = phi_with_derivatives(x, tol);
            return -e.d1 / e.value + spec.epsilon;
        }
    }
    throw DomainError("superpotential: bad FunctionId");
}

inline double superpotential_derivative(const SuperpotentialSpec& spec, double x,
                                        const EvalTolerances& tol = {}) {
    spec.validate();
    switch (spec.function) {
        case FunctionId::F1Quartic: return 3.0 * spec.g * x * x;
        case FunctionId::F2Cosh: return spec.g * std::cosh(x);
        case FunctionId::F3Xi: {
            const auto e = phi_with_derivatives(x, tol);
            const double ratio = e.d1 / e.value;
            return ratio * ratio - e.d2 / e.value;
        }
    }
    throw DomainError("superpotential_derivative: bad FunctionId");
}

// Closed-form specialization of V- = W^2 - W'; the generic combination is
// recoverable from the two operations above and must agree pointwise.
inline double minus_potential(const SuperpotentialSpec& spec, double x,
                              const EvalTolerances& tol = {}) {
    spec.validate();
    const double eps = spec.epsilon, g = spec.g;
    switch (spec.function) {
        case FunctionId::F1Quartic: {
            const double x3 = x * x * x;
            return g * g * x3 * x3 + 2.0 * eps * g * x3 + eps * eps - 3.0 * g * x * x;
        }
        case FunctionId::F2Cosh: {
            const double sh = std::sinh(x);
            return g * g * sh * sh + eps * eps + 2.0 * eps * g * sh - g * std::cosh(x);
        }
        case FunctionId::F3Xi: {
            const auto e = phi_with_derivatives(x, tol);
            return -2.0 * eps * e.d1 / e.value + eps * eps + e.d2 / e.value;
        }
    }
    throw DomainError("minus_potential: bad FunctionId");
}

// V+ = W^2 + W'; emitted for completeness, no further claims attached.
inline double plus_potential(const SuperpotentialSpec& spec, double x,
                             const EvalTolerances& tol = {}) {
    const double w = superpotential(spec, x, tol);
    return w * w + superpotential_derivative(spec, x, tol);
}

namespace detail {

// Adaptive Simpson for the F3 superpotential antiderivative.
template <typename F>
double adaptive_simpson(F f, double a, double b, double fa, double fm, double fb, double whole,
                        double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0) throw ToleranceError("adaptive_simpson: recursion limit reached");
    if (std::abs(left + right - whole) <= 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

template <typename F>
double integrate_adaptive(F f, double a, double b, double tol) {
    if (a == b) return 0.0;
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson(f, a, b, fa, fm, fb, whole, tol, 40);
}

// psi(0)-normalized ground states in closed form (used by the residual scans).
inline double closed_ground_state(const SuperpotentialSpec& spec, double x,
                                  const EvalTolerances& tol = {}) {
    const double eps = spec.epsilon, g = spec.g;
    switch (spec.function) {
        case FunctionId::F1Quartic: return std::exp(-(g * x * x * x * x / 4.0 + eps * x));
        case FunctionId::F2Cosh: return std::exp(-(g * (std::cosh(x) - 1.0) + eps * x));
        case FunctionId::F3Xi:
            return phi_kernel(x, tol) * std::exp(-eps * x) / phi_kernel(0.0, tol);
    }
    throw DomainError("closed_ground_state: bad FunctionId");
}

}  // namespace detail

// exp(-Int_0^x W): closed antiderivatives for F1/F2, numerical quadrature of
// W for F3 (which must land on Phi(x) e^{-eps x} / Phi(0); tested to 1e-8).
inline double ground_state_from_superpotential(const SuperpotentialSpec& spec, double x,
                                               const EvalTolerances& tol = {}) {
    spec.validate();
    switch (spec.function) {
        case FunctionId::F1Quartic:
        case FunctionId::F2Cosh:
            return detail::closed_ground_state(spec, x, tol);
        case FunctionId::F3Xi: {
            auto w = [&](double t) { return superpotential(spec, t, tol); };
            const double integral = detail::integrate_adaptive(w, 0.0, x, 1e-12);
            return std::exp(-integral);
        }
    }
    throw DomainError("ground_state_from_superpotential: bad FunctionId");
}

// Figure-class data: V- and the ground state on a grid.
struct PotentialCurve {
    Grid grid;
    std::vector<double> v_minus;
    std::vector<double> psi;
    SuperpotentialSpec spec;
    double l2_norm = 0.0;  // metadata
};

inline PotentialCurve potential_curve(const SuperpotentialSpec& spec, const Grid& grid,
                                      const EvalTolerances& tol = {}) {
    PotentialCurve out;
    out.grid = grid;
    out.spec = spec;
    out.v_minus.resize(grid.n_points);
    out.psi.resize(grid.n_points);
    double l2 = 0;
    for (std::size_t j = 0; j < grid.n_points; ++j) {
        const double x = grid.coordinate(j);
        out.v_minus[j] = minus_potential(spec, x, tol);
        out.psi[j] = detail::closed_ground_state(spec, x, tol);
        if (!(out.psi[j] > 0)) throw NumericsError("potential_curve: ground state not positive");
        l2 += out.psi[j] * out.psi[j] * grid.dx;
    }
    out.l2_norm = std::sqrt(l2);
    return out;
}

// max_j |psi'(x_j) + W(x_j) psi(x_j)| with a 4th-order central difference;
// exact zero mode up to the stencil error, so the value shrinks ~16x per
// halving of dx.
inline double annihilation_residual(const SuperpotentialSpec& spec, const Grid& grid,
                                    const EvalTolerances& tol = {}) {
    const double h = grid.dx;
    double worst = 0;
    for (std::size_t j = 0; j < grid.n_points; ++j) {
        const double x = grid.coordinate(j);
        auto psi = [&](double t) { return detail::closed_ground_state(spec, t, tol); };
        const double d1 =
            (-psi(x + 2 * h) + 8 * psi(x + h) - 8 * psi(x - h) + psi(x - 2 * h)) / (12 * h);
        worst = std::max(worst, std::abs(d1 + superpotential(spec, x, tol) * psi(x)));
    }
    return worst;
}

// max_j |-psi''(x_j) + V-(x_j) psi(x_j)|, 4th-order second-difference.
inline double hamiltonian_residual(const SuperpotentialSpec& spec, const Grid& grid,
                                   const EvalTolerances& tol = {}) {
    const double h = grid.dx;
    double worst = 0;
    for (std::size_t j = 0; j < grid.n_points; ++j) {
        const double x = grid.coordinate(j);
        auto psi = [&](double t) { return detail::closed_ground_state(spec, t, tol); };
        const double d2 = (-psi(x + 2 * h) + 16 * psi(x + h) - 30 * psi(x) + 16 * psi(x - h) -
                           psi(x - 2 * h)) /
                          (12 * h * h);
        worst = std::max(worst, std::abs(-d2 + minus_potential(spec, x, tol) * psi(x)));
    }
    return worst;
}

// max_p |-f''' + 64 p f| for the quartic family at g = 1/64, i.e. Eq.
// f''' = (1/g) p f specialized to the paper's coupling.  f is evaluated from
// the series in long double: the 1/h^3 amplification of rounding noise makes
// plain double too coarse below dx ~ 1e-2.
inline double momentum_ode_residual(const Grid& p_grid, const EvalTolerances& tol = {}) {
    const long double h = p_grid.dx;
    double worst = 0;
    auto f = [&](long double p) {
        return generalized_airy<long double>(p, 0.0L, tol).real();
    };
    for (std::size_t j = 0; j < p_grid.n_points; ++j) {
        const long double p = p_grid.coordinate(j);
        const long double d3 =
            (-f(p - 2 * h) + 2 * f(p - h) - 2 * f(p + h) + f(p + 2 * h)) / (2 * h * h * h);
        worst = std::max(worst, static_cast<double>(std::abs(-d3 + 64.0L * p * f(p))));
    }
    return worst;
}

}  // namespace zeroscope
