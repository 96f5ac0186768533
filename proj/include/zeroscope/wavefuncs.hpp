#pragma once

// A uniform face over the three function families in position and momentum
// space, with the deformation parameter applied in position space and grid
// sampling into SampledCurve.
//
// position space                      momentum space
//   F1  exp(-g x^4/4 - eps x)           generalized_airy(p, eps)
//   F2  exp(-cosh x - eps x)            bessel_k_imag(p, eps)
//   F3  Phi(x) exp(-eps x)              xi_line(p, eps)

#include <complex>

#include "zeroscope/core.hpp"
#include "zeroscope/parallel.hpp"
#include "zeroscope/specialfn.hpp"

namespace zeroscope {

template <typename R = double>
R position_wavefunction(FunctionId id, R x, const DeformationParams& params,
                        const EvalTolerances& tol = {}) {
    params.validate();
    const R eps = static_cast<R>(params.epsilon);
    switch (id) {
        case FunctionId::F1Quartic:
            return std::exp(-static_cast<R>(params.g) * x * x * x * x / R(4) - eps * x);
        case FunctionId::F2Cosh:
            return std::exp(-std::cosh(x) - eps * x);
        case FunctionId::F3Xi:
            return phi_kernel(x, tol) * std::exp(-eps * x);
    }
    throw DomainError("position_wavefunction: bad FunctionId");
}

template <typename R = double>
std::complex<R> momentum_wavefunction(FunctionId id, R p, const DeformationParams& params,
                                      const EvalTolerances& tol = {}) {
    params.validate();
    const R eps = static_cast<R>(params.epsilon);
    switch (id) {
        case FunctionId::F1Quartic:
            return generalized_airy<R>(p, eps, tol);
        case FunctionId::F2Cosh:
            return bessel_k_imag<R>(p, eps, tol);
        case FunctionId::F3Xi:
            return xi_line<R>(p, eps, tol);
    }
    throw DomainError("momentum_wavefunction: bad FunctionId");
}

// Momentum window [0, hi] on which the first zeros of each function live;
// read off the plotted ranges and used as search defaults.
inline double default_zero_window_hi(FunctionId id) {
    switch (id) {
        case FunctionId::F1Quartic: return 4.0;
        case FunctionId::F2Cosh: return 6.0;
        case FunctionId::F3Xi: return 26.0;
    }
    return 0.0;
}

inline SampledCurve sample_curve(FunctionId id, const Grid& grid, const DeformationParams& params,
                                 Space space, const EvalTolerances& tol = {}) {
    SampledCurve curve;
    curve.space = space;
    curve.function = id;
    curve.params = params;
    curve.coordinates = grid.coordinates();
    curve.values.resize(grid.n_points);
    detail::parallel_for(grid.n_points, [&](std::size_t j) {
        const double c = curve.coordinates[j];
        curve.values[j] = (space == Space::Position)
                              ? std::complex<double>{position_wavefunction(id, c, params, tol), 0.0}
                              : momentum_wavefunction(id, c, params, tol);
    });
    curve.check();
    return curve;
}

}  // namespace zeroscope
