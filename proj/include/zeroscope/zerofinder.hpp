#pragma once

// Zero location for the momentum-space functions: sign-change bracketing with
// bisection on the real-valued branch, local-minimum extraction from sampled
// curves (optionally on log magnitude), and deformation sweeps.

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "zeroscope/core.hpp"
#include "zeroscope/parallel.hpp"
#include "zeroscope/wavefuncs.hpp"

namespace zeroscope {

struct ZeroReport {
    enum class Method { AnalyticBisection, GridMinimum };

    FunctionId function = FunctionId::F1Quartic;
    double epsilon = 0.0;
    std::vector<double> zeros;      // ascending
    std::vector<double> residuals;  // |f| at each reported zero
    Method method = Method::AnalyticBisection;
};

inline const char* to_string(ZeroReport::Method m) {
    return m == ZeroReport::Method::AnalyticBisection ? "analytic_bisection" : "grid_minimum";
}

// Scan f on `samples` equispaced points over [lo, hi], then bisect every
// sign change down to a bracket of width <= tol.  Returns bracket midpoints
// in ascending order; empty when no sign change exists.
inline std::vector<double> bracket_and_bisect(const std::function<double(double)>& f, double lo,
                                              double hi, int samples, double tol) {
    if (!(lo < hi)) throw DomainError("bracket_and_bisect: empty window");
    if (samples < 64) throw DomainError("bracket_and_bisect: need at least 64 samples");
    if (!(tol > 0)) throw DomainError("bracket_and_bisect: tol must be positive");

    const double h = (hi - lo) / (samples - 1);
    std::vector<double> zeros;
    double xa = lo, fa = f(lo);
    for (int i = 1; i < samples; ++i) {
        const double xb = lo + i * h;
        const double fb = f(xb);
        if (fa == 0.0) {
            zeros.push_back(xa);
        } else if (fa * fb < 0.0) {
            double a = xa, b = xb, va = fa;
            while (b - a > tol) {
                const double m = 0.5 * (a + b);
                const double vm = f(m);
                if (vm == 0.0) {
                    a = b = m;
                    break;
                }
                if (va * vm < 0.0) {
                    b = m;
                } else {
                    a = m;
                    va = vm;
                }
            }
            zeros.push_back(0.5 * (a + b));
        }
        xa = xb;
        fa = fb;
    }
    if (fa == 0.0) zeros.push_back(xa);
    return zeros;
}

// Real branch of the momentum-space function; only meaningful at epsilon = 0
// where the imaginary part vanishes (checked by the reality invariant).
inline std::function<double(double)> real_branch(FunctionId id, const DeformationParams& params,
                                                 const EvalTolerances& tol = {}) {
    return [id, params, tol](double p) { return momentum_wavefunction(id, p, params, tol).real(); };
}

// Local minima of |value| (or log10 |value|) with at least the requested
// prominence, reported as (coordinate, magnitude) sorted by coordinate.
// prominence < 0 selects the default: 10% of the max magnitude on the linear
// scale, one decade on the log scale.
inline std::vector<std::pair<double, double>> grid_minima(const SampledCurve& curve, bool use_log,
                                                          double prominence) {
    curve.check();
    const std::size_t n = curve.values.size();
    if (n == 0) throw DomainError("grid_minima: empty curve");

    std::vector<double> mag(n);
    double max_mag = 0;
    for (std::size_t j = 0; j < n; ++j) {
        mag[j] = std::abs(curve.values[j]);
        max_mag = std::max(max_mag, mag[j]);
    }
    std::vector<double> level(n);
    for (std::size_t j = 0; j < n; ++j)
        level[j] = use_log ? std::log10(std::max(mag[j], 1e-300)) : mag[j];

    if (prominence < 0) prominence = use_log ? 1.0 : 0.1 * max_mag;

    std::vector<std::pair<double, double>> minima;
    for (std::size_t j = 1; j + 1 < n; ++j) {
        if (!(level[j] < level[j - 1] && level[j] < level[j + 1])) continue;
        // barrier heights until a lower sample appears on each side
        double left = 0, right = 0;
        for (std::size_t k = j; k-- > 0;) {
            if (level[k] < level[j]) break;
            left = std::max(left, level[k] - level[j]);
        }
        for (std::size_t k = j + 1; k < n; ++k) {
            if (level[k] < level[j]) break;
            right = std::max(right, level[k] - level[j]);
        }
        if (std::min(left, right) >= prominence) minima.emplace_back(curve.coordinates[j], mag[j]);
    }
    return minima;
}

// One row per deformation value: the grid minimum of |f| and the zero count
// on the window.  At epsilon = 0 zeros come from sign-change bisection on
// the real branch; for epsilon > 0 the function is complex and zero-free, so
// the count is the number of samples dipping below a small fraction of the
// curve scale.
struct SweepRow {
    double epsilon = 0.0;
    double min_abs = 0.0;
    int zero_count = 0;
    std::vector<double> zeros;
};

using SweepTable = std::vector<SweepRow>;

inline SweepTable epsilon_sweep(FunctionId id, const std::vector<double>& eps_list, double lo,
                                double hi, int samples, const EvalTolerances& tol = {}) {
    if (eps_list.empty() || eps_list.front() != 0.0)
        throw DomainError("epsilon_sweep: eps_list must start at 0");
    for (std::size_t i = 0; i + 1 < eps_list.size(); ++i)
        if (!(eps_list[i] < eps_list[i + 1]))
            throw DomainError("epsilon_sweep: eps_list must be ascending");
    if (samples < 64) throw DomainError("epsilon_sweep: need at least 64 samples");

    SweepTable table(eps_list.size());
    detail::parallel_for(eps_list.size(), [&](std::size_t i) {
        SweepRow row;
        row.epsilon = eps_list[i];
        DeformationParams params;
        params.epsilon = row.epsilon;

        std::vector<double> mags(samples);
        const double h = (hi - lo) / (samples - 1);
        double max_mag = 0;
        for (int k = 0; k < samples; ++k) {
            mags[k] = std::abs(momentum_wavefunction(id, lo + k * h, params, tol));
            max_mag = std::max(max_mag, mags[k]);
        }
        row.min_abs = *std::min_element(mags.begin(), mags.end());

        if (row.epsilon == 0.0) {
            row.zeros = bracket_and_bisect(real_branch(id, params, tol), lo, hi, samples, 1e-10);
            row.zero_count = static_cast<int>(row.zeros.size());
        } else {
            const double threshold = 1e-8 * max_mag;
            for (int k = 0; k < samples; ++k)
                if (mags[k] < threshold) ++row.zero_count;
        }
        table[i] = std::move(row);
    });
    return table;
}

}  // namespace zeroscope
