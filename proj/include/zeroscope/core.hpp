#pragma once

// Shared domain types and the error taxonomy used across the library.

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace zeroscope {

// ---------------------------------------------------------------------------
// Errors

struct NumericsError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
struct DomainError : NumericsError {
    using NumericsError::NumericsError;
};

// A series or iteration exceeded its configured term budget.
struct ConvergenceError : NumericsError {
    using NumericsError::NumericsError;
};

// A quadrature could not meet the requested absolute tolerance.
struct ToleranceError : NumericsError {
    using NumericsError::NumericsError;
};

// Mismatched vector/operator dimensions.
struct DimensionError : NumericsError {
    using NumericsError::NumericsError;
};

// A computation was cut off by a configured size/time limit.  `progress`
// describes how far it got.
struct ResourceLimitError : NumericsError {
    explicit ResourceLimitError(const std::string& what, std::string progress = {})
        : NumericsError(what), progress(std::move(progress)) {}
    std::string progress;
};

// ---------------------------------------------------------------------------
// Evaluation controls

// Tolerances for the scalar special-function layer.  Series summation stops
// once |term| < series_term_cutoff * |partial sum| holds twice in a row;
// real-line quadratures are truncated at +-quadrature_range (the Phi kernel
// uses its own, tighter window) and refined until the node-doubling estimate
// drops below quadrature_abs_tol.
struct EvalTolerances {
    double series_term_cutoff = 1e-16;
    double quadrature_abs_tol = 1e-12;
    double quadrature_range = 8.0;  // half-width for exp(-cosh x) integrals
    double phi_half_width = 3.0;    // half-width for Phi(x) integrals
    int max_series_terms = 400;
    int initial_quadrature_points = 200;
    int max_doublings = 6;

    void validate() const {
        if (!(series_term_cutoff > 0) || !(quadrature_abs_tol > 0))
            throw DomainError("EvalTolerances: cutoffs must be strictly positive");
        if (!(quadrature_range >= 1.0))
            throw DomainError("EvalTolerances: quadrature_range must be >= 1");
        if (!(phi_half_width > 0))
            throw DomainError("EvalTolerances: phi_half_width must be positive");
    }
};

// ---------------------------------------------------------------------------
// Function selection and deformation

enum class FunctionId {
    F1Quartic,  // Fourier pair of exp(-g x^4 / 4)
    F2Cosh,     // Fourier pair of exp(-cosh x); imaginary-order K-Bessel
    F3Xi,       // Fourier pair of Phi(x); xi on the critical line
};

inline const char* to_string(FunctionId id) {
    switch (id) {
        case FunctionId::F1Quartic: return "f1";
        case FunctionId::F2Cosh: return "f2";
        case FunctionId::F3Xi: return "f3";
    }
    return "?";
}

inline FunctionId function_id_from_string(const std::string& s) {
    if (s == "f1" || s == "F1" || s == "quartic") return FunctionId::F1Quartic;
    if (s == "f2" || s == "F2" || s == "cosh") return FunctionId::F2Cosh;
    if (s == "f3" || s == "F3" || s == "xi") return FunctionId::F3Xi;
    throw DomainError("unknown function id: " + s);
}

// Real deformation e^{-epsilon x} applied in position space, plus the quartic
// coupling g (used by F1 only; g = 1/64 reproduces exp(-x^4/256)).
struct DeformationParams {
    double epsilon = 0.0;
    double g = 1.0 / 64.0;

    void validate() const {
        if (!(epsilon >= 0)) throw DomainError("epsilon must be >= 0");
        if (!(g > 0)) throw DomainError("coupling g must be > 0");
    }
};

// ---------------------------------------------------------------------------
// Grids and sampled output

// Symmetric half-integer lattice: x_j = dx * (j - (n-1)/2), j = 0..n-1.
struct Grid {
    std::size_t n_points = 0;
    double dx = 0.0;

    Grid() = default;
    Grid(std::size_t n, double spacing) : n_points(n), dx(spacing) {
        if (n_points < 2) throw DomainError("Grid needs at least 2 points");
        if (!(dx > 0)) throw DomainError("Grid spacing must be positive");
    }

    double coordinate(std::size_t j) const {
        return dx * (static_cast<double>(j) - 0.5 * static_cast<double>(n_points - 1));
    }
    std::vector<double> coordinates() const {
        std::vector<double> xs(n_points);
        for (std::size_t j = 0; j < n_points; ++j) xs[j] = coordinate(j);
        return xs;
    }
};

enum class Space { Position, Momentum };

inline const char* to_string(Space s) {
    return s == Space::Position ? "position" : "momentum";
}

// A curve sampled on a strictly increasing coordinate axis; the unit of all
// CSV/JSON output.
struct SampledCurve {
    std::vector<double> coordinates;
    std::vector<std::complex<double>> values;
    Space space = Space::Position;
    FunctionId function = FunctionId::F1Quartic;
    DeformationParams params;

    void check() const {
        if (coordinates.size() != values.size())
            throw DimensionError("SampledCurve: coordinate/value length mismatch");
        for (std::size_t i = 0; i + 1 < coordinates.size(); ++i)
            if (!(coordinates[i] < coordinates[i + 1]))
                throw DomainError("SampledCurve: coordinates must strictly increase");
        for (const auto& v : values)
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
                throw NumericsError("SampledCurve: non-finite value");
    }
};

}  // namespace zeroscope
