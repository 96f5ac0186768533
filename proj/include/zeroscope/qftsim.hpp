#pragma once

// Gate-level statevector simulator with the centered discrete Fourier
// (Sylvester) transform, the discrete position/momentum operators, and the
// sample -> transform -> rescale pipeline that carries a position-space
// ground state to momentum space.
//
// Conventions: qubit 0 is the least significant bit of the basis index.
// Matrix indices are 0-based; the centered kernels are written with the
// half-integer offset (2j + 1 - N) so the j-th lattice site sits at
// sqrt(2 pi / 4N) (2j + 1 - N).

#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "zeroscope/core.hpp"
#include "zeroscope/wavefuncs.hpp"

namespace zeroscope {

using Complex = std::complex<double>;
using DenseUnitary = Eigen::MatrixXcd;

// ---------------------------------------------------------------------------
// Statevector

struct Statevector {
    int n_qubits = 0;
    std::vector<Complex> amplitudes;

    explicit Statevector(int n) : n_qubits(n) {
        if (n < 1 || n > 24) throw DomainError("Statevector: qubit count must be in [1, 24]");
        amplitudes.assign(std::size_t{1} << n, Complex{0, 0});
        amplitudes[0] = Complex{1, 0};
    }

    std::size_t dimension() const { return amplitudes.size(); }

    double norm() const {
        double s = 0;
        for (const auto& a : amplitudes) s += std::norm(a);
        return std::sqrt(s);
    }

    void normalize() {
        const double n = norm();
        if (!(n > 0)) throw NumericsError("Statevector: cannot normalize the zero vector");
        for (auto& a : amplitudes) a /= n;
    }
};

// ---------------------------------------------------------------------------
// Gates and circuits

struct Gate {
    enum class Kind { Hadamard, ControlledPhase, Swap, DiagonalPhase };

    Kind kind = Kind::Hadamard;
    int a = 0;           // target qubit (Hadamard), control (CP), first qubit (Swap)
    int b = 0;           // target (CP), second qubit (Swap)
    double angle = 0.0;  // CP phase in radians
    double slope = 0.0;  // DiagonalPhase: phase(k) = offset + slope * k
    double offset = 0.0;

    static Gate hadamard(int q) { return {Kind::Hadamard, q, 0, 0, 0, 0}; }
    static Gate controlled_phase(int control, int target, double angle) {
        return {Kind::ControlledPhase, control, target, angle, 0, 0};
    }
    static Gate swap(int q1, int q2) { return {Kind::Swap, q1, q2, 0, 0, 0}; }
    static Gate diagonal_phase(double slope, double offset) {
        return {Kind::DiagonalPhase, 0, 0, 0, slope, offset};
    }
};

inline const char* to_string(Gate::Kind k) {
    switch (k) {
        case Gate::Kind::Hadamard: return "h";
        case Gate::Kind::ControlledPhase: return "cp";
        case Gate::Kind::Swap: return "swap";
        case Gate::Kind::DiagonalPhase: return "diag";
    }
    return "?";
}

struct Circuit {
    int n_qubits = 0;
    std::vector<Gate> gates;

    void validate() const {
        auto in_range = [&](int q) { return q >= 0 && q < n_qubits; };
        for (const auto& g : gates) {
            switch (g.kind) {
                case Gate::Kind::Hadamard:
                    if (!in_range(g.a)) throw DimensionError("Circuit: qubit index out of range");
                    break;
                case Gate::Kind::ControlledPhase:
                    if (!in_range(g.a) || !in_range(g.b) || g.a == g.b)
                        throw DimensionError("Circuit: bad controlled-phase indices");
                    break;
                case Gate::Kind::Swap:
                    if (!in_range(g.a) || !in_range(g.b) || g.a == g.b)
                        throw DimensionError("Circuit: bad swap indices");
                    break;
                case Gate::Kind::DiagonalPhase:
                    break;
            }
        }
    }
};

namespace detail {

inline void apply_gate(Statevector& sv, const Gate& g) {
    auto& amp = sv.amplitudes;
    const std::size_t dim = amp.size();
    switch (g.kind) {
        case Gate::Kind::Hadamard: {
            const std::size_t bit = std::size_t{1} << g.a;
            const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
            for (std::size_t i = 0; i < dim; ++i) {
                if (i & bit) continue;
                const Complex lo = amp[i], hi = amp[i | bit];
                amp[i] = (lo + hi) * inv_sqrt2;
                amp[i | bit] = (lo - hi) * inv_sqrt2;
            }
            break;
        }
        case Gate::Kind::ControlledPhase: {
            const std::size_t mask = (std::size_t{1} << g.a) | (std::size_t{1} << g.b);
            const Complex phase = std::polar(1.0, g.angle);
            for (std::size_t i = 0; i < dim; ++i)
                if ((i & mask) == mask) amp[i] *= phase;
            break;
        }
        case Gate::Kind::Swap: {
            const std::size_t ba = std::size_t{1} << g.a, bb = std::size_t{1} << g.b;
            for (std::size_t i = 0; i < dim; ++i)
                if ((i & ba) && !(i & bb)) std::swap(amp[i], amp[(i & ~ba) | bb]);
            break;
        }
        case Gate::Kind::DiagonalPhase: {
            for (std::size_t i = 0; i < dim; ++i)
                amp[i] *= std::polar(1.0, g.offset + g.slope * static_cast<double>(i));
            break;
        }
    }
}

}  // namespace detail

inline Statevector apply_circuit(const Circuit& c, Statevector sv) {
    if (c.n_qubits != sv.n_qubits)
        throw DimensionError("apply_circuit: circuit and state have different qubit counts");
    c.validate();
    for (const auto& g : c.gates) detail::apply_gate(sv, g);
    return sv;
}

inline Circuit inverse_circuit(const Circuit& c) {
    Circuit inv;
    inv.n_qubits = c.n_qubits;
    inv.gates.reserve(c.gates.size());
    for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) {
        Gate g = *it;
        if (g.kind == Gate::Kind::ControlledPhase) g.angle = -g.angle;
        if (g.kind == Gate::Kind::DiagonalPhase) {
            g.slope = -g.slope;
            g.offset = -g.offset;
        }
        inv.gates.push_back(g);
    }
    return inv;
}

// ---------------------------------------------------------------------------
// Dense operators

// Diagonal position operator: entries sqrt(2 pi / 4N) (2j + 1 - N).
inline Eigen::MatrixXd position_operator(int N) {
    if (N < 2) throw DomainError("position_operator: N must be >= 2");
    Eigen::MatrixXd q = Eigen::MatrixXd::Zero(N, N);
    const double scale = std::sqrt(2.0 * kPi / (4.0 * N));
    for (int j = 0; j < N; ++j) q(j, j) = scale * (2.0 * j + 1.0 - N);
    return q;
}

// Centered Fourier kernel F_{jk} = exp(i 2pi/(4N) (2j+1-N)(2k+1-N)) / sqrt(N).
inline DenseUnitary sylvester_matrix(int N) {
    if (N < 2) throw DomainError("sylvester_matrix: N must be >= 2");
    DenseUnitary f(N, N);
    const double w = 2.0 * kPi / (4.0 * N);
    for (int j = 0; j < N; ++j)
        for (int k = 0; k < N; ++k)
            f(j, k) = std::polar(1.0 / std::sqrt(double(N)), w * (2.0 * j + 1.0 - N) * (2.0 * k + 1.0 - N));
    return f;
}

// P = F^dagger Q F; Hermitian with the same spectrum as Q.
inline DenseUnitary momentum_operator(int N) {
    const DenseUnitary f = sylvester_matrix(N);
    return f.adjoint() * position_operator(N) * f;
}

// ---------------------------------------------------------------------------
// Circuits

// Standard QFT circuit: per target one Hadamard then controlled phases
// pi/2^k from the lower qubits, finishing with the bit-reversal swap layer.
// Implements U|j> = (1/sqrt(N)) sum_k exp(2 pi i j k / N) |k>.
inline Circuit build_qft_circuit(int n_qubits) {
    if (n_qubits < 1 || n_qubits > 24)
        throw DomainError("build_qft_circuit: qubit count must be in [1, 24]");
    Circuit c;
    c.n_qubits = n_qubits;
    for (int t = n_qubits - 1; t >= 0; --t) {
        c.gates.push_back(Gate::hadamard(t));
        for (int ctl = t - 1; ctl >= 0; --ctl)
            c.gates.push_back(Gate::controlled_phase(ctl, t, kPi / double(std::size_t{1} << (t - ctl))));
    }
    for (int q = 0; q < n_qubits / 2; ++q) c.gates.push_back(Gate::swap(q, n_qubits - 1 - q));
    return c;
}

// The centered kernel factorizes over the plain QFT: expanding
// (2j+1-N)(2k+1-N) = 4jk + 2(1-N)(j+k) + (1-N)^2 turns F into
// diag(e^{i a j}) . QFT . diag(e^{i a k}) . e^{i c} with a = pi(1-N)/N and
// c = pi(1-N)^2 / (2N); the constant is folded into the second diagonal.
inline Circuit centered_qft_circuit(int n_qubits) {
    const double N = double(std::size_t{1} << n_qubits);
    const double slope = kPi * (1.0 - N) / N;
    const double constant = kPi * (1.0 - N) * (1.0 - N) / (2.0 * N);
    Circuit c;
    c.n_qubits = n_qubits;
    c.gates.push_back(Gate::diagonal_phase(slope, 0.0));
    const Circuit qft = build_qft_circuit(n_qubits);
    c.gates.insert(c.gates.end(), qft.gates.begin(), qft.gates.end());
    c.gates.push_back(Gate::diagonal_phase(slope, constant));
    return c;
}

inline Statevector centered_qft(const Statevector& sv) {
    return apply_circuit(centered_qft_circuit(sv.n_qubits), sv);
}

// Dense matrix of a circuit (column c = circuit applied to basis state |c>).
inline DenseUnitary circuit_unitary(const Circuit& c) {
    const std::size_t dim = std::size_t{1} << c.n_qubits;
    DenseUnitary u(dim, dim);
    for (std::size_t col = 0; col < dim; ++col) {
        Statevector basis(c.n_qubits);
        basis.amplitudes.assign(dim, Complex{0, 0});
        basis.amplitudes[col] = Complex{1, 0};
        const Statevector out = apply_circuit(c, std::move(basis));
        for (std::size_t row = 0; row < dim; ++row) u(row, col) = out.amplitudes[row];
    }
    return u;
}

// ---------------------------------------------------------------------------
// Pipeline

// Lattice spacing for which the discrete position grid is self-dual
// (dp = dx).  F3 overrides it: its first zeros sit beyond the self-dual
// momentum window at N = 64, so a finer position step (wider momentum
// window) is the useful default.  dx = 0.14 puts both of the first two
// critical-line zeros close to lattice sites at six qubits; note that
// dx = 0.0625 gives dp = pi/2, which parks the first zero (~ 9 pi / 2)
// almost exactly between two sites and flattens its dip into a shelf.
inline double default_lattice_spacing(int n_qubits) {
    return std::sqrt(2.0 * kPi / double(std::size_t{1} << n_qubits));
}

inline double default_pipeline_dx(FunctionId id, int n_qubits) {
    return id == FunctionId::F3Xi ? 0.14 : default_lattice_spacing(n_qubits);
}

// Sample the position-space function on the centered lattice, push it through
// the centered QFT, and rescale so the output approximates the continuous
// transform of the sampled function.  The kernel of sylvester_matrix carries
// e^{+ipx}, the analytic convention is e^{-ipx}; reversing the output axis
// (p_j = -p_{N-1-j} on this lattice) aligns the two.  The rescale factor is
// dx sqrt(N) / sqrt(2 pi) times the norm of the raw samples that was divided
// out when loading the register.
inline SampledCurve qft_pipeline(FunctionId id, const DeformationParams& params, int n_qubits,
                                 double dx, const EvalTolerances& tol = {}) {
    if (n_qubits < 4) throw DomainError("qft_pipeline: need at least 4 qubits");
    if (!(dx > 0)) throw DomainError("qft_pipeline: dx must be positive");
    const std::size_t N = std::size_t{1} << n_qubits;

    Grid grid(N, dx);
    Statevector sv(n_qubits);
    double raw_norm_sq = 0;
    for (std::size_t j = 0; j < N; ++j) {
        const double v = position_wavefunction(id, grid.coordinate(j), params, tol);
        sv.amplitudes[j] = Complex{v, 0};
        raw_norm_sq += v * v;
    }
    const double raw_norm = std::sqrt(raw_norm_sq);
    sv.normalize();

    const Statevector out = centered_qft(sv);

    const double dp = 2.0 * kPi / (double(N) * dx);
    const double rescale = dx * std::sqrt(double(N)) / std::sqrt(2.0 * kPi) * raw_norm;

    SampledCurve curve;
    curve.space = Space::Momentum;
    curve.function = id;
    curve.params = params;
    Grid pgrid(N, dp);
    curve.coordinates = pgrid.coordinates();
    curve.values.resize(N);
    for (std::size_t j = 0; j < N; ++j) curve.values[j] = rescale * out.amplitudes[N - 1 - j];
    curve.check();
    return curve;
}

}  // namespace zeroscope
