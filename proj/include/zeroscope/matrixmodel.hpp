#pragma once

// The (p,1) two-matrix-model layer: the exact expected characteristic
// polynomial Q_N(y) via the power-series exponential over Q[y], certified
// real-root isolation, the scaling-limit comparison against the first
// quartic-Airy zero, and the known tridiagonal master matrix of the (2,1)
// model with its exact Hermite identity.

#include <algorithm>
#include <deque>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "zeroscope/core.hpp"
#include "zeroscope/exactpoly.hpp"

namespace zeroscope {

struct ModelSpec {
    int p_order = 3;  // order of the matrix potential
    int N = 1;        // matrix size
    Rational g = Rational(1);

    void validate() const {
        if (p_order < 2) throw DomainError("ModelSpec: p_order must be >= 2");
        if (N < 0) throw DomainError("ModelSpec: N must be >= 0");
        if (!(g > 0)) throw DomainError("ModelSpec: g must be positive");
    }
};

// V_p(a) = -sum_{k=1..p} (a^k - 1)/k, exactly.
inline Rational matrix_potential(int p_order, const Rational& a) {
    if (p_order < 2) throw DomainError("matrix_potential: p_order must be >= 2");
    Rational sum(0), apow(1);
    for (int k = 1; k <= p_order; ++k) {
        apow *= a;
        sum += (apow - 1) / k;
    }
    return -sum;
}

// V_p(z + 1) as a polynomial in z (constant term vanishes).
inline ExactPolynomial shifted_potential_poly(int p_order) {
    if (p_order < 2) throw DomainError("shifted_potential_poly: p_order must be >= 2");
    std::vector<Rational> coeffs(p_order + 1, Rational(0));
    // (z+1)^k expanded via a running binomial row
    std::vector<Rational> row{Rational(1)};
    for (int k = 1; k <= p_order; ++k) {
        std::vector<Rational> next(k + 1, Rational(0));
        for (int i = 0; i < k; ++i) {
            next[i] += row[i];
            next[i + 1] += row[i];
        }
        row = std::move(next);
        // -( (z+1)^k - 1 ) / k
        for (int i = 1; i <= k; ++i) coeffs[i] -= row[i] / k;
    }
    return ExactPolynomial(std::move(coeffs));
}

// Q_N(y) = (-g)^N N! [z^N] exp( (1/g)(V_p(z+1) - y z) ), computed with the
// series-exponential recurrence E' = S' E over polynomials in y.  Exact;
// monic of degree N by construction (verified before returning).
inline ExactPolynomial qn_polynomial(const ModelSpec& spec, int n_limit = 400) {
    spec.validate();
    if (spec.N > n_limit)
        throw ResourceLimitError("qn_polynomial: N exceeds the configured limit",
                                 "requested N = " + std::to_string(spec.N) + ", limit " +
                                     std::to_string(n_limit));

    const int p = spec.p_order;
    const ExactPolynomial v = shifted_potential_poly(p);

    // k * s_k for k = 1..p, where s_k = v_k / g except s_1 = (v_1 - y)/g.
    // The y-dependence rides only on k = 1, handled via times_linear.
    std::vector<Rational> kv(p + 1, Rational(0));
    for (int k = 1; k <= p; ++k) kv[k] = v.coeff(k) * k / spec.g;
    const Rational y_slope = Rational(-1) / spec.g;  // coefficient of y in s_1

    std::deque<ExactPolynomial> window;  // e_{n-1}, e_{n-2}, ..., e_{n-p}
    window.push_front(ExactPolynomial::constant(Rational(1)));  // e_0
    ExactPolynomial e_n = window.front();

    for (int n = 1; n <= spec.N; ++n) {
        // e_n = (1/n) sum_{k=1}^{min(p,n)} (k s_k) e_{n-k}
        ExactPolynomial acc = window[0].times_linear(y_slope, kv[1]);
        for (int k = 2; k <= std::min(p, n); ++k) {
            ExactPolynomial term = window[k - 1];
            term.scale(kv[k]);
            acc += term;
        }
        acc.scale(Rational(1, n));
        e_n = acc;
        window.push_front(e_n);
        if (static_cast<int>(window.size()) > p) window.pop_back();
    }

    // Q_N = (-g)^N N! e_N
    Rational scale(1);
    for (int n = 1; n <= spec.N; ++n) scale *= -spec.g * n;
    e_n.scale(scale);

    if (spec.N == 0) return ExactPolynomial::constant(Rational(1));
    if (e_n.degree() != spec.N || !e_n.is_monic())
        throw NumericsError("qn_polynomial: result is not monic of degree N");
    return e_n;
}

// ---------------------------------------------------------------------------
// Certified real-root isolation

struct RootSet {
    std::vector<std::pair<Rational, Rational>> intervals;  // disjoint; lo == hi for exact roots
    std::vector<double> midpoints;                         // refined, ascending
    std::vector<std::string> midpoints_decimal;            // precision_digits places
    bool all_real = false;
    bool certified_by_sign_changes = false;  // else: Sturm count
    bool has_multiple_roots = false;
};

namespace detail {

// Certificate extraction from an ascending list of sample points: a root is
// certified by an adjacent pair with strictly opposite exact signs (one
// simple root strictly inside) or by a sample evaluating to exactly zero.
// The certified sets are disjoint, so deg(p) certificates prove every root
// real and simple.
inline std::vector<std::pair<Rational, Rational>> certificates_from_samples(
    const std::vector<Rational>& pts, const std::vector<int>& signs) {
    std::vector<std::pair<Rational, Rational>> out;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (signs[i] == 0) {
            out.emplace_back(pts[i], pts[i]);
        } else if (i + 1 < pts.size() && signs[i + 1] != 0 && signs[i] * signs[i + 1] < 0) {
            out.emplace_back(pts[i], pts[i + 1]);
        }
    }
    return out;
}

// Approximate real root locations from the balanced companion matrix; used
// only to place the exact-sign test points, never as results.
inline std::vector<double> companion_root_guesses(const ExactPolynomial& poly) {
    const int d = poly.degree();
    std::vector<double> ratios(d);
    const Rational& lead = poly.leading();
    for (int k = 0; k < d; ++k) {
        const double r = Rational(poly.coeff(k) / lead).convert_to<double>();
        if (!std::isfinite(r)) return {};  // out of double range; caller falls back
        ratios[k] = r;
    }
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(d, d);
    for (int i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
    for (int k = 0; k < d; ++k) companion(k, d - 1) = -ratios[k];
    Eigen::EigenSolver<Eigen::MatrixXd> es(companion, false);
    std::vector<double> reals;
    for (int i = 0; i < d; ++i) reals.push_back(es.eigenvalues()(i).real());
    std::sort(reals.begin(), reals.end());
    return reals;
}

// Guided certification: exact signs at rational separators placed between
// the approximate roots.  Guesses only steer where the exact evaluations
// happen; a wrong guess can lose a certificate but never fake one.
inline std::vector<std::pair<Rational, Rational>> guided_sign_certificates(
    const IntegerScaledPoly& p, const std::vector<double>& guesses, const Rational& bound) {
    if (guesses.empty()) return {};
    std::vector<Rational> pts;
    pts.push_back(-bound);
    for (std::size_t i = 0; i + 1 < guesses.size(); ++i) {
        const double mid = 0.5 * (guesses[i] + guesses[i + 1]);
        if (!std::isfinite(mid)) continue;
        const Rational q(mid);  // dyadic, exact
        if (q > -bound && q < bound && (pts.empty() || q > pts.back())) pts.push_back(q);
    }
    pts.push_back(bound);
    std::vector<int> signs;
    signs.reserve(pts.size());
    for (const auto& x : pts) signs.push_back(p.sign_at(x));
    return certificates_from_samples(pts, signs);
}

// Levelwise uniform refinement on [-B, B]; gives up once a level would
// exceed `eval_budget` points (the caller then falls back to Sturm, so the
// budget trades speed, not correctness).
inline std::vector<std::pair<Rational, Rational>> sign_change_intervals(
    const IntegerScaledPoly& p, const Rational& bound, std::size_t eval_budget) {
    const int want = p.degree();
    std::vector<Rational> pts;
    std::vector<int> signs;

    // start near 4*deg points so typical root spacings resolve immediately
    int level = 2;
    while ((1 << level) < 4 * std::max(want, 1)) ++level;

    std::vector<std::pair<Rational, Rational>> best;
    for (int lev = level; (std::size_t{1} << lev) <= eval_budget; ++lev) {
        const std::size_t segments = std::size_t{1} << lev;
        std::vector<Rational> npts;
        std::vector<int> nsigns;
        npts.reserve(segments + 1);
        nsigns.reserve(segments + 1);
        const Rational width = 2 * bound;
        std::size_t old = 0;
        for (std::size_t i = 0; i <= segments; ++i) {
            Rational x = -bound + width * Rational(i, segments);
            if (old < pts.size() && pts[old] == x) {
                nsigns.push_back(signs[old]);
                ++old;
            } else {
                nsigns.push_back(p.sign_at(x));
            }
            npts.push_back(std::move(x));
        }
        pts = std::move(npts);
        signs = std::move(nsigns);
        best = certificates_from_samples(pts, signs);
        if (static_cast<int>(best.size()) >= want) break;
    }
    return best;
}

// Bisect a sign-change bracket until its width drops below `width_goal`.
inline std::pair<Rational, Rational> refine_bracket(const IntegerScaledPoly& p, Rational lo,
                                                    Rational hi, const Rational& width_goal) {
    int slo = p.sign_at(lo);
    while (hi - lo > width_goal) {
        Rational mid = (lo + hi) / 2;
        const int sm = p.sign_at(mid);
        if (sm == 0) return {mid, mid};
        if (sm == slo) {
            lo = std::move(mid);
        } else {
            hi = std::move(mid);
        }
    }
    return {lo, hi};
}

}  // namespace detail

// Isolate every real root of `poly` and certify whether all roots are real.
// Primary route: exhibit deg(p) sign alternations (exact certificate, also
// implies squarefreeness), with test points steered by `root_guesses` when
// provided (companion-matrix eigenvalues otherwise).  If that fails, a
// uniform subdivision tries next, and an exact Sturm chain of the
// squarefree part settles the count as the last resort.
inline RootSet real_roots(const ExactPolynomial& poly, int precision_digits = 15,
                          const std::vector<double>& root_guesses = {}) {
    if (poly.is_zero()) throw DomainError("real_roots: zero polynomial");
    if (precision_digits < 1 || precision_digits > 60)
        throw DomainError("real_roots: precision_digits out of range");

    RootSet out;
    if (poly.degree() == 0) {
        out.all_real = true;  // vacuously: no roots, degree 0
        out.certified_by_sign_changes = true;
        return out;
    }

    const IntegerScaledPoly ip(poly);
    const Rational bound = ip.root_bound();
    const int degree = poly.degree();
    // refinement target: the polynomial itself, or its squarefree part when
    // multiplicities would erase the sign change
    IntegerScaledPoly refiner = ip;

    auto intervals = detail::guided_sign_certificates(
        ip, root_guesses.empty() ? detail::companion_root_guesses(poly) : root_guesses, bound);
    if (static_cast<int>(intervals.size()) != degree) {
        const std::size_t eval_budget = std::max<std::size_t>(4096, 64u * degree);
        intervals = detail::sign_change_intervals(ip, bound, eval_budget);
    }
    if (static_cast<int>(intervals.size()) == degree) {
        out.all_real = true;
        out.certified_by_sign_changes = true;
        out.intervals = std::move(intervals);
    } else {
        // Sturm route: squarefree part, exact global count, count bisection
        detail::IPoly pz = ip.coeffs;
        detail::IPoly gcd = detail::igcd(pz, detail::iderivative(pz));
        out.has_multiple_roots = gcd.size() > 1;
        detail::IPoly sqfree = pz;
        if (out.has_multiple_roots) {
            // divide out the repeated part (exact division over Q, then rescale)
            const int dg = static_cast<int>(gcd.size()) - 1;
            const int dq = static_cast<int>(pz.size()) - 1 - dg;
            std::vector<Rational> quo(dq + 1, Rational(0));
            std::vector<Rational> rem(pz.begin(), pz.end());
            for (int k = dq; k >= 0; --k) {
                const Rational q = rem[k + dg] / Rational(gcd.back());
                quo[k] = q;
                for (int i = 0; i <= dg; ++i) rem[k + i] -= q * Rational(gcd[i]);
            }
            sqfree = IntegerScaledPoly(ExactPolynomial(std::move(quo))).coeffs;
        }
        const auto chain = detail::sturm_chain(sqfree);
        const int distinct_real = detail::sturm_count(chain, -bound, bound);
        // literal reading of the contract: all_real means count == degree,
        // so a repeated real root does not qualify (has_multiple_roots tells)
        out.all_real = (distinct_real == degree);
        out.certified_by_sign_changes = false;

        const IntegerScaledPoly isq(
            ExactPolynomial(std::vector<Rational>(sqfree.begin(), sqfree.end())));
        refiner = isq;
        std::vector<std::pair<Rational, Rational>> work{{-bound, bound}};
        while (!work.empty()) {
            auto [lo, hi] = work.back();
            work.pop_back();
            const int c = detail::sturm_count(chain, lo, hi);
            if (c == 0) continue;
            if (c == 1) {
                out.intervals.emplace_back(lo, hi);
                continue;
            }
            Rational mid = (lo + hi) / 2;
            if (isq.sign_at(mid) == 0) {
                out.intervals.emplace_back(mid, mid);
                // carve out a punctured neighbourhood that provably contains
                // no other root, so the recursion cannot stall on `mid`
                Rational eps = (hi - lo) / 1024;
                while (detail::sturm_count(chain, mid - eps, mid + eps) > 1) eps /= 1024;
                work.emplace_back(lo, mid - eps);
                work.emplace_back(mid + eps, hi);
            } else {
                work.emplace_back(lo, mid);
                work.emplace_back(mid, hi);
            }
        }
        std::sort(out.intervals.begin(), out.intervals.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
    }

    // refine to the requested precision
    Rational width_goal(1);
    for (int i = 0; i < precision_digits; ++i) width_goal /= 10;
    for (auto& iv : out.intervals) {
        if (iv.first != iv.second)
            iv = detail::refine_bracket(refiner, iv.first, iv.second, width_goal);
        const Rational mid = (iv.first + iv.second) / 2;
        out.midpoints.push_back(mid.convert_to<double>());
        out.midpoints_decimal.push_back(rational_to_decimal(mid, precision_digits));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Structure-aware root guesses for Q_N

namespace detail {

// Sign-carrying estimate of Q_N(y): the same E' = S' E recurrence run in
// long double with periodic positive rescaling (signs survive; magnitudes
// would overflow long before N = 400 otherwise).  Dense-coefficient Horner
// is useless here: the coefficients span ~10^2 N orders of magnitude, so its
// double rounding noise swamps the function everywhere near the root region.
inline double qn_scaled_value(const ModelSpec& spec, double y) {
    const int p = spec.p_order;
    const ExactPolynomial v = shifted_potential_poly(p);
    const long double g = spec.g.convert_to<long double>();
    std::vector<long double> kv(p + 1, 0.0L);
    for (int k = 1; k <= p; ++k) kv[k] = Rational(v.coeff(k)).convert_to<long double>() * k / g;

    std::vector<long double> e(p, 0.0L);  // e[n-1], e[n-2], ... rolling
    e[0] = 1.0L;
    int parity = 0;
    for (int n = 1; n <= spec.N; ++n) {
        long double acc = (kv[1] - static_cast<long double>(y) / g) * e[0];
        for (int k = 2; k <= std::min(p, n); ++k) acc += kv[k] * e[k - 1];
        acc /= n;
        for (int k = p - 1; k >= 1; --k) e[k] = e[k - 1];
        e[0] = acc;
        long double mag = 0;
        for (long double x : e) mag = std::max(mag, std::abs(x));
        if (mag > 1e30L || (mag > 0 && mag < 1e-30L))
            for (long double& x : e) x /= mag;  // positive rescale, sign kept
    }
    // Q_N = (-g)^N N! e_N: g > 0 and N! > 0, so only (-1)^N flips the sign
    parity = spec.N % 2;
    const long double val = parity ? -e[0] : e[0];
    return static_cast<double>(val);
}

// Sign changes of the rescaled recurrence on [lo, hi], sharpened by
// bisection in double.
inline std::vector<double> qn_scan_sign_changes(const ModelSpec& spec, double lo, double hi,
                                                int grid) {
    std::vector<double> guesses;
    double xa = lo, fa = qn_scaled_value(spec, xa);
    for (int i = 1; i <= grid; ++i) {
        const double xb = lo + (hi - lo) * i / grid;
        const double fb = qn_scaled_value(spec, xb);
        if (fa != 0 && fb != 0 && fa * fb < 0) {
            double a = xa, b = xb, va = fa;
            for (int it = 0; it < 60 && b - a > 1e-14 * (std::abs(a) + 1); ++it) {
                const double m = 0.5 * (a + b);
                const double vm = qn_scaled_value(spec, m);
                if (vm == 0) {
                    a = b = m;
                    break;
                }
                (va * vm < 0 ? b : a) = m;
                if (va * vm >= 0) va = vm;
            }
            guesses.push_back(0.5 * (a + b));
        } else if (fb == 0) {
            guesses.push_back(xb);
        }
        xa = xb;
        fa = fb;
    }
    return guesses;
}

// Approximate roots of Q_N: a coarse scan locates the root region, then a
// fine scan over it resolves the ~N^{-3/4}-spaced edge clusters.
inline std::vector<double> qn_root_guesses(const ModelSpec& spec, double lo, double hi) {
    const auto coarse = qn_scan_sign_changes(spec, lo, hi, 4096);
    if (coarse.empty()) return coarse;
    const double pad = 0.5;
    const double flo = coarse.front() - pad, fhi = coarse.back() + pad;
    const int fine_grid = std::max(16384, 96 * spec.N);
    return qn_scan_sign_changes(spec, flo, fhi, fine_grid);
}

}  // namespace detail

// Exact Q_N plus certified roots, with the exact sign tests steered by the
// rescaled-recurrence estimates (necessary from N ~ 50 up; see above).
inline RootSet qn_real_roots(const ModelSpec& spec, int precision_digits = 15) {
    const auto poly = qn_polynomial(spec);
    const IntegerScaledPoly ip(poly);
    const double b = ip.root_bound().convert_to<double>();
    const auto guesses = detail::qn_root_guesses(spec, -std::min(b, 64.0), std::min(b, 64.0));
    return real_roots(poly, precision_digits, guesses);
}

// ---------------------------------------------------------------------------
// Scaling limit toward the quartic-weight Airy zero

struct ScaledEdgeRow {
    int N = 0;
    double nearest_root = 0;   // root of Q_N nearest y = 0
    double mapped = 0;         // N^{3/4} * nearest_root
    double distance = 0;       // | |mapped| - target |
    bool all_real = false;
};

// For each N: g = 1/N, find the Q_N root nearest zero, map it with N^{3/4}
// and report its distance to `target` (the first quartic-Airy zero).  The
// trend of `distance` over N is the caller's assertion; rows always carry
// the observed edge data.
inline std::vector<ScaledEdgeRow> scaled_edge_compare(const std::vector<int>& n_list,
                                                      double target, int p_order = 3) {
    std::vector<ScaledEdgeRow> rows;
    for (int n : n_list) {
        ModelSpec spec{p_order, n, Rational(1, n)};
        const auto roots = qn_real_roots(spec, 15);
        if (roots.midpoints.empty()) throw NumericsError("scaled_edge_compare: no real roots");
        ScaledEdgeRow row;
        row.N = n;
        row.all_real = roots.all_real;
        row.nearest_root = *std::min_element(roots.midpoints.begin(), roots.midpoints.end(),
                                             [](double a, double b) {
                                                 return std::abs(a) < std::abs(b);
                                             });
        row.mapped = std::pow(double(n), 0.75) * row.nearest_root;
        row.distance = std::abs(std::abs(row.mapped) - target);
        rows.push_back(row);
    }
    return rows;
}

// ---------------------------------------------------------------------------
// (2,1) master matrix

// Tridiagonal truncation with off-diagonal entries sqrt(k)/sqrt(2).
inline Eigen::MatrixXd hermite_master_matrix(int N) {
    if (N < 1) throw DomainError("hermite_master_matrix: N must be >= 1");
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(N, N);
    for (int k = 1; k < N; ++k) {
        const double v = std::sqrt(double(k) / 2.0);
        m(k - 1, k) = v;
        m(k, k - 1) = v;
    }
    return m;
}

// Physicists' Hermite polynomials by exact recurrence, integer coefficients.
inline std::vector<Integer> hermite_coefficients(int n) {
    std::vector<Integer> prev{Integer(1)};  // H_0
    if (n == 0) return prev;
    std::vector<Integer> cur{Integer(0), Integer(2)};  // H_1
    for (int k = 1; k < n; ++k) {
        std::vector<Integer> next(k + 2, Integer(0));
        for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += 2 * cur[i];
        for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= 2 * k * prev[i];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

struct CrosscheckReport {
    int N = 0;
    bool exact_match = false;
};

// (2,1) identity Q_N(y) = (g/2)^{N/2} H_N((y+2)/sqrt(2g)).  Powers of
// sqrt(2g) cancel against (g/2)^{N/2} on every populated Hermite term (they
// share the parity of N), so the right side is an exact rational polynomial:
//   sum_{k ≡ N (mod 2)} h_k g^{(N-k)/2} 2^{-(N+k)/2} (y+2)^k.
inline CrosscheckReport master_matrix_crosscheck(int N, const Rational& g) {
    if (N < 0 || N > 50) throw DomainError("master_matrix_crosscheck: N out of range");
    const auto h = hermite_coefficients(N);

    ExactPolynomial rhs;
    ExactPolynomial shifted = ExactPolynomial::constant(Rational(1));  // (y+2)^k, built up
    int k = 0;
    const ExactPolynomial y_plus_2{{Rational(2), Rational(1)}};
    for (k = 0; k <= N; ++k) {
        if (k > 0) shifted = shifted * y_plus_2;
        if (h.size() <= static_cast<std::size_t>(k) || h[k] == 0) continue;
        if ((N - k) % 2 != 0) continue;
        Rational factor(h[k]);
        for (int i = 0; i < (N - k) / 2; ++i) factor *= g;
        // divide by 2^{(N+k)/2}
        Rational denom(1);
        for (int i = 0; i < (N + k) / 2; ++i) denom *= 2;
        factor /= denom;
        ExactPolynomial term = shifted;
        term.scale(factor);
        rhs += term;
    }

    ModelSpec spec{2, N, g};
    const auto lhs = qn_polynomial(spec);
    CrosscheckReport rep;
    rep.N = N;
    rep.exact_match = (lhs.degree() == rhs.degree());
    if (rep.exact_match)
        for (int i = 0; i <= lhs.degree() && rep.exact_match; ++i)
            rep.exact_match = (lhs.coeff(i) == rhs.coeff(i));
    return rep;
}

// ---------------------------------------------------------------------------
// Interlacing probe (exact)

// Refine both root sets until all intervals are pairwise disjoint, then
// check that the merged order alternates a, b, a, ..., a.  Exact sign
// arithmetic throughout; requires coprime inputs (consecutive Q_N are).
inline bool roots_interlace(const ExactPolynomial& a, const ExactPolynomial& b) {
    if (a.degree() != b.degree() + 1)
        throw DomainError("roots_interlace: expected consecutive degrees");
    const IntegerScaledPoly ia(a), ib(b);
    auto ra = real_roots(a, 12), rb = real_roots(b, 12);
    if (static_cast<int>(ra.intervals.size()) != a.degree() ||
        static_cast<int>(rb.intervals.size()) != b.degree())
        return false;  // interlacing undefined unless both are fully real

    auto disjoint = [](const std::pair<Rational, Rational>& x,
                       const std::pair<Rational, Rational>& y) {
        return x.second < y.first || y.second < x.first;
    };
    for (int round = 0; round < 64; ++round) {
        bool clean = true;
        for (auto& x : ra.intervals)
            for (auto& y : rb.intervals)
                if (!disjoint(x, y)) {
                    const Rational goal_x = (x.second - x.first) / 16;
                    const Rational goal_y = (y.second - y.first) / 16;
                    if (x.first != x.second) x = detail::refine_bracket(ia, x.first, x.second, goal_x);
                    if (y.first != y.second) y = detail::refine_bracket(ib, y.first, y.second, goal_y);
                    if (!disjoint(x, y)) clean = false;
                }
        if (clean) break;
        if (round == 63) throw ConvergenceError("roots_interlace: could not separate intervals");
    }

    struct Tag {
        Rational lo;
        bool from_a;
    };
    std::vector<Tag> merged;
    for (const auto& x : ra.intervals) merged.push_back({x.first, true});
    for (const auto& y : rb.intervals) merged.push_back({y.first, false});
    std::sort(merged.begin(), merged.end(), [](const Tag& s, const Tag& t) { return s.lo < t.lo; });
    if (merged.empty() || !merged.front().from_a || !merged.back().from_a) return false;
    for (std::size_t i = 0; i + 1 < merged.size(); ++i)
        if (merged[i].from_a == merged[i + 1].from_a) return false;
    return true;
}

}  // namespace zeroscope
