#pragma once

// Dense polynomials with arbitrary-precision rational coefficients, plus the
// exact machinery the root certification needs: integer-scaled sign
// evaluation, pseudo-remainder sequences, polynomial gcd, and Sturm chains.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>
#include <vector>

#include "zeroscope/core.hpp"

namespace zeroscope {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline int sign_of(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }
inline int sign_of(const Integer& n) { return n > 0 ? 1 : (n < 0 ? -1 : 0); }

// Decimal rendering of a rational to `digits` places (round toward zero).
inline std::string rational_to_decimal(const Rational& q, int digits) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    Integer num = numerator(q), den = denominator(q);
    std::string out;
    if (num < 0) {
        out.push_back('-');
        num = -num;
    }
    out += Integer(num / den).str();
    num %= den;
    if (digits > 0) {
        out.push_back('.');
        for (int i = 0; i < digits; ++i) {
            num *= 10;
            out += Integer(num / den).str();
            num %= den;
        }
    }
    return out;
}

class ExactPolynomial {
  public:
    ExactPolynomial() = default;  // the zero polynomial
    explicit ExactPolynomial(std::vector<Rational> ascending_coeffs)
        : coeffs_(std::move(ascending_coeffs)) {
        trim();
    }
    static ExactPolynomial constant(Rational c) { return ExactPolynomial({std::move(c)}); }
    static ExactPolynomial variable() { return ExactPolynomial({Rational(0), Rational(1)}); }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    Rational coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(coeffs_.size())) ? coeffs_[k] : Rational(0);
    }
    const Rational& leading() const {
        if (is_zero()) throw DomainError("ExactPolynomial: zero polynomial has no leading coeff");
        return coeffs_.back();
    }
    bool is_monic() const { return !is_zero() && leading() == 1; }

    ExactPolynomial& operator+=(const ExactPolynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }
    ExactPolynomial& operator-=(const ExactPolynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }
    friend ExactPolynomial operator+(ExactPolynomial a, const ExactPolynomial& b) { return a += b; }
    friend ExactPolynomial operator-(ExactPolynomial a, const ExactPolynomial& b) { return a -= b; }

    ExactPolynomial& scale(const Rational& c) {
        if (c == 0) {
            coeffs_.clear();
            return *this;
        }
        for (auto& a : coeffs_) a *= c;
        return *this;
    }

    friend ExactPolynomial operator*(const ExactPolynomial& a, const ExactPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return ExactPolynomial(std::move(out));
    }

    // multiply by (c1 * y + c0) without building a temporary polynomial
    ExactPolynomial times_linear(const Rational& c1, const Rational& c0) const {
        if (is_zero()) return {};
        std::vector<Rational> out(coeffs_.size() + 1, Rational(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            out[i] += coeffs_[i] * c0;
            out[i + 1] += coeffs_[i] * c1;
        }
        return ExactPolynomial(std::move(out));
    }

    ExactPolynomial derivative() const {
        if (coeffs_.size() <= 1) return {};
        std::vector<Rational> out(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * i;
        return ExactPolynomial(std::move(out));
    }

    Rational evaluate(const Rational& x) const {
        Rational acc(0);
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
        return acc;
    }

    double evaluate_double(double x) const {
        double acc = 0;
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i].convert_to<double>();
        return acc;
    }

  private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<Rational> coeffs_;
};

// ---------------------------------------------------------------------------
// Integer-scaled view for fast exact sign queries

// Common-denominator form D * P with integer coefficients, divided by the
// content.  sign(P(u/v)) = sign( sum_k c_k u^k v^{d-k} ).
struct IntegerScaledPoly {
    std::vector<Integer> coeffs;  // ascending, primitive

    explicit IntegerScaledPoly(const ExactPolynomial& p) {
        using boost::multiprecision::denominator;
        using boost::multiprecision::gcd;
        using boost::multiprecision::lcm;
        using boost::multiprecision::numerator;
        if (p.is_zero()) return;
        Integer den(1);
        for (const auto& c : p.coefficients()) den = lcm(den, denominator(c));
        coeffs.reserve(p.coefficients().size());
        for (const auto& c : p.coefficients())
            coeffs.push_back(numerator(c) * (den / denominator(c)));
        Integer content(0);
        for (const auto& c : coeffs) content = gcd(content, c);
        if (content > 1)
            for (auto& c : coeffs) c /= content;
    }

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }

    int sign_at(const Rational& x) const {
        using boost::multiprecision::denominator;
        using boost::multiprecision::numerator;
        if (coeffs.empty()) return 0;
        const Integer u = numerator(x), v = denominator(x);
        const int d = degree();
        std::vector<Integer> vpow(d + 1);
        vpow[0] = 1;
        for (int i = 1; i <= d; ++i) vpow[i] = vpow[i - 1] * v;
        Integer acc = coeffs[d];
        for (int k = d - 1; k >= 0; --k) acc = acc * u + coeffs[k] * vpow[d - k];
        return sign_of(acc);
    }

    // Root bound in the Fujiwara style, rounded up to a power of two:
    // every root r satisfies |r| <= 2 max_k (|c_{d-k}| / |c_d|)^{1/k}.
    // Bit lengths give a safe over-estimate of each ratio, so the returned
    // power of two certainly contains the root set while staying within a
    // factor ~4 of the true radius (the Cauchy bound can overshoot by the
    // full coefficient magnitude, which wrecks the subdivision search).
    Rational root_bound() const {
        using boost::multiprecision::msb;
        if (coeffs.size() <= 1) return Rational(1);
        const int d = degree();
        const long lead_bits = static_cast<long>(msb(Integer(abs(coeffs.back()))));
        long bound_bits = 1;
        for (int k = 1; k <= d; ++k) {
            const Integer c = abs(coeffs[d - k]);
            if (c == 0) continue;
            const long ratio_bits = static_cast<long>(msb(c)) + 1 - lead_bits;
            const long need = (ratio_bits + k - 1) / k + 1;  // ceil + the factor 2
            bound_bits = std::max(bound_bits, need + 1);
        }
        Integer b(1);
        b <<= static_cast<unsigned>(bound_bits);
        return Rational(b);
    }
};

// ---------------------------------------------------------------------------
// Integer polynomial helpers (primitive PRS, gcd, Sturm)

namespace detail {

using IPoly = std::vector<Integer>;  // ascending, may have trailing zeros trimmed by callers

inline void itrim(IPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Integer icontent(const IPoly& p) {
    using boost::multiprecision::gcd;
    Integer c(0);
    for (const auto& a : p) c = gcd(c, a);
    return c;
}

inline void make_primitive(IPoly& p) {
    const Integer c = icontent(p);
    if (c > 1)
        for (auto& a : p) a /= c;
    if (!p.empty() && p.back() < 0)
        for (auto& a : p) a = -a;
}

inline IPoly iderivative(const IPoly& p) {
    IPoly out;
    for (std::size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * Integer(i));
    itrim(out);
    return out;
}

// lb^t * (a mod b) for some t >= 0 recorded in the result; the polynomial
// stays in Z[x] throughout.
struct PseudoRemainder {
    IPoly rem;
    int lb_power = 0;  // how many times leading(b) multiplied the remainder
};

inline PseudoRemainder pseudo_remainder(IPoly a, const IPoly& b) {
    itrim(a);
    const int db = static_cast<int>(b.size()) - 1;
    if (db < 0) throw DomainError("pseudo_remainder: division by zero polynomial");
    const Integer lb = b.back();
    int da = static_cast<int>(a.size()) - 1;
    int t = 0;
    while (da >= db) {
        const Integer la = a[da];
        for (auto& c : a) c *= lb;
        ++t;
        for (int i = 0; i <= db; ++i) a[da - db + i] -= la * b[i];
        itrim(a);
        da = static_cast<int>(a.size()) - 1;
    }
    return {std::move(a), t};
}

// primitive-PRS gcd
inline IPoly igcd(IPoly a, IPoly b) {
    itrim(a);
    itrim(b);
    make_primitive(a);
    make_primitive(b);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        IPoly r = pseudo_remainder(a, b).rem;
        make_primitive(r);
        a = std::move(b);
        b = std::move(r);
    }
    make_primitive(a);
    return a;
}

// Sturm chain with content stripping at every step.  Each stored element
// must be a positive multiple of -rem(s_{k-1}, s_k); pseudo-division scales
// rem by lb^t, so the sign of that factor decides whether to negate.
inline std::vector<IPoly> sturm_chain(IPoly p) {
    itrim(p);
    make_primitive(p);
    std::vector<IPoly> chain;
    if (p.empty()) return chain;
    chain.push_back(p);
    IPoly d = iderivative(p);
    itrim(d);
    if (d.empty()) return chain;
    make_primitive(d);
    chain.push_back(d);
    while (true) {
        auto [r, t] = pseudo_remainder(chain[chain.size() - 2], chain.back());
        itrim(r);
        if (r.empty()) break;
        const Integer c = icontent(r);
        for (auto& a : r) a /= c;
        const Integer& lb = chain.back().back();
        const bool multiplier_negative = (lb < 0) && (t % 2 == 1);
        if (!multiplier_negative)
            for (auto& a : r) a = -a;
        chain.push_back(std::move(r));
    }
    return chain;
}

inline int isign_at(const IPoly& p, const Rational& x) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (p.empty()) return 0;
    const Integer u = numerator(x), v = denominator(x);
    const int d = static_cast<int>(p.size()) - 1;
    Integer vpow(1);
    std::vector<Integer> vp(d + 1);
    vp[0] = 1;
    for (int i = 1; i <= d; ++i) vp[i] = vp[i - 1] * v;
    Integer acc = p[d];
    for (int k = d - 1; k >= 0; --k) acc = acc * u + p[k] * vp[d - k];
    return sign_of(acc);
}

inline int sign_variations(const std::vector<int>& signs) {
    int var = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

inline int sturm_variations_at(const std::vector<IPoly>& chain, const Rational& x) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& p : chain) signs.push_back(isign_at(p, x));
    return sign_variations(signs);
}

// number of distinct real roots in (a, b]
inline int sturm_count(const std::vector<IPoly>& chain, const Rational& a, const Rational& b) {
    return sturm_variations_at(chain, a) - sturm_variations_at(chain, b);
}

}  // namespace detail

}  // namespace zeroscope
