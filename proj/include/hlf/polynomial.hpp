#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "hlf/cyclotomic.hpp"

namespace hlf {

/// Ring glue used by the generic polynomial/series code.
inline bool ring_is_zero(const Cyclotomic& v) { return v.is_zero(); }
inline bool ring_is_zero(const std::complex<double>& v) { return v == std::complex<double>(0.0); }
inline bool ring_is_one(const Cyclotomic& v) { return v.is_one(); }
inline bool ring_is_one(const std::complex<double>& v) { return v == std::complex<double>(1.0); }

template <class T>
T ring_one();
template <>
inline Cyclotomic ring_one<Cyclotomic>() { return Cyclotomic::one(); }
template <>
inline std::complex<double> ring_one<std::complex<double>>() { return {1.0, 0.0}; }

/**
 * Dense polynomial in one variable over a commutative ring T.
 * Coefficient j multiplies t^j; trailing zero coefficients are not trimmed
 * automatically (degree() looks past them).
 */
template <class T>
struct Polynomial {
    std::vector<T> c;

    Polynomial() = default;
    explicit Polynomial(std::vector<T> coeffs) : c(std::move(coeffs)) {}

    static Polynomial one() { return Polynomial(std::vector<T>{ring_one<T>()}); }

    /// Degree of the highest nonzero coefficient; -1 for the zero polynomial.
    long degree() const {
        for (size_t j = c.size(); j-- > 0;)
            if (!ring_is_zero(c[j])) return static_cast<long>(j);
        return -1;
    }

    const T& coeff(size_t j) const {
        static const T zero{};
        return j < c.size() ? c[j] : zero;
    }

    Polynomial operator*(const Polynomial& o) const {
        if (c.empty() || o.c.empty()) return Polynomial{};
        Polynomial r;
        r.c.assign(c.size() + o.c.size() - 1, T{});
        for (size_t i = 0; i < c.size(); ++i) {
            if (ring_is_zero(c[i])) continue;
            for (size_t j = 0; j < o.c.size(); ++j) {
                if (ring_is_zero(o.c[j])) continue;
                r.c[i + j] += c[i] * o.c[j];
            }
        }
        return r;
    }

    Polynomial operator+(const Polynomial& o) const {
        Polynomial r = *this;
        if (o.c.size() > r.c.size()) r.c.resize(o.c.size());
        for (size_t j = 0; j < o.c.size(); ++j) r.c[j] += o.c[j];
        return r;
    }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& x : r.c) x = -x;
        return r;
    }

    Polynomial operator-(const Polynomial& o) const { return *this + (-o); }

    bool operator==(const Polynomial& o) const {
        size_t n = std::max(c.size(), o.c.size());
        for (size_t j = 0; j < n; ++j) {
            T a = j < c.size() ? c[j] : T{};
            T b = j < o.c.size() ? o.c[j] : T{};
            if (!(a == b)) return false;
        }
        return true;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    template <class X>
    X eval(const X& x) const {
        X acc{};
        for (size_t j = c.size(); j-- > 0;) acc = acc * x + X(c[j]);
        return acc;
    }
};

/// p(t) -> p(c*t): coefficient j picks up c^j.
template <class T>
Polynomial<T> substitute_scaled(const Polynomial<T>& p, const T& scale) {
    Polynomial<T> r = p;
    T power = ring_one<T>();
    for (size_t j = 1; j < r.c.size(); ++j) {
        power = power * scale;
        r.c[j] = r.c[j] * power;
    }
    return r;
}

template <class T>
Polynomial<T> poly_pow(const Polynomial<T>& p, unsigned e) {
    Polynomial<T> r = Polynomial<T>::one();
    for (unsigned j = 0; j < e; ++j) r = r * p;
    return r;
}

}  // namespace hlf
