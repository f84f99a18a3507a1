#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hlf/characters.hpp"
#include "hlf/cyclotomic.hpp"
#include "hlf/polynomial.hpp"

namespace hlf {

/**
 * Dirichlet series truncated at a bound M: coefficients a(1), ..., a(M).
 *
 * The scalar kind is a property of the whole series: exact cyclotomic values
 * (ExactSeries) or complex floats (ComplexSeries).  Exact series are embedded
 * into floating complex numbers only at evaluation boundaries.
 */
template <class S>
struct TruncatedSeries {
    explicit TruncatedSeries(std::uint64_t bound) : a(bound + 1) {
        if (bound == 0) throw std::domain_error("TruncatedSeries: bound must be >= 1");
    }

    std::uint64_t bound() const { return a.size() - 1; }
    S& operator[](std::uint64_t n) { return a.at(n); }
    const S& operator[](std::uint64_t n) const { return a.at(n); }

    std::vector<S> a;  // index 0 unused
};

using ExactSeries = TruncatedSeries<Cyclotomic>;
using ComplexSeries = TruncatedSeries<std::complex<double>>;

template <class S>
using LocalFactorMap = std::map<std::uint64_t, Polynomial<S>>;

/// Dirichlet convolution c(n) = sum_{d|n} a(d) b(n/d); bounds must agree.
template <class S>
TruncatedSeries<S> convolve(const TruncatedSeries<S>& x, const TruncatedSeries<S>& y) {
    if (x.bound() != y.bound()) throw std::domain_error("convolve: bounds differ");
    TruncatedSeries<S> out(x.bound());
    for (std::uint64_t d = 1; d <= x.bound(); ++d) {
        if (ring_is_zero(x[d])) continue;
        for (std::uint64_t e = 1; d * e <= x.bound(); ++e) {
            if (ring_is_zero(y[e])) continue;
            out[d * e] += x[d] * y[e];
        }
    }
    return out;
}

/// Dirichlet inverse; requires a(1) = 1.
template <class S>
TruncatedSeries<S> invert(const TruncatedSeries<S>& x) {
    if (!ring_is_one(x[1])) throw std::domain_error("invert: a(1) must be 1");
    TruncatedSeries<S> out(x.bound());
    out[1] = ring_one<S>();
    for (std::uint64_t n = 2; n <= x.bound(); ++n) {
        S acc{};
        for (std::uint64_t d = 2; d <= n; ++d) {
            if (n % d != 0) continue;
            if (ring_is_zero(x[d])) continue;
            acc += x[d] * out[n / d];
        }
        out[n] = -acc;
    }
    return out;
}

namespace detail {

/// In-place multiply of a series by the expansion sum_j w[j] x^j at prime p
/// (w[0] = 1), where x^j lands on index p^j.
template <class S>
void fold_prime_power_series(TruncatedSeries<S>& series, std::uint64_t p,
                             const std::vector<S>& w) {
    const std::uint64_t M = series.bound();
    for (std::uint64_t n = M; n >= 1; --n) {
        S acc = series[n];
        std::uint64_t q = n;
        for (size_t j = 1; j < w.size(); ++j) {
            if (q % p != 0) break;
            q /= p;
            if (ring_is_zero(w[j]) || ring_is_zero(series[q])) continue;
            acc += w[j] * series[q];
        }
        series[n] = acc;
    }
}

}  // namespace detail

/**
 * Expands the Euler product over the given primes with the listed factor
 * polynomials in the RECIPROCAL position: the result is
 * prod_p factor_p(p^{-s})^{-1} truncated at M.  Unlisted primes contribute 1.
 * Every factor must have constant term 1.
 */
template <class S>
TruncatedSeries<S> from_euler(const LocalFactorMap<S>& factors, std::uint64_t M) {
    TruncatedSeries<S> out(M);
    out[1] = ring_one<S>();
    for (const auto& [p, poly] : factors) {
        if (p < 2) throw std::domain_error("from_euler: factor at a non-prime index");
        if (p > M) continue;
        if (poly.c.empty() || !ring_is_one(poly.c[0]))
            throw std::domain_error("from_euler: factor constant term must be 1");
        // Power-series inverse of the factor up to p^j <= M.
        size_t jmax = 0;
        for (std::uint64_t q = 1; q <= M / p; q *= p) ++jmax;
        std::vector<S> inv(jmax + 1);
        inv[0] = ring_one<S>();
        for (size_t j = 1; j <= jmax; ++j) {
            S acc{};
            for (size_t i = 1; i <= j && i < poly.c.size(); ++i) acc += poly.c[i] * inv[j - i];
            inv[j] = -acc;
        }
        detail::fold_prime_power_series(out, p, inv);
    }
    return out;
}

/// Direct product prod_p factor_p(p^{-s}) truncated at M (no inversion).
template <class S>
TruncatedSeries<S> from_euler_direct(const LocalFactorMap<S>& factors, std::uint64_t M) {
    TruncatedSeries<S> out(M);
    out[1] = ring_one<S>();
    for (const auto& [p, poly] : factors) {
        if (p < 2) throw std::domain_error("from_euler_direct: factor at a non-prime index");
        if (p > M) continue;
        if (poly.c.empty() || !ring_is_one(poly.c[0]))
            throw std::domain_error("from_euler_direct: factor constant term must be 1");
        size_t jmax = 0;
        for (std::uint64_t q = 1; q <= M / p; q *= p) ++jmax;
        std::vector<S> w(poly.c.begin(),
                         poly.c.begin() + std::min(poly.c.size(), jmax + 1));
        detail::fold_prime_power_series(out, p, w);
    }
    return out;
}

/// Coefficients psi(n) of the Dirichlet L-series of a character on Z.
ExactSeries l_series(const RationalCharacter& psi, std::uint64_t M);

/// All-ones coefficients (the Riemann zeta series).
ExactSeries zeta_series(std::uint64_t M);

/**
 * Lattice form of the Dedekind zeta series of Q(i) twisted by a character
 * omega on Z[i]/N: a(n) = (1/4) * sum over nonzero lattice points of norm n
 * of omega(lambda).  Requires omega trivial on the units of Z[i]; otherwise
 * the quarter-sum is not well defined and a std::domain_error explains why.
 */
ExactSeries dedekind_lattice(const CharacterZi& omega, std::uint64_t M);

ComplexSeries to_complex_series(const ExactSeries& x);

/// First index (1-based) where the two series differ, or nullopt.
template <class S>
std::optional<std::uint64_t> first_mismatch(const TruncatedSeries<S>& x,
                                            const TruncatedSeries<S>& y) {
    if (x.bound() != y.bound()) throw std::domain_error("first_mismatch: bounds differ");
    for (std::uint64_t n = 1; n <= x.bound(); ++n)
        if (!(x[n] == y[n])) return n;
    return std::nullopt;
}

/// Deterministic pairwise (fixed-tree) summation; independent of threading.
std::complex<double> fixed_tree_sum(std::vector<std::complex<double>> terms);

/// Closed-form bound for C * sum_{n>M} d(n) n^{-sigma}, sigma > 1.
double dirichlet_tail_bound(double sigma, std::uint64_t M, double coeff_bound);

struct EvalResult {
    std::complex<double> value;
    double tail_bound;  // rigorous bound on the dropped tail
};

/**
 * Partial sum sum_{n<=M} a(n) n^{-s} with a rigorous tail bound.
 *
 * sigma0 is the caller-declared abscissa (must exceed 1) and coeff_bound a
 * caller-supplied C with |a(n)| <= C*d(n); the tail bound is
 * C * sigma * [M^{1-sigma}/(sigma-1)] * (log M + 1 + 1/(sigma-1)) at
 * sigma = Re(s), which dominates C * sum_{n>M} d(n) n^{-sigma}.
 */
template <class S>
EvalResult evaluate(const TruncatedSeries<S>& x, std::complex<double> s, double sigma0,
                    double coeff_bound) {
    if (!(sigma0 > 1.0)) throw std::domain_error("evaluate: declared abscissa must exceed 1");
    if (s.real() < sigma0)
        throw std::domain_error("evaluate: Re(s) below the declared abscissa");
    if (coeff_bound < 0) throw std::domain_error("evaluate: coefficient bound must be >= 0");
    std::vector<std::complex<double>> terms;
    terms.reserve(x.bound());
    for (std::uint64_t n = 1; n <= x.bound(); ++n) {
        std::complex<double> a;
        if constexpr (std::is_same_v<S, Cyclotomic>)
            a = x[n].to_complex();
        else
            a = x[n];
        double ln = std::log(static_cast<double>(n));
        terms.push_back(a * std::exp(-s * ln));
    }
    return {fixed_tree_sum(std::move(terms)),
            dirichlet_tail_bound(s.real(), x.bound(), coeff_bound)};
}

}  // namespace hlf
