#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include "hlf/gaussian.hpp"
#include "hlf/polynomial.hpp"
#include "hlf/symbolic.hpp"

namespace hlf {

/// p^e as an exact rational, e possibly negative.
mpq_class rational_power(std::uint64_t p, long e);

/// Splitting type of a prime from its residue mod 4 (input must be prime).
SplittingType splitting_of_prime(std::uint64_t p);

template <class R>
R ring_from_rational(const mpq_class& q);
template <>
inline std::complex<double> ring_from_rational<std::complex<double>>(const mpq_class& q) {
    return {q.get_d(), 0.0};
}
template <>
inline SymPoly ring_from_rational<SymPoly>(const mpq_class& q) { return SymPoly::rational(q); }

template <class R>
R ring_from_cyclotomic(const Cyclotomic& c);
template <>
inline std::complex<double> ring_from_cyclotomic<std::complex<double>>(const Cyclotomic& c) {
    return c.to_complex();
}
template <>
inline SymPoly ring_from_cyclotomic<SymPoly>(const Cyclotomic& c) { return SymPoly::constant(c); }

/**
 * Eigenvalue slots for the degree-2 Hecke data at one prime, grouped by the
 * splitting behaviour of the prime in Z[i].  The coefficient ring R is either
 * complex numbers (numeric evaluation) or SymPoly (symbolic identities); a
 * single prime never mixes the two.
 */
template <class R>
struct InertEigenvalues {
    R t_p, t_1p, delta_p;
};

template <class R>
struct RamifiedEigenvalues {
    R t_2, t_ramified, delta_ramified;
};

template <class R>
struct SplitEigenvalues {
    R t_p, t_pi, t_pi_bar, delta_p, delta_pi, delta_pi_bar;
};

template <class R>
using EigenvalueData =
    std::variant<InertEigenvalues<R>, RamifiedEigenvalues<R>, SplitEigenvalues<R>>;

template <class R>
SplittingType eigenvalue_shape(const EigenvalueData<R>& e) {
    if (std::holds_alternative<InertEigenvalues<R>>(e)) return SplittingType::Inert;
    if (std::holds_alternative<RamifiedEigenvalues<R>>(e)) return SplittingType::Ramified;
    return SplittingType::Split;
}

/// Fresh symbolic eigenvalue slots with standard names.
EigenvalueData<SymPoly> symbolic_eigenvalues(SplittingType type);

/// Alternate-reading switch for the prime-2 local factor.  Only the standard
/// reading is implemented; the alternate slot is reserved and rejected.
enum class Q2Reading { Standard, Alternate };

/**
 * Local Hecke polynomial at an inert prime (degree 4 in t, constant term 1):
 *   1 - T t + (p T1 + p(p^3+p^2-p+1) D) t^2 - p^4 D T t^3 + p^8 D^2 t^4.
 */
template <class R>
Polynomial<R> q_inert(std::uint64_t p, const InertEigenvalues<R>& e) {
    auto pw = [&](long j) { return ring_from_rational<R>(rational_power(p, j)); };
    mpq_class p3 = rational_power(p, 3), p2 = rational_power(p, 2), p1 = rational_power(p, 1);
    R mid_const = ring_from_rational<R>(p1 * (p3 + p2 - p1 + 1));
    Polynomial<R> q;
    q.c.resize(5);
    q.c[0] = ring_one<R>();
    q.c[1] = -e.t_p;
    q.c[2] = pw(1) * e.t_1p + mid_const * e.delta_p;
    q.c[3] = -(pw(4) * e.delta_p * e.t_p);
    q.c[4] = pw(8) * e.delta_p * e.delta_p;
    return q;
}

/**
 * Local Hecke polynomial at the ramified prime (degree 4 in t):
 *   1 - (T2 - 3D) t + (2 Tr^2 - 8 D (T2 + D)) t^2
 *     - (4D)^2 (T2 - 3D) t^3 + (4D)^4 t^4.
 */
template <class R>
Polynomial<R> q_ramified(const RamifiedEigenvalues<R>& e,
                         Q2Reading reading = Q2Reading::Standard) {
    if (reading != Q2Reading::Standard)
        throw std::domain_error(
            "q_ramified: the alternate reading is a reserved switch with no "
            "implemented variant");
    R three = ring_from_rational<R>(mpq_class(3));
    R two = ring_from_rational<R>(mpq_class(2));
    R eight = ring_from_rational<R>(mpq_class(8));
    R sixteen = ring_from_rational<R>(mpq_class(16));
    R c256 = ring_from_rational<R>(mpq_class(256));
    R head = e.t_2 - three * e.delta_ramified;
    Polynomial<R> q;
    q.c.resize(5);
    q.c[0] = ring_one<R>();
    q.c[1] = -head;
    q.c[2] = two * e.t_ramified * e.t_ramified -
             eight * e.delta_ramified * (e.t_2 + e.delta_ramified);
    q.c[3] = -(sixteen * e.delta_ramified * e.delta_ramified * head);
    q.c[4] = c256 * (e.delta_ramified * e.delta_ramified) *
             (e.delta_ramified * e.delta_ramified);
    return q;
}

/**
 * Local Hecke polynomial at a split prime (degree 6 in t):
 *   1 - T t + (p Ta Tb - p^4 D) t^2
 *     - (p^3 (Ta^2 Db + Tb^2 Da) - 2 p^4 D T) t^3
 *     + p^4 D (p Ta Tb - p^4 D) t^4 - p^8 D^2 T t^5 + p^12 D^3 t^6,
 * where (Ta, Da) and (Tb, Db) are the data of the two conjugate primes.
 */
template <class R>
Polynomial<R> q_split(std::uint64_t p, const SplitEigenvalues<R>& e) {
    auto pw = [&](long j) { return ring_from_rational<R>(rational_power(p, j)); };
    R two = ring_from_rational<R>(mpq_class(2));
    R mixed = pw(1) * e.t_pi * e.t_pi_bar - pw(4) * e.delta_p;
    Polynomial<R> q;
    q.c.resize(7);
    q.c[0] = ring_one<R>();
    q.c[1] = -e.t_p;
    q.c[2] = mixed;
    q.c[3] = -(pw(3) * (e.t_pi * e.t_pi * e.delta_pi_bar +
                        e.t_pi_bar * e.t_pi_bar * e.delta_pi) -
               two * pw(4) * e.delta_p * e.t_p);
    q.c[4] = pw(4) * e.delta_p * mixed;
    q.c[5] = -(pw(8) * e.delta_p * e.delta_p * e.t_p);
    q.c[6] = pw(12) * e.delta_p * e.delta_p * e.delta_p;
    return q;
}

/**
 * Case factor of the local identity, a polynomial in t = p^{-s}:
 *   inert:    1 - chi^2 p^{2k-6} t^2
 *   split:    (1 - chi p^{k-3} t)^2 (1 - chi^2 p^{2k-4} t^2)
 *   ramified: (1 - chi 2^{k-3} t)(1 + chi 2^{k-2} t).
 */
template <class R>
Polynomial<R> case_factor(std::uint64_t p, SplittingType type, const R& chi_p, int k) {
    auto pw = [&](long j) { return ring_from_rational<R>(rational_power(p, j)); };
    switch (type) {
        case SplittingType::Inert: {
            Polynomial<R> f;
            f.c.resize(3);
            f.c[0] = ring_one<R>();
            f.c[2] = -(chi_p * chi_p * pw(2 * k - 6));
            return f;
        }
        case SplittingType::Split: {
            Polynomial<R> lin;
            lin.c = {ring_one<R>(), -(chi_p * pw(k - 3))};
            Polynomial<R> quad;
            quad.c.resize(3);
            quad.c[0] = ring_one<R>();
            quad.c[2] = -(chi_p * chi_p * pw(2 * k - 4));
            return lin * lin * quad;
        }
        case SplittingType::Ramified: {
            if (p != 2)
                throw std::domain_error("case_factor: ramified case requires p = 2");
            Polynomial<R> a, b;
            a.c = {ring_one<R>(), -(chi_p * pw(k - 3))};
            b.c = {ring_one<R>(), chi_p * pw(k - 2)};
            return a * b;
        }
    }
    throw std::logic_error("case_factor: unhandled splitting type");
}

/**
 * Full degree-6 local factor of the twisted second Z-function, as a
 * polynomial in t = p^{-s} with the character value substituted:
 *   inert:          (1 + chi p^{k-2} t)^2 * Q_p(chi t)
 *   split/ramified: Q_p(chi t)
 * A vanishing character value collapses the factor to 1.
 */
template <class R>
Polynomial<R> full_local_factor(std::uint64_t p, const R& chi_p, int k,
                                const EigenvalueData<R>& e) {
    SplittingType type = splitting_of_prime(p);
    if (eigenvalue_shape(e) != type)
        throw std::domain_error(
            "full_local_factor: eigenvalue data shape does not match the prime");
    if (ring_is_zero(chi_p)) return Polynomial<R>::one();
    Polynomial<R> q;
    switch (type) {
        case SplittingType::Inert:
            q = q_inert(p, std::get<InertEigenvalues<R>>(e));
            break;
        case SplittingType::Ramified:
            q = q_ramified(std::get<RamifiedEigenvalues<R>>(e));
            break;
        case SplittingType::Split:
            q = q_split(p, std::get<SplitEigenvalues<R>>(e));
            break;
    }
    Polynomial<R> f = substitute_scaled(q, chi_p);
    if (type == SplittingType::Inert) {
        Polynomial<R> lin;
        lin.c = {ring_one<R>(),
                 chi_p * ring_from_rational<R>(rational_power(p, k - 2))};
        f = lin * lin * f;
    }
    return f;
}

}  // namespace hlf
