#pragma once

#include <complex>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace hlf {

/**
 * Exact element of the cyclotomic field Q(zeta_m), zeta_m = exp(2*pi*i/m).
 *
 * Canonical form: a polynomial in zeta_m of degree < phi(m), reduced modulo
 * the m-th cyclotomic polynomial, with exact rational coefficients.  Equality
 * of two values with different orders is decided after lifting both to the
 * lcm order, which is an injective ring map, so comparisons are exact.
 */
class Cyclotomic {
public:
    Cyclotomic() : order_(1), c_(1, mpq_class(0)) {}

    static Cyclotomic zero() { return Cyclotomic(); }
    static Cyclotomic one() { return rational(mpq_class(1)); }
    static Cyclotomic integer(long v) { return rational(mpq_class(v)); }
    static Cyclotomic rational(const mpq_class& q);
    /// zeta_m^e, e taken modulo m.
    static Cyclotomic root_of_unity(unsigned m, long e);
    /// sum of weights[e] * zeta_m^e over 0 <= e < m (weights may be shorter).
    static Cyclotomic from_exponent_weights(unsigned m, std::vector<mpq_class> weights);

    unsigned order() const { return order_; }
    bool is_zero() const;
    bool is_one() const { return *this == one(); }
    bool is_rational() const;
    /// Throws std::domain_error when the value has a nonzero root component.
    mpq_class rational_part() const;

    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& rhs);
    Cyclotomic& operator-=(const Cyclotomic& rhs);
    Cyclotomic& operator*=(const Cyclotomic& rhs);
    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }

    Cyclotomic& scale(const mpq_class& q);
    Cyclotomic pow(unsigned long e) const;
    /// Complex conjugation, zeta -> zeta^{-1}.
    Cyclotomic conj() const;

    bool operator==(const Cyclotomic& rhs) const;
    bool operator!=(const Cyclotomic& rhs) const { return !(*this == rhs); }

    std::complex<double> to_complex() const;
    std::string str() const;

    /// Coefficient of zeta^j in the canonical form, 0 <= j < phi(order).
    const mpq_class& coeff(unsigned j) const { return c_.at(j); }
    unsigned canonical_degree() const { return static_cast<unsigned>(c_.size()); }

private:
    Cyclotomic(unsigned m, std::vector<mpq_class> c) : order_(m), c_(std::move(c)) {}
    /// Rewrites *this in Q(zeta_L); requires order_ | L.
    void lift_to_(unsigned L);

    unsigned order_;
    std::vector<mpq_class> c_;  // size phi(order_), canonical
};

/// Euler totient, m >= 1.
unsigned long totient(unsigned long m);

/// Monic integer coefficients of the m-th cyclotomic polynomial, low degree first.
const std::vector<mpz_class>& cyclotomic_polynomial(unsigned m);

}  // namespace hlf
