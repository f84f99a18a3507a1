#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "hlf/cyclotomic.hpp"
#include "hlf/polynomial.hpp"

namespace hlf {

/**
 * Multivariate polynomial in named symbols over exact cyclotomic coefficients.
 *
 * Monomials are sorted (name, exponent) vectors; zero coefficients are never
 * stored, so equality is structural and exact.  This is the coefficient ring
 * for symbolic Hecke local factors: eigenvalue names stay opaque and identity
 * checks reduce to exact polynomial comparisons.
 */
class SymPoly {
public:
    using Monomial = std::vector<std::pair<std::string, unsigned>>;

    SymPoly() = default;  // zero

    static SymPoly constant(const Cyclotomic& c);
    static SymPoly rational(const mpq_class& q) { return constant(Cyclotomic::rational(q)); }
    static SymPoly integer(long v) { return constant(Cyclotomic::integer(v)); }
    static SymPoly symbol(const std::string& name);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// The constant term (zero when absent).
    Cyclotomic constant_term() const;

    SymPoly operator-() const;
    SymPoly& operator+=(const SymPoly& o);
    SymPoly& operator-=(const SymPoly& o) { return *this += -o; }
    friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
    friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
    SymPoly operator*(const SymPoly& o) const;
    SymPoly pow(unsigned e) const;
    SymPoly scaled(const Cyclotomic& c) const;

    bool operator==(const SymPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const SymPoly& o) const { return !(*this == o); }

    /// Numeric specialization; every symbol must be assigned.
    std::complex<double> substitute(
        const std::map<std::string, std::complex<double>>& values) const;

    /// Total degree of the highest monomial; -1 when zero.
    long total_degree() const;

    std::string str() const;

    const std::map<Monomial, Cyclotomic>& terms() const { return terms_; }

private:
    void insert_(const Monomial& m, const Cyclotomic& c);
    std::map<Monomial, Cyclotomic> terms_;
};

inline bool ring_is_zero(const SymPoly& v) { return v.is_zero(); }
inline bool ring_is_one(const SymPoly& v) {
    return v.is_constant() && v.constant_term().is_one();
}
template <>
inline SymPoly ring_one<SymPoly>() { return SymPoly::integer(1); }

}  // namespace hlf
