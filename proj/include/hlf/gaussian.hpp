#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace hlf {

/**
 * Gaussian integer a + b*i with arbitrary-precision components.
 *
 * Value type; all arithmetic is exact.  Division helpers use the Euclidean
 * structure of Z[i] (nearest-lattice-point quotient, norm of the remainder
 * strictly below the norm of the divisor).
 */
class GaussianInt {
public:
    GaussianInt() : re_(0), im_(0) {}
    GaussianInt(long re, long im) : re_(re), im_(im) {}
    GaussianInt(mpz_class re, mpz_class im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianInt unit_i() { return {0, 1}; }

    const mpz_class& re() const { return re_; }
    const mpz_class& im() const { return im_; }

    mpz_class norm() const { return re_ * re_ + im_ * im_; }
    GaussianInt conj() const { return {re_, -im_}; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_unit() const { return norm() == 1; }

    GaussianInt operator-() const { return {-re_, -im_}; }
    GaussianInt operator+(const GaussianInt& o) const { return {re_ + o.re_, im_ + o.im_}; }
    GaussianInt operator-(const GaussianInt& o) const { return {re_ - o.re_, im_ - o.im_}; }
    GaussianInt operator*(const GaussianInt& o) const {
        return {re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_};
    }

    bool operator==(const GaussianInt& o) const { return re_ == o.re_ && im_ == o.im_; }
    bool operator!=(const GaussianInt& o) const { return !(*this == o); }

    /// The unique associate with re > 0 and im >= 0 (zero maps to zero).
    GaussianInt canonical_associate() const;

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const GaussianInt& g);

    /// Parses literals such as "5", "-3+4i", "i", "2-i", "7i".
    /// Throws std::invalid_argument on malformed input.
    static GaussianInt parse(const std::string& text);

private:
    mpz_class re_, im_;
};

/// Nearest-quotient division: a = q*b + r with norm(r) <= norm(b)/2.
std::pair<GaussianInt, GaussianInt> divmod(const GaussianInt& a, const GaussianInt& b);

/// True when b divides a exactly (b nonzero).
bool divides(const GaussianInt& b, const GaussianInt& a);

/// Exact quotient a/b; throws std::domain_error when b does not divide a.
GaussianInt exact_div(const GaussianInt& a, const GaussianInt& b);

/// Euclidean gcd, returned as a canonical associate; gcd(0, 0) = 0.
GaussianInt gcd(const GaussianInt& a, const GaussianInt& b);

enum class SplittingType { Ramified, Inert, Split };

std::ostream& operator<<(std::ostream& os, SplittingType t);

struct PrimeClassification {
    SplittingType type;
    /// Ramified: 1+i.  Inert: p itself.  Split: the canonical prime with im < re.
    GaussianInt pi;
    /// Split only: the conjugate prime (canonical associate, im > re); otherwise 0.
    GaussianInt pi_bar;
};

/// Splitting of a rational prime in Z[i].  Throws std::domain_error on
/// composite or non-positive input.
PrimeClassification classify_prime(const mpz_class& p);
PrimeClassification classify_prime(std::uint64_t p);

/// For p = 2 or p = 1 mod 4, the unique a >= b >= 0 with a^2 + b^2 = p.
/// Throws std::domain_error for other inputs.
std::pair<mpz_class, mpz_class> two_squares(const mpz_class& p);

struct GaussianFactorization {
    GaussianInt unit;  // one of 1, -1, i, -i
    /// Canonical-associate primes with exponents, sorted by (norm, re, im).
    std::vector<std::pair<GaussianInt, unsigned>> primes;
};

/**
 * Factors a nonzero Gaussian integer into a unit times canonical prime powers.
 *
 * The rational norm is factored by trial division up to 10^6 followed by a
 * probabilistic primality check on the remaining core; inputs whose core is
 * composite beyond that bound are rejected with std::domain_error.
 */
GaussianFactorization factor(const GaussianInt& alpha);

/// Probabilistic (BPSW-backed) primality test on arbitrary-precision input.
bool is_probable_prime(const mpz_class& n);

/// All rational primes <= limit, increasing.
const std::vector<std::uint32_t>& small_primes();
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

}  // namespace hlf
