#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "hlf/characters.hpp"
#include "hlf/local_factors.hpp"
#include "hlf/series.hpp"

namespace hlf {

/// Distinguished error for evaluation at (or through) a pole.
class pole_error : public std::domain_error {
 public:
    using std::domain_error::domain_error;
};

/**
 * Complex Gamma function via a fixed-coefficient Lanczos approximation
 * (g = 7, 15 terms; constants frozen in the source) with the reflection
 * formula for Re(s) < 1/2.  Relative error is a few ulps times 10^3 on
 * |s| <= 20, comfortably within 1e-12.  Non-positive integers are poles.
 */
std::complex<double> gamma(std::complex<double> s);

/**
 * A point estimate with a rigorous bound on its absolute error.
 *
 * The bound tracks series truncation only; it may become +infinity after a
 * division whose denominator is not resolved away from zero by its own
 * bound.  The value remains the honest point estimate in that case.
 */
struct ValueWithError {
    std::complex<double> value{0.0, 0.0};
    double abs_err = 0.0;

    ValueWithError mul(const ValueWithError& o) const;
    /// Throws pole_error if the denominator point value is exactly zero.
    ValueWithError div(const ValueWithError& o) const;
    /// Multiply by an exact complex scalar.
    ValueWithError scaled(std::complex<double> exact) const;
};

ValueWithError from_eval(const EvalResult& r);

/// Externally supplied inner products c(1..M); index 0 unused.  The values
/// are opaque to the library: no growth or positivity is assumed.
struct InnerProductSequence {
    explicit InnerProductSequence(std::size_t M) : c(M + 1) {}
    std::size_t length() const { return c.size() - 1; }
    std::vector<std::complex<double>> c;
};

/**
 * Everything needed to evaluate the truncated degree-6 Euler product: the
 * weight, the character, and numeric eigenvalue data for every prime up to
 * the cutoff.
 */
struct LFunctionSpec {
    int k = 0;
    std::uint64_t modulus = 1;
    CharacterZi chi;
    std::uint64_t prime_cutoff = 1;
    std::map<std::uint64_t, EigenvalueData<std::complex<double>>> eigenvalues;

    /// Checks modulus consistency and that the eigenvalue table covers every
    /// prime up to the cutoff with the shape matching its splitting type.
    void validate() const;

    /// Locations of the possible simple poles of the completed function:
    /// {k, k-1, k-2, k-3} when the character is principal, empty otherwise.
    /// Metadata only; no numeric claim is attached.
    std::vector<int> possible_poles() const;
};

struct ZValueReport {
    std::complex<double> value{1.0, 0.0};
    std::uint64_t prime_cutoff = 1;
    /// |last local factor - 1|, a NON-RIGOROUS convergence heuristic.
    double last_factor_deviation = 0.0;
};

/**
 * Truncated Euler product of the twisted degree-6 L-function at s, as the
 * product over primes p <= cutoff of the reciprocal local factors evaluated
 * at p^{-s}.  Requires Re(s) > k+1.  A local factor evaluating to zero
 * raises pole_error.  The reduction order is a fixed pairwise tree, so the
 * result is bit-identical across thread counts.
 */
ZValueReport z_value(const LFunctionSpec& spec, std::complex<double> s,
                     int threads = 1);

/// Functional-equation reflection s -> 2k-3-s (an involution fixing k-3/2).
std::complex<double> reflect(std::complex<double> s, int k);

/**
 * The completion core shared by both completed series:
 *   N^{-4s} (4 pi^3)^{-s} Gamma(s) Gamma(s-k+3) Gamma(s-k+2) zeta(2s-2k+4),
 * with the zeta factor summed to M terms and its truncation error tracked.
 * Both callers below use this single code path, so for equal (k, N, s, M)
 * the returned values are bit-identical.
 */
ValueWithError completion_common_factor(int k, std::uint64_t N,
                                        std::complex<double> s, std::uint64_t M);

struct StarPrefactor {
    ValueWithError value;   // full prefactor multiplying the Euler product
    ValueWithError common;  // the shared completion core
};

/**
 * The completed-function prefactor
 *   common * zetaK(s-k+2, chi*conj-twist) / (L^2(s-k+2, theta*chi) L(2s-2k+4, chi^2)),
 * every constituent series evaluated in its convergence region (each shifted
 * argument must have real part > 1) with tail bounds propagated through the
 * products and divisions.
 */
StarPrefactor star_prefactor(int k, std::uint64_t N, const CharacterZi& chi,
                             std::complex<double> s, std::uint64_t M = 100000);

struct DStarValue {
    std::complex<double> value{0.0, 0.0};
    ValueWithError common;      // shared completion core (bit-identical)
    bool tail_bounded = false;  // inner products are opaque: no tail estimate
};

/**
 * Completed twisted Dirichlet series built on external inner products:
 *   common * zetaK(s-k+3, chi*conj-twist) * sum_{m<=len} chi(m) c(m) m^{-s}.
 * Requires Re(s) > k+1.  The inner-product sum carries no tail bound.
 */
DStarValue d_star_value(int k, std::uint64_t N, const CharacterZi& chi,
                        const InnerProductSequence& c, std::complex<double> s,
                        std::uint64_t M = 100000);

}  // namespace hlf
