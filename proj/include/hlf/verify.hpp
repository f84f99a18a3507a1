#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hlf/characters.hpp"
#include "hlf/local_factors.hpp"
#include "hlf/series.hpp"

namespace hlf {

/**
 * Outcome of one exact identity check.  A pass is a proof at the stated
 * finite bound; a fail always carries a witness (the first differing series
 * index, or the first differing monomial of a polynomial identity).
 */
struct VerificationReport {
    std::string identity;
    std::uint64_t modulus = 0;
    std::size_t char_index = 0;
    std::string params;
    bool pass = false;
    std::string witness;
};

/// Factor maps of the three displayed Euler products, exposed so tests can
/// corrupt a single factor and watch the verifier localize the damage.
LocalFactorMap<Cyclotomic> theta_factor_map(const CharacterZi& chi, std::uint64_t M);
LocalFactorMap<Cyclotomic> chi_squared_factor_map(const CharacterZi& chi,
                                                  std::uint64_t M);
LocalFactorMap<Cyclotomic> zetaK_factor_map(const CharacterZi& chi, std::uint64_t M);

/// Raw engine: expands the map as a reciprocal Euler product and compares
/// against the given series coefficient-by-coefficient, exactly.
VerificationReport verify_series_against_map(const std::string& identity,
                                             const CharacterZi& chi,
                                             const ExactSeries& lhs,
                                             const LocalFactorMap<Cyclotomic>& map);

/**
 * Character L-series with the quartic character folded in, against its
 * displayed Euler product: factor (1 + chi(p) x) at primes that stay prime,
 * (1 - chi(p) x) at odd split primes, nothing at 2.
 */
VerificationReport verify_theta_factorization(const CharacterZi& chi, std::uint64_t M);

/// L-series of the squared character against the all-primes product with
/// factors (1 - chi^2(p) x).
VerificationReport verify_chi_squared(const CharacterZi& chi, std::uint64_t M);

/**
 * Lattice form of the twisted Dedekind zeta series against its Euler
 * product over the primes of Z[i], pushed down to rational primes: factor
 * (1 - chi(2) x) at 2, (1 - chi^2(p) x^2) at primes that stay prime (their
 * ideals have norm p^2), (1 - chi(p) x)^2 at odd split primes.
 */
VerificationReport verify_zetaK_factorization(const CharacterZi& chi, std::uint64_t M);

/**
 * Per-prime content of the main product identity, checked as an exact
 * polynomial identity in x = p^{-s} over symbolic eigenvalues: clearing
 * denominators,
 *
 *   case(p) * zk2(p) * Z(p)  ==  l1(p)^2 * l2(p) * zk3(p) * Q(chi_p x),
 *
 * where l1, l2, zk3, zk2 are the local polynomials of the four zeta/L
 * prefactors (at the shifted arguments s-k+2, 2s-2k+4, s-k+3, s-k+2), case
 * is the inner-product-series case factor, and Z the full local factor of
 * the Euler product.  chi_p must be an exact root of unity or zero.
 */
VerificationReport verify_local_proposition(std::uint64_t p, const Cyclotomic& chi_p,
                                            int k, const EigenvalueData<SymPoly>& e);

/**
 * Batch driver: the three series identities for every character mod N, and
 * the local proposition for every (character, listed prime, listed weight).
 * Report order is fixed; with threads > 1 the work is distributed but each
 * report lands in its predetermined slot, so output is deterministic.
 * inject_corruption flips one Euler factor (p = 13 when in range, else the
 * smallest odd prime) in the first character's first check; used to test
 * failure paths end to end.
 */
std::vector<VerificationReport> verify_all(std::uint64_t N, std::uint64_t M,
                                           const std::vector<int>& weights,
                                           const std::vector<std::uint64_t>& primes,
                                           bool inject_corruption = false,
                                           int threads = 1);

}  // namespace hlf
