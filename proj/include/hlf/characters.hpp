#pragma once

#include <optional>
#include <vector>

#include "hlf/cyclotomic.hpp"
#include "hlf/gaussian.hpp"

namespace hlf {

/**
 * The unit group of Z[i]/N together with a generator decomposition.
 *
 * Elements are enumerated by brute force over the N^2 residues (a, b) with
 * 0 <= a, b < N; a residue is a unit exactly when its Gaussian gcd with N is
 * a unit.  Generators are found greedily: each step adjoins the element of
 * maximal order relative to the subgroup generated so far (ties broken by
 * smallest residue), so every element has a unique exponent tuple and the
 * relative orders multiply to the element count.
 */
struct UnitGroup {
    unsigned modulus = 1;
    /// Unit residues (a, b), ascending by a*N + b.
    std::vector<std::pair<unsigned, unsigned>> elements;
    /// Greedy generators with their relative orders.
    std::vector<std::pair<std::pair<unsigned, unsigned>, unsigned>> generators;
    /// lcm of all element orders.
    unsigned exponent = 1;

    /// Exponent tuple of each element with respect to the generators.
    std::vector<std::vector<unsigned>> decomposition;
    /// For each generator g with relative order r, the element index of g^r.
    std::vector<unsigned> generator_power_index;

    size_t size() const { return elements.size(); }
    /// Element index of a residue, or nullopt for non-units.
    std::optional<unsigned> element_index(unsigned a, unsigned b) const;

private:
    friend UnitGroup unit_group(unsigned N);
    std::vector<int> residue_to_element_;  // size N*N, -1 for non-units
};

UnitGroup unit_group(unsigned N);

class RationalCharacter;

/**
 * Dirichlet character on (Z[i]/N)^*, extended by zero to non-units.
 *
 * Values are stored as exact exponents of a fixed primitive root of unity of
 * order order_root(); evaluation returns exact cyclotomic scalars.
 */
class CharacterZi {
public:
    unsigned modulus() const { return modulus_; }
    unsigned order_root() const { return order_root_; }

    /// Exact value at any Gaussian integer (zero for residues sharing a
    /// factor with the modulus).
    Cyclotomic eval(const GaussianInt& alpha) const;
    /// Exponent e with value zeta_order_root^e, or nullopt when the value is 0.
    std::optional<unsigned> eval_exponent(const GaussianInt& alpha) const;

    /// alpha -> chi(conj(alpha)).
    CharacterZi bar_twist() const;
    /// Pointwise product; moduli must agree.
    CharacterZi mul(const CharacterZi& other) const;
    CharacterZi pow(unsigned e) const;

    /// Restriction to rational integers, n -> chi(n + 0i).
    RationalCharacter restrict_to_Z() const;

    bool is_principal() const;
    /// Order in the dual group.
    unsigned order() const;

    bool operator==(const CharacterZi& other) const;

    /// Raw value table: exponent at residue a*N + b, -1 encoding the value 0.
    const std::vector<int>& exponent_table() const { return exp_; }

    CharacterZi(unsigned modulus, unsigned order_root, std::vector<int> exponents);

private:
    unsigned modulus_;
    unsigned order_root_;
    std::vector<int> exp_;
};

/// All characters mod N, deterministically ordered by generator-exponent
/// tuples (lexicographic); the first entry is the principal character.
std::vector<CharacterZi> enumerate_characters(unsigned N);
std::vector<CharacterZi> enumerate_characters(const UnitGroup& group);

/**
 * Dirichlet character on Z, values exact roots of unity or zero.
 * Products of characters with different moduli live modulo the lcm.
 */
class RationalCharacter {
public:
    RationalCharacter(unsigned modulus, unsigned order_root, std::vector<int> exponents);

    unsigned modulus() const { return modulus_; }
    unsigned order_root() const { return order_root_; }

    Cyclotomic eval(const mpz_class& n) const;
    Cyclotomic eval(long n) const { return eval(mpz_class(n)); }
    std::optional<unsigned> eval_exponent(const mpz_class& n) const;

    RationalCharacter mul(const RationalCharacter& other) const;
    RationalCharacter pow(unsigned e) const;
    bool is_principal() const;

    bool operator==(const RationalCharacter& other) const;

    const std::vector<int>& exponent_table() const { return exp_; }

private:
    unsigned modulus_;
    unsigned order_root_;
    std::vector<int> exp_;
};

/// The quadratic character mod 4 (value -1 at 3 mod 4, 0 at even n).
RationalCharacter theta();

}  // namespace hlf
