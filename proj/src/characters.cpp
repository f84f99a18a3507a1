#include "hlf/characters.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace hlf {

namespace {

struct ResidueRing {
    unsigned N;
    unsigned idx(unsigned a, unsigned b) const { return a * N + b; }
    unsigned mul(unsigned x, unsigned y) const {
        unsigned long a1 = x / N, b1 = x % N, a2 = y / N, b2 = y % N;
        unsigned long re = (a1 * a2 % N + N - b1 * b2 % N) % N;
        unsigned long im = (a1 * b2 + b1 * a2) % N;
        return static_cast<unsigned>(re * N + im);
    }
    unsigned identity() const { return N == 1 ? 0u : idx(1, 0); }
};

}  // namespace

std::optional<unsigned> UnitGroup::element_index(unsigned a, unsigned b) const {
    int e = residue_to_element_.at(a * modulus + b);
    if (e < 0) return std::nullopt;
    return static_cast<unsigned>(e);
}

UnitGroup unit_group(unsigned N) {
    if (N == 0) throw std::domain_error("unit_group: modulus must be positive");
    UnitGroup g;
    g.modulus = N;
    g.residue_to_element_.assign(static_cast<size_t>(N) * N, -1);

    ResidueRing ring{N};
    GaussianInt modulus_g(static_cast<long>(N), 0);
    for (unsigned a = 0; a < N; ++a) {
        for (unsigned b = 0; b < N; ++b) {
            bool unit = N == 1 || gcd(GaussianInt(a, b), modulus_g).is_unit();
            if (unit) {
                g.residue_to_element_[ring.idx(a, b)] = static_cast<int>(g.elements.size());
                g.elements.emplace_back(a, b);
            }
        }
    }

    const size_t count = g.elements.size();
    auto elem_of_residue = [&](unsigned residue) {
        int e = g.residue_to_element_[residue];
        if (e < 0) throw std::logic_error("unit_group: product left the unit group");
        return static_cast<unsigned>(e);
    };
    auto residue_of = [&](unsigned elem) {
        auto [a, b] = g.elements[elem];
        return ring.idx(a, b);
    };
    const unsigned id_elem = elem_of_residue(ring.identity());

    // Element orders, for the group exponent.
    std::vector<unsigned> order(count, 0);
    unsigned long exponent = 1;
    for (unsigned e = 0; e < count; ++e) {
        unsigned cur = residue_of(e);
        unsigned ord = 1;
        while (elem_of_residue(cur) != id_elem) {
            cur = ring.mul(cur, residue_of(e));
            ++ord;
        }
        order[e] = ord;
        exponent = std::lcm(exponent, static_cast<unsigned long>(ord));
    }
    g.exponent = static_cast<unsigned>(exponent);

    // Greedy generator decomposition.
    std::vector<char> in_subgroup(count, 0);
    in_subgroup[id_elem] = 1;
    std::vector<unsigned> subgroup = {id_elem};
    g.decomposition.assign(count, {});
    size_t generator_count = 0;

    while (subgroup.size() < count) {
        unsigned best = 0, best_order = 0;
        for (unsigned e = 0; e < count; ++e) {
            if (in_subgroup[e]) continue;
            unsigned cur = residue_of(e);
            unsigned rel = 1;
            while (!in_subgroup[elem_of_residue(cur)]) {
                cur = ring.mul(cur, residue_of(e));
                ++rel;
            }
            if (rel > best_order) {
                best_order = rel;
                best = e;
            }
        }

        g.generators.emplace_back(g.elements[best], best_order);
        ++generator_count;
        for (auto& tuple : g.decomposition) tuple.resize(generator_count, 0);

        std::vector<unsigned> previous = subgroup;
        unsigned power = residue_of(best);
        for (unsigned e = 1; e < best_order; ++e) {
            for (unsigned x : previous) {
                unsigned elem = elem_of_residue(ring.mul(residue_of(x), power));
                in_subgroup[elem] = 1;
                subgroup.push_back(elem);
                g.decomposition[elem] = g.decomposition[x];
                g.decomposition[elem][generator_count - 1] = e;
            }
            power = ring.mul(power, residue_of(best));
        }
        // power now holds g^best_order, an element of the previous subgroup.
        g.generator_power_index.push_back(elem_of_residue(power));
    }
    if (subgroup.size() != count) throw std::logic_error("unit_group: decomposition incomplete");
    return g;
}

CharacterZi::CharacterZi(unsigned modulus, unsigned order_root, std::vector<int> exponents)
    : modulus_(modulus), order_root_(order_root), exp_(std::move(exponents)) {
    if (modulus_ == 0 || order_root_ == 0)
        throw std::domain_error("CharacterZi: modulus and order must be positive");
    if (exp_.size() != static_cast<size_t>(modulus_) * modulus_)
        throw std::domain_error("CharacterZi: exponent table has the wrong size");
}

namespace {

unsigned reduce_mod(const mpz_class& v, unsigned N) {
    return static_cast<unsigned>(mpz_fdiv_ui(v.get_mpz_t(), N));
}

}  // namespace

std::optional<unsigned> CharacterZi::eval_exponent(const GaussianInt& alpha) const {
    unsigned a = reduce_mod(alpha.re(), modulus_);
    unsigned b = reduce_mod(alpha.im(), modulus_);
    int e = exp_[static_cast<size_t>(a) * modulus_ + b];
    if (e < 0) return std::nullopt;
    return static_cast<unsigned>(e);
}

Cyclotomic CharacterZi::eval(const GaussianInt& alpha) const {
    auto e = eval_exponent(alpha);
    if (!e) return Cyclotomic::zero();
    return Cyclotomic::root_of_unity(order_root_, static_cast<long>(*e));
}

CharacterZi CharacterZi::bar_twist() const {
    std::vector<int> out(exp_.size());
    for (unsigned a = 0; a < modulus_; ++a) {
        for (unsigned b = 0; b < modulus_; ++b) {
            unsigned cb = (modulus_ - b) % modulus_;
            out[static_cast<size_t>(a) * modulus_ + b] =
                exp_[static_cast<size_t>(a) * modulus_ + cb];
        }
    }
    return CharacterZi(modulus_, order_root_, std::move(out));
}

CharacterZi CharacterZi::mul(const CharacterZi& other) const {
    if (modulus_ != other.modulus_)
        throw std::domain_error("CharacterZi::mul: modulus mismatch");
    unsigned L = static_cast<unsigned>(std::lcm(order_root_, other.order_root_));
    unsigned s1 = L / order_root_, s2 = L / other.order_root_;
    std::vector<int> out(exp_.size());
    for (size_t j = 0; j < exp_.size(); ++j) {
        if (exp_[j] < 0 || other.exp_[j] < 0)
            out[j] = -1;
        else
            out[j] = static_cast<int>(
                (static_cast<unsigned long>(exp_[j]) * s1 +
                 static_cast<unsigned long>(other.exp_[j]) * s2) %
                L);
    }
    return CharacterZi(modulus_, L, std::move(out));
}

CharacterZi CharacterZi::pow(unsigned e) const {
    std::vector<int> out(exp_.size());
    for (size_t j = 0; j < exp_.size(); ++j) {
        if (exp_[j] < 0)
            out[j] = -1;
        else
            out[j] = static_cast<int>(static_cast<unsigned long>(exp_[j]) * e % order_root_);
    }
    return CharacterZi(modulus_, order_root_, std::move(out));
}

RationalCharacter CharacterZi::restrict_to_Z() const {
    std::vector<int> out(modulus_);
    for (unsigned n = 0; n < modulus_; ++n)
        out[n] = exp_[static_cast<size_t>(n) * modulus_ + 0];
    return RationalCharacter(modulus_, order_root_, std::move(out));
}

bool CharacterZi::is_principal() const {
    for (int e : exp_)
        if (e > 0) return false;
    return true;
}

unsigned CharacterZi::order() const {
    unsigned long g = order_root_;
    for (int e : exp_)
        if (e > 0) g = std::gcd(g, static_cast<unsigned long>(e));
    return static_cast<unsigned>(order_root_ / g);
}

bool CharacterZi::operator==(const CharacterZi& other) const {
    if (modulus_ != other.modulus_) return false;
    for (size_t j = 0; j < exp_.size(); ++j) {
        bool z1 = exp_[j] < 0, z2 = other.exp_[j] < 0;
        if (z1 != z2) return false;
        if (z1) continue;
        // Compare as roots of unity of possibly different declared orders.
        unsigned long L = std::lcm(order_root_, other.order_root_);
        if (static_cast<unsigned long>(exp_[j]) * (L / order_root_) % L !=
            static_cast<unsigned long>(other.exp_[j]) * (L / other.order_root_) % L)
            return false;
    }
    return true;
}

std::vector<CharacterZi> enumerate_characters(unsigned N) {
    return enumerate_characters(unit_group(N));
}

std::vector<CharacterZi> enumerate_characters(const UnitGroup& group) {
    const unsigned N = group.modulus;
    const unsigned E = group.exponent;

    // Character = exponent b_t for each generator; values b_t solve
    // r_t * b_t = a_t (mod E) where a_t is the already-determined value
    // exponent of g_t^{r_t}.  All r_t solutions are enumerated, latest
    // generator fastest, which orders the dual lexicographically.
    std::vector<std::vector<unsigned>> assignments = {{}};
    for (size_t t = 0; t < group.generators.size(); ++t) {
        unsigned r = group.generators[t].second;
        const auto& power_tuple = group.decomposition[group.generator_power_index[t]];
        std::vector<std::vector<unsigned>> next;
        next.reserve(assignments.size() * r);
        for (const auto& partial : assignments) {
            unsigned long a = 0;
            for (size_t j = 0; j < t; ++j)
                a = (a + static_cast<unsigned long>(partial[j]) * power_tuple[j]) % E;
            if (a % r != 0)
                throw std::logic_error("enumerate_characters: non-extendable partial character");
            unsigned long base = a / r;
            for (unsigned k = 0; k < r; ++k) {
                auto extended = partial;
                extended.push_back(
                    static_cast<unsigned>((base + static_cast<unsigned long>(k) * (E / r)) % E));
                next.push_back(std::move(extended));
            }
        }
        assignments = std::move(next);
    }

    std::vector<CharacterZi> out;
    out.reserve(assignments.size());
    for (const auto& bs : assignments) {
        std::vector<int> table(static_cast<size_t>(N) * N, -1);
        for (size_t e = 0; e < group.elements.size(); ++e) {
            const auto& tuple = group.decomposition[e];
            unsigned long v = 0;
            for (size_t t = 0; t < bs.size(); ++t)
                v = (v + static_cast<unsigned long>(bs[t]) * tuple[t]) % E;
            auto [a, b] = group.elements[e];
            table[static_cast<size_t>(a) * N + b] = static_cast<int>(v);
        }
        out.emplace_back(N, E, std::move(table));
    }
    return out;
}

RationalCharacter::RationalCharacter(unsigned modulus, unsigned order_root,
                                     std::vector<int> exponents)
    : modulus_(modulus), order_root_(order_root), exp_(std::move(exponents)) {
    if (modulus_ == 0 || order_root_ == 0)
        throw std::domain_error("RationalCharacter: modulus and order must be positive");
    if (exp_.size() != modulus_)
        throw std::domain_error("RationalCharacter: exponent table has the wrong size");
}

std::optional<unsigned> RationalCharacter::eval_exponent(const mpz_class& n) const {
    int e = exp_[reduce_mod(n, modulus_)];
    if (e < 0) return std::nullopt;
    return static_cast<unsigned>(e);
}

Cyclotomic RationalCharacter::eval(const mpz_class& n) const {
    auto e = eval_exponent(n);
    if (!e) return Cyclotomic::zero();
    return Cyclotomic::root_of_unity(order_root_, static_cast<long>(*e));
}

RationalCharacter RationalCharacter::mul(const RationalCharacter& other) const {
    unsigned M = static_cast<unsigned>(std::lcm(modulus_, other.modulus_));
    unsigned L = static_cast<unsigned>(std::lcm(order_root_, other.order_root_));
    unsigned s1 = L / order_root_, s2 = L / other.order_root_;
    std::vector<int> out(M);
    for (unsigned n = 0; n < M; ++n) {
        int e1 = exp_[n % modulus_], e2 = other.exp_[n % other.modulus_];
        if (e1 < 0 || e2 < 0)
            out[n] = -1;
        else
            out[n] = static_cast<int>((static_cast<unsigned long>(e1) * s1 +
                                       static_cast<unsigned long>(e2) * s2) %
                                      L);
    }
    return RationalCharacter(M, L, std::move(out));
}

RationalCharacter RationalCharacter::pow(unsigned e) const {
    std::vector<int> out(exp_.size());
    for (size_t j = 0; j < exp_.size(); ++j) {
        if (exp_[j] < 0)
            out[j] = -1;
        else
            out[j] = static_cast<int>(static_cast<unsigned long>(exp_[j]) * e % order_root_);
    }
    return RationalCharacter(modulus_, order_root_, std::move(out));
}

bool RationalCharacter::is_principal() const {
    for (int e : exp_)
        if (e > 0) return false;
    return true;
}

bool RationalCharacter::operator==(const RationalCharacter& other) const {
    if (modulus_ != other.modulus_) return false;
    for (size_t j = 0; j < exp_.size(); ++j) {
        bool z1 = exp_[j] < 0, z2 = other.exp_[j] < 0;
        if (z1 != z2) return false;
        if (z1) continue;
        unsigned long L = std::lcm(order_root_, other.order_root_);
        if (static_cast<unsigned long>(exp_[j]) * (L / order_root_) % L !=
            static_cast<unsigned long>(other.exp_[j]) * (L / other.order_root_) % L)
            return false;
    }
    return true;
}

RationalCharacter theta() {
    // Quadratic character mod 4: value 1 at 1, -1 at 3, 0 at even residues.
    return RationalCharacter(4, 2, {-1, 0, -1, 1});
}

}  // namespace hlf
