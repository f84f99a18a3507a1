#include "hlf/series.hpp"

#include <cmath>

namespace hlf {

ExactSeries l_series(const RationalCharacter& psi, std::uint64_t M) {
    ExactSeries out(M);
    // Value cache per exponent of the character's root of unity.
    std::vector<Cyclotomic> roots(psi.order_root());
    for (unsigned e = 0; e < psi.order_root(); ++e)
        roots[e] = Cyclotomic::root_of_unity(psi.order_root(), static_cast<long>(e));
    for (std::uint64_t n = 1; n <= M; ++n) {
        auto e = psi.eval_exponent(mpz_class(static_cast<unsigned long>(n)));
        if (e) out[n] = roots[*e];
    }
    return out;
}

ExactSeries zeta_series(std::uint64_t M) {
    ExactSeries out(M);
    for (std::uint64_t n = 1; n <= M; ++n) out[n] = Cyclotomic::one();
    return out;
}

ExactSeries dedekind_lattice(const CharacterZi& omega, std::uint64_t M) {
    auto unit_exp = omega.eval_exponent(GaussianInt(0, 1));
    if (!unit_exp || *unit_exp != 0)
        throw std::domain_error(
            "dedekind_lattice: character is nontrivial on the units of Z[i] "
            "(omega(i) != 1), so the quarter-sum over lattice points is not "
            "well defined");

    const unsigned E = omega.order_root();
    // Integer counts per (norm, value exponent); the exact coefficients are
    // assembled once at the end.
    std::vector<long> counts(static_cast<size_t>(M + 1) * E, 0);
    const long R = static_cast<long>(std::sqrt(static_cast<double>(M))) + 1;
    for (long a = -R; a <= R; ++a) {
        for (long b = -R; b <= R; ++b) {
            if (a == 0 && b == 0) continue;
            long n2 = a * a + b * b;
            std::uint64_t n = static_cast<std::uint64_t>(n2);
            if (n > M) continue;
            auto e = omega.eval_exponent(GaussianInt(a, b));
            if (e) ++counts[static_cast<size_t>(n) * E + *e];
        }
    }

    ExactSeries out(M);
    const mpq_class quarter(1, 4);
    for (std::uint64_t n = 1; n <= M; ++n) {
        std::vector<mpq_class> weights(E);
        bool any = false;
        for (unsigned e = 0; e < E; ++e) {
            long c = counts[static_cast<size_t>(n) * E + e];
            if (c != 0) {
                weights[e] = mpq_class(c) * quarter;
                any = true;
            }
        }
        if (any) out[n] = Cyclotomic::from_exponent_weights(E, std::move(weights));
    }
    return out;
}

ComplexSeries to_complex_series(const ExactSeries& x) {
    ComplexSeries out(x.bound());
    for (std::uint64_t n = 1; n <= x.bound(); ++n) out[n] = x[n].to_complex();
    return out;
}

std::complex<double> fixed_tree_sum(std::vector<std::complex<double>> terms) {
    if (terms.empty()) return {0.0, 0.0};
    // Pairwise halving; the combination tree depends only on the term count.
    size_t n = terms.size();
    while (n > 1) {
        size_t half = n / 2;
        for (size_t i = 0; i < half; ++i) terms[i] = terms[2 * i] + terms[2 * i + 1];
        if (n % 2 == 1) {
            terms[half] = terms[n - 1];
            n = half + 1;
        } else {
            n = half;
        }
    }
    return terms[0];
}

double dirichlet_tail_bound(double sigma, std::uint64_t M, double coeff_bound) {
    if (!(sigma > 1.0)) throw std::domain_error("dirichlet_tail_bound: sigma must exceed 1");
    double m = static_cast<double>(M);
    double head = std::pow(m, 1.0 - sigma) / (sigma - 1.0);
    return coeff_bound * sigma * head * (std::log(m) + 1.0 + 1.0 / (sigma - 1.0));
}

}  // namespace hlf
