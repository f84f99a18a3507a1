#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <numbers>

#include "hlf/characters.hpp"
#include "hlf/series.hpp"

using hlf::Cyclotomic;
using hlf::ExactSeries;
using hlf::GaussianInt;

namespace {

hlf::LocalFactorMap<Cyclotomic> one_minus_x_at_primes(std::uint64_t M) {
    hlf::LocalFactorMap<Cyclotomic> m;
    for (std::uint64_t p : hlf::primes_up_to(M))
        m[p] = hlf::Polynomial<Cyclotomic>{{Cyclotomic::one(), -Cyclotomic::one()}};
    return m;
}

}  // namespace

TEST_CASE("zeta series is all ones and theta series alternates") {
    ExactSeries z = hlf::zeta_series(20);
    for (std::uint64_t n = 1; n <= 20; ++n) CHECK(z[n].is_one());
    ExactSeries t = hlf::l_series(hlf::theta(), 12);
    const int expected[] = {1, 0, -1, 0, 1, 0, -1, 0, 1, 0, -1, 0};
    for (std::uint64_t n = 1; n <= 12; ++n)
        CHECK(t[n] == Cyclotomic::integer(expected[n - 1]));
}

TEST_CASE("convolution of zeta with itself counts divisors") {
    ExactSeries z = hlf::zeta_series(30);
    ExactSeries d = hlf::convolve(z, z);
    const long expected[] = {1, 2, 2, 3, 2, 4, 2, 4, 3, 4, 2, 6, 2, 4, 4,
                             5, 2, 6, 2, 6, 4, 4, 2, 8, 3, 4, 4, 6, 2, 8};
    for (std::uint64_t n = 1; n <= 30; ++n)
        CHECK(d[n] == Cyclotomic::integer(expected[n - 1]));
    CHECK(hlf::convolve(z, d).a == hlf::convolve(d, z).a);
}

TEST_CASE("Dirichlet inverse of zeta is the Moebius function") {
    ExactSeries z = hlf::zeta_series(30);
    ExactSeries mu = hlf::invert(z);
    const long expected[] = {1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0, -1, 1, 1,
                             0, -1, 0, -1, 0, 1, 1, -1, 0, 0, 1, 0, 0, -1, -1};
    for (std::uint64_t n = 1; n <= 30; ++n)
        CHECK(mu[n] == Cyclotomic::integer(expected[n - 1]));
    ExactSeries unit = hlf::convolve(z, mu);
    CHECK(unit[1].is_one());
    for (std::uint64_t n = 2; n <= 30; ++n) CHECK(unit[n].is_zero());
}

TEST_CASE("Euler product in reciprocal position reproduces zeta") {
    const std::uint64_t M = 300;
    ExactSeries viaEuler = hlf::from_euler(one_minus_x_at_primes(M), M);
    CHECK(viaEuler.a == hlf::zeta_series(M).a);
    ExactSeries direct = hlf::from_euler_direct(one_minus_x_at_primes(M), M);
    CHECK(direct.a == hlf::invert(hlf::zeta_series(M)).a);
}

TEST_CASE("Euler factors validate their constant term") {
    hlf::LocalFactorMap<Cyclotomic> bad;
    bad[2] = hlf::Polynomial<Cyclotomic>{{Cyclotomic::integer(2)}};
    CHECK_THROWS_AS(hlf::from_euler(bad, 10), std::domain_error);
    hlf::LocalFactorMap<Cyclotomic> misplaced;
    misplaced[1] = hlf::Polynomial<Cyclotomic>{{Cyclotomic::one()}};
    CHECK_THROWS_AS(hlf::from_euler(misplaced, 10), std::domain_error);
}

TEST_CASE("lattice Dedekind series equals zeta times theta L-series") {
    const std::uint64_t M = 500;
    auto chars = hlf::enumerate_characters(1u);
    ExactSeries lhs = hlf::dedekind_lattice(chars[0], M);
    ExactSeries rhs =
        hlf::convolve(hlf::zeta_series(M), hlf::l_series(hlf::theta(), M));
    CHECK(hlf::first_mismatch(lhs, rhs) == std::nullopt);
    CHECK(lhs[1].is_one());
    CHECK(lhs[2].is_one());
    CHECK(lhs[3].is_zero());
    CHECK(lhs[5] == Cyclotomic::integer(2));
    CHECK(lhs[25] == Cyclotomic::integer(3));
}

TEST_CASE("twisted lattice series against brute-force lattice sums") {
    const std::uint64_t M = 200;
    auto chars = hlf::enumerate_characters(5u);
    for (size_t idx : {size_t(0), size_t(3), size_t(7)}) {
        hlf::CharacterZi omega = chars[idx].mul(chars[idx].bar_twist());
        ExactSeries got = hlf::dedekind_lattice(omega, M);
        std::vector<Cyclotomic> brute(M + 1, Cyclotomic::zero());
        const long R = static_cast<long>(std::sqrt(double(M))) + 1;
        for (long x = -R; x <= R; ++x)
            for (long y = -R; y <= R; ++y) {
                if (x == 0 && y == 0) continue;
                long n = x * x + y * y;
                if (n < 1 || static_cast<std::uint64_t>(n) > M) continue;
                brute[n] += omega.eval(GaussianInt(x, y));
            }
        for (std::uint64_t n = 1; n <= M; ++n) {
            brute[n].scale(mpq_class(1, 4));
            CHECK(brute[n] == got[n]);
        }
    }
}

TEST_CASE("unit-sensitive characters are rejected by the lattice sum") {
    auto chars = hlf::enumerate_characters(2u);
    // The nontrivial character mod 2 sends i to -1, so the quarter-sum is
    // ill-defined for it.
    CHECK_THROWS_AS(hlf::dedekind_lattice(chars[1], 10), std::domain_error);
}

TEST_CASE("numeric evaluation of zeta(2) with a rigorous tail") {
    const std::uint64_t M = 2000;
    hlf::EvalResult r = hlf::evaluate(hlf::zeta_series(M), {2.0, 0.0}, 2.0, 1.0);
    const double zeta2 = std::numbers::pi * std::numbers::pi / 6.0;
    CHECK(std::abs(r.value - zeta2) <= r.tail_bound);
    CHECK(r.tail_bound < 0.05);
    CHECK(r.tail_bound > 0.0);
}

TEST_CASE("evaluate region preconditions") {
    ExactSeries z = hlf::zeta_series(10);
    CHECK_THROWS_AS(hlf::evaluate(z, {2.0, 0.0}, 0.5, 1.0), std::domain_error);
    CHECK_THROWS_AS(hlf::evaluate(z, {1.2, 0.0}, 1.5, 1.0), std::domain_error);
    CHECK_THROWS_AS(hlf::evaluate(z, {2.0, 0.0}, 1.5, -1.0), std::domain_error);
}

TEST_CASE("tail bound dominates the actual divisor-weighted tail") {
    const std::uint64_t M = 100, Far = 20000;
    for (double sigma : {1.5, 2.0, 3.0}) {
        double bound = hlf::dirichlet_tail_bound(sigma, M, 1.0);
        ExactSeries z = hlf::zeta_series(Far);
        ExactSeries d = hlf::convolve(z, z);
        double partial = 0.0;
        for (std::uint64_t n = M + 1; n <= Far; ++n)
            partial += d[n].rational_part().get_d() * std::pow(double(n), -sigma);
        CHECK(partial < bound);
    }
}

TEST_CASE("first_mismatch pinpoints a corrupted coefficient") {
    ExactSeries a = hlf::zeta_series(50), b = hlf::zeta_series(50);
    CHECK(hlf::first_mismatch(a, b) == std::nullopt);
    b[37] += Cyclotomic::one();
    CHECK(hlf::first_mismatch(a, b) == 37);
}

TEST_CASE("fixed tree summation matches plain summation") {
    std::vector<std::complex<double>> terms;
    std::complex<double> plain = 0.0;
    for (int j = 1; j <= 1000; ++j) {
        std::complex<double> t(1.0 / j, -0.5 / (j * j));
        terms.push_back(t);
        plain += t;
    }
    std::complex<double> tree = hlf::fixed_tree_sum(terms);
    CHECK(std::abs(tree - plain) < 1e-12);
    CHECK(hlf::fixed_tree_sum({}) == std::complex<double>(0.0, 0.0));
}

TEST_CASE("complex projection agrees with exact coefficients") {
    auto chars = hlf::enumerate_characters(3u);
    ExactSeries e = hlf::l_series(chars[1].restrict_to_Z(), 40);
    hlf::ComplexSeries c = hlf::to_complex_series(e);
    for (std::uint64_t n = 1; n <= 40; ++n)
        CHECK(std::abs(c[n] - e[n].to_complex()) < 1e-15);
}
