#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "hlf/characters.hpp"
#include "hlf/lfunction.hpp"
#include "hlf/local_factors.hpp"

using C = std::complex<double>;

namespace {

hlf::CharacterZi principal_mod(unsigned N) { return hlf::enumerate_characters(N)[0]; }

/// All-zero eigenvalue table of the correct shape for every prime <= P.
std::map<std::uint64_t, hlf::EigenvalueData<C>> zero_eigenvalues(std::uint64_t P) {
    std::map<std::uint64_t, hlf::EigenvalueData<C>> out;
    for (std::uint64_t p : hlf::primes_up_to(P)) {
        switch (hlf::splitting_of_prime(p)) {
            case hlf::SplittingType::Inert:
                out[p] = hlf::InertEigenvalues<C>{C(0), C(0), C(0)};
                break;
            case hlf::SplittingType::Ramified:
                out[p] = hlf::RamifiedEigenvalues<C>{C(0), C(0), C(0)};
                break;
            case hlf::SplittingType::Split:
                out[p] = hlf::SplitEigenvalues<C>{C(0), C(0), C(0),
                                                  C(0), C(0), C(0)};
                break;
        }
    }
    return out;
}

}  // namespace

TEST_CASE("gamma at classical points") {
    CHECK(std::abs(hlf::gamma(C(1.0, 0.0)) - C(1.0, 0.0)) < 1e-13);
    CHECK(std::abs(hlf::gamma(C(0.5, 0.0)) - C(std::sqrt(std::numbers::pi), 0.0)) <
          1e-13);
    CHECK(std::abs(hlf::gamma(C(5.0, 0.0)) - C(24.0, 0.0)) < 1e-11);
    CHECK(std::abs(hlf::gamma(C(10.0, 0.0)) - C(362880.0, 0.0)) < 362880.0 * 1e-12);
    // Reflection side: gamma(-0.5) = -2 sqrt(pi).
    CHECK(std::abs(hlf::gamma(C(-0.5, 0.0)) - C(-2.0 * std::sqrt(std::numbers::pi), 0.0)) <
          1e-12);
}

TEST_CASE("gamma satisfies the recurrence on random points") {
    std::mt19937 rng(20260822);
    std::uniform_real_distribution<double> dist(-20.0, 20.0);
    int tested = 0;
    while (tested < 100) {
        C s(dist(rng), dist(rng));
        if (std::abs(s) > 20.0) continue;
        // Stay clear of the poles and of the zero-crossing at s = 0.
        if (std::abs(s.imag()) < 0.1 && s.real() < 0.6) continue;
        C lhs = hlf::gamma(s + C(1.0, 0.0));
        C rhs = s * hlf::gamma(s);
        CHECK(std::abs(lhs / rhs - C(1.0, 0.0)) <= 1e-12);
        ++tested;
    }
}

TEST_CASE("gamma poles at non-positive integers") {
    for (double v : {0.0, -1.0, -2.0, -7.0})
        CHECK_THROWS_AS(hlf::gamma(C(v, 0.0)), hlf::pole_error);
    CHECK_NOTHROW(hlf::gamma(C(-1.5, 0.0)));
}

TEST_CASE("reflection map") {
    CHECK(hlf::reflect(C(13.0, 0.0), 10) == C(4.0, 0.0));
    C s(3.25, -1.5);
    CHECK(hlf::reflect(hlf::reflect(s, 8), 8) == s);
    const int k = 9;
    C fixed(k - 1.5, 0.0);
    CHECK(hlf::reflect(fixed, k) == fixed);
}

TEST_CASE("value-with-error arithmetic") {
    hlf::ValueWithError a{C(2.0, 0.0), 0.1}, b{C(3.0, 0.0), 0.2};
    hlf::ValueWithError p = a.mul(b);
    CHECK(p.value == C(6.0, 0.0));
    CHECK(p.abs_err == doctest::Approx(2.0 * 0.2 + 3.0 * 0.1 + 0.1 * 0.2));
    hlf::ValueWithError q = a.div(b);
    CHECK(std::abs(q.value - C(2.0 / 3.0, 0.0)) < 1e-15);
    CHECK(q.abs_err == doctest::Approx((2.0 * 0.2 + 3.0 * 0.1) / (3.0 * (3.0 - 0.2))));
    // Dividing by a value not resolved away from zero yields an unbounded error.
    hlf::ValueWithError fuzzy{C(0.05, 0.0), 0.1};
    CHECK(std::isinf(a.div(fuzzy).abs_err));
    // Dividing by an exact zero is a pole.
    hlf::ValueWithError zero{C(0.0, 0.0), 0.0};
    CHECK_THROWS_AS(a.div(zero), hlf::pole_error);
    hlf::ValueWithError sc = a.scaled(C(0.0, 2.0));
    CHECK(sc.value == C(0.0, 4.0));
    CHECK(sc.abs_err == doctest::Approx(0.2));
}

TEST_CASE("possible pole metadata only for principal characters") {
    auto chars = hlf::enumerate_characters(5u);
    hlf::LFunctionSpec principal{10, 5, chars[0], 1, {}};
    CHECK(principal.possible_poles() == std::vector<int>{10, 9, 8, 7});
    hlf::LFunctionSpec twisted{10, 5, chars[3], 1, {}};
    CHECK(twisted.possible_poles().empty());
}

TEST_CASE("spec validation catches gaps and shape mismatches") {
    hlf::CharacterZi chi = principal_mod(1);
    hlf::LFunctionSpec missing{10, 1, chi, 10, {}};
    CHECK_THROWS_AS(missing.validate(), std::domain_error);
    auto table = zero_eigenvalues(10);
    table[3] = hlf::SplitEigenvalues<C>{C(0), C(0), C(0), C(0), C(0), C(0)};
    hlf::LFunctionSpec wrong_shape{10, 1, chi, 10, table};
    CHECK_THROWS_AS(wrong_shape.validate(), std::domain_error);
    hlf::LFunctionSpec ok{10, 1, chi, 10, zero_eigenvalues(10)};
    CHECK_NOTHROW(ok.validate());
}

TEST_CASE("empty product and fully vanishing character give exactly 1") {
    hlf::LFunctionSpec trivial{10, 1, principal_mod(1), 1, {}};
    hlf::ZValueReport r = hlf::z_value(trivial, C(13.0, 0.0));
    CHECK(r.value == C(1.0, 0.0));

    // Principal character mod 30 kills every prime up to 5.
    hlf::LFunctionSpec killed{10, 30, principal_mod(30), 5, zero_eigenvalues(5)};
    hlf::ZValueReport rk = hlf::z_value(killed, C(13.0, 0.0));
    CHECK(rk.value == C(1.0, 0.0));
}

TEST_CASE("all-zero eigenvalues reduce to the closed inert product") {
    const int k = 10;
    const std::uint64_t P = 200;
    hlf::LFunctionSpec spec{k, 1, principal_mod(1), P, zero_eigenvalues(P)};
    for (C s : {C(12.5, 0.0), C(13.0, 2.0), C(14.25, -3.5)}) {
        hlf::ZValueReport r = hlf::z_value(spec, s);
        C closed(1.0, 0.0);
        for (std::uint64_t p : hlf::primes_up_to(P)) {
            if (hlf::splitting_of_prime(p) != hlf::SplittingType::Inert) continue;
            C lin = C(1.0, 0.0) +
                    std::exp((static_cast<double>(k) - 2.0 - s) *
                             std::log(static_cast<double>(p)));
            closed /= lin * lin;
        }
        CHECK(std::abs(r.value - closed) <= 1e-12 * std::abs(closed));
        CHECK(r.prime_cutoff == P);
        CHECK(r.last_factor_deviation >= 0.0);
        CHECK(r.last_factor_deviation < 1e-3);
    }
}

TEST_CASE("z_value is bit-identical across thread counts") {
    const std::uint64_t P = 500;
    hlf::LFunctionSpec spec{10, 1, principal_mod(1), P, zero_eigenvalues(P)};
    C s(12.75, 1.25);
    hlf::ZValueReport a = hlf::z_value(spec, s, 1);
    hlf::ZValueReport b = hlf::z_value(spec, s, 4);
    hlf::ZValueReport c = hlf::z_value(spec, s, 13);
    CHECK(a.value == b.value);
    CHECK(a.value == c.value);
    CHECK(a.last_factor_deviation == b.last_factor_deviation);
}

TEST_CASE("z_value rejects points outside the declared region") {
    hlf::LFunctionSpec spec{10, 1, principal_mod(1), 10, zero_eigenvalues(10)};
    CHECK_THROWS_AS(hlf::z_value(spec, C(11.0, 0.0)), std::domain_error);
    CHECK_NOTHROW(hlf::z_value(spec, C(11.01, 0.0)));
}

TEST_CASE("star prefactor at a classical positive point") {
    hlf::StarPrefactor pre =
        hlf::star_prefactor(10, 1, principal_mod(1), C(13.0, 0.0), 20000);
    CHECK(pre.value.value.real() > 0.0);
    CHECK(std::abs(pre.value.value.imag()) < 1e-12 * pre.value.value.real());
    CHECK(pre.value.abs_err < std::abs(pre.value.value));
    CHECK(pre.common.value.real() > 0.0);
}

TEST_CASE("star prefactor grows along the approach to the edge") {
    const int k = 10;
    double prev = 0.0;
    for (double eps : {0.5, 0.25, 0.125}) {
        hlf::StarPrefactor pre = hlf::star_prefactor(
            k, 1, principal_mod(1), C(static_cast<double>(k) - 1.0 + eps, 0.0), 20000);
        double mag = std::abs(pre.value.value);
        CHECK(mag > prev);
        prev = mag;
    }
}

TEST_CASE("star prefactor region and modulus preconditions") {
    hlf::CharacterZi chi1 = principal_mod(1);
    CHECK_THROWS_AS(hlf::star_prefactor(10, 3, chi1, C(13.0, 0.0), 1000),
                    std::domain_error);
    CHECK_THROWS_AS(hlf::star_prefactor(10, 1, chi1, C(9.0, 0.0), 1000),
                    std::domain_error);
}

TEST_CASE("completion core moves exactly with N^(-4s)") {
    C s(13.0, 0.0);
    hlf::ValueWithError n1 = hlf::completion_common_factor(10, 1, s, 2000);
    hlf::ValueWithError n3 = hlf::completion_common_factor(10, 3, s, 2000);
    double ratio = std::abs(n3.value / n1.value);
    double expected = std::pow(3.0, -4.0 * 13.0);
    CHECK(std::abs(ratio / expected - 1.0) < 1e-12);
}

TEST_CASE("shared completion core is bit-identical between both completions") {
    const int k = 10;
    const std::uint64_t M = 3000;
    C s(13.5, 1.0);
    hlf::CharacterZi chi = principal_mod(1);
    hlf::StarPrefactor star = hlf::star_prefactor(k, 1, chi, s, M);
    hlf::InnerProductSequence c(8);
    c.c[1] = C(1.0, 0.0);
    c.c[2] = C(0.25, -0.5);
    hlf::DStarValue d = hlf::d_star_value(k, 1, chi, c, s, M);
    CHECK(star.common.value == d.common.value);
    CHECK(star.common.abs_err == d.common.abs_err);
}

TEST_CASE("d-star value degenerate and linear behaviour") {
    const int k = 10;
    C s(13.0, 0.0);
    hlf::CharacterZi chi = principal_mod(1);

    hlf::InnerProductSequence zero(5);
    CHECK(hlf::d_star_value(k, 1, chi, zero, s, 2000).value == C(0.0, 0.0));

    hlf::InnerProductSequence delta(5);
    delta.c[1] = C(1.0, 0.0);
    hlf::DStarValue single = hlf::d_star_value(k, 1, chi, delta, s, 2000);
    CHECK(single.value != C(0.0, 0.0));
    CHECK_FALSE(single.tail_bounded);

    hlf::InnerProductSequence c1(5), c2(5), sum(5);
    for (std::size_t m = 1; m <= 5; ++m) {
        c1.c[m] = C(0.1 * static_cast<double>(m), -0.2);
        c2.c[m] = C(-0.3, 0.05 * static_cast<double>(m));
        sum.c[m] = c1.c[m] + c2.c[m];
    }
    C v1 = hlf::d_star_value(k, 1, chi, c1, s, 2000).value;
    C v2 = hlf::d_star_value(k, 1, chi, c2, s, 2000).value;
    C vs = hlf::d_star_value(k, 1, chi, sum, s, 2000).value;
    CHECK(std::abs(vs - (v1 + v2)) < 1e-9 * (std::abs(v1) + std::abs(v2) + 1.0));

    CHECK_THROWS_AS(hlf::d_star_value(k, 1, chi, delta, C(10.5, 0.0), 2000),
                    std::domain_error);
}
