#include "hlf/lfunction.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <thread>

namespace hlf {

namespace {

// Lanczos coefficients for g = 7, 15 terms, generated by the Godfrey matrix
// method at 80-digit working precision and rounded once to double.
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[15] = {
    2.5066282746310007,
    1695.7850830980863,
    -3156.1939623328026,
    1933.4211154538427,
    -442.70822578211624,
    31.35126016837154,
    -0.34734606769141185,
    2.529470249324602e-05,
    -8.609225930621041e-07,
    2.0953752576189907e-06,
    -2.1551377396971265e-06,
    1.5156321191152478e-06,
    -7.297618906076115e-07,
    2.1529754391852074e-07,
    -2.919235742110133e-08,
};

std::complex<double> gamma_positive_half(std::complex<double> z) {
    // Valid for Re(z) >= 1/2.
    std::complex<double> base = z + (kLanczosG - 0.5);
    std::complex<double> s{kLanczos[0], 0.0};
    for (int i = 1; i < 15; ++i) s += kLanczos[i] / (z + static_cast<double>(i - 1));
    return std::pow(base, z - 0.5) * std::exp(-base) * s;
}

bool is_nonpositive_integer(std::complex<double> z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

/// Pairwise product over a fixed tree; bit-identical regardless of how the
/// factor values were produced.
std::complex<double> fixed_tree_product(std::vector<std::complex<double>> f) {
    if (f.empty()) return {1.0, 0.0};
    while (f.size() > 1) {
        size_t half = f.size() / 2;
        for (size_t i = 0; i < half; ++i) f[i] = f[2 * i] * f[2 * i + 1];
        if (f.size() % 2 == 1) {
            f[half] = f.back();
            f.resize(half + 1);
        } else {
            f.resize(half);
        }
    }
    return f[0];
}

}  // namespace

std::complex<double> gamma(std::complex<double> s) {
    if (is_nonpositive_integer(s))
        throw pole_error("gamma: pole at a non-positive integer");
    if (s.real() < 0.5) {
        const double pi = std::numbers::pi;
        std::complex<double> sinpis = std::sin(pi * s);
        if (sinpis == std::complex<double>(0.0, 0.0))
            throw pole_error("gamma: reflection hit a zero of sin(pi s)");
        return pi / (sinpis * gamma_positive_half(1.0 - s));
    }
    return gamma_positive_half(s);
}

ValueWithError ValueWithError::mul(const ValueWithError& o) const {
    ValueWithError r;
    r.value = value * o.value;
    r.abs_err = std::abs(value) * o.abs_err + std::abs(o.value) * abs_err +
                abs_err * o.abs_err;
    return r;
}

ValueWithError ValueWithError::div(const ValueWithError& o) const {
    double b = std::abs(o.value);
    if (b == 0.0) throw pole_error("division by a zero denominator value");
    ValueWithError r;
    r.value = value / o.value;
    if (o.abs_err < b) {
        // |a'/b' - a/b| <= (|a| eb + |b| ea) / (|b| (|b| - eb))
        r.abs_err = (std::abs(value) * o.abs_err + b * abs_err) / (b * (b - o.abs_err));
    } else {
        // Denominator not resolved away from zero: the bound is vacuous.
        r.abs_err = std::numeric_limits<double>::infinity();
    }
    return r;
}

ValueWithError ValueWithError::scaled(std::complex<double> exact) const {
    return {value * exact, abs_err * std::abs(exact)};
}

ValueWithError from_eval(const EvalResult& r) { return {r.value, r.tail_bound}; }

void LFunctionSpec::validate() const {
    if (k < 0) throw std::domain_error("LFunctionSpec: weight must be >= 0");
    if (modulus < 1) throw std::domain_error("LFunctionSpec: modulus must be >= 1");
    if (chi.modulus() != modulus)
        throw std::domain_error("LFunctionSpec: character modulus mismatch");
    if (prime_cutoff < 1)
        throw std::domain_error("LFunctionSpec: prime cutoff must be >= 1");
    for (std::uint64_t p : primes_up_to(prime_cutoff)) {
        auto it = eigenvalues.find(p);
        if (it == eigenvalues.end())
            throw std::domain_error("LFunctionSpec: missing eigenvalue data at prime " +
                                    std::to_string(p));
        if (eigenvalue_shape(it->second) != splitting_of_prime(p))
            throw std::domain_error(
                "LFunctionSpec: eigenvalue shape does not match the splitting of " +
                std::to_string(p));
    }
}

std::vector<int> LFunctionSpec::possible_poles() const {
    if (!chi.is_principal()) return {};
    return {k, k - 1, k - 2, k - 3};
}

ZValueReport z_value(const LFunctionSpec& spec, std::complex<double> s, int threads) {
    spec.validate();
    if (!(s.real() > spec.k + 1))
        throw std::domain_error("z_value: Re(s) must exceed k+1");
    std::vector<std::uint64_t> primes = primes_up_to(spec.prime_cutoff);
    ZValueReport report;
    report.prime_cutoff = spec.prime_cutoff;
    if (primes.empty()) return report;

    std::vector<std::complex<double>> factor_values(primes.size());
    auto eval_one = [&](size_t i) {
        std::uint64_t p = primes[i];
        std::complex<double> chi_p =
            spec.chi.eval(GaussianInt(static_cast<long>(p), 0)).to_complex();
        Polynomial<std::complex<double>> f =
            full_local_factor<std::complex<double>>(p, chi_p, spec.k,
                                                    spec.eigenvalues.at(p));
        std::complex<double> t = std::exp(-s * std::log(static_cast<double>(p)));
        factor_values[i] = f.eval(t);
    };
    if (threads <= 1) {
        for (size_t i = 0; i < primes.size(); ++i) eval_one(i);
    } else {
        std::atomic<size_t> next{0};
        auto worker = [&] {
            for (size_t i = next.fetch_add(1); i < primes.size(); i = next.fetch_add(1))
                eval_one(i);
        };
        std::vector<std::thread> pool;
        int n = std::min(threads, 64);
        pool.reserve(n);
        for (int t = 0; t < n; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    std::vector<std::complex<double>> recip(primes.size());
    for (size_t i = 0; i < primes.size(); ++i) {
        if (std::abs(factor_values[i]) == 0.0)
            throw pole_error("z_value: local factor vanished at p = " +
                             std::to_string(primes[i]));
        recip[i] = 1.0 / factor_values[i];
    }
    report.value = fixed_tree_product(std::move(recip));
    report.last_factor_deviation = std::abs(factor_values.back() - 1.0);
    return report;
}

std::complex<double> reflect(std::complex<double> s, int k) {
    return std::complex<double>(2.0 * k - 3.0, 0.0) - s;
}

ValueWithError completion_common_factor(int k, std::uint64_t N,
                                        std::complex<double> s, std::uint64_t M) {
    std::complex<double> a_gamma2 = s - static_cast<double>(k) + 3.0;
    std::complex<double> a_gamma3 = s - static_cast<double>(k) + 2.0;
    std::complex<double> a_zeta = 2.0 * s - 2.0 * static_cast<double>(k) + 4.0;
    if (!(a_zeta.real() > 1.0))
        throw std::domain_error(
            "completion_common_factor: zeta argument 2s-2k+4 outside Re > 1");
    const double pi = std::numbers::pi;
    std::complex<double> pref =
        std::pow(std::complex<double>(static_cast<double>(N), 0.0), -4.0 * s) *
        std::pow(std::complex<double>(4.0 * pi * pi * pi, 0.0), -s) * gamma(s) *
        gamma(a_gamma2) * gamma(a_gamma3);
    EvalResult z = evaluate(zeta_series(M), a_zeta, a_zeta.real(), 1.0);
    return from_eval(z).scaled(pref);
}

StarPrefactor star_prefactor(int k, std::uint64_t N, const CharacterZi& chi,
                             std::complex<double> s, std::uint64_t M) {
    if (chi.modulus() != N)
        throw std::domain_error("star_prefactor: character modulus mismatch");
    std::complex<double> a1 = s - static_cast<double>(k) + 2.0;
    std::complex<double> a2 = 2.0 * s - 2.0 * static_cast<double>(k) + 4.0;
    if (!(a1.real() > 1.0))
        throw std::domain_error("star_prefactor: shifted argument s-k+2 outside Re > 1");
    if (!(a2.real() > 1.0))
        throw std::domain_error(
            "star_prefactor: shifted argument 2s-2k+4 outside Re > 1");

    StarPrefactor out;
    out.common = completion_common_factor(k, N, s, M);

    CharacterZi omega = chi.mul(chi.bar_twist());
    ValueWithError zk =
        from_eval(evaluate(dedekind_lattice(omega, M), a1, a1.real(), 1.0));
    RationalCharacter theta_chi = theta().mul(chi.restrict_to_Z());
    ValueWithError lt = from_eval(evaluate(l_series(theta_chi, M), a1, a1.real(), 1.0));
    RationalCharacter chi_sq = chi.pow(2).restrict_to_Z();
    ValueWithError l2 = from_eval(evaluate(l_series(chi_sq, M), a2, a2.real(), 1.0));

    out.value = out.common.mul(zk).div(lt).div(lt).div(l2);
    return out;
}

DStarValue d_star_value(int k, std::uint64_t N, const CharacterZi& chi,
                        const InnerProductSequence& c, std::complex<double> s,
                        std::uint64_t M) {
    if (chi.modulus() != N)
        throw std::domain_error("d_star_value: character modulus mismatch");
    if (!(s.real() > k + 1))
        throw std::domain_error("d_star_value: Re(s) must exceed k+1");

    DStarValue out;
    out.common = completion_common_factor(k, N, s, M);

    CharacterZi omega = chi.mul(chi.bar_twist());
    std::complex<double> a3 = s - static_cast<double>(k) + 3.0;
    ValueWithError zk =
        from_eval(evaluate(dedekind_lattice(omega, M), a3, a3.real(), 1.0));

    std::vector<std::complex<double>> terms;
    terms.reserve(c.length());
    for (std::size_t m = 1; m <= c.length(); ++m) {
        std::complex<double> chim =
            chi.eval(GaussianInt(static_cast<long>(m), 0)).to_complex();
        double ln = std::log(static_cast<double>(m));
        terms.push_back(chim * c.c[m] * std::exp(-s * ln));
    }
    std::complex<double> inner = fixed_tree_sum(std::move(terms));

    out.value = out.common.value * zk.value * inner;
    out.tail_bounded = false;
    return out;
}

}  // namespace hlf
