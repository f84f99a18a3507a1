#include "hlf/verify.hpp"

#include <atomic>
#include <functional>
#include <thread>

namespace hlf {

namespace {

Cyclotomic chi_at(const CharacterZi& chi, std::uint64_t p) {
    return chi.eval(GaussianInt(static_cast<long>(p), 0));
}

std::string bound_params(std::uint64_t M) { return "M=" + std::to_string(M); }

Polynomial<Cyclotomic> linear(const Cyclotomic& a1) {
    Polynomial<Cyclotomic> f;
    f.c = {Cyclotomic::one(), a1};
    return f;
}

Polynomial<SymPoly> sym_linear(const SymPoly& a1) {
    Polynomial<SymPoly> f;
    f.c = {ring_one<SymPoly>(), a1};
    return f;
}

Polynomial<SymPoly> sym_even_quadratic(const SymPoly& a2) {
    Polynomial<SymPoly> f;
    f.c.resize(3);
    f.c[0] = ring_one<SymPoly>();
    f.c[2] = a2;
    return f;
}

}  // namespace

LocalFactorMap<Cyclotomic> theta_factor_map(const CharacterZi& chi, std::uint64_t M) {
    LocalFactorMap<Cyclotomic> map;
    for (std::uint64_t p : primes_up_to(M)) {
        if (p == 2) continue;  // the quartic character vanishes at 2
        Cyclotomic v = chi_at(chi, p);
        map[p] = (p % 4 == 3) ? linear(v) : linear(-v);
    }
    return map;
}

LocalFactorMap<Cyclotomic> chi_squared_factor_map(const CharacterZi& chi,
                                                  std::uint64_t M) {
    LocalFactorMap<Cyclotomic> map;
    for (std::uint64_t p : primes_up_to(M)) {
        Cyclotomic v = chi_at(chi, p);
        map[p] = linear(-(v * v));
    }
    return map;
}

LocalFactorMap<Cyclotomic> zetaK_factor_map(const CharacterZi& chi, std::uint64_t M) {
    LocalFactorMap<Cyclotomic> map;
    for (std::uint64_t p : primes_up_to(M)) {
        Cyclotomic v = chi_at(chi, p);
        if (p == 2) {
            // The ramified prime has norm 2 and the twist takes the value
            // chi(2) there (the product of the character at the prime and
            // at its conjugate).
            map[p] = linear(-v);
        } else if (p % 4 == 3) {
            // Ideal of norm p^2: the factor lives in x^2.
            Polynomial<Cyclotomic> f;
            f.c = {Cyclotomic::one(), Cyclotomic::zero(), -(v * v)};
            map[p] = f;
        } else {
            // Two conjugate ideals of norm p, same twist value chi(p).
            Polynomial<Cyclotomic> lin = linear(-v);
            map[p] = lin * lin;
        }
    }
    return map;
}

VerificationReport verify_series_against_map(const std::string& identity,
                                             const CharacterZi& chi,
                                             const ExactSeries& lhs,
                                             const LocalFactorMap<Cyclotomic>& map) {
    VerificationReport report;
    report.identity = identity;
    report.modulus = chi.modulus();
    report.params = bound_params(lhs.bound());
    ExactSeries rhs = from_euler(map, lhs.bound());
    auto bad = first_mismatch(lhs, rhs);
    if (!bad) {
        report.pass = true;
        return report;
    }
    report.pass = false;
    report.witness = "n=" + std::to_string(*bad) + ": series=" + lhs[*bad].str() +
                     " product=" + rhs[*bad].str();
    return report;
}

VerificationReport verify_theta_factorization(const CharacterZi& chi,
                                              std::uint64_t M) {
    ExactSeries lhs = l_series(theta().mul(chi.restrict_to_Z()), M);
    return verify_series_against_map("theta-factorization", chi, lhs,
                                     theta_factor_map(chi, M));
}

VerificationReport verify_chi_squared(const CharacterZi& chi, std::uint64_t M) {
    ExactSeries lhs = l_series(chi.pow(2).restrict_to_Z(), M);
    return verify_series_against_map("chi-squared", chi, lhs,
                                     chi_squared_factor_map(chi, M));
}

VerificationReport verify_zetaK_factorization(const CharacterZi& chi,
                                              std::uint64_t M) {
    ExactSeries lhs = dedekind_lattice(chi.mul(chi.bar_twist()), M);
    return verify_series_against_map("zetaK-factorization", chi, lhs,
                                     zetaK_factor_map(chi, M));
}

VerificationReport verify_local_proposition(std::uint64_t p, const Cyclotomic& chi_p,
                                            int k, const EigenvalueData<SymPoly>& e) {
    if (!chi_p.is_zero() && !(chi_p * chi_p.conj()).is_one())
        throw std::domain_error(
            "verify_local_proposition: character value must be a root of unity or 0");
    SplittingType type = splitting_of_prime(p);
    if (eigenvalue_shape(e) != type)
        throw std::domain_error(
            "verify_local_proposition: eigenvalue shape does not match the prime");

    VerificationReport report;
    report.identity = "local-proposition";
    report.params = "p=" + std::to_string(p) + " k=" + std::to_string(k) +
                    " chi_p=" + chi_p.str();

    SymPoly chi = ring_from_cyclotomic<SymPoly>(chi_p);
    SymPoly chi2 = chi * chi;
    auto pw = [&](long j) { return ring_from_rational<SymPoly>(rational_power(p, j)); };

    Polynomial<SymPoly> l1, zk3, zk2;
    switch (type) {
        case SplittingType::Inert:
            l1 = sym_linear(chi * pw(k - 2));
            zk3 = sym_even_quadratic(-(chi2 * pw(2 * k - 6)));
            zk2 = sym_even_quadratic(-(chi2 * pw(2 * k - 4)));
            break;
        case SplittingType::Split: {
            l1 = sym_linear(-(chi * pw(k - 2)));
            Polynomial<SymPoly> lin3 = sym_linear(-(chi * pw(k - 3)));
            Polynomial<SymPoly> lin2 = sym_linear(-(chi * pw(k - 2)));
            zk3 = lin3 * lin3;
            zk2 = lin2 * lin2;
            break;
        }
        case SplittingType::Ramified:
            l1 = Polynomial<SymPoly>::one();
            zk3 = sym_linear(-(chi * pw(k - 3)));
            zk2 = sym_linear(-(chi * pw(k - 2)));
            break;
    }
    Polynomial<SymPoly> l2 = sym_even_quadratic(-(chi2 * pw(2 * k - 4)));
    Polynomial<SymPoly> cf = case_factor<SymPoly>(p, type, chi, k);

    Polynomial<SymPoly> q;
    switch (type) {
        case SplittingType::Inert:
            q = q_inert(p, std::get<InertEigenvalues<SymPoly>>(e));
            break;
        case SplittingType::Ramified:
            q = q_ramified(std::get<RamifiedEigenvalues<SymPoly>>(e));
            break;
        case SplittingType::Split:
            q = q_split(p, std::get<SplitEigenvalues<SymPoly>>(e));
            break;
    }
    Polynomial<SymPoly> q_chi = substitute_scaled(q, chi);
    Polynomial<SymPoly> z = full_local_factor<SymPoly>(p, chi, k, e);

    Polynomial<SymPoly> lhs = cf * zk2 * z;
    Polynomial<SymPoly> rhs = l1 * l1 * l2 * zk3 * q_chi;

    int dmax = std::max(lhs.degree(), rhs.degree());
    for (int j = 0; j <= dmax; ++j) {
        SymPoly diff = lhs.coeff(j) - rhs.coeff(j);
        if (!diff.is_zero()) {
            report.pass = false;
            report.witness = "x^" + std::to_string(j) + ": " + diff.str();
            return report;
        }
    }
    report.pass = true;
    return report;
}

std::vector<VerificationReport> verify_all(std::uint64_t N, std::uint64_t M,
                                           const std::vector<int>& weights,
                                           const std::vector<std::uint64_t>& primes,
                                           bool inject_corruption, int threads) {
    std::vector<CharacterZi> chars = enumerate_characters(N);
    size_t series_checks = chars.size() * 3;
    size_t local_checks = chars.size() * primes.size() * weights.size();
    std::vector<VerificationReport> reports(series_checks + local_checks);

    std::vector<std::function<void()>> tasks;
    tasks.reserve(reports.size());
    for (size_t i = 0; i < chars.size(); ++i) {
        const CharacterZi& chi = chars[i];
        bool corrupt_here = inject_corruption && i == 0;
        tasks.push_back([&, i, corrupt_here] {
            VerificationReport r;
            if (corrupt_here) {
                LocalFactorMap<Cyclotomic> map = theta_factor_map(chi, M);
                std::uint64_t q = (M >= 13) ? 13 : 3;
                if (map.count(q)) map[q].c[1] += Cyclotomic::one();
                ExactSeries lhs = l_series(theta().mul(chi.restrict_to_Z()), M);
                r = verify_series_against_map("theta-factorization", chi, lhs, map);
                r.params += " corrupted=p" + std::to_string(q);
            } else {
                r = verify_theta_factorization(chi, M);
            }
            r.char_index = i;
            reports[3 * i] = std::move(r);
        });
        tasks.push_back([&, i] {
            VerificationReport r = verify_chi_squared(chi, M);
            r.char_index = i;
            reports[3 * i + 1] = std::move(r);
        });
        tasks.push_back([&, i] {
            VerificationReport r = verify_zetaK_factorization(chi, M);
            r.char_index = i;
            reports[3 * i + 2] = std::move(r);
        });
    }
    size_t slot = series_checks;
    for (size_t i = 0; i < chars.size(); ++i) {
        for (std::uint64_t p : primes) {
            for (int k : weights) {
                const CharacterZi& chi = chars[i];
                size_t here = slot++;
                tasks.push_back([&, i, p, k, here] {
                    Cyclotomic chi_p = chi_at(chi, p);
                    VerificationReport r = verify_local_proposition(
                        p, chi_p, k, symbolic_eigenvalues(splitting_of_prime(p)));
                    r.modulus = N;
                    r.char_index = i;
                    reports[here] = std::move(r);
                });
            }
        }
    }

    if (threads <= 1) {
        for (auto& t : tasks) t();
    } else {
        std::atomic<size_t> next{0};
        auto worker = [&] {
            for (size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1))
                tasks[i]();
        };
        std::vector<std::thread> pool;
        int n = std::min(threads, 64);
        pool.reserve(n);
        for (int t = 0; t < n; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return reports;
}

}  // namespace hlf
