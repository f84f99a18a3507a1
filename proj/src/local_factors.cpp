#include "hlf/local_factors.hpp"

namespace hlf {

mpq_class rational_power(std::uint64_t p, long e) {
    mpz_class base(static_cast<unsigned long>(p));
    mpz_class num;
    mpz_pow_ui(num.get_mpz_t(), base.get_mpz_t(),
               static_cast<unsigned long>(e < 0 ? -e : e));
    mpq_class q;
    if (e < 0)
        q = mpq_class(1, num);
    else
        q = mpq_class(num);
    q.canonicalize();
    return q;
}

SplittingType splitting_of_prime(std::uint64_t p) {
    PrimeClassification c = classify_prime(p);
    return c.type;
}

EigenvalueData<SymPoly> symbolic_eigenvalues(SplittingType type) {
    auto s = [](const char* n) { return SymPoly::symbol(n); };
    switch (type) {
        case SplittingType::Inert:
            return InertEigenvalues<SymPoly>{s("T_p"), s("T_1p"), s("D_p")};
        case SplittingType::Ramified:
            return RamifiedEigenvalues<SymPoly>{s("T_2"), s("T_r"), s("D_r")};
        case SplittingType::Split:
            return SplitEigenvalues<SymPoly>{s("T_p"),  s("T_pi"), s("T_pib"),
                                             s("D_p"),  s("D_pi"), s("D_pib")};
    }
    throw std::logic_error("symbolic_eigenvalues: unhandled splitting type");
}

}  // namespace hlf
