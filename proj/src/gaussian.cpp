#include "hlf/gaussian.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace hlf {

namespace {

constexpr std::uint32_t kTrialDivisionBound = 1000000;

// Nearest integer to num/den for den > 0, ties rounded up.
mpz_class round_quotient(const mpz_class& num, const mpz_class& den) {
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (2 * r >= den) q += 1;
    return q;
}

}  // namespace

GaussianInt GaussianInt::canonical_associate() const {
    if (is_zero()) return {};
    GaussianInt g = *this;
    for (int rot = 0; rot < 4; ++rot) {
        if (g.re_ > 0 && g.im_ >= 0) return g;
        g = GaussianInt(-g.im_, g.re_);  // multiply by i
    }
    throw std::logic_error("canonical_associate: no rotation matched");
}

std::string GaussianInt::str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const GaussianInt& g) {
    if (g.im_ == 0) return os << g.re_;
    if (g.re_ != 0) {
        os << g.re_;
        if (g.im_ > 0) os << "+";
    }
    if (g.im_ == 1)
        os << "i";
    else if (g.im_ == -1)
        os << "-i";
    else
        os << g.im_ << "i";
    return os;
}

GaussianInt GaussianInt::parse(const std::string& text) {
    // Grammar: [sign] term [sign term], each term DIGITS, DIGITS"i", or "i".
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw std::invalid_argument("parse: empty Gaussian integer literal");

    mpz_class re = 0, im = 0;
    size_t pos = 0;
    int terms = 0;
    bool seen_real = false, seen_imag = false;
    while (pos < s.size()) {
        if (terms == 2) throw std::invalid_argument("parse: too many terms in '" + text + "'");
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = (s[pos] == '-') ? -1 : 1;
            ++pos;
        } else if (terms == 1) {
            throw std::invalid_argument("parse: missing sign between terms in '" + text + "'");
        }
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        std::string digits = s.substr(start, pos - start);
        bool imaginary = pos < s.size() && s[pos] == 'i';
        if (imaginary) ++pos;
        if (digits.empty() && !imaginary)
            throw std::invalid_argument("parse: malformed Gaussian integer '" + text + "'");
        mpz_class mag = digits.empty() ? mpz_class(1) : mpz_class(digits);
        if (imaginary) {
            if (seen_imag) throw std::invalid_argument("parse: repeated imaginary part in '" + text + "'");
            seen_imag = true;
            im = sign * mag;
        } else {
            if (seen_real) throw std::invalid_argument("parse: repeated real part in '" + text + "'");
            seen_real = true;
            re = sign * mag;
        }
        ++terms;
    }
    return {re, im};
}

std::pair<GaussianInt, GaussianInt> divmod(const GaussianInt& a, const GaussianInt& b) {
    if (b.is_zero()) throw std::domain_error("divmod: division by zero");
    mpz_class n = b.norm();
    GaussianInt t = a * b.conj();
    GaussianInt q(round_quotient(t.re(), n), round_quotient(t.im(), n));
    GaussianInt r = a - q * b;
    return {q, r};
}

bool divides(const GaussianInt& b, const GaussianInt& a) {
    if (b.is_zero()) throw std::domain_error("divides: zero divisor");
    mpz_class n = b.norm();
    GaussianInt t = a * b.conj();
    return t.re() % n == 0 && t.im() % n == 0;
}

GaussianInt exact_div(const GaussianInt& a, const GaussianInt& b) {
    if (b.is_zero()) throw std::domain_error("exact_div: division by zero");
    mpz_class n = b.norm();
    GaussianInt t = a * b.conj();
    if (t.re() % n != 0 || t.im() % n != 0)
        throw std::domain_error("exact_div: " + b.str() + " does not divide " + a.str());
    return {t.re() / n, t.im() / n};
}

GaussianInt gcd(const GaussianInt& a, const GaussianInt& b) {
    GaussianInt x = a, y = b;
    while (!y.is_zero()) {
        auto [q, r] = divmod(x, y);
        x = y;
        y = r;
    }
    return x.canonical_associate();
}

std::ostream& operator<<(std::ostream& os, SplittingType t) {
    switch (t) {
        case SplittingType::Ramified: return os << "ramified";
        case SplittingType::Inert: return os << "inert";
        case SplittingType::Split: return os << "split";
    }
    return os;
}

bool is_probable_prime(const mpz_class& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

std::pair<mpz_class, mpz_class> two_squares(const mpz_class& p) {
    if (p == 2) return {mpz_class(1), mpz_class(1)};
    if (!is_probable_prime(p) || p % 4 != 1)
        throw std::domain_error("two_squares: argument must be 2 or a prime = 1 mod 4");
    // Square root of -1 mod p from a quadratic non-residue, then a Gaussian
    // gcd with p collapses to a prime of norm p.
    mpz_class exponent = (p - 1) / 4;
    mpz_class x = 0;
    for (mpz_class a = 2; a < p; ++a) {
        mpz_class half;
        mpz_class e2 = (p - 1) / 2;
        mpz_powm(half.get_mpz_t(), a.get_mpz_t(), e2.get_mpz_t(), p.get_mpz_t());
        if (half == p - 1) {
            mpz_powm(x.get_mpz_t(), a.get_mpz_t(), exponent.get_mpz_t(), p.get_mpz_t());
            break;
        }
    }
    if (x == 0) throw std::logic_error("two_squares: no non-residue found");
    GaussianInt pi = gcd(GaussianInt(p, 0), GaussianInt(x, 1));
    mpz_class a = abs(pi.re()), b = abs(pi.im());
    if (a < b) std::swap(a, b);
    if (a * a + b * b != p) throw std::logic_error("two_squares: descent failed");
    return {a, b};
}

PrimeClassification classify_prime(const mpz_class& p) {
    if (p < 2 || !is_probable_prime(p))
        throw std::domain_error("classify_prime: input is not a prime");
    if (p == 2) return {SplittingType::Ramified, GaussianInt(1, 1), GaussianInt()};
    if (p % 4 == 3) return {SplittingType::Inert, GaussianInt(p, mpz_class(0)), GaussianInt()};
    auto [a, b] = two_squares(p);
    // Both canonical associates over p are (a, b) and (b, a); the distinguished
    // prime is the one with im < re, its conjugate partner the other.
    GaussianInt pi(a, b);
    GaussianInt pi_bar(b, a);
    return {SplittingType::Split, pi, pi_bar};
}

PrimeClassification classify_prime(std::uint64_t p) {
    mpz_class z;
    mpz_import(z.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
    return classify_prime(z);
}

const std::vector<std::uint32_t>& small_primes() {
    static const std::vector<std::uint32_t> primes = [] {
        std::vector<bool> composite(kTrialDivisionBound + 1, false);
        std::vector<std::uint32_t> out;
        for (std::uint32_t n = 2; n <= kTrialDivisionBound; ++n) {
            if (composite[n]) continue;
            out.push_back(n);
            for (std::uint64_t m = static_cast<std::uint64_t>(n) * n; m <= kTrialDivisionBound;
                 m += n)
                composite[static_cast<size_t>(m)] = true;
        }
        return out;
    }();
    return primes;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
    std::vector<std::uint64_t> out;
    if (limit < 2) return out;
    std::vector<bool> composite(static_cast<size_t>(limit) + 1, false);
    for (std::uint64_t n = 2; n <= limit; ++n) {
        if (composite[static_cast<size_t>(n)]) continue;
        out.push_back(n);
        for (std::uint64_t m = n * n; m <= limit; m += n) composite[static_cast<size_t>(m)] = true;
    }
    return out;
}

namespace {

// Rational prime factorization used on norms: trial division by the cached
// primes below 10^6, then a primality check on the remaining core.
std::vector<std::pair<mpz_class, unsigned>> factor_norm(mpz_class n) {
    std::vector<std::pair<mpz_class, unsigned>> out;
    for (std::uint32_t p : small_primes()) {
        if (mpz_class(p) * p > n) break;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            unsigned e = 0;
            while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
                n /= p;
                ++e;
            }
            out.emplace_back(mpz_class(p), e);
        }
    }
    if (n > 1) {
        if (!is_probable_prime(n))
            throw std::domain_error(
                "factor: norm has a composite core beyond the trial-division bound");
        out.emplace_back(n, 1);
    }
    return out;
}

}  // namespace

GaussianFactorization factor(const GaussianInt& alpha) {
    if (alpha.is_zero()) throw std::domain_error("factor: zero has no factorization");

    GaussianFactorization result;
    std::vector<std::pair<GaussianInt, unsigned>> primes;

    GaussianInt remaining = alpha;
    for (const auto& [p, v] : factor_norm(alpha.norm())) {
        PrimeClassification cls = classify_prime(p);
        switch (cls.type) {
            case SplittingType::Ramified:
                primes.emplace_back(cls.pi, v);
                break;
            case SplittingType::Inert:
                // The norm valuation of an inert prime is twice its multiplicity.
                primes.emplace_back(cls.pi, v / 2);
                break;
            case SplittingType::Split: {
                unsigned a = 0;
                GaussianInt t = remaining;
                while (divides(cls.pi, t)) {
                    t = exact_div(t, cls.pi);
                    ++a;
                }
                if (a > 0) primes.emplace_back(cls.pi, a);
                if (v - a > 0) primes.emplace_back(cls.pi_bar, v - a);
                break;
            }
        }
    }

    for (const auto& [pi, e] : primes)
        for (unsigned j = 0; j < e; ++j) remaining = exact_div(remaining, pi);
    if (!remaining.is_unit()) throw std::logic_error("factor: residual unit check failed");

    std::sort(primes.begin(), primes.end(), [](const auto& x, const auto& y) {
        mpz_class nx = x.first.norm(), ny = y.first.norm();
        if (nx != ny) return nx < ny;
        if (x.first.re() != y.first.re()) return x.first.re() < y.first.re();
        return x.first.im() < y.first.im();
    });

    result.unit = remaining;
    result.primes = std::move(primes);
    return result;
}

}  // namespace hlf
