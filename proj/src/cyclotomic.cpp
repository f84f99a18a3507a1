#include "hlf/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hlf {

unsigned long totient(unsigned long m) {
    if (m == 0) throw std::domain_error("totient: m must be positive");
    unsigned long result = m;
    unsigned long n = m;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

// Exact division of monic integer polynomials, remainder known to vanish.
std::vector<mpz_class> divide_exact(const std::vector<mpz_class>& num,
                                    const std::vector<mpz_class>& den) {
    std::vector<mpz_class> rem = num;
    const size_t dn = den.size() - 1;
    std::vector<mpz_class> quot(rem.size() - dn, 0);
    for (size_t i = rem.size(); i-- > dn;) {
        mpz_class c = rem[i];  // den is monic
        quot[i - dn] = c;
        if (c == 0) continue;
        for (size_t j = 0; j <= dn; ++j) rem[i - dn + j] -= c * den[j];
    }
    for (const auto& r : rem)
        if (r != 0) throw std::logic_error("divide_exact: nonzero remainder");
    return quot;
}

std::vector<mpz_class> compute_cyclotomic(unsigned m) {
    // x^m - 1 divided by the cyclotomic polynomials of all proper divisors.
    std::vector<mpz_class> poly(m + 1, 0);
    poly[0] = -1;
    poly[m] = 1;
    for (unsigned d = 1; d < m; ++d) {
        if (m % d == 0) poly = divide_exact(poly, cyclotomic_polynomial(d));
    }
    return poly;
}

}  // namespace

const std::vector<mpz_class>& cyclotomic_polynomial(unsigned m) {
    if (m == 0) throw std::domain_error("cyclotomic_polynomial: m must be positive");
    static std::map<unsigned, std::vector<mpz_class>> cache;
    static std::mutex mutex;
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(m);
        if (it != cache.end()) return it->second;
    }
    // Computed outside the lock: the recursion over proper divisors re-enters
    // this function.  Map nodes are stable, so the reference stays valid.
    std::vector<mpz_class> poly = compute_cyclotomic(m);
    std::lock_guard<std::mutex> lock(mutex);
    return cache.emplace(m, std::move(poly)).first->second;
}

namespace {

// Reduces a raw coefficient buffer (any degree) modulo Phi_m and trims it to
// length phi(m).  Exponents are first folded with zeta^m = 1.
std::vector<mpq_class> reduce_mod_cyclotomic(std::vector<mpq_class> buf, unsigned m) {
    const unsigned phi = static_cast<unsigned>(totient(m));
    if (buf.size() > m) {
        for (size_t j = buf.size(); j-- > m;) {
            buf[j - m] += buf[j];
            buf[j] = 0;
        }
        buf.resize(m);
    }
    const auto& cp = cyclotomic_polynomial(m);
    for (size_t i = buf.size(); i-- > phi;) {
        mpq_class c = buf[i];
        if (c == 0) continue;
        buf[i] = 0;
        for (size_t j = 0; j < cp.size() - 1; ++j) buf[i - phi + j] -= c * cp[j];
    }
    buf.resize(phi);
    return buf;
}

}  // namespace

Cyclotomic Cyclotomic::rational(const mpq_class& q) {
    mpq_class v = q;
    v.canonicalize();
    return Cyclotomic(1, {v});
}

Cyclotomic Cyclotomic::root_of_unity(unsigned m, long e) {
    if (m == 0) throw std::domain_error("root_of_unity: order must be positive");
    long r = e % static_cast<long>(m);
    if (r < 0) r += m;
    std::vector<mpq_class> buf(m, mpq_class(0));
    buf[static_cast<size_t>(r)] = 1;
    return Cyclotomic(m, reduce_mod_cyclotomic(std::move(buf), m));
}

Cyclotomic Cyclotomic::from_exponent_weights(unsigned m, std::vector<mpq_class> weights) {
    if (m == 0) throw std::domain_error("from_exponent_weights: order must be positive");
    if (weights.size() > m)
        throw std::domain_error("from_exponent_weights: more weights than exponents");
    weights.resize(m, mpq_class(0));
    for (auto& w : weights) w.canonicalize();
    return Cyclotomic(m, reduce_mod_cyclotomic(std::move(weights), m));
}

bool Cyclotomic::is_zero() const {
    for (const auto& q : c_)
        if (q != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (size_t j = 1; j < c_.size(); ++j)
        if (c_[j] != 0) return false;
    return true;
}

mpq_class Cyclotomic::rational_part() const {
    if (!is_rational()) throw std::domain_error("rational_part: value has a root component");
    return c_[0];
}

void Cyclotomic::lift_to_(unsigned L) {
    if (L == order_) return;
    if (L % order_ != 0) throw std::logic_error("lift_to_: target order not a multiple");
    const unsigned step = L / order_;
    std::vector<mpq_class> buf(L, mpq_class(0));
    for (size_t j = 0; j < c_.size(); ++j) buf[j * step] = c_[j];
    c_ = reduce_mod_cyclotomic(std::move(buf), L);
    order_ = L;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto& q : r.c_) q = -q;
    return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
    if (order_ != rhs.order_) {
        unsigned L = static_cast<unsigned>(std::lcm(order_, rhs.order_));
        lift_to_(L);
        Cyclotomic r = rhs;
        r.lift_to_(L);
        for (size_t j = 0; j < c_.size(); ++j) c_[j] += r.c_[j];
        return *this;
    }
    for (size_t j = 0; j < c_.size(); ++j) c_[j] += rhs.c_[j];
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) { return *this += -rhs; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) {
    unsigned L = static_cast<unsigned>(std::lcm(order_, rhs.order_));
    lift_to_(L);
    Cyclotomic r = rhs;
    r.lift_to_(L);
    std::vector<mpq_class> buf(c_.size() + r.c_.size() - 1, mpq_class(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < r.c_.size(); ++j) {
            if (r.c_[j] == 0) continue;
            buf[i + j] += c_[i] * r.c_[j];
        }
    }
    c_ = reduce_mod_cyclotomic(std::move(buf), L);
    return *this;
}

Cyclotomic& Cyclotomic::scale(const mpq_class& q) {
    for (auto& x : c_) x *= q;
    return *this;
}

Cyclotomic Cyclotomic::pow(unsigned long e) const {
    Cyclotomic base = *this;
    Cyclotomic result = Cyclotomic::one();
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    return result;
}

Cyclotomic Cyclotomic::conj() const {
    std::vector<mpq_class> buf(order_, mpq_class(0));
    for (size_t j = 0; j < c_.size(); ++j) {
        size_t e = (j == 0) ? 0 : order_ - j;
        buf[e] += c_[j];
    }
    return Cyclotomic(order_, reduce_mod_cyclotomic(std::move(buf), order_));
}

bool Cyclotomic::operator==(const Cyclotomic& rhs) const {
    if (order_ == rhs.order_) return c_ == rhs.c_;
    unsigned L = static_cast<unsigned>(std::lcm(order_, rhs.order_));
    Cyclotomic a = *this;
    Cyclotomic b = rhs;
    a.lift_to_(L);
    b.lift_to_(L);
    return a.c_ == b.c_;
}

std::complex<double> Cyclotomic::to_complex() const {
    std::complex<double> sum = 0.0;
    const double tau = 6.283185307179586476925286766559;
    for (size_t j = 0; j < c_.size(); ++j) {
        if (c_[j] == 0) continue;
        double w = c_[j].get_d();
        double ang = tau * static_cast<double>(j) / static_cast<double>(order_);
        sum += w * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return sum;
}

std::string Cyclotomic::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t j = 0; j < c_.size(); ++j) {
        if (c_[j] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << c_[j] << ")";
        if (j > 0) os << "*z" << order_ << "^" << j;
    }
    return os.str();
}

}  // namespace hlf
