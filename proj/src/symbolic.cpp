#include "hlf/symbolic.hpp"

#include <sstream>
#include <stdexcept>

namespace hlf {

SymPoly SymPoly::constant(const Cyclotomic& c) {
    SymPoly p;
    if (!c.is_zero()) p.terms_.emplace(Monomial{}, c);
    return p;
}

SymPoly SymPoly::symbol(const std::string& name) {
    if (name.empty()) throw std::domain_error("SymPoly::symbol: empty name");
    SymPoly p;
    p.terms_.emplace(Monomial{{name, 1}}, Cyclotomic::one());
    return p;
}

bool SymPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Cyclotomic SymPoly::constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Cyclotomic::zero() : it->second;
}

void SymPoly::insert_(const Monomial& m, const Cyclotomic& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SymPoly SymPoly::operator-() const {
    SymPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
    for (const auto& [m, c] : o.terms_) insert_(m, c);
    return *this;
}

namespace {

SymPoly::Monomial merge_monomials(const SymPoly::Monomial& a, const SymPoly::Monomial& b) {
    SymPoly::Monomial out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first < b[j].first)
            out.push_back(a[i++]);
        else if (b[j].first < a[i].first)
            out.push_back(b[j++]);
        else {
            out.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i;
            ++j;
        }
    }
    while (i < a.size()) out.push_back(a[i++]);
    while (j < b.size()) out.push_back(b[j++]);
    return out;
}

}  // namespace

SymPoly SymPoly::operator*(const SymPoly& o) const {
    SymPoly r;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.insert_(merge_monomials(ma, mb), ca * cb);
    return r;
}

SymPoly SymPoly::pow(unsigned e) const {
    SymPoly r = SymPoly::integer(1);
    for (unsigned j = 0; j < e; ++j) r = r * *this;
    return r;
}

SymPoly SymPoly::scaled(const Cyclotomic& c) const {
    SymPoly r;
    for (const auto& [m, coeff] : terms_) r.insert_(m, coeff * c);
    return r;
}

std::complex<double> SymPoly::substitute(
    const std::map<std::string, std::complex<double>>& values) const {
    std::complex<double> sum = 0.0;
    for (const auto& [m, c] : terms_) {
        std::complex<double> term = c.to_complex();
        for (const auto& [name, e] : m) {
            auto it = values.find(name);
            if (it == values.end())
                throw std::domain_error("SymPoly::substitute: unassigned symbol " + name);
            for (unsigned j = 0; j < e; ++j) term *= it->second;
        }
        sum += term;
    }
    return sum;
}

long SymPoly::total_degree() const {
    long best = -1;
    for (const auto& [m, c] : terms_) {
        long d = 0;
        for (const auto& [name, e] : m) d += e;
        if (d > best) best = d;
    }
    return best;
}

std::string SymPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "[" << c.str() << "]";
        for (const auto& [name, e] : m) {
            os << "*" << name;
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

}  // namespace hlf
