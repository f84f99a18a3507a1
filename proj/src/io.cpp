#include "hlf/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace hlf {

using nlohmann::json;

json complex_to_json(std::complex<double> z) {
    return json{{"re", z.real()}, {"im", z.imag()}};
}

json cyclotomic_to_json(const Cyclotomic& c) {
    json terms = json::array();
    for (unsigned j = 0; j < c.canonical_degree(); ++j) {
        const mpq_class& q = c.coeff(j);
        if (q == 0) continue;
        terms.push_back(json::array({j, q.get_num().get_str(), q.get_den().get_str()}));
    }
    return json{{"order", c.order()}, {"terms", terms}};
}

json character_to_json(const CharacterZi& chi, std::size_t index,
                       const UnitGroup& group) {
    const unsigned N = chi.modulus();
    json entries = json::array();
    for (unsigned a = 0; a < std::max(N, 1u); ++a) {
        for (unsigned b = 0; b < std::max(N, 1u); ++b) {
            GaussianInt alpha(static_cast<long>(a), static_cast<long>(b));
            auto e = chi.eval_exponent(alpha);
            std::complex<double> v = chi.eval(alpha).to_complex();
            json entry{{"re", v.real()}, {"im", v.imag()}};
            if (e)
                entry["exponent"] = *e;
            else
                entry["exponent"] = nullptr;
            entries.push_back(std::move(entry));
        }
    }
    json gens = json::array();
    for (const auto& [residue, rel_order] : group.generators) {
        GaussianInt g(static_cast<long>(residue.first),
                      static_cast<long>(residue.second));
        gens.push_back(json{{"residue", json::array({residue.first, residue.second})},
                            {"relative_order", rel_order},
                            {"exponent", chi.eval_exponent(g) ? json(*chi.eval_exponent(g))
                                                              : json(nullptr)}});
    }
    return json{{"index", index},
                {"modulus", N},
                {"order_root", chi.order_root()},
                {"order", chi.order()},
                {"generator_exponents", gens},
                {"entries", entries}};
}

json character_table_json(std::uint64_t N) {
    UnitGroup group = unit_group(static_cast<unsigned>(N));
    std::vector<CharacterZi> chars = enumerate_characters(group);
    json out = json::array();
    for (std::size_t i = 0; i < chars.size(); ++i)
        out.push_back(character_to_json(chars[i], i, group));
    return out;
}

json series_to_json(const ExactSeries& s) {
    json coeffs = json::array();
    for (std::uint64_t n = 1; n <= s.bound(); ++n)
        coeffs.push_back(cyclotomic_to_json(s[n]));
    return json{{"bound", s.bound()}, {"coefficients", coeffs}};
}

std::string series_to_csv(const ExactSeries& s) {
    std::ostringstream out;
    out << "n,re,im\n";
    out.precision(17);
    for (std::uint64_t n = 1; n <= s.bound(); ++n) {
        std::complex<double> v = s[n].to_complex();
        out << n << "," << v.real() << "," << v.imag() << "\n";
    }
    return out.str();
}

json report_to_json(const VerificationReport& r) {
    return json{{"identity", r.identity}, {"modulus", r.modulus},
                {"char_index", r.char_index}, {"params", r.params},
                {"pass", r.pass},           {"witness", r.witness}};
}

std::string reports_to_jsonl(const std::vector<VerificationReport>& reports) {
    std::ostringstream out;
    for (const auto& r : reports) out << report_to_json(r).dump() << "\n";
    return out.str();
}

json value_export_json(std::complex<double> s, std::complex<double> value,
                       std::uint64_t P, std::uint64_t M, double heuristic) {
    // JSON has no encoding for infinity; a non-finite bound degrades to a marker.
    json h;
    if (std::isfinite(heuristic))
        h = heuristic;
    else
        h = "unbounded";
    return json{{"s", complex_to_json(s)},
                {"value", complex_to_json(value)},
                {"truncation", json{{"P", P}, {"M", M}, {"heuristic", h}}}};
}

namespace {

std::complex<double> complex_from_json(const json& v, const std::string& where) {
    if (!v.is_object() || !v.contains("re") || !v.contains("im"))
        throw std::domain_error("eigenvalue entry " + where +
                                " must be a {re, im} pair or a symbol string");
    return {v["re"].get<double>(), v["im"].get<double>()};
}

/// Reads the named slots of one prime's eigenvalue object either all-numeric
/// or all-symbolic; mixing kinds is rejected.
template <class Numeric, class Symbolic>
void read_slots(const json& ev, const std::vector<std::string>& names,
                std::uint64_t p, bool& is_symbolic, Numeric&& on_numeric,
                Symbolic&& on_symbolic) {
    int strings = 0, pairs = 0;
    for (const auto& n : names) {
        if (!ev.contains(n))
            throw std::domain_error("eigenvalue entry for prime " + std::to_string(p) +
                                    " missing slot " + n);
        if (ev[n].is_string())
            ++strings;
        else
            ++pairs;
    }
    if (strings > 0 && pairs > 0)
        throw std::domain_error("eigenvalue entry for prime " + std::to_string(p) +
                                " mixes numeric and symbolic slots");
    is_symbolic = strings > 0;
    for (const auto& n : names) {
        if (is_symbolic)
            on_symbolic(n, SymPoly::symbol(ev[n].get<std::string>()));
        else
            on_numeric(n, complex_from_json(ev[n], n));
    }
}

}  // namespace

EigenvalueFile parse_eigenvalue_json(const json& doc) {
    if (!doc.is_array())
        throw std::domain_error("eigenvalue file must be a JSON array");
    EigenvalueFile out;
    for (const auto& item : doc) {
        if (!item.contains("prime") || !item.contains("type") ||
            !item.contains("eigenvalues"))
            throw std::domain_error(
                "eigenvalue entry needs prime, type, and eigenvalues fields");
        std::uint64_t p = item["prime"].get<std::uint64_t>();
        std::string type = item["type"].get<std::string>();
        const json& ev = item["eigenvalues"];
        SplittingType actual = splitting_of_prime(p);
        std::map<std::string, std::complex<double>> nums;
        std::map<std::string, SymPoly> syms;
        bool is_symbolic = false;
        auto keep_num = [&](const std::string& n, std::complex<double> v) {
            nums[n] = v;
        };
        auto keep_sym = [&](const std::string& n, SymPoly v) {
            syms.emplace(n, std::move(v));
        };
        if (type == "inert") {
            if (actual != SplittingType::Inert)
                throw std::domain_error("prime " + std::to_string(p) + " is not inert");
            read_slots(ev, {"T_p", "T_1p", "D_p"}, p, is_symbolic, keep_num, keep_sym);
            if (is_symbolic)
                out.symbolic[p] = InertEigenvalues<SymPoly>{
                    syms.at("T_p"), syms.at("T_1p"), syms.at("D_p")};
            else
                out.numeric[p] = InertEigenvalues<std::complex<double>>{
                    nums.at("T_p"), nums.at("T_1p"), nums.at("D_p")};
        } else if (type == "ramified") {
            if (actual != SplittingType::Ramified)
                throw std::domain_error("prime " + std::to_string(p) +
                                        " is not ramified");
            read_slots(ev, {"T_2", "T_r", "D_r"}, p, is_symbolic, keep_num, keep_sym);
            if (is_symbolic)
                out.symbolic[p] = RamifiedEigenvalues<SymPoly>{
                    syms.at("T_2"), syms.at("T_r"), syms.at("D_r")};
            else
                out.numeric[p] = RamifiedEigenvalues<std::complex<double>>{
                    nums.at("T_2"), nums.at("T_r"), nums.at("D_r")};
        } else if (type == "split") {
            if (actual != SplittingType::Split)
                throw std::domain_error("prime " + std::to_string(p) + " is not split");
            read_slots(ev, {"T_p", "T_pi", "T_pib", "D_p", "D_pi", "D_pib"}, p,
                       is_symbolic, keep_num, keep_sym);
            if (is_symbolic)
                out.symbolic[p] = SplitEigenvalues<SymPoly>{
                    syms.at("T_p"),  syms.at("T_pi"), syms.at("T_pib"),
                    syms.at("D_p"),  syms.at("D_pi"), syms.at("D_pib")};
            else
                out.numeric[p] = SplitEigenvalues<std::complex<double>>{
                    nums.at("T_p"),  nums.at("T_pi"), nums.at("T_pib"),
                    nums.at("D_p"),  nums.at("D_pi"), nums.at("D_pib")};
        } else {
            throw std::domain_error("unknown splitting type " + type);
        }
    }
    return out;
}

EigenvalueFile load_eigenvalue_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::domain_error("cannot open eigenvalue file " + path);
    json doc;
    in >> doc;
    return parse_eigenvalue_json(doc);
}

InnerProductSequence parse_inner_product_csv(std::istream& in) {
    std::vector<std::pair<std::uint64_t, std::complex<double>>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (line.rfind("m,", 0) == 0 || line.rfind("#", 0) == 0) continue;  // header
        std::istringstream ls(line);
        std::string cell;
        try {
            std::uint64_t m;
            double re, im;
            if (!std::getline(ls, cell, ',')) throw std::invalid_argument(line);
            m = std::stoull(cell);
            if (!std::getline(ls, cell, ',')) throw std::invalid_argument(line);
            re = std::stod(cell);
            if (!std::getline(ls, cell, ',')) throw std::invalid_argument(line);
            im = std::stod(cell);
            rows.emplace_back(m, std::complex<double>(re, im));
        } catch (const std::exception&) {
            throw std::domain_error("bad inner-product CSV row: " + line);
        }
    }
    if (rows.empty()) throw std::domain_error("inner-product CSV has no data rows");
    std::sort(rows.begin(), rows.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    InnerProductSequence seq(rows.back().first);
    for (const auto& [m, v] : rows) {
        if (m < 1) throw std::domain_error("inner-product index must be >= 1");
        seq.c[m] = v;
    }
    return seq;
}

InnerProductSequence load_inner_product_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::domain_error("cannot open inner-product file " + path);
    return parse_inner_product_csv(in);
}

void Config::validate() const {
    if (bound < 1) throw std::domain_error("config: bound must be positive");
    if (prime_cutoff < 1) throw std::domain_error("config: prime cutoff must be positive");
    if (modulus < 1) throw std::domain_error("config: modulus must be positive");
    if (output != "json" && output != "csv")
        throw std::domain_error("config: output must be json or csv");
    if (!(tolerance > 0)) throw std::domain_error("config: tolerance must be positive");
}

Config config_from_json(const json& doc) {
    Config c;
    auto get = [&](const char* key, auto& field) {
        if (doc.contains(key)) field = doc[key].get<std::decay_t<decltype(field)>>();
    };
    get("bound", c.bound);
    get("prime_cutoff", c.prime_cutoff);
    get("modulus", c.modulus);
    get("char_index", c.char_index);
    get("weight", c.weight);
    get("output", c.output);
    get("eigenvalue_path", c.eigenvalue_path);
    get("inner_product_path", c.inner_product_path);
    get("tolerance", c.tolerance);
    c.validate();
    return c;
}

Config load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::domain_error("cannot open config file " + path);
    json doc;
    in >> doc;
    return config_from_json(doc);
}

}  // namespace hlf
