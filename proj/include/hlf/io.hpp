#pragma once

#include <complex>
#include <cstdint>
#include <istream>
#include <map>
#include <string>

#include "json.hpp"

#include "hlf/characters.hpp"
#include "hlf/lfunction.hpp"
#include "hlf/local_factors.hpp"
#include "hlf/series.hpp"
#include "hlf/verify.hpp"

namespace hlf {

/// {re, im} pair; all floating values cross the JSON boundary in this form.
nlohmann::json complex_to_json(std::complex<double> z);

/// Exact cyclotomic encoding {order, terms: [[exponent, num, den], ...]}
/// with numerator and denominator as decimal strings.
nlohmann::json cyclotomic_to_json(const Cyclotomic& c);

/// One character's table: {index, modulus, order_root, order,
/// generator_exponents, entries: [{re, im, exponent}]} where entries run
/// over residues a+bi in row-major (a, b) order and exponent is the power
/// of the order_root-th root of unity (null off the unit group).
nlohmann::json character_to_json(const CharacterZi& chi, std::size_t index,
                                 const UnitGroup& group);

/// All characters mod N in enumeration order.
nlohmann::json character_table_json(std::uint64_t N);

/// {bound, coefficients: [...]} with exact cyclotomic coefficient encoding.
nlohmann::json series_to_json(const ExactSeries& s);

/// CSV rows "n,re,im", one per coefficient, header included.
std::string series_to_csv(const ExactSeries& s);

nlohmann::json report_to_json(const VerificationReport& r);

/// One JSON object per line, in report order.
std::string reports_to_jsonl(const std::vector<VerificationReport>& reports);

/// {s: {re,im}, value: {re,im}, truncation: {P, M, heuristic}}.
nlohmann::json value_export_json(std::complex<double> s, std::complex<double> value,
                                 std::uint64_t P, std::uint64_t M, double heuristic);

/// Parsed eigenvalue file; a prime's data is either fully numeric or fully
/// symbolic (mixing slot kinds within one prime is rejected).
struct EigenvalueFile {
    std::map<std::uint64_t, EigenvalueData<std::complex<double>>> numeric;
    std::map<std::uint64_t, EigenvalueData<SymPoly>> symbolic;
};

/// Accepts an array of {prime, type, eigenvalues: {name: {re,im} | "symbol"}}.
EigenvalueFile parse_eigenvalue_json(const nlohmann::json& doc);
EigenvalueFile load_eigenvalue_file(const std::string& path);

/// CSV rows (m, re, im); m must be 1..M contiguous after sorting.
InnerProductSequence parse_inner_product_csv(std::istream& in);
InnerProductSequence load_inner_product_csv(const std::string& path);

struct Config {
    std::uint64_t bound = 100000;        // series truncation M
    std::uint64_t prime_cutoff = 10000;  // Euler product cutoff P
    std::uint64_t modulus = 1;
    std::size_t char_index = 0;
    int weight = 10;
    std::string output = "json";  // json | csv
    std::string eigenvalue_path;
    std::string inner_product_path;
    double tolerance = 1e-9;

    void validate() const;
};

Config config_from_json(const nlohmann::json& doc);
Config load_config_file(const std::string& path);

}  // namespace hlf
