// Command-line surface for the hlf library.  Subcommands: factor, characters,
// coeffs, verify, eval, prefactor.  All output is machine readable (JSON or
// CSV) and byte-identical across repeated runs with the same arguments.
//
// Exit codes: 0 success / all checks pass, 1 verification failure,
// 2 usage or input error.

#include <cmath>
#include <complex>
#include <cstdint>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hlf/characters.hpp"
#include "hlf/gaussian.hpp"
#include "hlf/io.hpp"
#include "hlf/lfunction.hpp"
#include "hlf/series.hpp"
#include "hlf/verify.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

std::complex<double> parse_complex_pair(const std::string& text) {
    auto comma = text.find(',');
    try {
        if (comma == std::string::npos) {
            std::size_t used = 0;
            double re = std::stod(text, &used);
            if (used != text.size()) throw std::invalid_argument(text);
            return {re, 0.0};
        }
        std::string left = text.substr(0, comma), right = text.substr(comma + 1);
        std::size_t lu = 0, ru = 0;
        double re = std::stod(left, &lu);
        double im = std::stod(right, &ru);
        if (lu != left.size() || ru != right.size()) throw std::invalid_argument(text);
        return {re, im};
    } catch (const std::exception&) {
        throw std::domain_error("cannot parse complex value '" + text +
                                "' (expected re or re,im)");
    }
}

template <class T>
std::vector<T> parse_list(const std::string& csv) {
    std::vector<T> out;
    std::istringstream in(csv);
    std::string cell;
    while (std::getline(in, cell, ',')) {
        if (cell.empty()) continue;
        try {
            if constexpr (std::is_signed_v<T>)
                out.push_back(static_cast<T>(std::stoll(cell)));
            else
                out.push_back(static_cast<T>(std::stoull(cell)));
        } catch (const std::exception&) {
            throw std::domain_error("cannot parse list entry '" + cell + "'");
        }
    }
    return out;
}

std::string format_double(double v) {
    std::ostringstream out;
    out.precision(17);
    out << v;
    return out.str();
}

/// Truncation metadata; a non-finite heuristic is exported as "unbounded".
json truncation_json(std::uint64_t P, std::uint64_t M, double heuristic) {
    json t{{"P", P}, {"M", M}};
    if (std::isfinite(heuristic))
        t["heuristic"] = heuristic;
    else
        t["heuristic"] = "unbounded";
    return t;
}

hlf::CharacterZi select_character(std::uint64_t modulus, std::uint64_t index) {
    std::vector<hlf::CharacterZi> chars =
        hlf::enumerate_characters(static_cast<unsigned>(modulus));
    if (index >= chars.size())
        throw std::domain_error("character index " + std::to_string(index) +
                                " out of range for modulus " + std::to_string(modulus) +
                                " (" + std::to_string(chars.size()) + " characters)");
    return chars[index];
}

int cmd_factor(const std::string& literal, const hlf::Config& cfg) {
    hlf::GaussianInt alpha = hlf::GaussianInt::parse(literal);
    hlf::GaussianFactorization f = hlf::factor(alpha);
    if (cfg.output == "csv") {
        std::ostringstream out;
        out << "kind,re,im,exponent\n";
        out << "unit," << f.unit.re() << "," << f.unit.im() << ",1\n";
        for (const auto& [prime, e] : f.primes)
            out << "prime," << prime.re() << "," << prime.im() << "," << e << "\n";
        std::cout << out.str();
        return kExitOk;
    }
    json factors = json::array();
    for (const auto& [prime, e] : f.primes)
        factors.push_back(json{{"prime", prime.str()},
                               {"re", prime.re().get_str()},
                               {"im", prime.im().get_str()},
                               {"exponent", e}});
    json doc{{"input", alpha.str()},
             {"norm", alpha.norm().get_str()},
             {"unit", f.unit.str()},
             {"factors", factors}};
    std::cout << doc.dump(2) << "\n";
    return kExitOk;
}

int cmd_characters(const hlf::Config& cfg) {
    if (cfg.output == "csv") {
        hlf::UnitGroup group = hlf::unit_group(static_cast<unsigned>(cfg.modulus));
        std::vector<hlf::CharacterZi> chars = hlf::enumerate_characters(group);
        std::ostringstream out;
        out.precision(17);
        out << "index,a,b,re,im,exponent\n";
        const unsigned N = static_cast<unsigned>(cfg.modulus);
        for (std::size_t idx = 0; idx < chars.size(); ++idx) {
            for (unsigned a = 0; a < std::max(N, 1u); ++a) {
                for (unsigned b = 0; b < std::max(N, 1u); ++b) {
                    hlf::GaussianInt alpha(static_cast<long>(a), static_cast<long>(b));
                    std::complex<double> v = chars[idx].eval(alpha).to_complex();
                    auto e = chars[idx].eval_exponent(alpha);
                    out << idx << "," << a << "," << b << "," << v.real() << ","
                        << v.imag() << ",";
                    if (e)
                        out << *e;
                    out << "\n";
                }
            }
        }
        std::cout << out.str();
        return kExitOk;
    }
    std::cout << hlf::character_table_json(cfg.modulus).dump(2) << "\n";
    return kExitOk;
}

int cmd_coeffs(const std::string& which, const hlf::Config& cfg) {
    hlf::ExactSeries series = [&]() -> hlf::ExactSeries {
        if (which == "zeta") return hlf::zeta_series(cfg.bound);
        hlf::CharacterZi chi = select_character(cfg.modulus, cfg.char_index);
        if (which == "lchi") return hlf::l_series(chi.restrict_to_Z(), cfg.bound);
        if (which == "zetaK") return hlf::dedekind_lattice(chi, cfg.bound);
        throw std::domain_error("unknown series '" + which +
                                "' (expected zeta, lchi, or zetaK)");
    }();
    if (cfg.output == "csv") {
        std::cout << hlf::series_to_csv(series);
        return kExitOk;
    }
    json doc{{"series", which},
             {"modulus", cfg.modulus},
             {"char_index", cfg.char_index},
             {"data", hlf::series_to_json(series)}};
    std::cout << doc.dump(2) << "\n";
    return kExitOk;
}

int cmd_verify(const hlf::Config& cfg, const std::string& weights_csv,
               const std::string& primes_csv, bool inject_corruption, int threads) {
    std::vector<int> weights = parse_list<int>(weights_csv);
    std::vector<std::uint64_t> primes = parse_list<std::uint64_t>(primes_csv);
    std::vector<hlf::VerificationReport> reports =
        hlf::verify_all(cfg.modulus, cfg.bound, weights, primes, inject_corruption,
                        threads);
    bool all_pass = true;
    if (cfg.output == "csv") {
        std::ostringstream out;
        out << "identity,modulus,char_index,params,pass,witness\n";
        for (const auto& r : reports) {
            out << r.identity << "," << r.modulus << "," << r.char_index << ",\""
                << r.params << "\"," << (r.pass ? "true" : "false") << ",\""
                << r.witness << "\"\n";
            all_pass = all_pass && r.pass;
        }
        std::cout << out.str();
    } else {
        std::cout << hlf::reports_to_jsonl(reports);
        for (const auto& r : reports) all_pass = all_pass && r.pass;
    }
    return all_pass ? kExitOk : kExitVerifyFail;
}

int cmd_eval(const std::string& what, const std::string& s_text,
             const hlf::Config& cfg, int threads) {
    std::complex<double> s = parse_complex_pair(s_text);
    const std::uint64_t M = cfg.bound;
    json doc;

    if (what == "zeta" || what == "lchi" || what == "zetaK") {
        hlf::ExactSeries series = [&]() -> hlf::ExactSeries {
            if (what == "zeta") return hlf::zeta_series(M);
            hlf::CharacterZi chi = select_character(cfg.modulus, cfg.char_index);
            if (what == "lchi") return hlf::l_series(chi.restrict_to_Z(), M);
            return hlf::dedekind_lattice(chi, M);
        }();
        if (!(s.real() > 1.0))
            throw std::domain_error("eval " + what + ": Re(s) must exceed 1");
        hlf::EvalResult r = hlf::evaluate(series, s, s.real(), 1.0);
        doc = hlf::value_export_json(s, r.value, 0, M, r.tail_bound);
    } else if (what == "zstar") {
        hlf::CharacterZi chi = select_character(cfg.modulus, cfg.char_index);
        hlf::StarPrefactor pre =
            hlf::star_prefactor(cfg.weight, cfg.modulus, chi, s, M);
        if (cfg.eigenvalue_path.empty()) {
            doc = hlf::value_export_json(s, pre.value.value, 0, M, pre.value.abs_err);
            doc["prefactor_only"] = true;
        } else {
            hlf::EigenvalueFile file = hlf::load_eigenvalue_file(cfg.eigenvalue_path);
            if (!file.symbolic.empty())
                throw std::domain_error(
                    "eval zstar requires numeric eigenvalues, found symbols");
            hlf::LFunctionSpec spec{cfg.weight, cfg.modulus, chi, cfg.prime_cutoff,
                                    file.numeric};
            spec.validate();
            hlf::ZValueReport z = hlf::z_value(spec, s, threads);
            doc = hlf::value_export_json(s, pre.value.value * z.value,
                                         spec.prime_cutoff, M,
                                         z.last_factor_deviation);
            doc["prefactor_only"] = false;
            if (!spec.possible_poles().empty())
                doc["possible_poles"] = spec.possible_poles();
        }
        json err;
        if (std::isfinite(pre.value.abs_err))
            err = pre.value.abs_err;
        else
            err = "unbounded";
        doc["prefactor_error"] = err;
    } else if (what == "dstar") {
        if (cfg.inner_product_path.empty())
            throw std::domain_error("eval dstar requires --inner-products <csv>");
        hlf::CharacterZi chi = select_character(cfg.modulus, cfg.char_index);
        hlf::InnerProductSequence c =
            hlf::load_inner_product_csv(cfg.inner_product_path);
        hlf::DStarValue v =
            hlf::d_star_value(cfg.weight, cfg.modulus, chi, c, s, M);
        doc = hlf::value_export_json(
            s, v.value, 0, M,
            std::numeric_limits<double>::infinity());
        doc["tail_bounded"] = v.tail_bounded;
    } else {
        throw std::domain_error("unknown eval target '" + what +
                                "' (expected zeta, lchi, zetaK, zstar, or dstar)");
    }

    if (cfg.output == "csv") {
        std::ostringstream out;
        out.precision(17);
        out << "s_re,s_im,value_re,value_im,P,M,heuristic\n";
        const json& t = doc["truncation"];
        out << s.real() << "," << s.imag() << "," << double(doc["value"]["re"]) << ","
            << double(doc["value"]["im"]) << "," << std::uint64_t(t["P"]) << ","
            << std::uint64_t(t["M"]) << ",";
        if (t["heuristic"].is_number())
            out << format_double(t["heuristic"]);
        else
            out << "unbounded";
        out << "\n";
        std::cout << out.str();
    } else {
        std::cout << doc.dump(2) << "\n";
    }
    return kExitOk;
}

int cmd_prefactor(const std::string& s_text, const hlf::Config& cfg) {
    std::complex<double> s = parse_complex_pair(s_text);
    hlf::CharacterZi chi = select_character(cfg.modulus, cfg.char_index);
    hlf::StarPrefactor pre =
        hlf::star_prefactor(cfg.weight, cfg.modulus, chi, s, cfg.bound);
    json doc{{"s", hlf::complex_to_json(s)},
             {"value", hlf::complex_to_json(pre.value.value)},
             {"common", hlf::complex_to_json(pre.common.value)},
             {"truncation", truncation_json(0, cfg.bound, pre.value.abs_err)}};
    if (cfg.output == "csv") {
        std::ostringstream out;
        out.precision(17);
        out << "s_re,s_im,value_re,value_im,common_re,common_im,error\n";
        out << s.real() << "," << s.imag() << "," << pre.value.value.real() << ","
            << pre.value.value.imag() << "," << pre.common.value.real() << ","
            << pre.common.value.imag() << ",";
        if (std::isfinite(pre.value.abs_err))
            out << format_double(pre.value.abs_err);
        else
            out << "unbounded";
        out << "\n";
        std::cout << out.str();
    } else {
        std::cout << doc.dump(2) << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Arithmetic of a twisted degree-6 L-function over Z[i]: "
                 "Gaussian factorization, residue characters, Dirichlet series, "
                 "Hecke local factors, and exact identity verification"};
    app.require_subcommand(1);

    std::string config_path;
    hlf::Config cfg;  // spec defaults; overridden by file, then by flags
    std::string output_flag, s_text = "0";
    std::uint64_t bound_flag = 0, cutoff_flag = 0, modulus_flag = 0, index_flag = 0;
    int weight_flag = 0, threads = 1;
    std::string eigen_path, inner_path;

    auto* opt_config = app.add_option("--config", config_path, "JSON config file");
    auto* opt_output =
        app.add_option("--output", output_flag, "output format: json or csv");
    auto* opt_bound = app.add_option("--bound", bound_flag, "series bound M");
    auto* opt_cutoff =
        app.add_option("--prime-cutoff", cutoff_flag, "Euler product cutoff P");
    auto* opt_modulus = app.add_option("--modulus", modulus_flag, "character modulus N");
    auto* opt_index =
        app.add_option("--char-index", index_flag, "character index within modulus");
    auto* opt_weight = app.add_option("--weight", weight_flag, "weight k");
    auto* opt_eigen =
        app.add_option("--eigenvalues", eigen_path, "eigenvalue JSON path");
    auto* opt_inner =
        app.add_option("--inner-products", inner_path, "inner-product CSV path");
    app.add_option("--threads", threads, "worker threads (output is identical)");

    auto* sub_factor =
        app.add_subcommand("factor", "factor a Gaussian integer literal");
    sub_factor->fallthrough();
    std::string literal;
    sub_factor->add_option("literal", literal, "a+bi literal, e.g. 5 or -3+4i")
        ->required();

    auto* sub_chars =
        app.add_subcommand("characters", "dump the character table mod N");
    sub_chars->fallthrough();

    auto* sub_coeffs =
        app.add_subcommand("coeffs", "export truncated series coefficients");
    sub_coeffs->fallthrough();
    std::string which_series = "zeta";
    sub_coeffs->add_option("--series", which_series, "zeta, lchi, or zetaK");

    auto* sub_verify =
        app.add_subcommand("verify", "run the Euler-product identity checks");
    sub_verify->fallthrough();
    std::string weights_csv = "10", primes_csv = "2,3,5";
    sub_verify->add_option("--weights", weights_csv, "comma-separated weights");
    sub_verify->add_option("--primes", primes_csv,
                           "comma-separated primes ('' for coefficient checks only)");
    bool inject_corruption = false;
    sub_verify
        ->add_flag("--inject-corruption", inject_corruption,
                   "deliberately corrupt one factor (failure-path test hook)")
        ->group("");  // hidden

    auto* sub_eval = app.add_subcommand("eval", "evaluate a series or L-value");
    sub_eval->fallthrough();
    std::string what = "zeta";
    sub_eval->add_option("--what", what, "zeta, lchi, zetaK, zstar, or dstar");
    sub_eval->add_option("--s", s_text, "evaluation point re or re,im")->required();

    auto* sub_prefactor =
        app.add_subcommand("prefactor", "completed-function prefactor at s");
    sub_prefactor->fallthrough();
    sub_prefactor->add_option("--s", s_text, "evaluation point re or re,im")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints the message
        return kExitUsage;
    }

    try {
        if (opt_config->count()) cfg = hlf::load_config_file(config_path);
        if (opt_output->count()) cfg.output = output_flag;
        if (opt_bound->count()) cfg.bound = bound_flag;
        if (opt_cutoff->count()) cfg.prime_cutoff = cutoff_flag;
        if (opt_modulus->count()) cfg.modulus = modulus_flag;
        if (opt_index->count()) cfg.char_index = index_flag;
        if (opt_weight->count()) cfg.weight = weight_flag;
        if (opt_eigen->count()) cfg.eigenvalue_path = eigen_path;
        if (opt_inner->count()) cfg.inner_product_path = inner_path;
        cfg.validate();
        if (threads < 1) throw std::domain_error("--threads must be positive");

        if (sub_factor->parsed()) return cmd_factor(literal, cfg);
        if (sub_chars->parsed()) return cmd_characters(cfg);
        if (sub_coeffs->parsed()) return cmd_coeffs(which_series, cfg);
        if (sub_verify->parsed())
            return cmd_verify(cfg, weights_csv, primes_csv, inject_corruption, threads);
        if (sub_eval->parsed()) return cmd_eval(what, s_text, cfg, threads);
        if (sub_prefactor->parsed()) return cmd_prefactor(s_text, cfg);
        throw std::domain_error("no subcommand selected");
    } catch (const hlf::pole_error& e) {
        std::cerr << "pole: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
