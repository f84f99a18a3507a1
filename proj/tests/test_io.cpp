#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <sstream>

#include "hlf/io.hpp"
#include "hlf/verify.hpp"

using hlf::Cyclotomic;
using nlohmann::json;
using C = std::complex<double>;

TEST_CASE("complex and cyclotomic JSON forms") {
    json z = hlf::complex_to_json(C(1.5, -2.0));
    CHECK(z["re"] == 1.5);
    CHECK(z["im"] == -2.0);

    json five = hlf::cyclotomic_to_json(Cyclotomic::integer(5));
    CHECK(five["order"] == 1);
    REQUIRE(five["terms"].size() == 1);
    CHECK(five["terms"][0][0] == 0);
    CHECK(five["terms"][0][1] == "5");
    CHECK(five["terms"][0][2] == "1");

    json root = hlf::cyclotomic_to_json(Cyclotomic::root_of_unity(3, 1));
    CHECK(root["order"] == 3);
    REQUIRE(root["terms"].size() == 1);
    CHECK(root["terms"][0][0] == 1);

    json zero = hlf::cyclotomic_to_json(Cyclotomic::zero());
    CHECK(zero["terms"].empty());

    json q = hlf::cyclotomic_to_json(Cyclotomic::rational(mpq_class(-2, 3)));
    CHECK(q["terms"][0][1] == "-2");
    CHECK(q["terms"][0][2] == "3");
}

TEST_CASE("character table export") {
    json table = hlf::character_table_json(3);
    REQUIRE(table.size() == 8);
    const json& first = table[0];
    CHECK(first["index"] == 0);
    CHECK(first["modulus"] == 3);
    CHECK(first["order"] == 1);
    CHECK(first["entries"].size() == 9);
    // Entry at residue 0 (non-unit) has a null exponent and value 0.
    CHECK(first["entries"][0]["exponent"].is_null());
    CHECK(first["entries"][0]["re"] == 0.0);
    // Entry at residue (0,1)*? -- residue index 1 corresponds to (a,b) = (0,1).
    CHECK(first["entries"][1]["re"] == 1.0);
    for (const auto& row : table) {
        CHECK(row["generator_exponents"].is_array());
        CHECK(row["order_root"].get<unsigned>() >= 1);
    }
    // Indices are distinct and sequential.
    for (size_t i = 0; i < table.size(); ++i) CHECK(table[i]["index"] == i);
}

TEST_CASE("series exports") {
    hlf::ExactSeries z = hlf::zeta_series(4);
    json j = hlf::series_to_json(z);
    CHECK(j["bound"] == 4);
    REQUIRE(j["coefficients"].size() == 4);
    CHECK(j["coefficients"][2]["terms"][0][1] == "1");

    std::string csv = hlf::series_to_csv(z);
    std::istringstream lines(csv);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "n,re,im");
    std::getline(lines, line);
    CHECK(line == "1,1,0");
}

TEST_CASE("verification reports to JSON lines") {
    hlf::VerificationReport r;
    r.identity = "theta";
    r.modulus = 5;
    r.char_index = 2;
    r.params = "M=100";
    r.pass = true;
    json j = hlf::report_to_json(r);
    CHECK(j["identity"] == "theta");
    CHECK(j["pass"] == true);

    std::string jsonl = hlf::reports_to_jsonl({r, r, r});
    int count = 0;
    std::istringstream in(jsonl);
    std::string line;
    while (std::getline(in, line)) {
        json parsed = json::parse(line);
        CHECK(parsed["modulus"] == 5);
        ++count;
    }
    CHECK(count == 3);
}

TEST_CASE("value export schema") {
    json v = hlf::value_export_json(C(2.0, 0.5), C(1.25, -0.75), 100, 5000, 1e-8);
    CHECK(v["s"]["re"] == 2.0);
    CHECK(v["value"]["im"] == -0.75);
    CHECK(v["truncation"]["P"] == 100);
    CHECK(v["truncation"]["M"] == 5000);
    CHECK(v["truncation"]["heuristic"] == 1e-8);
}

TEST_CASE("numeric eigenvalue JSON parses into complex slots") {
    json doc = json::array();
    doc.push_back(
        {{"prime", 3},
         {"type", "inert"},
         {"eigenvalues",
          {{"T_p", {{"re", 1.0}, {"im", 0.5}}},
           {"T_1p", {{"re", -2.0}, {"im", 0.0}}},
           {"D_p", {{"re", 1.0}, {"im", 0.0}}}}}});
    doc.push_back(
        {{"prime", 2},
         {"type", "ramified"},
         {"eigenvalues",
          {{"T_2", {{"re", 3.0}, {"im", 0.0}}},
           {"T_r", {{"re", 0.0}, {"im", 0.0}}},
           {"D_r", {{"re", 1.0}, {"im", 0.0}}}}}});
    hlf::EigenvalueFile f = hlf::parse_eigenvalue_json(doc);
    CHECK(f.symbolic.empty());
    REQUIRE(f.numeric.size() == 2);
    auto inert = std::get<hlf::InertEigenvalues<C>>(f.numeric.at(3));
    CHECK(inert.t_p == C(1.0, 0.5));
    CHECK(inert.t_1p == C(-2.0, 0.0));
    auto ram = std::get<hlf::RamifiedEigenvalues<C>>(f.numeric.at(2));
    CHECK(ram.t_2 == C(3.0, 0.0));
}

TEST_CASE("symbolic eigenvalue JSON parses into symbols") {
    json doc = json::array();
    doc.push_back({{"prime", 5},
                   {"type", "split"},
                   {"eigenvalues",
                    {{"T_p", "a"},
                     {"T_pi", "b"},
                     {"T_pib", "c"},
                     {"D_p", "d"},
                     {"D_pi", "e"},
                     {"D_pib", "f"}}}});
    hlf::EigenvalueFile f = hlf::parse_eigenvalue_json(doc);
    CHECK(f.numeric.empty());
    REQUIRE(f.symbolic.size() == 1);
    auto split = std::get<hlf::SplitEigenvalues<hlf::SymPoly>>(f.symbolic.at(5));
    CHECK(split.t_p == hlf::SymPoly::symbol("a"));
    CHECK(split.delta_pi_bar == hlf::SymPoly::symbol("f"));
}

TEST_CASE("malformed eigenvalue JSON is rejected") {
    json mixed = json::array();
    mixed.push_back({{"prime", 3},
                     {"type", "inert"},
                     {"eigenvalues",
                      {{"T_p", "a"},
                       {"T_1p", {{"re", 1.0}, {"im", 0.0}}},
                       {"D_p", "d"}}}});
    CHECK_THROWS_AS(hlf::parse_eigenvalue_json(mixed), std::domain_error);

    json wrong_type = json::array();
    wrong_type.push_back({{"prime", 3},
                          {"type", "split"},
                          {"eigenvalues",
                           {{"T_p", "a"},
                            {"T_pi", "b"},
                            {"T_pib", "c"},
                            {"D_p", "d"},
                            {"D_pi", "e"},
                            {"D_pib", "f"}}}});
    CHECK_THROWS_AS(hlf::parse_eigenvalue_json(wrong_type), std::domain_error);

    json missing = json::array();
    missing.push_back({{"prime", 3},
                       {"type", "inert"},
                       {"eigenvalues", {{"T_p", "a"}, {"T_1p", "b"}}}});
    CHECK_THROWS_AS(hlf::parse_eigenvalue_json(missing), std::domain_error);

    CHECK_THROWS_AS(hlf::parse_eigenvalue_json(json::object()), std::domain_error);
}

TEST_CASE("eigenvalue file round trip through disk") {
    json doc = json::array();
    doc.push_back(
        {{"prime", 3},
         {"type", "inert"},
         {"eigenvalues",
          {{"T_p", {{"re", 0.0}, {"im", 0.0}}},
           {"T_1p", {{"re", 0.0}, {"im", 0.0}}},
           {"D_p", {{"re", 1.0}, {"im", 0.0}}}}}});
    const std::string path = "/tmp/hlf_test_eigen.json";
    {
        std::ofstream out(path);
        out << doc.dump();
    }
    hlf::EigenvalueFile f = hlf::load_eigenvalue_file(path);
    CHECK(f.numeric.count(3) == 1);
    CHECK_THROWS_AS(hlf::load_eigenvalue_file("/tmp/does_not_exist_hlf.json"),
                    std::domain_error);
}

TEST_CASE("inner product CSV parsing") {
    std::istringstream in("m,re,im\n3,1.5,-2\n1,1,0\n");
    hlf::InnerProductSequence seq = hlf::parse_inner_product_csv(in);
    CHECK(seq.length() == 3);
    CHECK(seq.c[1] == C(1.0, 0.0));
    CHECK(seq.c[2] == C(0.0, 0.0));
    CHECK(seq.c[3] == C(1.5, -2.0));

    std::istringstream bad("m,re,im\nx,1,2\n");
    CHECK_THROWS_AS(hlf::parse_inner_product_csv(bad), std::domain_error);
    std::istringstream empty("m,re,im\n");
    CHECK_THROWS_AS(hlf::parse_inner_product_csv(empty), std::domain_error);
    std::istringstream zero_index("0,1,2\n");
    CHECK_THROWS_AS(hlf::parse_inner_product_csv(zero_index), std::domain_error);
}

TEST_CASE("config defaults, overrides, and validation") {
    hlf::Config def;
    CHECK(def.bound == 100000);
    CHECK(def.prime_cutoff == 10000);
    CHECK(def.modulus == 1);
    CHECK(def.output == "json");
    CHECK(def.tolerance == 1e-9);
    CHECK_NOTHROW(def.validate());

    json doc{{"bound", 500}, {"modulus", 3}, {"output", "csv"}, {"weight", 8}};
    hlf::Config cfg = hlf::config_from_json(doc);
    CHECK(cfg.bound == 500);
    CHECK(cfg.modulus == 3);
    CHECK(cfg.output == "csv");
    CHECK(cfg.weight == 8);
    CHECK(cfg.prime_cutoff == 10000);

    json bad_output{{"output", "xml"}};
    CHECK_THROWS_AS(hlf::config_from_json(bad_output), std::domain_error);
    json bad_bound{{"bound", 0}};
    CHECK_THROWS_AS(hlf::config_from_json(bad_bound), std::domain_error);
    json bad_tol{{"tolerance", -1.0}};
    CHECK_THROWS_AS(hlf::config_from_json(bad_tol), std::domain_error);
}
