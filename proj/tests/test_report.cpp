#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <map>

#include <json.hpp>

#include "genuslab/errors.hpp"
#include "genuslab/report.hpp"

using namespace genuslab;
using json = nlohmann::ordered_json;

TEST_CASE("classgroup report: content and determinism") {
  Report a = classgroup_report(14);
  Report b = classgroup_report(14);
  CHECK(a.json == b.json);
  json j = json::parse(a.json);
  CHECK(j["schema"] == "genuslab/1");
  CHECK(j["command"] == "classgroup");
  CHECK(j["N"] == 14);
  CHECK(j["D"] == -56);
  CHECK(j["h"] == 4);
  CHECK(j["k"] == 2);
  CHECK(j["t"] == 2);
  CHECK(j["genus_count"] == 2);
  CHECK(j["solvable"] == false);
  CHECK(j["invariant_factors"] == json::array({4}));
  CHECK(j["forms"].size() == 4);
  CHECK(j["forms"][0] == json::array({1, 0, 14}));
  CHECK_THROWS_AS(classgroup_report(12), ScopeError);
}

TEST_CASE("characters report") {
  json j = json::parse(characters_report(14).json);
  CHECK(j["characters"].size() == 4);
  int genus = 0, complex_chars = 0;
  for (const auto& c : j["characters"]) {
    if (c["is_genus"].get<bool>()) {
      ++genus;
      CHECK_FALSE(c["splitting"].is_null());
    } else {
      ++complex_chars;
      CHECK(c["splitting"].is_null());
      CHECK_FALSE(c["conjugate_of"].is_null());
    }
  }
  CHECK(genus == 2);
  CHECK(complex_chars == 2);
}

TEST_CASE("verify report passes on N=5 and N=21") {
  ReportOptions opt;
  opt.limit = 600;
  for (long long N : {5LL, 21LL}) {
    Report r = verify_report(N, opt);
    CHECK(r.passed);
    json j = json::parse(r.json);
    CHECK(j["passed"] == true);
    for (const auto& [name, v] : j["checks"].items()) {
      CAPTURE(name);
      CHECK(v == "pass");
    }
    CHECK(j.find("timings_ms") == j.end());
    CHECK(j["constants"]["consistency"] == "pass");
    for (const auto& c : j["characters"]) CHECK(c["classification"] == "skipped");
  }
}

TEST_CASE("verify report with timings includes them") {
  ReportOptions opt;
  opt.limit = 200;
  opt.timings = true;
  json j = json::parse(verify_report(5, opt).json);
  CHECK(j.find("timings_ms") != j.end());
}

TEST_CASE("coeffs report with cache") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "genuslab_report_cache";
  fs::remove_all(dir);
  ReportOptions opt;
  opt.limit = 50;
  opt.cache_dir = dir.string();
  json first = json::parse(coeffs_report(5, opt).json);
  CHECK(first["cache_loaded"] == false);
  CHECK_FALSE(first["cache_file"].is_null());
  json second = json::parse(coeffs_report(5, opt).json);
  CHECK(second["cache_loaded"] == true);
  // identical content apart from the load flag
  first.erase("cache_loaded");
  second.erase("cache_loaded");
  CHECK(first == second);
  CHECK(first["rows"].size() == 50);
  // row layout: n, c_0 .. c_{h-1}, a, r
  CHECK(first["rows"][0] == json::array({1, 1, 0, 1, 2}));
  fs::remove_all(dir);
}

TEST_CASE("scan report") {
  json j = json::parse(scan_report(30).json);
  std::map<long long, json> by_n;
  for (const auto& row : j["rows"]) by_n[row["N"].get<long long>()] = row;
  CHECK(by_n.count(3) == 0);   // out of scope
  CHECK(by_n.count(12) == 0);  // not squarefree
  for (long long N : {1, 2, 5, 6, 10, 13}) CHECK(by_n[N]["solvable"] == true);
  for (long long N : {14, 17, 26}) CHECK(by_n[N]["solvable"] == false);
  CHECK(by_n[14]["h"] == 4);
  CHECK(by_n[26]["h"] == 6);
  CHECK(by_n[26]["genus_count"] == 2);
}

TEST_CASE("constants report") {
  Report r = constants_report_json(2);
  CHECK(r.passed);
  json j = json::parse(r.json);
  CHECK(j["main_term_constant"].get<double>() == doctest::Approx(2.0));
  CHECK(j["A1"].get<double>() == doctest::Approx(0.5));
  CHECK(j["consistency"] == "pass");
  // byte-identical on repeat runs
  CHECK(constants_report_json(2).json == r.json);
}

TEST_CASE("asymptotic report at unit-test scale") {
  ReportOptions opt;
  opt.limit = 100000;
  Report r = asymptotic_report(5, opt);
  json j = json::parse(r.json);
  CHECK(j["main_term_fit"]["target"].get<double>() == doctest::Approx(4.0 / 3.0));
  CHECK(j["main_term_fit"]["low_confidence"] == false);
  CHECK(j["main_term_fit"]["rel_dev"].get<double>() < 0.25);
  CHECK(j["characters"].size() == 2);
  CHECK(j["cross_terms"].size() == 1);
  CHECK(r.passed);

  // tiny limit: tagged low-confidence, still exits cleanly
  ReportOptions tiny;
  tiny.limit = 1000;
  json jt = json::parse(asymptotic_report(5, tiny).json);
  CHECK(jt["low_confidence"] == true);
  CHECK(jt["main_term_fit"]["verdict"] == "skipped");
}
