// Exercises the shared library strictly through the C header.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include <json.hpp>

#include "genuslab/genuslab.h"

using json = nlohmann::ordered_json;

TEST_CASE("version and status strings") {
  CHECK(std::string(glab_version()) == "1.0.0");
  CHECK(std::string(glab_status_str(GLAB_OK)) == "ok");
  CHECK(std::string(glab_status_str(GLAB_ERR_SCOPE)) == "out of scope");
}

TEST_CASE("kronecker and main_term_fit helpers") {
  int k = 0;
  REQUIRE(glab_kronecker(-4, 3, &k) == GLAB_OK);
  CHECK(k == -1);
  CHECK(glab_kronecker(-4, 3, nullptr) == GLAB_ERR_USAGE);
  double c = 0;
  REQUIRE(glab_main_term_constant(14, &c) == GLAB_OK);
  CHECK(c == doctest::Approx(0.5));
  CHECK(glab_main_term_constant(12, &c) == GLAB_ERR_SCOPE);
  CHECK(std::strlen(glab_last_error()) > 0);
}

TEST_CASE("class group handle") {
  glab_class_group* g = nullptr;
  REQUIRE(glab_class_group_new(14, &g) == GLAB_OK);
  REQUIRE(g != nullptr);
  CHECK(glab_class_group_discriminant(g) == -56);
  CHECK(glab_class_group_h(g) == 4);
  CHECK(glab_class_group_k(g) == 2);
  CHECK(glab_class_group_genus_count(g) == 2);
  CHECK(glab_class_group_is_solvable(g) == 0);
  CHECK(glab_class_group_form_count(g) == 4);
  long long a = 0, b = 0, c = 0;
  REQUIRE(glab_class_group_form(g, 0, &a, &b, &c) == GLAB_OK);
  CHECK(a == 1);
  CHECK(b == 0);
  CHECK(c == 14);
  CHECK(glab_class_group_form(g, 99, &a, &b, &c) == GLAB_ERR_USAGE);
  glab_class_group_free(g);

  glab_class_group* bad = nullptr;
  CHECK(glab_class_group_new(12, &bad) == GLAB_ERR_SCOPE);
  CHECK(bad == nullptr);
  CHECK(std::string(glab_last_error()).find("out of scope") != std::string::npos);
}

TEST_CASE("reports through the C API") {
  glab_report* rep = nullptr;
  REQUIRE(glab_report_classgroup(5, &rep) == GLAB_OK);
  json j = json::parse(glab_report_json(rep));
  CHECK(j["schema"] == "genuslab/1");
  CHECK(j["h"] == 2);
  CHECK(glab_report_passed(rep) == 1);
  std::string first(glab_report_json(rep));
  glab_report_free(rep);

  // byte-identical across invocations
  REQUIRE(glab_report_classgroup(5, &rep) == GLAB_OK);
  CHECK(first == glab_report_json(rep));
  glab_report_free(rep);

  REQUIRE(glab_report_constants(1, &rep) == GLAB_OK);
  j = json::parse(glab_report_json(rep));
  CHECK(j["A1"].get<double>() == doctest::Approx(0.25));
  glab_report_free(rep);

  glab_report_options opt{};
  opt.limit = 400;
  REQUIRE(glab_report_verify(5, &opt, &rep) == GLAB_OK);
  CHECK(glab_report_passed(rep) == 1);
  glab_report_free(rep);

  REQUIRE(glab_report_scan(20, &rep) == GLAB_OK);
  j = json::parse(glab_report_json(rep));
  CHECK(j["rows"].size() > 0);
  glab_report_free(rep);

  CHECK(glab_report_verify(9, &opt, &rep) == GLAB_ERR_SCOPE);
}
