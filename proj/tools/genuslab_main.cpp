// genuslab_main.cpp — command-line front end. Talks to the library purely
// through the C API (genuslab.h); text and CSV renderings are derived from
// the library's canonical JSON reports.
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "genuslab/genuslab.h"

namespace {

using json = nlohmann::ordered_json;

// Exit codes: 0 pass, 1 identity/experiment failure, 2 scope or usage
// error (including cache i/o), 3 internal error.
int exit_code_for(glab_status s) {
  switch (s) {
    case GLAB_OK: return 0;
    case GLAB_ERR_SCOPE: return 2;
    case GLAB_ERR_USAGE: return 2;
    case GLAB_ERR_IO: return 2;
    case GLAB_ERR_INTERNAL: return 3;
  }
  return 3;
}

std::string fmt_num(const json& v) {
  if (v.is_number_float()) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v.get<double>());
    return buf;
  }
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_null()) return "-";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string join_list(const json& arr, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (i) out += sep;
    if (arr[i].is_array()) {
      std::string inner;
      for (std::size_t k = 0; k < arr[i].size(); ++k) {
        if (k) inner += ' ';
        inner += fmt_num(arr[i][k]);
      }
      out += inner;
    } else {
      out += fmt_num(arr[i]);
    }
  }
  return out;
}

// Exact character value zeta_m^k in display form.
std::string value_str(long long k, long long m) {
  if (k == 0) return "1";
  if (2 * k == m) return "-1";
  if (4 * k == m) return "i";
  if (4 * k == 3 * m) return "-i";
  return "e(" + std::to_string(k) + "/" + std::to_string(m) + ")";
}

std::string splitting_str(const json& s) {
  if (s.is_null()) return "-";
  return "(" + fmt_num(s[0]) + ", " + fmt_num(s[1]) + ")";
}

// ---- text renderers ------------------------------------------------------

void text_classgroup(const json& j) {
  std::printf("N: %s   D: %s\n", fmt_num(j["N"]).c_str(), fmt_num(j["D"]).c_str());
  std::printf("h: %s   k: %s   t: %s   w: %s\n", fmt_num(j["h"]).c_str(), fmt_num(j["k"]).c_str(),
              fmt_num(j["t"]).c_str(), fmt_num(j["w"]).c_str());
  std::printf("genera: %s\n", fmt_num(j["genus_count"]).c_str());
  std::printf("solvable: %s\n", j["solvable"].get<bool>() ? "yes" : "no");
  std::printf("invariant factors: [%s]\n", join_list(j["invariant_factors"], ", ").c_str());
  std::printf("prime discriminants: [%s]\n", join_list(j["prime_discriminants"], ", ").c_str());
  std::printf("reduced forms:\n");
  const json& forms = j["forms"];
  for (std::size_t i = 0; i < forms.size(); ++i) {
    std::printf("  [%zu] (%s, %s, %s)%s\n", i, fmt_num(forms[i][0]).c_str(),
                fmt_num(forms[i][1]).c_str(), fmt_num(forms[i][2]).c_str(),
                i == 0 ? "   principal" : "");
  }
  std::printf("splittings:\n");
  for (const auto& s : j["splittings"]) std::printf("  %s\n", splitting_str(s).c_str());
}

void text_characters(const json& j) {
  std::printf("N: %s   D: %s   h: %s   exponent: %s   genera: %s\n", fmt_num(j["N"]).c_str(),
              fmt_num(j["D"]).c_str(), fmt_num(j["h"]).c_str(), fmt_num(j["exponent"]).c_str(),
              fmt_num(j["genus_count"]).c_str());
  std::printf("%-6s %-6s %-6s %-12s %-10s values\n", "index", "order", "genus", "splitting", "conj_of");
  for (const auto& c : j["characters"]) {
    std::string values;
    for (const auto& v : c["values"]) {
      if (!values.empty()) values += ' ';
      values += value_str(v[0].get<long long>(), v[1].get<long long>());
    }
    std::printf("%-6s %-6s %-6s %-12s %-10s %s\n", fmt_num(c["index"]).c_str(),
                fmt_num(c["order"]).c_str(), c["is_genus"].get<bool>() ? "yes" : "no",
                splitting_str(c["splitting"]).c_str(), fmt_num(c["conjugate_of"]).c_str(),
                values.c_str());
  }
}

void text_coeffs(const json& j) {
  std::printf("N: %s   limit: %s   h: %s   w: %s\n", fmt_num(j["N"]).c_str(),
              fmt_num(j["limit"]).c_str(), fmt_num(j["h"]).c_str(), fmt_num(j["w"]).c_str());
  if (!j["cache_file"].is_null())
    std::printf("cache: %s (%s)\n", fmt_num(j["cache_file"]).c_str(),
                j["cache_loaded"].get<bool>() ? "loaded" : "written");
  long long h = j["h"].get<long long>();
  std::printf("%-8s", "n");
  for (long long i = 0; i < h; ++i) std::printf(" c_%-6lld", i);
  std::printf(" %-8s %-8s\n", "a", "r");
  std::size_t shown = 0;
  for (const auto& row : j["rows"]) {
    if (shown++ >= 20) break;
    std::printf("%-8s", fmt_num(row[0]).c_str());
    for (std::size_t i = 1; i < row.size(); ++i) std::printf(" %-8s", fmt_num(row[i]).c_str());
    std::printf("\n");
  }
  if (j["rows"].size() > 20 || j["rows_truncated"].get<bool>())
    std::printf("... (%s rows in report%s)\n", fmt_num(j["rows_shown"]).c_str(),
                j["rows_truncated"].get<bool>() ? ", table truncated" : "");
}

void text_group_line(const json& g) {
  std::printf("D: %s   h: %s   k: %s   t: %s   w: %s   genera: %s   solvable: %s\n",
              fmt_num(g["D"]).c_str(), fmt_num(g["h"]).c_str(), fmt_num(g["k"]).c_str(),
              fmt_num(g["t"]).c_str(), fmt_num(g["w"]).c_str(), fmt_num(g["genus_count"]).c_str(),
              g["solvable"].get<bool>() ? "yes" : "no");
}

void text_verify(const json& j) {
  std::printf("verify N=%s (limit %s)\n", fmt_num(j["N"]).c_str(), fmt_num(j["limit"]).c_str());
  text_group_line(j["group"]);
  const json& c = j["constants"];
  std::printf("constants: L1 = %s  A1 = %s  main_term = %s  consistency %s\n",
              fmt_num(c["L1_formula"]).c_str(), fmt_num(c["A1"]).c_str(),
              fmt_num(c["main_term_constant"]).c_str(), fmt_num(c["consistency"]).c_str());
  for (const auto& [name, v] : j["checks"].items())
    std::printf("  %-24s %s\n", name.c_str(), fmt_num(v).c_str());
  std::printf("result: %s\n", j["passed"].get<bool>() ? "PASS" : "FAIL");
}

void text_asymptotic(const json& j) {
  std::printf("asymptotic N=%s (limit %s, grid density %s)\n", fmt_num(j["N"]).c_str(),
              fmt_num(j["limit"]).c_str(), fmt_num(j["grid_density"]).c_str());
  text_group_line(j["group"]);
  const json& t = j["main_term_fit"];
  std::printf("sum r^2 fit: A = %s (target %s, rel dev %s)  B = %s  [%s]\n",
              fmt_num(t["A"]).c_str(), fmt_num(t["target"]).c_str(),
              fmt_num(t["rel_dev"]).c_str(), fmt_num(t["B"]).c_str(),
              t["low_confidence"].get<bool>() ? "low confidence" : fmt_num(t["verdict"]).c_str());
  if (!j["characters"].empty()) {
    std::printf("%-6s %-6s %-6s %-12s %-14s %-14s %s\n", "index", "order", "genus", "splitting",
                "fit_A", "A1_target", "classification");
    for (const auto& c : j["characters"]) {
      std::printf("%-6s %-6s %-6s %-12s %-14s %-14s %s\n", fmt_num(c["index"]).c_str(),
                  fmt_num(c["order"]).c_str(), c["is_genus"].get<bool>() ? "yes" : "no",
                  splitting_str(c["splitting"]).c_str(), fmt_num(c["fit_A"]).c_str(),
                  fmt_num(c["A1_target"]).c_str(), fmt_num(c["classification"]).c_str());
    }
  }
  if (!j["cross_terms"].empty()) {
    std::printf("cross terms (pairs of character rows):\n");
    std::printf("%-4s %-4s %-14s %-14s %s\n", "i", "j", "max|S|/x", "|S|/(x log x)", "bounded");
    for (const auto& c : j["cross_terms"]) {
      std::printf("%-4s %-4s %-14s %-14s %s\n", fmt_num(c["i"]).c_str(), fmt_num(c["j"]).c_str(),
                  fmt_num(c["max_S_over_x"]).c_str(), fmt_num(c["top_ratio_xlogx"]).c_str(),
                  c["bounded"].get<bool>() ? "yes" : "no");
    }
  }
  std::printf("result: %s\n", j["passed"].get<bool>() ? "PASS" : "FAIL");
}

void text_scan(const json& j) {
  std::printf("%-6s %-6s %-4s %-4s %-8s %s\n", "N", "h", "k", "t", "genera", "solvable");
  for (const auto& row : j["rows"]) {
    std::printf("%-6s %-6s %-4s %-4s %-8s %s\n", fmt_num(row["N"]).c_str(),
                fmt_num(row["h"]).c_str(), fmt_num(row["k"]).c_str(), fmt_num(row["t"]).c_str(),
                fmt_num(row["genus_count"]).c_str(), row["solvable"].get<bool>() ? "yes" : "no");
  }
}

void text_constants(const json& j) {
  for (const auto& [key, v] : j.items()) {
    if (key == "schema" || key == "command") continue;
    std::printf("%-20s %s\n", key.c_str(), fmt_num(v).c_str());
  }
}

// ---- csv renderers ---------------------------------------------------------

void csv_classgroup(const json& j) {
  std::printf("N,D,h,k,t,w,genus_count,solvable,invariant_factors,prime_discriminants,forms,splittings\n");
  std::printf("%s,%s,%s,%s,%s,%s,%s,%s,%s,%s,%s,%s\n", fmt_num(j["N"]).c_str(),
              fmt_num(j["D"]).c_str(), fmt_num(j["h"]).c_str(), fmt_num(j["k"]).c_str(),
              fmt_num(j["t"]).c_str(), fmt_num(j["w"]).c_str(), fmt_num(j["genus_count"]).c_str(),
              fmt_num(j["solvable"]).c_str(), join_list(j["invariant_factors"], ";").c_str(),
              join_list(j["prime_discriminants"], ";").c_str(), join_list(j["forms"], ";").c_str(),
              join_list(j["splittings"], ";").c_str());
}

void csv_characters(const json& j) {
  std::printf("N,index,order,is_genus,splitting,conjugate_of,values\n");
  for (const auto& c : j["characters"]) {
    std::string values;
    for (const auto& v : c["values"]) {
      if (!values.empty()) values += ';';
      values += fmt_num(v[0]) + "/" + fmt_num(v[1]);
    }
    std::string split = c["splitting"].is_null()
                            ? "-"
                            : fmt_num(c["splitting"][0]) + ";" + fmt_num(c["splitting"][1]);
    std::printf("%s,%s,%s,%s,%s,%s,%s\n", fmt_num(j["N"]).c_str(), fmt_num(c["index"]).c_str(),
                fmt_num(c["order"]).c_str(), fmt_num(c["is_genus"]).c_str(), split.c_str(),
                fmt_num(c["conjugate_of"]).c_str(), values.c_str());
  }
}

void csv_coeffs(const json& j) {
  long long h = j["h"].get<long long>();
  std::printf("n");
  for (long long i = 0; i < h; ++i) std::printf(",c_%lld", i);
  std::printf(",a,r\n");
  for (const auto& row : j["rows"]) {
    std::printf("%s", fmt_num(row[0]).c_str());
    for (std::size_t i = 1; i < row.size(); ++i) std::printf(",%s", fmt_num(row[i]).c_str());
    std::printf("\n");
  }
}

void csv_verify(const json& j) {
  std::printf("check,verdict\n");
  for (const auto& [name, v] : j["checks"].items())
    std::printf("%s,%s\n", name.c_str(), fmt_num(v).c_str());
  std::printf("passed,%s\n", fmt_num(j["passed"]).c_str());
}

void csv_asymptotic(const json& j) {
  std::printf("row,i,j,order,is_genus,A,B,target,rel_dev,classification,bounded\n");
  const json& t = j["main_term_fit"];
  std::printf("main_term_fit,,,,,%s,%s,%s,%s,%s,\n", fmt_num(t["A"]).c_str(), fmt_num(t["B"]).c_str(),
              fmt_num(t["target"]).c_str(), fmt_num(t["rel_dev"]).c_str(),
              fmt_num(t["verdict"]).c_str());
  for (const auto& c : j["characters"]) {
    std::printf("character,%s,,%s,%s,%s,%s,%s,%s,%s,\n", fmt_num(c["index"]).c_str(),
                fmt_num(c["order"]).c_str(), fmt_num(c["is_genus"]).c_str(),
                fmt_num(c["fit_A"]).c_str(), fmt_num(c["fit_B"]).c_str(),
                fmt_num(c["A1_target"]).c_str(), fmt_num(c["rel_dev_A1"]).c_str(),
                fmt_num(c["classification"]).c_str());
  }
  for (const auto& c : j["cross_terms"]) {
    std::printf("cross,%s,%s,,,%s,,%s,,,%s\n", fmt_num(c["i"]).c_str(), fmt_num(c["j"]).c_str(),
                fmt_num(c["max_S_over_x"]).c_str(), fmt_num(c["top_ratio_xlogx"]).c_str(),
                fmt_num(c["bounded"]).c_str());
  }
}

void csv_scan(const json& j) {
  std::printf("N,h,k,t,genus_count,solvable\n");
  for (const auto& row : j["rows"]) {
    std::printf("%s,%s,%s,%s,%s,%s\n", fmt_num(row["N"]).c_str(), fmt_num(row["h"]).c_str(),
                fmt_num(row["k"]).c_str(), fmt_num(row["t"]).c_str(),
                fmt_num(row["genus_count"]).c_str(), fmt_num(row["solvable"]).c_str());
  }
}

void csv_constants(const json& j) {
  std::string hdr, vals;
  for (const auto& [key, v] : j.items()) {
    if (key == "schema" || key == "command") continue;
    if (!hdr.empty()) {
      hdr += ',';
      vals += ',';
    }
    hdr += key;
    vals += fmt_num(v);
  }
  std::printf("%s\n%s\n", hdr.c_str(), vals.c_str());
}

int render(const std::string& command, const std::string& format, const char* json_text) {
  if (format == "json") {
    std::printf("%s\n", json_text);
    return 0;
  }
  json j = json::parse(json_text);
  if (format == "csv") {
    if (command == "classgroup") csv_classgroup(j);
    else if (command == "characters") csv_characters(j);
    else if (command == "coeffs") csv_coeffs(j);
    else if (command == "verify") csv_verify(j);
    else if (command == "asymptotic") csv_asymptotic(j);
    else if (command == "scan") csv_scan(j);
    else csv_constants(j);
  } else {
    if (command == "classgroup") text_classgroup(j);
    else if (command == "characters") text_characters(j);
    else if (command == "coeffs") text_coeffs(j);
    else if (command == "verify") text_verify(j);
    else if (command == "asymptotic") text_asymptotic(j);
    else if (command == "scan") text_scan(j);
    else text_constants(j);
  }
  return 0;
}

struct CommonOpts {
  long long N = 0;
  long long limit = 0;
  int grid_density = 0;
  std::string format = "text";
  std::string cache_dir;
  bool timings = false;
  long long nmax = 100;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"genuslab — class groups, genus characters, and representation-count asymptotics "
               "for x^2 + N y^2"};
  app.set_version_flag("--version", glab_version());
  app.require_subcommand(1);
  CommonOpts o;

  auto add_common = [&](CLI::App* sub, bool needs_n) {
    if (needs_n) sub->add_option("-N,--N", o.N, "squarefree N with -N != 1 mod 4")->required();
    sub->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    return sub;
  };

  CLI::App* cmd_classgroup = add_common(app.add_subcommand("classgroup", "reduced forms, h, genera, splittings"), true);
  CLI::App* cmd_characters = add_common(app.add_subcommand("characters", "character table with genus classification"), true);
  CLI::App* cmd_coeffs = add_common(app.add_subcommand("coeffs", "coefficient table c_i(n), a(n), r(n)"), true);
  CLI::App* cmd_verify = add_common(app.add_subcommand("verify", "exact identity suites"), true);
  CLI::App* cmd_asymptotic = add_common(app.add_subcommand("asymptotic", "partial-sum fits against the predicted constants"), true);
  CLI::App* cmd_scan = add_common(app.add_subcommand("scan", "solvability table for squarefree N <= nmax"), false);
  CLI::App* cmd_constants = add_common(app.add_subcommand("constants", "L(1), alpha(N), A1, B1, main-term constant"), true);

  // every subcommand accepts the full option set; commands ignore what
  // they do not use
  for (CLI::App* sub : {cmd_classgroup, cmd_characters, cmd_coeffs, cmd_verify, cmd_asymptotic,
                        cmd_scan, cmd_constants}) {
    sub->add_option("--limit", o.limit, "coefficient truncation bound");
    sub->add_option("--cache-dir", o.cache_dir, "coefficient cache directory");
    sub->add_option("--grid-density", o.grid_density, "grid points per decade (default 4)");
    sub->add_flag("--timings", o.timings, "include wall-clock timings in the report");
  }
  cmd_scan->add_option("--nmax", o.nmax, "largest N to scan (default 100)");
  cmd_scan->add_option("-N,--N", o.nmax, "alias for --nmax");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {  // --help / --version
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (const char* env = std::getenv("GENUSLAB_CACHE"); env && *env) o.cache_dir = env;

  glab_report_options ropt{};
  ropt.limit = o.limit;
  ropt.grid_density = o.grid_density;
  ropt.cache_dir = o.cache_dir.empty() ? nullptr : o.cache_dir.c_str();
  ropt.timings = o.timings ? 1 : 0;

  glab_report* rep = nullptr;
  glab_status st = GLAB_OK;
  std::string command;
  if (cmd_classgroup->parsed()) {
    command = "classgroup";
    st = glab_report_classgroup(o.N, &rep);
  } else if (cmd_characters->parsed()) {
    command = "characters";
    st = glab_report_characters(o.N, &rep);
  } else if (cmd_coeffs->parsed()) {
    command = "coeffs";
    st = glab_report_coeffs(o.N, &ropt, &rep);
  } else if (cmd_verify->parsed()) {
    command = "verify";
    st = glab_report_verify(o.N, &ropt, &rep);
  } else if (cmd_asymptotic->parsed()) {
    command = "asymptotic";
    st = glab_report_asymptotic(o.N, &ropt, &rep);
  } else if (cmd_scan->parsed()) {
    command = "scan";
    st = glab_report_scan(o.nmax, &rep);
  } else {
    command = "constants";
    st = glab_report_constants(o.N, &rep);
  }

  if (st != GLAB_OK) {
    std::fprintf(stderr, "genuslab: %s: %s\n", glab_status_str(st), glab_last_error());
    return exit_code_for(st);
  }
  render(command, o.format, glab_report_json(rep));
  int rc = glab_report_passed(rep) ? 0 : 1;
  glab_report_free(rep);
  return rc;
}
