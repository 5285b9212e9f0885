// report.hpp — orchestration of the per-N reports behind the CLI and the
// C API. Every report serializes to deterministic JSON: fixed key order,
// floats rounded to 12 significant digits, no run-dependent fields unless
// timings are requested.
#pragma once

#include <cstddef>
#include <string>

namespace genuslab {

struct ReportOptions {
  std::size_t limit = 0;     // 0: per-command default
  int grid_density = 4;      // grid points per decade
  std::string cache_dir;     // empty: no coefficient cache
  bool timings = false;      // include wall-clock timings (non-deterministic)
};

struct Report {
  std::string json;
  bool passed = true;  // all verdicts pass (true when no verdicts apply)
};

Report classgroup_report(long long N);
Report characters_report(long long N);
Report coeffs_report(long long N, const ReportOptions& opt);
Report verify_report(long long N, const ReportOptions& opt);
Report asymptotic_report(long long N, const ReportOptions& opt);
Report scan_report(long long nmax);
Report constants_report_json(long long N);

}  // namespace genuslab
