// experiments.cpp — scans, fits, and growth classification.
#include "genuslab/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "genuslab/analytic.hpp"

namespace genuslab {

namespace {

// Fit window: the top half of the grid, widened to at least 4 points.
std::size_t fit_start(std::size_t m) {
  std::size_t want = std::max<std::size_t>(4, (m + 1) / 2);
  return m - std::min(m, want);
}

struct LinFit {
  double slope = 0, intercept = 0, rms = 0;
  int points = 0;
};

// Plain regression of S/x on log x over [start, end).
LinFit regress_S_over_x(const ScanGrid& sg, std::size_t start) {
  LinFit out;
  std::size_t m = sg.x.size();
  double st = 0, sy = 0, stt = 0, sty = 0;
  std::size_t n = m - start;
  for (std::size_t i = start; i < m; ++i) {
    double t = std::log(static_cast<double>(sg.x[i]));
    double y = sg.S[i] / static_cast<double>(sg.x[i]);
    st += t;
    sy += y;
    stt += t * t;
    sty += t * y;
  }
  double denom = static_cast<double>(n) * stt - st * st;
  if (denom == 0) throw std::invalid_argument("fit: degenerate grid");
  out.slope = (static_cast<double>(n) * sty - st * sy) / denom;
  out.intercept = (sy - out.slope * st) / static_cast<double>(n);
  double acc = 0;
  for (std::size_t i = start; i < m; ++i) {
    double t = std::log(static_cast<double>(sg.x[i]));
    double y = sg.S[i] / static_cast<double>(sg.x[i]);
    double e = y - (out.slope * t + out.intercept);
    acc += e * e;
  }
  out.rms = std::sqrt(acc / static_cast<double>(n));
  out.points = static_cast<int>(n);
  return out;
}

}  // namespace

std::vector<long long> scan_grid(std::size_t limit, int per_decade) {
  if (per_decade < 1) throw std::invalid_argument("scan_grid: per_decade must be >= 1");
  std::vector<long long> out;
  for (int j = 0;; ++j) {
    double v = std::pow(10.0, 3.0 + static_cast<double>(j) / per_decade);
    long long x = static_cast<long long>(std::floor(v + 1e-9));
    if (x > static_cast<long long>(limit)) break;
    if (out.empty() || x != out.back()) out.push_back(x);
  }
  if (out.empty()) out.push_back(static_cast<long long>(limit));
  return out;
}

template <typename T>
static ScanGrid scan_impl(const std::vector<T>& series, const std::vector<long long>& grid) {
  if (grid.empty()) throw std::invalid_argument("scan: empty grid");
  if (static_cast<std::size_t>(grid.back()) >= series.size())
    throw std::invalid_argument("scan: grid exceeds series length");
  ScanGrid sg;
  sg.x = grid;
  sg.S.resize(grid.size());
  long double acc = 0;
  std::size_t gi = 0;
  for (long long n = 1; n <= grid.back(); ++n) {
    acc += static_cast<long double>(series[static_cast<std::size_t>(n)]);
    while (gi < grid.size() && n == grid[gi]) {
      sg.S[gi] = static_cast<double>(acc);
      ++gi;
    }
  }
  return sg;
}

ScanGrid scan(const std::vector<long long>& series, const std::vector<long long>& grid) {
  return scan_impl(series, grid);
}
ScanGrid scan(const std::vector<double>& series, const std::vector<long long>& grid) {
  return scan_impl(series, grid);
}

FitResult fit_xlogx(const ScanGrid& sg) {
  if (sg.x.size() < 4) throw std::invalid_argument("fit_xlogx: need at least 4 grid points");
  LinFit lf = regress_S_over_x(sg, fit_start(sg.x.size()));
  FitResult out;
  out.A = lf.slope;
  out.B = lf.intercept;
  out.residual = lf.rms;
  out.points = lf.points;
  out.tag = growth_classify(sg);
  return out;
}

std::string growth_classify(const ScanGrid& sg) {
  std::size_t m = sg.x.size();
  if (m < 6) return "inconclusive";
  double decades = std::log10(static_cast<double>(sg.x[m - 1]) / static_cast<double>(sg.x[0]));
  if (decades < 2.0 - 1e-9) return "inconclusive";

  std::size_t start = fit_start(m);
  LinFit lf = regress_S_over_x(sg, start);
  double xm = static_cast<double>(sg.x[m - 1]);
  double scale = sg.S[m - 1] / (xm * std::log(xm));
  if (lf.slope > 0.1 * scale && scale > 0) return "xlogx";

  double v0 = sg.S[start] / static_cast<double>(sg.x[start]);
  double vm = sg.S[m - 1] / xm;
  if (v0 == 0.0 && vm == 0.0) return "linear";
  if (v0 <= 0.0) return "inconclusive";
  double span = std::log10(static_cast<double>(sg.x[m - 1]) / static_cast<double>(sg.x[start]));
  if (span <= 0) return "inconclusive";
  double per_decade = std::pow(vm / v0, 1.0 / span);
  if (std::fabs(per_decade - 1.0) < 0.5) return "linear";
  return "inconclusive";
}

std::vector<ScanGrid> diagonal_scans(const CoeffTable& T,
                                     const std::vector<IdealClassCharacter>& chars,
                                     const std::vector<long long>& grid) {
  if (grid.empty() || static_cast<std::size_t>(grid.back()) > T.limit)
    throw std::invalid_argument("diagonal_scans: grid exceeds the table limit");
  std::size_t H = chars.size();
  std::size_t hh = static_cast<std::size_t>(T.h);
  std::vector<std::vector<std::complex<double>>> vals(H);
  for (std::size_t j = 0; j < H; ++j) {
    vals[j].resize(hh);
    for (std::size_t i = 0; i < hh; ++i) vals[j][i] = chars[j].value_c(static_cast<int>(i));
  }
  std::vector<ScanGrid> out(H);
  for (std::size_t j = 0; j < H; ++j) {
    out[j].x = grid;
    out[j].S.assign(grid.size(), 0.0);
  }
  std::vector<long double> acc(H, 0.0L);
  std::size_t gi = 0;
  for (long long n = 1; n <= grid.back(); ++n) {
    for (std::size_t j = 0; j < H; ++j) {
      std::complex<double> b(0.0, 0.0);
      for (std::size_t i = 0; i < hh; ++i) {
        long long cnt = T.c[i][static_cast<std::size_t>(n)];
        if (cnt) b += static_cast<double>(cnt) * vals[j][i];
      }
      acc[j] += std::norm(b);
    }
    while (gi < grid.size() && n == grid[gi]) {
      for (std::size_t j = 0; j < H; ++j) out[j].S[gi] = static_cast<double>(acc[j]);
      ++gi;
    }
  }
  return out;
}

std::vector<CrossTermRow> cross_term_suite(const CoeffTable& T,
                                           const std::vector<IdealClassCharacter>& chars,
                                           const std::vector<long long>& grid) {
  if (grid.empty() || static_cast<std::size_t>(grid.back()) > T.limit)
    throw std::invalid_argument("cross_term_suite: grid exceeds the table limit");
  std::size_t H = chars.size();
  std::size_t hh = static_cast<std::size_t>(T.h);
  std::vector<std::vector<std::complex<double>>> vals(H);
  for (std::size_t j = 0; j < H; ++j) {
    vals[j].resize(hh);
    for (std::size_t i = 0; i < hh; ++i) vals[j][i] = chars[j].value_c(static_cast<int>(i));
  }
  std::vector<CrossTermRow> rows;
  for (std::size_t i = 0; i < H; ++i)
    for (std::size_t j = i + 1; j < H; ++j) rows.push_back({i, j, 0, 0, {}});
  for (auto& row : rows) row.S_abs.assign(grid.size(), 0.0);

  std::vector<std::complex<long double>> acc(rows.size(), {0.0L, 0.0L});
  std::vector<std::complex<double>> b(H);
  std::size_t gi = 0;
  for (long long n = 1; n <= grid.back(); ++n) {
    for (std::size_t j = 0; j < H; ++j) {
      std::complex<double> v(0.0, 0.0);
      for (std::size_t i = 0; i < hh; ++i) {
        long long cnt = T.c[i][static_cast<std::size_t>(n)];
        if (cnt) v += static_cast<double>(cnt) * vals[j][i];
      }
      b[j] = v;
    }
    for (std::size_t ri = 0; ri < rows.size(); ++ri) {
      std::complex<double> prod = b[rows[ri].i] * b[rows[ri].j];
      acc[ri] += std::complex<long double>(prod.real(), prod.imag());
    }
    while (gi < grid.size() && n == grid[gi]) {
      for (std::size_t ri = 0; ri < rows.size(); ++ri)
        rows[ri].S_abs[gi] = static_cast<double>(std::abs(std::complex<double>(
            static_cast<double>(acc[ri].real()), static_cast<double>(acc[ri].imag()))));
      ++gi;
    }
  }
  for (auto& row : rows) {
    for (std::size_t g = 0; g < grid.size(); ++g) {
      row.max_S_over_x = std::max(row.max_S_over_x, row.S_abs[g] / static_cast<double>(grid[g]));
    }
    double xm = static_cast<double>(grid.back());
    row.top_ratio_xlogx = row.S_abs.back() / (xm * std::log(xm));
  }
  return rows;
}

namespace {

// per-decade maxima of S_abs[g]/weight(x_g), decades keyed by digit count
std::vector<double> decade_maxima(const CrossTermRow& row, const std::vector<long long>& grid,
                                  bool log_weight) {
  std::vector<double> maxima;
  int last_dec = -1;
  for (std::size_t g = 0; g < grid.size(); ++g) {
    long long x = grid[g];
    int dec = 0;
    for (long long p = 1; p * 10 <= x; p *= 10) ++dec;
    double w = static_cast<double>(x) * (log_weight ? std::log(static_cast<double>(x)) : 1.0);
    double v = row.S_abs[g] / w;
    if (dec != last_dec) {
      maxima.push_back(v);
      last_dec = dec;
    } else {
      maxima.back() = std::max(maxima.back(), v);
    }
  }
  return maxima;
}

}  // namespace

bool cross_growth_bounded(const CrossTermRow& row, const std::vector<long long>& grid) {
  std::vector<double> m = decade_maxima(row, grid, false);
  for (std::size_t d = 1; d < m.size(); ++d) {
    if (m[d] > 1.5 * m[d - 1] + 1e-12) return false;
  }
  return true;
}

bool cross_xlogx_monotone(const CrossTermRow& row, const std::vector<long long>& grid,
                          int decades) {
  std::vector<double> m = decade_maxima(row, grid, true);
  while (static_cast<int>(m.size()) > decades + 1) m.erase(m.begin());
  for (std::size_t d = 1; d < m.size(); ++d) {
    if (m[d] > m[d - 1] * (1.0 + 1e-9)) return false;
  }
  return true;
}

MainTermEntry main_term_experiment(const CoeffTable& T, int per_decade) {
  std::vector<long long> grid = scan_grid(T.limit, per_decade);
  std::vector<long long> r2(T.limit + 1, 0);
  for (std::size_t n = 1; n <= T.limit; ++n) r2[n] = T.r[n] * T.r[n];
  ScanGrid sg = scan(r2, grid);
  MainTermEntry e;
  e.N = T.N;
  e.limit = T.limit;
  e.target = main_term_constant(T.N);
  e.low_confidence = grid.size() < 6 ||
                     std::log10(static_cast<double>(grid.back()) / static_cast<double>(grid.front())) < 2.0 - 1e-9;
  if (grid.size() >= 4) {
    FitResult fit = fit_xlogx(sg);
    e.A = fit.A;
    e.B = fit.B;
    e.rel_dev = std::fabs(e.A - e.target) / e.target;
  } else {
    e.low_confidence = true;
    e.A = 0;
    e.B = 0;
    e.rel_dev = 1.0;
  }
  return e;
}

MainTermEntry main_term_experiment(long long N, std::size_t limit, int per_decade) {
  CoeffTable T = build_coeff_table(N, limit);
  return main_term_experiment(T, per_decade);
}

}  // namespace genuslab
