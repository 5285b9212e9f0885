// experiments.hpp — partial-sum scans over geometric cutoff grids and
// two-term A x log x + B x fits, used to compare the sums sum r(n)^2,
// sum a(n)^2, sum |b(n)|^2, and the cross sums against their predicted
// growth.
#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "genuslab/characters.hpp"
#include "genuslab/coeffs.hpp"

namespace genuslab {

// Geometric cutoff grid floor(10^(3 + j/per_decade)) clipped to limit.
// A limit below 10^3 degenerates to the single point {limit}.
std::vector<long long> scan_grid(std::size_t limit, int per_decade = 4);

struct ScanGrid {
  std::vector<long long> x;
  std::vector<double> S;  // partial sums at the grid points
};

// Exact prefix sums of series[1..] at the grid points. The grid must not
// exceed the series length.
ScanGrid scan(const std::vector<long long>& series, const std::vector<long long>& grid);
ScanGrid scan(const std::vector<double>& series, const std::vector<long long>& grid);

struct FitResult {
  double A = 0;
  double B = 0;
  double residual = 0;  // rms of S/x - (A log x + B) over the fit window
  int points = 0;       // grid points used (top half, at least 4)
  std::string tag;      // growth classification of the scanned series
};

// Least squares for S(x) = A x log x + B x, fitted as the regression of
// S/x on log x over the top half of the grid. Needs >= 4 grid points.
FitResult fit_xlogx(const ScanGrid& sg);

// "xlogx" | "linear" | "inconclusive". Needs >= 6 points spanning >= 2
// decades, otherwise inconclusive. Regresses S/x on log x over the top
// half: slope above 0.1 * S(x_m)/(x_m log x_m) means xlogx; below it with
// S/x drifting less than 50% per decade means linear.
std::string growth_classify(const ScanGrid& sg);

// One diagonal scan per character: S_j(x) = sum_{n<=x} |b_j(n)|^2.
std::vector<ScanGrid> diagonal_scans(const CoeffTable& T,
                                     const std::vector<IdealClassCharacter>& chars,
                                     const std::vector<long long>& grid);

struct CrossTermRow {
  std::size_t i = 0, j = 0;        // character indices, i < j (i = 0: trivial)
  double max_S_over_x = 0;         // max over the grid of |S(x)|/x
  double top_ratio_xlogx = 0;      // |S(x_m)|/(x_m log x_m)
  std::vector<double> S_abs;       // |S| at every grid point
};

// All pairwise cross sums sum_{n<=x} b_i(n) b_j(n), i != j; the diagonal
// belongs to diagonal_scans.
std::vector<CrossTermRow> cross_term_suite(const CoeffTable& T,
                                           const std::vector<IdealClassCharacter>& chars,
                                           const std::vector<long long>& grid);

// Per-decade maxima of |S|/x grow by at most 50% from one grid decade to
// the next.
bool cross_growth_bounded(const CrossTermRow& row, const std::vector<long long>& grid);

// Per-decade maxima of |S|/(x log x) decrease across the last `decades`
// decade transitions of the grid.
bool cross_xlogx_monotone(const CrossTermRow& row, const std::vector<long long>& grid,
                          int decades = 3);

struct MainTermEntry {
  long long N = 0;
  std::size_t limit = 0;
  double A = 0, B = 0;
  double target = 0;    // (3/N) prod 2p/(p+1)
  double rel_dev = 0;   // |A - target| / target
  bool low_confidence = false;  // grid too small for a meaningful fit
};

// Fits sum_{n<=x} r(n)^2 and compares A against main_term_constant(N).
MainTermEntry main_term_experiment(long long N, std::size_t limit, int per_decade = 4);
MainTermEntry main_term_experiment(const CoeffTable& T, int per_decade = 4);

}  // namespace genuslab
