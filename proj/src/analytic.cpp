// analytic.cpp — constant evaluation.
//
// L(1, chi) and L'(1, chi) are conditionally convergent; both are summed
// at cutoffs that are whole multiples of the character period, where the
// tail has a clean asymptotic expansion (1/x powers for L, with log x/x
// terms for L'), and the expansion is then extrapolated to x = infinity.
#include "genuslab/analytic.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "genuslab/arith.hpp"
#include "genuslab/coeffs.hpp"
#include "genuslab/quadforms.hpp"

namespace genuslab {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<int> character_period_table(long long D) {
  long long q = D < 0 ? -D : D;
  std::vector<int> chi(static_cast<std::size_t>(q));
  for (long long r = 0; r < q; ++r) chi[static_cast<std::size_t>(r)] = kronecker(D, r);
  return chi;
}

// Neville extrapolation of (x_i, E_i) to 1/x -> 0.
long double neville_to_zero(const std::vector<long double>& x, const std::vector<long double>& E) {
  std::size_t n = x.size();
  std::vector<long double> u(n), p(E);
  for (std::size_t i = 0; i < n; ++i) u[i] = 1.0L / x[i];
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = 0; i + level < n; ++i) {
      p[i] = (u[i + level] * p[i] - u[i] * p[i + 1]) / (u[i + level] - u[i]);
    }
  }
  return p[0];
}

struct SeriesNodes {
  std::vector<long double> x;
  std::vector<long double> partial;      // sum chi(n)/n at x
  std::vector<long double> partial_log;  // sum chi(n) log n / n at x
};

SeriesNodes character_series_nodes(long long D, int levels) {
  long long q = D < 0 ? -D : D;
  std::vector<int> chi = character_period_table(D);
  SeriesNodes out;
  long long base = 4 * q;
  long long xmax = base << (levels - 1);
  long double s = 0.0L, slog = 0.0L;
  long long next = base;
  for (long long n = 1; n <= xmax; ++n) {
    int v = chi[static_cast<std::size_t>(n % q)];
    if (v != 0) {
      long double term = static_cast<long double>(v) / n;
      s += term;
      slog += term * std::log(static_cast<long double>(n));
    }
    if (n == next) {
      out.x.push_back(static_cast<long double>(n));
      out.partial.push_back(s);
      out.partial_log.push_back(slog);
      next <<= 1;
    }
  }
  return out;
}

// Least squares in long double via normal equations with column scaling.
std::vector<long double> lls_solve(const std::vector<std::vector<long double>>& A,
                                   const std::vector<long double>& y) {
  std::size_t rows = A.size(), cols = A[0].size();
  std::vector<long double> scale(cols, 0.0L);
  for (std::size_t j = 0; j < cols; ++j) {
    for (std::size_t i = 0; i < rows; ++i) scale[j] += A[i][j] * A[i][j];
    scale[j] = std::sqrt(scale[j]);
    if (scale[j] == 0.0L) scale[j] = 1.0L;
  }
  std::vector<std::vector<long double>> M(cols, std::vector<long double>(cols + 1, 0.0L));
  for (std::size_t j = 0; j < cols; ++j) {
    for (std::size_t l = 0; l < cols; ++l) {
      long double acc = 0.0L;
      for (std::size_t i = 0; i < rows; ++i) acc += (A[i][j] / scale[j]) * (A[i][l] / scale[l]);
      M[j][l] = acc;
    }
    long double acc = 0.0L;
    for (std::size_t i = 0; i < rows; ++i) acc += (A[i][j] / scale[j]) * y[i];
    M[j][cols] = acc;
  }
  // Gaussian elimination with partial pivoting
  for (std::size_t col = 0; col < cols; ++col) {
    std::size_t piv = col;
    for (std::size_t rw = col + 1; rw < cols; ++rw)
      if (std::fabs(static_cast<double>(M[rw][col])) > std::fabs(static_cast<double>(M[piv][col]))) piv = rw;
    std::swap(M[col], M[piv]);
    for (std::size_t rw = 0; rw < cols; ++rw) {
      if (rw == col || M[col][col] == 0.0L) continue;
      long double fac = M[rw][col] / M[col][col];
      for (std::size_t cc = col; cc <= cols; ++cc) M[rw][cc] -= fac * M[col][cc];
    }
  }
  std::vector<long double> sol(cols);
  for (std::size_t j = 0; j < cols; ++j) sol[j] = M[j][cols] / M[j][j] / scale[j];
  return sol;
}

// Fit E_i = L' + (a1 + b1 log x)/x + (a2 + b2 log x)/x^2 over the nodes.
long double extrapolate_log_series(const std::vector<long double>& x,
                                   const std::vector<long double>& E) {
  std::size_t n = x.size();
  std::vector<std::vector<long double>> A(n, std::vector<long double>(5));
  std::vector<long double> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    long double lx = std::log(x[i]);
    A[i][0] = 1.0L;
    A[i][1] = 1.0L / x[i];
    A[i][2] = lx / x[i];
    A[i][3] = 1.0L / (x[i] * x[i]);
    A[i][4] = lx / (x[i] * x[i]);
    y[i] = E[i];
  }
  return lls_solve(A, y)[0];
}

void check_discriminant(long long D) {
  if (D >= 0 || !is_fundamental_discriminant(D))
    throw std::invalid_argument("analytic: D must be a negative fundamental discriminant");
  if (-D > 100000000LL)
    throw std::invalid_argument("analytic: |D| above 1e8 is outside the supported desk scale");
}

}  // namespace

double L1_series(long long D) {
  check_discriminant(D);
  SeriesNodes nodes = character_series_nodes(D, 12);
  return static_cast<double>(neville_to_zero(nodes.x, nodes.partial));
}

L1Values L1(long long D, long long h, int w) {
  check_discriminant(D);
  L1Values out;
  double absD = static_cast<double>(-D);
  out.formula = 2.0 * kPi * static_cast<double>(h) / (static_cast<double>(w) * std::sqrt(absD));
  out.series = L1_series(D);
  out.variant = static_cast<double>(h) * kPi / std::sqrt(absD / 4.0);
  return out;
}

double zeta_prime_2() {
  // zeta'(2) = -sum_{n>=2} log n / n^2; tail by Euler-Maclaurin at M.
  const long long M = 20000;
  long double s = 0.0L;
  for (long long n = 2; n < M; ++n) {
    long double ln = std::log(static_cast<long double>(n));
    s += ln / (static_cast<long double>(n) * n);
  }
  long double m = static_cast<long double>(M);
  long double lm = std::log(m);
  long double integral = (lm + 1.0L) / m;
  long double f_m = lm / (m * m);
  long double fp_m = (1.0L - 2.0L * lm) / (m * m * m);
  long double fppp_m = (26.0L - 24.0L * lm) / (m * m * m * m * m);
  long double tail = integral + f_m / 2.0L - fp_m / 12.0L + fppp_m / 720.0L;
  return static_cast<double>(-(s + tail));
}

LprimeResult Lprime_over_L(long long D) {
  check_discriminant(D);
  long long q = D < 0 ? -D : D;
  // escalate the node ladder until successive fits stabilize, capped at
  // 1e8 summed terms
  int levels = 12;
  long double full = 0.0L, partial = 0.0L;
  while (true) {
    SeriesNodes nodes = character_series_nodes(D, levels);
    std::vector<long double> E(nodes.partial_log.size());
    for (std::size_t i = 0; i < E.size(); ++i) E[i] = -nodes.partial_log[i];
    full = extrapolate_log_series(nodes.x, E);
    std::vector<long double> xs(nodes.x.begin(), nodes.x.end() - 3);
    std::vector<long double> Es(E.begin(), E.end() - 3);
    partial = extrapolate_log_series(xs, Es);
    if (std::fabs(static_cast<double>(full - partial)) /
            std::max(1.0, std::fabs(static_cast<double>(full))) < 1e-4)
      break;
    if ((4 * q) << levels > 100000000LL) break;  // cutoff reached, keep the flagged estimate
    ++levels;
  }

  LprimeResult out;
  out.lprime = static_cast<double>(full);
  double l1 = L1_series(D);
  out.ratio = out.lprime / l1;
  out.converged = std::fabs(static_cast<double>(full - partial)) /
                      std::max(1.0, std::fabs(out.lprime)) < 1e-4;
  return out;
}

double sum_log_p_over_p_plus_1(long long N) {
  double s = 0.0;
  for (long long p : distinct_primes(static_cast<unsigned long long>(2 * N)))
    s += std::log(static_cast<double>(p)) / static_cast<double>(p + 1);
  return s;
}

double alpha_N(long long N) {
  require_in_scope(N);
  LprimeResult lp = Lprime_over_L(-4 * N);
  return -1.0 + 2.0 * kEulerGamma + sum_log_p_over_p_plus_1(N) + 2.0 * lp.ratio -
         (12.0 / (kPi * kPi)) * zeta_prime_2();
}

A1B1 A1_B1(long long N) {
  require_in_scope(N);
  ClassGroup G = class_group(-4 * N);
  int w = unit_count(G.D);
  double l1 = 2.0 * kPi * static_cast<double>(G.h) /
              (static_cast<double>(w) * std::sqrt(static_cast<double>(-G.D)));
  double prod = 1.0;
  for (long long p : distinct_primes(static_cast<unsigned long long>(2 * N)))
    prod *= static_cast<double>(p) / static_cast<double>(p + 1);
  A1B1 out;
  out.A1 = 6.0 / (kPi * kPi) * l1 * l1 * prod;
  out.B1 = out.A1 * alpha_N(N);
  return out;
}

double main_term_constant(long long N) {
  require_in_scope(N);
  double prod = 1.0;
  for (long long p : distinct_primes(static_cast<unsigned long long>(2 * N)))
    prod *= 2.0 * static_cast<double>(p) / static_cast<double>(p + 1);
  return 3.0 / static_cast<double>(N) * prod;
}

bool constant_consistency(long long N) {
  require_in_scope(N);
  ClassGroup G = class_group(-4 * N);
  int w = unit_count(G.D);
  double l1 = 2.0 * kPi * static_cast<double>(G.h) /
              (static_cast<double>(w) * std::sqrt(static_cast<double>(-G.D)));
  double prod = 1.0;
  for (long long p : distinct_primes(static_cast<unsigned long long>(2 * N)))
    prod *= static_cast<double>(p) / static_cast<double>(p + 1);
  double a1 = 6.0 / (kPi * kPi) * l1 * l1 * prod;
  double lhs = main_term_constant(N);
  double rhs = static_cast<double>(w) * w / (static_cast<double>(G.h) * G.h) *
               static_cast<double>(G.genus_count()) * a1;
  return std::fabs(lhs - rhs) <= 1e-9 * std::fabs(lhs);
}

ConstantsReport constants_report(long long N) {
  require_in_scope(N);
  ConstantsReport r;
  r.N = N;
  r.D = -4 * N;
  ClassGroup G = class_group(r.D);
  r.h = G.h;
  r.w = unit_count(r.D);
  r.k = G.k;
  L1Values l1 = L1(r.D, r.h, r.w);
  r.L1_formula = l1.formula;
  r.L1_series = l1.series;
  r.L1_variant = l1.variant;
  r.zeta_prime2 = zeta_prime_2();
  LprimeResult lp = Lprime_over_L(r.D);
  r.lprime_over_l = lp.ratio;
  r.lprime_converged = lp.converged;
  r.alpha = -1.0 + 2.0 * kEulerGamma + sum_log_p_over_p_plus_1(N) + 2.0 * lp.ratio -
            (12.0 / (kPi * kPi)) * r.zeta_prime2;
  double prod = 1.0;
  for (long long p : distinct_primes(static_cast<unsigned long long>(2 * N)))
    prod *= static_cast<double>(p) / static_cast<double>(p + 1);
  r.A1 = 6.0 / (kPi * kPi) * r.L1_formula * r.L1_formula * prod;
  r.B1 = r.A1 * r.alpha;
  r.main_term = main_term_constant(N);
  double rhs = static_cast<double>(r.w) * r.w / (static_cast<double>(r.h) * r.h) *
               static_cast<double>(G.genus_count()) * r.A1;
  r.consistency_ok = std::fabs(r.main_term - rhs) <= 1e-9 * std::fabs(r.main_term);
  r.l1_agreement_ok = std::fabs(r.L1_formula - r.L1_series) <= 1e-6;
  return r;
}

}  // namespace genuslab
