// analytic.hpp — floating-point evaluation of the constants in the
// asymptotic formulas: L(1, chi_D), zeta'(2), L'(1)/L(1), alpha(N),
// A1, B1, and the x log x main-term constant.
#pragma once

namespace genuslab {

inline constexpr double kEulerGamma = 0.577215664901532860606512;

struct L1Values {
  double formula;  // class number formula 2 pi h / (w sqrt|D|)
  double series;   // direct character series with period-block extrapolation
  double variant;  // h pi / sqrt(N), a normalization quoted without the unit factor
};

// Requires h and w consistent with class_group(D) and unit_count(D).
L1Values L1(long long D, long long h, int w);

// Direct series sum chi_D(n)/n, accelerated over full character periods.
double L1_series(long long D);

// zeta'(2) = -sum log n / n^2 via Euler-Maclaurin tail correction.
double zeta_prime_2();

struct LprimeResult {
  double ratio;      // L'(1, chi_D) / L(1, chi_D)
  double lprime;     // L'(1, chi_D)
  bool converged;    // successive block estimates stabilized
};
LprimeResult Lprime_over_L(long long D);

// alpha(N) = -1 + 2 gamma + sum_{p|2N} log p/(p+1) + 2 L'/L - (12/pi^2) zeta'(2).
double alpha_N(long long N);
double sum_log_p_over_p_plus_1(long long N);  // the p | 2N term alone

struct A1B1 {
  double A1;
  double B1;
};
// A1 = (6/pi^2) L(1,chi_{-4N})^2 prod_{p|2N} p/(p+1), B1 = A1 alpha(N).
A1B1 A1_B1(long long N);

// (3/N) prod_{p|2N} 2p/(p+1).
double main_term_constant(long long N);

// main_term_constant(N) = (w^2/h^2) 2^{k-1} A1(N), to 1e-9 relative.
bool constant_consistency(long long N);

struct ConstantsReport {
  long long N = 0;
  long long D = 0;
  long long h = 1;
  int w = 2;
  int k = 1;
  double L1_formula = 0, L1_series = 0, L1_variant = 0;
  double gamma_const = kEulerGamma;
  double zeta_prime2 = 0;
  double lprime_over_l = 0;
  bool lprime_converged = true;
  double alpha = 0;
  double A1 = 0, B1 = 0;
  double main_term = 0;
  bool consistency_ok = false;
  bool l1_agreement_ok = false;  // |L1_formula - L1_series| <= 1e-6
};
ConstantsReport constants_report(long long N);

}  // namespace genuslab
