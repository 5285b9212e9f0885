#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "genuslab/analytic.hpp"
#include "genuslab/arith.hpp"
#include "genuslab/errors.hpp"
#include "genuslab/quadforms.hpp"

using namespace genuslab;

namespace {

constexpr double kPi = std::numbers::pi;

// test-local L(s, chi_D) for s near 1: partial sums at full periods,
// extrapolated in 1/x (independent of the library's L' path)
double L_at_s(long long D, double s) {
  long long q = D < 0 ? -D : D;
  const int levels = 10;
  std::vector<long double> xs, es;
  long long base = 8 * q;
  long long xmax = base << (levels - 1);
  long double acc = 0.0L;
  long long next = base;
  for (long long n = 1; n <= xmax; ++n) {
    int chi = kronecker(D, n % q);
    if (chi != 0) acc += chi / std::pow(static_cast<long double>(n), static_cast<long double>(s));
    if (n == next) {
      xs.push_back(static_cast<long double>(n));
      es.push_back(acc);
      next <<= 1;
    }
  }
  // Neville to 1/x -> 0
  std::vector<long double> u(xs.size()), p(es);
  for (std::size_t i = 0; i < xs.size(); ++i) u[i] = 1.0L / xs[i];
  for (std::size_t level = 1; level < xs.size(); ++level)
    for (std::size_t i = 0; i + level < xs.size(); ++i)
      p[i] = (u[i + level] * p[i] - u[i] * p[i + 1]) / (u[i + level] - u[i]);
  return static_cast<double>(p[0]);
}

}  // namespace

TEST_CASE("L1: fixed values and formula/series agreement") {
  auto v4 = L1(-4, 1, 4);
  CHECK(v4.formula == doctest::Approx(kPi / 4).epsilon(1e-12));
  CHECK(v4.series == doctest::Approx(kPi / 4).epsilon(1e-8));

  auto v8 = L1(-8, 1, 2);
  CHECK(v8.series == doctest::Approx(kPi / (2 * std::sqrt(2.0))).epsilon(1e-8));

  auto v20 = L1(-20, 2, 2);
  CHECK(v20.formula == doctest::Approx(kPi / std::sqrt(5.0)).epsilon(1e-12));
  CHECK(v20.series == doctest::Approx(v20.formula).epsilon(1e-8));

  struct Case { long long D, h; };
  for (auto [D, h] : {Case{-4, 1}, Case{-8, 1}, Case{-20, 2}, Case{-24, 2}, Case{-40, 2},
                      Case{-52, 2}, Case{-56, 4}, Case{-84, 4}}) {
    int w = D == -4 ? 4 : 2;
    auto v = L1(D, h, w);
    REQUIRE(std::fabs(v.formula - v.series) < 1e-6);
  }
  CHECK_THROWS_AS(L1(-12, 1, 2), std::invalid_argument);
}

TEST_CASE("the h pi/sqrt(N) normalization of L(1) differs by the unit factor") {
  // the series arbitrates: h pi / sqrt(N) overshoots by a factor of w/2
  auto v8 = L1(-8, 1, 2);
  CHECK(v8.variant == doctest::Approx(kPi / std::sqrt(2.0)).epsilon(1e-12));
  CHECK(v8.variant == doctest::Approx(2 * v8.series).epsilon(1e-6));
  auto v4 = L1(-4, 1, 4);
  CHECK(v4.variant == doctest::Approx(4 * v4.series).epsilon(1e-6));
}

TEST_CASE("zeta_prime_2") {
  double z = zeta_prime_2();
  CHECK(z < 0);
  CHECK(std::fabs(z) < kPi * kPi / 6);
  CHECK(z == doctest::Approx(-0.9375482543).epsilon(1e-8));
  // independent bracket: partial sum plus integral tail encloses the value
  long double s = 0.0L;
  const long long M = 100000;
  for (long long n = 2; n <= M; ++n)
    s += std::log(static_cast<long double>(n)) / (static_cast<long double>(n) * n);
  long double lo = s + (std::log(static_cast<long double>(M + 1)) + 1.0L) / (M + 1);
  long double hi = s + (std::log(static_cast<long double>(M)) + 1.0L) / M;
  CHECK(-z >= static_cast<double>(lo) - 1e-9);
  CHECK(-z <= static_cast<double>(hi) + 1e-9);
}

TEST_CASE("Lprime_over_L: quadrature oracle and self-consistency") {
  for (long long D : {-4LL, -8LL, -20LL, -56LL}) {
    LprimeResult lp = Lprime_over_L(D);
    CHECK(lp.converged);
    CHECK(std::isfinite(lp.ratio));
    // oracle: centered difference of the accelerated series at s = 1 +- 1e-4
    double eps = 1e-4;
    double dL = (L_at_s(D, 1.0 + eps) - L_at_s(D, 1.0 - eps)) / (2 * eps);
    double oracle_ratio = dL / L_at_s(D, 1.0);
    REQUIRE(lp.ratio == doctest::Approx(oracle_ratio).epsilon(2e-3));
  }
}

TEST_CASE("alpha_N: assembled pieces") {
  CHECK(sum_log_p_over_p_plus_1(1) == doctest::Approx(std::log(2.0) / 3).epsilon(1e-12));
  CHECK(2 * kEulerGamma == doctest::Approx(1.1544313).epsilon(1e-7));
  // adding a prime factor increases the p | 2N sum
  CHECK(sum_log_p_over_p_plus_1(5) > sum_log_p_over_p_plus_1(1));
  CHECK(sum_log_p_over_p_plus_1(30) > sum_log_p_over_p_plus_1(10));
  double a1 = alpha_N(1);
  CHECK(std::isfinite(a1));
  CHECK_THROWS_AS(alpha_N(3), ScopeError);
}

TEST_CASE("A1_B1: fixed values") {
  auto v1 = A1_B1(1);
  CHECK(v1.A1 == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(v1.B1 == doctest::Approx(0.25 * alpha_N(1)).epsilon(1e-9));
  auto v2 = A1_B1(2);
  CHECK(v2.A1 == doctest::Approx(0.5).epsilon(1e-12));
  auto v5 = A1_B1(5);
  CHECK(v5.A1 == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  auto v14 = A1_B1(14);
  CHECK(v14.A1 == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("main_term_constant: fixed values and support invariance") {
  CHECK(main_term_constant(1) == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(main_term_constant(2) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(main_term_constant(5) == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
  CHECK(main_term_constant(14) == doctest::Approx(0.5).epsilon(1e-12));
  // N * constant depends only on the primes dividing 2N
  CHECK(5 * main_term_constant(5) == doctest::Approx(10 * main_term_constant(10)).epsilon(1e-12));
  CHECK(1 * main_term_constant(1) == doctest::Approx(2 * main_term_constant(2)).epsilon(1e-12));
  CHECK(21 * main_term_constant(21) == doctest::Approx(42 * main_term_constant(42)).epsilon(1e-12));
}

TEST_CASE("constant_consistency on small N") {
  for (long long N : {1LL, 2LL, 5LL, 6LL, 10LL, 13LL, 14LL, 21LL, 26LL, 30LL}) {
    REQUIRE(constant_consistency(N));
  }
}

TEST_CASE("constants_report assembles everything") {
  ConstantsReport r = constants_report(5);
  CHECK(r.h == 2);
  CHECK(r.w == 2);
  CHECK(r.k == 2);
  CHECK(r.A1 == doctest::Approx(2.0 / 3.0).epsilon(1e-9));
  CHECK(r.main_term == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
  CHECK(r.consistency_ok);
  CHECK(r.L1_variant == doctest::Approx(2 * kPi / std::sqrt(5.0)).epsilon(1e-12));
  CHECK(std::fabs(r.L1_formula - r.L1_series) < 1e-6);
}
