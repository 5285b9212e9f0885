// dirichlet.hpp — exact Dirichlet-series coefficient calculus.
//
// A CoeffSeries holds the first M coefficients f(1..M) of a Dirichlet
// series sum f(n)/n^s, exactly (rational or cyclotomic entries, never
// floating point). Multiplying two series multiplies coefficients by
// Dirichlet convolution: (f*g)(n) = sum_{de=n} f(d) g(e).
#pragma once

#include <cstddef>

#include "genuslab/cyclotomic.hpp"

namespace genuslab {

enum class CoeffDomain { Integer, Rational, Complex };

class CoeffSeries {
 public:
  explicit CoeffSeries(std::size_t length);

  std::size_t length() const { return vals_.size(); }
  const CycRat& operator()(std::size_t n) const { return vals_.at(n - 1); }  // 1-based
  void set(std::size_t n, CycRat v) { vals_.at(n - 1) = std::move(v); }
  CoeffDomain domain() const;
  friend bool operator==(const CoeffSeries& a, const CoeffSeries& b) { return a.vals_ == b.vals_; }

  static CoeffSeries delta(std::size_t M);  // 1, 0, 0, ... (unit)
  static CoeffSeries ones(std::size_t M);   // all 1 (zeta coefficients)

 private:
  std::vector<CycRat> vals_;
};

// Dirichlet convolution, product rule for L-series. Lengths must match.
CoeffSeries dconv(const CoeffSeries& f, const CoeffSeries& g);

// Dirichlet inverse: dconv(f, dinv(f)) = delta. Requires f(1) != 0.
CoeffSeries dinv(const CoeffSeries& f);

// Coefficients of F(2s): g(k^2) = f(k), zero off squares.
CoeffSeries dilate2(const CoeffSeries& f);

// Pointwise products (the coefficient rule behind Rankin-Selberg series).
CoeffSeries pointwise_product(const CoeffSeries& f, const CoeffSeries& g);
CoeffSeries pointwise_square(const CoeffSeries& f);

// Coefficients chi_d(n) of the quadratic character L-series. Requires
// d = 0 or 1 mod 4.
CoeffSeries char_series(long long d, std::size_t M);

// Multiplicative block supported on primes dividing d:
//   sign = -1: coefficients of prod_{p|d} (1 + p^-s)^{-1}, value (-1)^k at p^k;
//   sign = +1: coefficients of prod_{p|d} (1 - p^-s), value -1 at p, 0 beyond.
CoeffSeries euler_block(long long d, int sign, std::size_t M);

// Ideal-count coefficients of the Dedekind zeta function of the quadratic
// field with fundamental discriminant d_K: a(n) = sum_{e|n} chi_{d_K}(e).
CoeffSeries zeta_K_series(long long d_K, std::size_t M);

}  // namespace genuslab
