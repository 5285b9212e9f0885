// dirichlet.cpp — CoeffSeries operations.
#include "genuslab/dirichlet.hpp"

#include <stdexcept>

#include "genuslab/arith.hpp"

namespace genuslab {

CoeffSeries::CoeffSeries(std::size_t length) : vals_(length) {
  if (length == 0) throw std::invalid_argument("CoeffSeries: length must be >= 1");
}

CoeffDomain CoeffSeries::domain() const {
  CoeffDomain d = CoeffDomain::Integer;
  for (const CycRat& v : vals_) {
    if (!v.is_rational()) return CoeffDomain::Complex;
    if (!v.is_integer()) d = CoeffDomain::Rational;
  }
  return d;
}

CoeffSeries CoeffSeries::delta(std::size_t M) {
  CoeffSeries s(M);
  s.set(1, CycRat::one());
  return s;
}

CoeffSeries CoeffSeries::ones(std::size_t M) {
  CoeffSeries s(M);
  for (std::size_t n = 1; n <= M; ++n) s.set(n, CycRat::one());
  return s;
}

CoeffSeries dconv(const CoeffSeries& f, const CoeffSeries& g) {
  if (f.length() != g.length()) throw std::invalid_argument("dconv: length mismatch");
  std::size_t M = f.length();
  CoeffSeries out(M);
  std::vector<CycRat> acc(M);
  for (std::size_t d = 1; d <= M; ++d) {
    const CycRat& fd = f(d);
    if (fd.is_zero()) continue;
    for (std::size_t e = 1; d * e <= M; ++e) {
      const CycRat& ge = g(e);
      if (ge.is_zero()) continue;
      acc[d * e - 1] += fd * ge;
    }
  }
  for (std::size_t n = 1; n <= M; ++n) out.set(n, std::move(acc[n - 1]));
  return out;
}

CoeffSeries dinv(const CoeffSeries& f) {
  std::size_t M = f.length();
  if (f(1).is_zero()) throw std::invalid_argument("dinv: f(1) must be nonzero");
  CycRat inv1 = f(1).inverse();
  CoeffSeries g(M);
  g.set(1, inv1);
  for (std::size_t n = 2; n <= M; ++n) {
    CycRat acc;
    for (std::size_t d = 2; d <= n; ++d) {
      if (n % d != 0) continue;
      const CycRat& fd = f(d);
      if (fd.is_zero()) continue;
      acc += fd * g(n / d);
    }
    g.set(n, CycRat(Rational(-1)) * acc * inv1);
  }
  return g;
}

CoeffSeries dilate2(const CoeffSeries& f) {
  std::size_t M = f.length();
  CoeffSeries out(M);
  for (std::size_t k = 1; k * k <= M; ++k) out.set(k * k, f(k));
  return out;
}

CoeffSeries pointwise_product(const CoeffSeries& f, const CoeffSeries& g) {
  if (f.length() != g.length()) throw std::invalid_argument("pointwise_product: length mismatch");
  CoeffSeries out(f.length());
  for (std::size_t n = 1; n <= f.length(); ++n) out.set(n, f(n) * g(n));
  return out;
}

CoeffSeries pointwise_square(const CoeffSeries& f) { return pointwise_product(f, f); }

CoeffSeries char_series(long long d, std::size_t M) {
  long long r = ((d % 4) + 4) % 4;
  if (r == 2 || r == 3) throw std::invalid_argument("char_series: d must be 0 or 1 mod 4");
  CoeffSeries out(M);
  for (std::size_t n = 1; n <= M; ++n) {
    int v = kronecker(d, static_cast<long long>(n));
    if (v != 0) out.set(n, CycRat(Rational(v)));
  }
  return out;
}

CoeffSeries euler_block(long long d, int sign, std::size_t M) {
  if (d < 1) throw std::invalid_argument("euler_block: d must be >= 1");
  if (sign != 1 && sign != -1) throw std::invalid_argument("euler_block: sign must be +-1");
  CoeffSeries out = CoeffSeries::delta(M);
  for (long long p : distinct_primes(static_cast<unsigned long long>(d))) {
    CoeffSeries local(M);
    local.set(1, CycRat::one());
    if (sign == -1) {
      long long v = -1;
      for (unsigned long long q = static_cast<unsigned long long>(p); q <= M;
           q *= static_cast<unsigned long long>(p)) {
        local.set(static_cast<std::size_t>(q), CycRat(v));
        v = -v;
        if (q > M / static_cast<unsigned long long>(p)) break;
      }
    } else {
      if (static_cast<unsigned long long>(p) <= M)
        local.set(static_cast<std::size_t>(p), CycRat(Rational(-1)));
    }
    out = dconv(out, local);
  }
  return out;
}

CoeffSeries zeta_K_series(long long d_K, std::size_t M) {
  if (d_K == 1 || !is_fundamental_discriminant(d_K))
    throw std::invalid_argument("zeta_K_series: d_K must be a fundamental field discriminant");
  return dconv(CoeffSeries::ones(M), char_series(d_K, M));
}

}  // namespace genuslab
