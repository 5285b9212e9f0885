// cyclotomic.hpp — exact arithmetic in cyclotomic fields Q(zeta_m).
//
// Elements are stored in the power basis 1, z, ..., z^{phi(m)-1} with
// rational coordinates, reduced modulo the m-th cyclotomic polynomial.
// m = 1 encodes plain rationals. Values of different conductors mix by
// lifting both sides into Q(zeta_lcm).
#pragma once

#include <gmpxx.h>

#include <complex>
#include <vector>

namespace genuslab {

using BigInt = mpz_class;
using Rational = mpq_class;

// mpq_class has no long long constructor; route through mpz.
inline Rational to_rational(long long v) { return Rational(BigInt(static_cast<long>(v))); }

class CyclotomicField {
 public:
  // Shared, lazily-built field cache. Thread-safe.
  static const CyclotomicField& get(int m);

  int conductor() const { return m_; }
  int degree() const { return degree_; }  // phi(m)
  // Monic m-th cyclotomic polynomial, ascending coefficients.
  const std::vector<BigInt>& polynomial() const { return phi_; }
  // zeta_m^j reduced into the power basis, for 0 <= j < m.
  const std::vector<BigInt>& power(int j) const { return pow_[static_cast<std::size_t>(j)]; }

 private:
  explicit CyclotomicField(int m);
  int m_;
  int degree_;
  std::vector<BigInt> phi_;
  std::vector<std::vector<BigInt>> pow_;
};

// An exact element of Q(zeta_m).
class CycRat {
 public:
  CycRat() : m_(1), c_(1) {}                  // zero
  explicit CycRat(Rational r) : m_(1), c_{std::move(r)} {}
  explicit CycRat(long long v) : m_(1), c_{to_rational(v)} {}

  static CycRat root_of_unity(int m, long long k);  // zeta_m^k
  static CycRat zero() { return CycRat(); }
  static CycRat one() { return CycRat(Rational(1)); }

  int conductor() const { return m_; }
  bool is_zero() const;
  bool is_rational() const;        // all non-constant coordinates vanish
  Rational rational_value() const; // requires is_rational()
  bool is_integer() const;
  CycRat conj() const;
  CycRat inverse() const;          // throws on zero
  std::complex<double> to_complex() const;
  CycRat lifted(int M) const;      // embed into Q(zeta_M); conductor() | M

  CycRat& operator+=(const CycRat& o);
  CycRat& operator-=(const CycRat& o);
  CycRat& operator*=(const CycRat& o);
  friend CycRat operator+(CycRat a, const CycRat& b) { return a += b; }
  friend CycRat operator-(CycRat a, const CycRat& b) { return a -= b; }
  friend CycRat operator*(CycRat a, const CycRat& b) { return a *= b; }
  friend CycRat operator*(const Rational& s, CycRat a);
  friend bool operator==(const CycRat& a, const CycRat& b);

 private:
  int m_;
  std::vector<Rational> c_;  // size phi(m_)
  friend class CyclotomicField;
};

}  // namespace genuslab
