// cyclotomic.cpp — cyclotomic polynomials, power-basis reduction, and
// field arithmetic for CycRat.
#include "genuslab/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace genuslab {

namespace {

using IPoly = std::vector<BigInt>;   // ascending coefficients
using QPoly = std::vector<Rational>;

void itrim(IPoly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

void qtrim(QPoly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

// Exact division of integer polynomials; remainder must vanish.
IPoly idivexact(IPoly num, const IPoly& den) {
  IPoly q(num.size() - den.size() + 1, BigInt(0));
  for (std::size_t i = q.size(); i-- > 0;) {
    BigInt lead = num[i + den.size() - 1];
    if (lead == 0) continue;
    BigInt coef = lead / den.back();
    if (coef * den.back() != lead) throw std::logic_error("cyclotomic: inexact division");
    q[i] = coef;
    for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= coef * den[j];
  }
  for (const BigInt& v : num) {
    if (v != 0) throw std::logic_error("cyclotomic: nonzero remainder");
  }
  itrim(q);
  return q;
}

IPoly cyclotomic_poly(int m) {
  // x^m - 1 divided by the cyclotomic polynomials of all proper divisors.
  IPoly f(static_cast<std::size_t>(m) + 1, BigInt(0));
  f[0] = -1;
  f[static_cast<std::size_t>(m)] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d == 0) f = idivexact(std::move(f), cyclotomic_poly(d));
  }
  return f;
}

QPoly qmod(QPoly p, const IPoly& phi) {
  // phi is monic, so remainder keeps rational coefficients.
  std::size_t deg = phi.size() - 1;
  qtrim(p);
  while (p.size() > deg) {
    Rational lead = p.back();
    std::size_t shift = p.size() - phi.size();
    if (lead != 0) {
      for (std::size_t j = 0; j < phi.size(); ++j) p[shift + j] -= lead * Rational(phi[j]);
    }
    p.pop_back();
    qtrim(p);
  }
  return p;
}

// Extended Euclid in Q[x]: returns (g, u) with u*a = g (mod b), g the gcd.
std::pair<QPoly, QPoly> qhalf_ext_gcd(QPoly a, QPoly b) {
  QPoly u0{Rational(1)}, u1{Rational(0)};
  auto is_zero_poly = [](const QPoly& p) { return p.size() == 1 && p[0] == 0; };
  auto divrem = [](QPoly num, const QPoly& den, QPoly& quot) {
    quot.assign(num.size() > den.size() ? num.size() - den.size() + 1 : 1, Rational(0));
    while (num.size() >= den.size() && !(num.size() == 1 && num[0] == 0)) {
      Rational coef = num.back() / den.back();
      std::size_t shift = num.size() - den.size();
      quot[shift] += coef;
      for (std::size_t j = 0; j < den.size(); ++j) num[shift + j] -= coef * den[j];
      qtrim(num);
      if (num.size() < den.size()) break;
    }
    qtrim(num);
    return num;
  };
  while (!is_zero_poly(b)) {
    QPoly q;
    QPoly r = divrem(a, b, q);
    // u_new = u0 - q*u1
    QPoly t(std::max(u0.size(), q.size() + u1.size()), Rational(0));
    for (std::size_t i = 0; i < u0.size(); ++i) t[i] = u0[i];
    for (std::size_t i = 0; i < q.size(); ++i) {
      if (q[i] == 0) continue;
      for (std::size_t j = 0; j < u1.size(); ++j) t[i + j] -= q[i] * u1[j];
    }
    qtrim(t);
    u0 = std::move(u1);
    u1 = std::move(t);
    a = std::move(b);
    b = std::move(r);
  }
  return {a, u0};
}

}  // namespace

CyclotomicField::CyclotomicField(int m) : m_(m) {
  phi_ = cyclotomic_poly(m);
  degree_ = static_cast<int>(phi_.size()) - 1;
  pow_.resize(static_cast<std::size_t>(m));
  IPoly cur{BigInt(1)};
  for (int j = 0; j < m; ++j) {
    IPoly padded(static_cast<std::size_t>(degree_), BigInt(0));
    for (std::size_t i = 0; i < cur.size(); ++i) padded[i] = cur[i];
    pow_[static_cast<std::size_t>(j)] = padded;
    // multiply by x and reduce mod phi
    IPoly next(cur.size() + 1, BigInt(0));
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] = cur[i];
    itrim(next);
    if (next.size() > phi_.size() - 1) {
      BigInt lead = next.back();
      for (std::size_t i = 0; i < phi_.size(); ++i) next[i] -= lead * phi_[i];
      next.pop_back();
      itrim(next);
    }
    cur = std::move(next);
  }
}

const CyclotomicField& CyclotomicField::get(int m) {
  if (m < 1) throw std::invalid_argument("CyclotomicField: order must be >= 1");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CyclotomicField>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it == cache.end()) {
    it = cache.emplace(m, std::unique_ptr<CyclotomicField>(new CyclotomicField(m))).first;
  }
  return *it->second;
}

CycRat CycRat::root_of_unity(int m, long long k) {
  const CyclotomicField& F = CyclotomicField::get(m);
  long long kk = ((k % m) + m) % m;
  CycRat out;
  out.m_ = m;
  out.c_.assign(static_cast<std::size_t>(F.degree()), Rational(0));
  const auto& row = F.power(static_cast<int>(kk));
  for (std::size_t i = 0; i < row.size(); ++i) out.c_[i] = Rational(row[i]);
  return out;
}

bool CycRat::is_zero() const {
  for (const Rational& v : c_) {
    if (v != 0) return false;
  }
  return true;
}

bool CycRat::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i) {
    if (c_[i] != 0) return false;
  }
  return true;
}

Rational CycRat::rational_value() const {
  if (!is_rational()) throw std::logic_error("CycRat: value is not rational");
  return c_[0];
}

bool CycRat::is_integer() const {
  return is_rational() && c_[0].get_den() == 1;
}

CycRat CycRat::conj() const {
  const CyclotomicField& F = CyclotomicField::get(m_);
  CycRat out;
  out.m_ = m_;
  out.c_.assign(c_.size(), Rational(0));
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    int idx = static_cast<int>((m_ - static_cast<int>(j)) % m_);
    const auto& row = F.power(idx);
    for (std::size_t i = 0; i < row.size(); ++i) out.c_[i] += c_[j] * Rational(row[i]);
  }
  return out;
}

CycRat CycRat::lifted(int M) const {
  if (M == m_) return *this;
  if (M % m_ != 0) throw std::invalid_argument("CycRat::lifted: conductor must divide target");
  const CyclotomicField& F = CyclotomicField::get(M);
  int step = M / m_;
  CycRat out;
  out.m_ = M;
  out.c_.assign(static_cast<std::size_t>(F.degree()), Rational(0));
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    const auto& row = F.power(static_cast<int>(j) * step % M);
    for (std::size_t i = 0; i < row.size(); ++i) out.c_[i] += c_[j] * Rational(row[i]);
  }
  return out;
}

CycRat& CycRat::operator+=(const CycRat& o) {
  if (m_ != o.m_) {
    int M = std::lcm(m_, o.m_);
    *this = lifted(M);
    return *this += o.lifted(M);
  }
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CycRat& CycRat::operator-=(const CycRat& o) {
  if (m_ != o.m_) {
    int M = std::lcm(m_, o.m_);
    *this = lifted(M);
    return *this -= o.lifted(M);
  }
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

CycRat& CycRat::operator*=(const CycRat& o) {
  if (m_ != o.m_) {
    int M = std::lcm(m_, o.m_);
    *this = lifted(M);
    return *this *= o.lifted(M);
  }
  if (m_ == 1) {
    c_[0] *= o.c_[0];
    return *this;
  }
  const CyclotomicField& F = CyclotomicField::get(m_);
  QPoly prod(c_.size() + o.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j] == 0) continue;
      prod[i + j] += c_[i] * o.c_[j];
    }
  }
  QPoly red = qmod(std::move(prod), F.polynomial());
  c_.assign(c_.size(), Rational(0));
  for (std::size_t i = 0; i < red.size(); ++i) c_[i] = red[i];
  return *this;
}

CycRat operator*(const Rational& s, CycRat a) {
  for (Rational& v : a.c_) v *= s;
  return a;
}

bool operator==(const CycRat& a, const CycRat& b) {
  if (a.m_ == b.m_) return a.c_ == b.c_;
  int M = std::lcm(a.m_, b.m_);
  return a.lifted(M).c_ == b.lifted(M).c_;
}

CycRat CycRat::inverse() const {
  if (is_zero()) throw std::domain_error("CycRat: division by zero");
  if (is_rational()) {
    CycRat out;
    out.m_ = m_;
    out.c_.assign(c_.size(), Rational(0));
    out.c_[0] = Rational(1) / c_[0];
    return out;
  }
  // Half-extended gcd gives u with u*self = g (mod phi); nonzero elements
  // of the field are coprime to phi, so g is a nonzero constant and the
  // inverse is u/g.
  const CyclotomicField& F = CyclotomicField::get(m_);
  QPoly a(c_.begin(), c_.end());
  qtrim(a);
  QPoly phi(F.polynomial().size());
  for (std::size_t i = 0; i < phi.size(); ++i) phi[i] = Rational(F.polynomial()[i]);
  auto [g, u] = qhalf_ext_gcd(a, phi);
  if (!(g.size() == 1 && g[0] != 0)) throw std::logic_error("CycRat: inverse does not exist");
  Rational scale = Rational(1) / g[0];
  QPoly inv = qmod(std::move(u), F.polynomial());
  CycRat out;
  out.m_ = m_;
  out.c_.assign(c_.size(), Rational(0));
  for (std::size_t i = 0; i < inv.size(); ++i) out.c_[i] = inv[i] * scale;
  return out;
}

std::complex<double> CycRat::to_complex() const {
  std::complex<double> acc(0.0, 0.0);
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(m_);
    acc += c_[j].get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return acc;
}

}  // namespace genuslab
