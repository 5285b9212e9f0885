// coeffs.cpp — lattice sieves and the Hecke coefficient decomposition.
#include "genuslab/coeffs.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "genuslab/arith.hpp"
#include "genuslab/errors.hpp"

namespace genuslab {

int unit_count(long long D) {
  if (D >= 0) throw std::invalid_argument("unit_count: D must be negative");
  if (D == -4) return 4;
  if (D == -3) return 6;
  return 2;
}

std::vector<long long> rep_counts_form(const QuadForm& f, std::size_t limit) {
  make_form(f.a, f.b, f.c);
  long long D = f.discriminant();
  std::vector<long long> counts(limit + 1, 0);
  long long L = static_cast<long long>(limit);
  // minimal value on the strip at height y is |D| y^2 / (4a)
  long long ymax = static_cast<long long>(
      std::sqrt(4.0 * static_cast<double>(f.a) * static_cast<double>(L) /
                static_cast<double>(-D))) + 1;
  for (long long y = -ymax; y <= ymax; ++y) {
    double sq = static_cast<double>(D) * static_cast<double>(y) * static_cast<double>(y) +
                4.0 * static_cast<double>(f.a) * static_cast<double>(L);
    if (sq < 0) continue;
    double root = std::sqrt(sq);
    long long xlo = static_cast<long long>(std::floor((-static_cast<double>(f.b) * y - root) /
                                                      (2.0 * f.a)));
    long long xhi = static_cast<long long>(std::ceil((-static_cast<double>(f.b) * y + root) /
                                                     (2.0 * f.a)));
    // trim floating-point slack: xlo/xhi become the exact interval ends
    while (f.eval(xlo - 1, y) <= L) --xlo;
    while (xlo <= xhi && f.eval(xlo, y) > L) ++xlo;
    while (f.eval(xhi + 1, y) <= L) ++xhi;
    while (xhi >= xlo && f.eval(xhi, y) > L) --xhi;
    if (xlo > xhi) continue;
    long long n = f.eval(xlo, y);
    long long x = xlo;
    while (true) {
      if (n >= 1 && n <= L && !(x == 0 && y == 0)) ++counts[static_cast<std::size_t>(n)];
      if (x == xhi) break;
      n += f.a * (2 * x + 1) + f.b * y;
      ++x;
    }
  }
  return counts;
}

CoeffTable build_coeff_table(long long N, std::size_t limit) {
  require_in_scope(N);
  if (limit < 1) throw std::invalid_argument("build_coeff_table: limit must be >= 1");
  CoeffTable T;
  T.N = N;
  T.D = -4 * N;
  T.limit = limit;
  T.group = class_group(T.D);
  T.h = T.group.h;
  T.w = unit_count(T.D);
  T.c.resize(static_cast<std::size_t>(T.h));
  for (std::size_t i = 0; i < T.c.size(); ++i) {
    std::vector<long long> raw = rep_counts_form(T.group.forms[i], limit);
    for (std::size_t n = 1; n <= limit; ++n) {
      if (raw[n] % T.w != 0) throw std::logic_error("build_coeff_table: unit count does not divide");
      raw[n] /= T.w;
    }
    T.c[i] = std::move(raw);
    if (i == 0) {
      T.r.assign(limit + 1, 0);
      for (std::size_t n = 1; n <= limit; ++n) T.r[n] = T.w * T.c[0][n];
    }
  }
  T.a.assign(limit + 1, 0);
  for (std::size_t n = 1; n <= limit; ++n) {
    long long s = 0;
    for (const auto& row : T.c) s += row[n];
    T.a[n] = s;
  }
  return T;
}

CoeffSeries hecke_coeffs(const IdealClassCharacter& chi, const CoeffTable& T) {
  if (static_cast<long long>(chi.value_k.size()) != T.h)
    throw std::invalid_argument("hecke_coeffs: character does not match the class group");
  CoeffSeries out(T.limit);
  std::vector<CycRat> roots;
  roots.reserve(chi.value_k.size());
  for (std::size_t i = 0; i < chi.value_k.size(); ++i)
    roots.push_back(CycRat::root_of_unity(chi.m, chi.value_k[i]));
  for (std::size_t n = 1; n <= T.limit; ++n) {
    CycRat acc;
    for (std::size_t i = 0; i < roots.size(); ++i) {
      long long cnt = T.c[i][n];
      if (cnt == 0) continue;
      acc += to_rational(cnt) * roots[i];
    }
    out.set(n, std::move(acc));
  }
  return out;
}

std::vector<long long> reconstruct_reps(const CoeffTable& T,
                                        const std::vector<IdealClassCharacter>& chars) {
  if (static_cast<long long>(chars.size()) != T.h)
    throw std::invalid_argument("reconstruct_reps: need all h characters");
  // sum over characters first: s_i = sum_chi chi(c_i), then
  // r(n) = (w/h) sum_i s_i c_i(n), all exact.
  std::vector<CycRat> class_sums(static_cast<std::size_t>(T.h));
  for (const auto& chi : chars) {
    if (static_cast<long long>(chi.value_k.size()) != T.h)
      throw std::invalid_argument("reconstruct_reps: character size mismatch");
    for (std::size_t i = 0; i < class_sums.size(); ++i)
      class_sums[i] += CycRat::root_of_unity(chi.m, chi.value_k[i]);
  }
  std::vector<long long> out(T.limit + 1, 0);
  Rational w_over_h = Rational(T.w) / to_rational(T.h);
  for (std::size_t n = 1; n <= T.limit; ++n) {
    CycRat acc;
    for (std::size_t i = 0; i < class_sums.size(); ++i) {
      long long cnt = T.c[i][n];
      if (cnt == 0) continue;
      acc += to_rational(cnt) * class_sums[i];
    }
    if (!acc.is_rational())
      throw std::logic_error("reconstruct_reps: imaginary parts did not cancel");
    Rational v = w_over_h * acc.rational_value();
    if (v.get_den() != 1) throw std::logic_error("reconstruct_reps: non-integral value");
    out[n] = static_cast<long long>(v.get_num().get_si());
    if (out[n] != T.r[n]) throw std::logic_error("reconstruct_reps: mismatch with sieved row");
  }
  return out;
}

bool kronecker_factorization_check(const CoeffTable& T,
                                   std::pair<long long, long long> split,
                                   std::size_t limit) {
  if (limit == 0 || limit > T.limit) limit = T.limit;
  IdealClassCharacter chi = genus_character_from_splitting(T.group, split);
  // b row of the (real) genus character, in plain integers
  std::vector<long long> b(limit + 1, 0);
  for (std::size_t n = 1; n <= limit; ++n) {
    long long acc = 0;
    for (std::size_t i = 0; i < chi.value_k.size(); ++i)
      acc += (chi.value_k[i] == 0 ? 1 : -1) * T.c[i][n];
    b[n] = acc;
  }
  // divisor-sum side
  std::vector<long long> conv(limit + 1, 0);
  for (std::size_t d = 1; d <= limit; ++d) {
    int kd = kronecker(split.first, static_cast<long long>(d));
    if (kd == 0) continue;
    for (std::size_t e = 1; d * e <= limit; ++e) {
      int ke = kronecker(split.second, static_cast<long long>(e));
      if (ke == 0) continue;
      conv[d * e] += kd * ke;
    }
  }
  for (std::size_t n = 1; n <= limit; ++n) {
    if (b[n] != conv[n]) return false;
  }
  return true;
}

std::string coeff_cache_filename(long long N, std::size_t limit) {
  std::ostringstream os;
  os << "qfc_N" << N << "_L" << limit << ".csv";
  return os.str();
}

void save_coeff_table(const CoeffTable& T, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw CacheError("cannot write cache file: " + path);
  out << "QFC1,N=" << T.N << ",limit=" << T.limit << ",h=" << T.h << ",w=" << T.w << "\n";
  for (std::size_t n = 1; n <= T.limit; ++n) {
    out << n;
    for (const auto& row : T.c) out << ',' << row[n];
    out << '\n';
  }
  if (!out) throw CacheError("write failed: " + path);
}

CoeffTable load_coeff_table(const std::string& path, long long N, std::size_t limit) {
  std::ifstream in(path);
  if (!in) throw CacheError("cannot open cache file: " + path);
  std::string header;
  std::getline(in, header);
  CoeffTable T;
  T.N = N;
  T.D = -4 * N;
  T.limit = limit;
  T.group = class_group(T.D);
  T.h = T.group.h;
  T.w = unit_count(T.D);
  std::ostringstream expect;
  expect << "QFC1,N=" << N << ",limit=" << limit << ",h=" << T.h << ",w=" << T.w;
  if (header != expect.str())
    throw CacheError("cache header mismatch: expected \"" + expect.str() + "\", got \"" + header +
                     "\" in " + path);
  T.c.assign(static_cast<std::size_t>(T.h), std::vector<long long>(limit + 1, 0));
  std::string line;
  for (std::size_t n = 1; n <= limit; ++n) {
    if (!std::getline(in, line)) throw CacheError("cache truncated: " + path);
    std::istringstream row(line);
    std::string cell;
    try {
      if (!std::getline(row, cell, ',') || std::stoull(cell) != n)
        throw CacheError("cache row index mismatch at n=" + std::to_string(n) + ": " + path);
      for (long long i = 0; i < T.h; ++i) {
        if (!std::getline(row, cell, ',')) throw CacheError("cache row too short: " + path);
        T.c[static_cast<std::size_t>(i)][n] = std::stoll(cell);
      }
    } catch (const CacheError&) {
      throw;
    } catch (const std::exception&) {
      throw CacheError("cache row malformed at n=" + std::to_string(n) + ": " + path);
    }
  }
  T.r.assign(limit + 1, 0);
  T.a.assign(limit + 1, 0);
  for (std::size_t n = 1; n <= limit; ++n) {
    T.r[n] = T.w * T.c[0][n];
    long long s = 0;
    for (const auto& row : T.c) s += row[n];
    T.a[n] = s;
  }
  return T;
}

}  // namespace genuslab
