// coeffs.hpp — coefficient streams of the partial-zeta decomposition:
// representation counts r(n) from lattice sieves, per-class ideal counts
// c_i(n) = (form counts)/w, ideal totals a(n) = sum_i c_i(n), and Hecke
// rows b_chi(n) = sum_i chi(c_i) c_i(n), tied together by
// r(n) = w c_0(n) = (w/h) sum_chi b_chi(n).
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "genuslab/characters.hpp"
#include "genuslab/dirichlet.hpp"
#include "genuslab/quadforms.hpp"

namespace genuslab {

// Roots of unity in the imaginary quadratic order of discriminant D < 0:
// 4 for D = -4, 6 for D = -3, else 2.
int unit_count(long long D);

// counts[n] = #{(x,y) != (0,0) : f(x,y) = n} for 1 <= n <= limit,
// by bounded lattice sweep. counts[0] is unused.
std::vector<long long> rep_counts_form(const QuadForm& f, std::size_t limit);

struct CoeffTable {
  long long N = 0;
  long long D = 0;
  std::size_t limit = 0;
  int w = 2;
  long long h = 1;
  ClassGroup group;
  std::vector<std::vector<long long>> c;  // c[i][n]: ideal counts per class, 1-based in n
  std::vector<long long> r;               // r[n] = w * c[0][n]
  std::vector<long long> a;               // a[n] = sum_i c[i][n]
};

// Sieves every reduced form of discriminant -4N up to limit. Rejects
// out-of-scope N (ScopeError). Division by the unit count is checked
// entry by entry.
CoeffTable build_coeff_table(long long N, std::size_t limit);

// b_chi(n) as an exact series (cyclotomic entries for complex chi).
CoeffSeries hecke_coeffs(const IdealClassCharacter& chi, const CoeffTable& T);

// Recovers r(n) = (w/h) sum_chi b_chi(n) exactly; throws if the sum fails
// to be a rational integer or disagrees with the sieved row.
std::vector<long long> reconstruct_reps(const CoeffTable& T,
                                        const std::vector<IdealClassCharacter>& chars);

// Coefficient form of the genus-character L-function factorization:
// b_{chi(D1,D2)}(n) = sum_{de=n} kronecker(D1,d) kronecker(D2,e) for all
// n <= limit (0 = whole table).
bool kronecker_factorization_check(const CoeffTable& T,
                                   std::pair<long long, long long> split,
                                   std::size_t limit = 0);

// QFC1 cache files: header "QFC1,N=<N>,limit=<L>,h=<h>,w=<w>" then CSV
// rows "n,c_0,...,c_{h-1}".
void save_coeff_table(const CoeffTable& T, const std::string& path);
CoeffTable load_coeff_table(const std::string& path, long long N, std::size_t limit);
std::string coeff_cache_filename(long long N, std::size_t limit);

}  // namespace genuslab
