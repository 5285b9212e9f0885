// characters.hpp — the character group of a class group, genus characters
// attached to discriminant splittings, and the genus/non-genus
// classification (all characters of order <= 2 are genus characters, and
// there are exactly 2^{k-1} of them).
#pragma once

#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "genuslab/cyclotomic.hpp"
#include "genuslab/quadforms.hpp"

namespace genuslab {

// A character of the class group. Values are exact roots of unity
// zeta_m^k, stored as exponents k against the group exponent m.
struct IdealClassCharacter {
  int m = 1;                 // common root-of-unity order (group exponent)
  std::vector<int> value_k;  // value on class i is zeta_m^{value_k[i]}
  long long order = 1;
  bool is_genus = true;      // order <= 2, equivalently all values real
  std::optional<std::pair<long long, long long>> splitting;  // attached by match_splittings

  CycRat value(int class_index) const;
  std::complex<double> value_c(int class_index) const;
  bool real_valued() const;
  bool same_values(const IdealClassCharacter& o) const;
  bool conjugate_values(const IdealClassCharacter& o) const;
};

// All h characters, pairwise orthogonal, trivial character first.
std::vector<IdealClassCharacter> character_group(const ClassGroup& G);

// The real character attached to a splitting D = D1*D2: its value on a
// form class is kronecker(D1, n) for any represented value n coprime to D.
IdealClassCharacter genus_character_from_splitting(const ClassGroup& G,
                                                   std::pair<long long, long long> split);

// True iff every value of chi is real (equivalently, order <= 2).
bool classify_genus(const IdealClassCharacter& chi);

// Pairs every splitting with the unique equal character from chars,
// attaching the splitting to it. The pairing must exhaust the real
// characters; anything else is an internal invariant failure.
// Returns pairs (splitting index, character index).
std::vector<std::pair<std::size_t, std::size_t>> match_splittings(
    const ClassGroup& G, std::vector<IdealClassCharacter>& chars);

}  // namespace genuslab
