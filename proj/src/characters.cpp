// characters.cpp — character group construction and genus characters.
#include "genuslab/characters.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "genuslab/arith.hpp"
#include "genuslab/errors.hpp"

namespace genuslab {

CycRat IdealClassCharacter::value(int class_index) const {
  return CycRat::root_of_unity(m, value_k.at(static_cast<std::size_t>(class_index)));
}

std::complex<double> IdealClassCharacter::value_c(int class_index) const {
  double angle = 2.0 * std::numbers::pi *
                 static_cast<double>(value_k.at(static_cast<std::size_t>(class_index))) /
                 static_cast<double>(m);
  return {std::cos(angle), std::sin(angle)};
}

bool IdealClassCharacter::real_valued() const {
  for (int k : value_k) {
    if (!(k == 0 || 2 * k == m)) return false;
  }
  return true;
}

bool IdealClassCharacter::same_values(const IdealClassCharacter& o) const {
  if (value_k.size() != o.value_k.size()) return false;
  long long L = std::lcm(static_cast<long long>(m), static_cast<long long>(o.m));
  for (std::size_t i = 0; i < value_k.size(); ++i) {
    if (static_cast<long long>(value_k[i]) * (L / m) !=
        static_cast<long long>(o.value_k[i]) * (L / o.m))
      return false;
  }
  return true;
}

bool IdealClassCharacter::conjugate_values(const IdealClassCharacter& o) const {
  if (value_k.size() != o.value_k.size()) return false;
  long long L = std::lcm(static_cast<long long>(m), static_cast<long long>(o.m));
  for (std::size_t i = 0; i < value_k.size(); ++i) {
    long long a = static_cast<long long>(value_k[i]) * (L / m) % L;
    long long b = (L - static_cast<long long>(o.value_k[i]) * (L / o.m) % L) % L;
    if (a != b) return false;
  }
  return true;
}

std::vector<IdealClassCharacter> character_group(const ClassGroup& G) {
  int h = static_cast<int>(G.h);
  int m = static_cast<int>(G.exponent);
  std::size_t r = G.generators.size();
  std::vector<IdealClassCharacter> out;
  out.reserve(static_cast<std::size_t>(h));

  std::vector<int> t(r, 0);
  while (true) {
    IdealClassCharacter chi;
    chi.m = m;
    chi.value_k.resize(static_cast<std::size_t>(h));
    int kgcd = 0;
    for (int i = 0; i < h; ++i) {
      long long k = 0;
      for (std::size_t j = 0; j < r; ++j) {
        k += static_cast<long long>(t[j]) * G.coords[static_cast<std::size_t>(i)][j] *
             (G.exponent / G.generator_orders[j]);
      }
      int kk = static_cast<int>(k % m);
      chi.value_k[static_cast<std::size_t>(i)] = kk;
      kgcd = static_cast<int>(std::gcd(static_cast<long long>(kgcd), static_cast<long long>(kk)));
    }
    int g = static_cast<int>(std::gcd(static_cast<long long>(kgcd), static_cast<long long>(m)));
    chi.order = m / g;
    chi.is_genus = chi.order <= 2;
    out.push_back(std::move(chi));

    std::size_t j = 0;
    for (; j < r; ++j) {
      if (++t[j] < G.generator_orders[j]) break;
      t[j] = 0;
    }
    if (j == r) break;
  }
  if (static_cast<int>(out.size()) != h) throw std::logic_error("character_group: wrong count");
  return out;
}

IdealClassCharacter genus_character_from_splitting(const ClassGroup& G,
                                                   std::pair<long long, long long> split) {
  bool valid = false;
  for (const auto& s : G.splittings) {
    if ((s.first == split.first && s.second == split.second) ||
        (s.first == split.second && s.second == split.first)) {
      valid = true;
      break;
    }
  }
  if (!valid) throw std::invalid_argument("genus_character_from_splitting: not a splitting of D");

  IdealClassCharacter chi;
  chi.m = static_cast<int>(G.exponent);
  chi.value_k.resize(G.forms.size());
  chi.splitting = split;
  bool nontrivial = false;
  for (std::size_t i = 0; i < G.forms.size(); ++i) {
    long long n = represented_value_coprime(G.forms[i], -G.D);
    int v1 = kronecker(split.first, n);
    int v2 = kronecker(split.second, n);
    if (v1 * v2 != 1 || v1 == 0)
      throw std::logic_error("genus character: represented value not coprime to both factors");
    if (v1 == 1) {
      chi.value_k[i] = 0;
    } else {
      if (chi.m % 2 != 0) throw std::logic_error("genus character: -1 value in odd-exponent group");
      chi.value_k[i] = chi.m / 2;
      nontrivial = true;
    }
  }
  chi.order = nontrivial ? 2 : 1;
  chi.is_genus = true;
  return chi;
}

bool classify_genus(const IdealClassCharacter& chi) { return chi.real_valued(); }

std::vector<std::pair<std::size_t, std::size_t>> match_splittings(
    const ClassGroup& G, std::vector<IdealClassCharacter>& chars) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<bool> used(chars.size(), false);
  for (std::size_t s = 0; s < G.splittings.size(); ++s) {
    IdealClassCharacter chi = genus_character_from_splitting(G, G.splittings[s]);
    bool found = false;
    for (std::size_t c = 0; c < chars.size(); ++c) {
      if (used[c]) continue;
      if (chi.same_values(chars[c])) {
        chars[c].splitting = G.splittings[s];
        pairs.emplace_back(s, c);
        used[c] = true;
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("match_splittings: splitting character missing from group");
  }
  // the matched characters must be exactly the real ones
  for (std::size_t c = 0; c < chars.size(); ++c) {
    if (chars[c].real_valued() != used[c])
      throw std::logic_error("match_splittings: real characters and splittings do not biject");
  }
  if (pairs.size() != static_cast<std::size_t>(G.genus_count()))
    throw std::logic_error("match_splittings: wrong number of genus characters");
  return pairs;
}

}  // namespace genuslab
