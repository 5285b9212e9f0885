#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "genuslab/arith.hpp"
#include "genuslab/characters.hpp"
#include "genuslab/errors.hpp"

using namespace genuslab;

namespace {

std::vector<long long> in_scope_up_to(long long nmax) {
  std::vector<long long> out;
  for (long long N = 1; N <= nmax; ++N)
    if (in_scope(N)) out.push_back(N);
  return out;
}

// the first `count` values f(x,y) > 0 coprime to m, in increasing order
std::vector<long long> coprime_represented_values(const QuadForm& f, long long m, int count) {
  std::set<long long> vals;
  for (long long x = -60; x <= 60; ++x)
    for (long long y = -60; y <= 60; ++y) {
      long long v = f.eval(x, y);
      if (v > 0 && std::gcd(v, m) == 1) vals.insert(v);
    }
  std::vector<long long> out(vals.begin(), vals.end());
  if (static_cast<int>(out.size()) > count) out.resize(static_cast<std::size_t>(count));
  return out;
}

}  // namespace

TEST_CASE("character_group: trivial group") {
  ClassGroup G = class_group(-4);
  auto chars = character_group(G);
  REQUIRE(chars.size() == 1);
  CHECK(chars[0].order == 1);
  CHECK(chars[0].is_genus);
  CHECK(chars[0].value_k == std::vector<int>{0});
}

TEST_CASE("character_group: Z/2 at D=-20") {
  ClassGroup G = class_group(-20);
  auto chars = character_group(G);
  REQUIRE(chars.size() == 2);
  CHECK(chars[0].value_k == std::vector<int>{0, 0});
  // the nontrivial character takes -1 on the nonprincipal class
  CHECK(chars[1].value(0) == CycRat::one());
  CHECK(chars[1].value(1) == CycRat(Rational(-1)));
  CHECK(chars[1].order == 2);
}

TEST_CASE("character_group: Z/4 at D=-56") {
  ClassGroup G = class_group(-56);
  auto chars = character_group(G);
  REQUIRE(chars.size() == 4);
  int real = 0, order4 = 0;
  for (const auto& chi : chars) {
    if (chi.real_valued()) ++real;
    if (chi.order == 4) ++order4;
  }
  CHECK(real == 2);
  CHECK(order4 == 2);
  // an order-4 character takes all four values 1, i, -1, -i
  for (const auto& chi : chars) {
    if (chi.order != 4) continue;
    std::set<int> vals;
    for (int i = 0; i < 4; ++i) {
      int k = chi.value_k[static_cast<std::size_t>(i)];
      vals.insert((k * 4 / chi.m) % 4);
    }
    REQUIRE(vals == std::set<int>{0, 1, 2, 3});
  }
}

TEST_CASE("characters are homomorphisms") {
  for (long long N : {5LL, 14LL, 21LL, 26LL, 65LL}) {
    ClassGroup G = class_group(-4 * N);
    auto chars = character_group(G);
    for (const auto& chi : chars) {
      for (int i = 0; i < G.h; ++i)
        for (int j = 0; j < G.h; ++j)
          REQUIRE(chi.value(G.mul(i, j)) == chi.value(i) * chi.value(j));
    }
  }
}

TEST_CASE("orthogonality and inversion, exact, all N <= 100 in scope") {
  for (long long N : in_scope_up_to(100)) {
    ClassGroup G = class_group(-4 * N);
    auto chars = character_group(G);
    REQUIRE(static_cast<long long>(chars.size()) == G.h);
    for (std::size_t x = 0; x < chars.size(); ++x) {
      for (std::size_t y = 0; y < chars.size(); ++y) {
        CycRat acc;
        for (int i = 0; i < G.h; ++i) acc += chars[x].value(i) * chars[y].value(i).conj();
        if (x == y) {
          REQUIRE(acc == CycRat(G.h));
        } else {
          REQUIRE(acc.is_zero());
        }
      }
    }
    // (1/h) sum_chi chi(c_i) = [i = 0]
    for (int i = 0; i < G.h; ++i) {
      CycRat acc;
      for (const auto& chi : chars) acc += chi.value(i);
      if (i == 0) {
        REQUIRE(acc == CycRat(G.h));
      } else {
        REQUIRE(acc.is_zero());
      }
    }
  }
}

TEST_CASE("genus_character_from_splitting: fixed values") {
  ClassGroup G20 = class_group(-20);
  auto triv = genus_character_from_splitting(G20, {1, -20});
  CHECK(triv.order == 1);
  CHECK(triv.value_k == std::vector<int>(2, 0));

  auto chi = genus_character_from_splitting(G20, {-4, 5});
  CHECK(chi.value(0) == CycRat::one());
  CHECK(chi.value(1) == CycRat(Rational(-1)));  // kronecker(-4, 3) = -1

  ClassGroup G56 = class_group(-56);
  auto chi56 = genus_character_from_splitting(G56, {8, -7});
  int idx = G56.index_of({3, 2, 5});
  REQUIRE(idx >= 0);
  CHECK(chi56.value(idx) == CycRat(Rational(-1)));  // kronecker(8, 3) = -1

  CHECK_THROWS_AS(genus_character_from_splitting(G20, {-20, 1413}), std::invalid_argument);
}

TEST_CASE("genus characters do not depend on the represented value") {
  for (long long N : {5LL, 14LL, 21LL, 30LL}) {
    ClassGroup G = class_group(-4 * N);
    for (const auto& split : G.splittings) {
      auto chi = genus_character_from_splitting(G, split);
      for (std::size_t i = 0; i < G.forms.size(); ++i) {
        auto vals = coprime_represented_values(G.forms[i], -G.D, 20);
        REQUIRE(vals.size() >= 10);
        int expect = chi.value_k[i] == 0 ? 1 : -1;
        for (long long n : vals) REQUIRE(kronecker(split.first, n) == expect);
      }
    }
  }
}

TEST_CASE("classify_genus") {
  ClassGroup G = class_group(-56);
  auto chars = character_group(G);
  int genus = 0;
  for (const auto& chi : chars) {
    CHECK(classify_genus(chi) == (chi.order <= 2));
    if (classify_genus(chi)) ++genus;
  }
  CHECK(genus == G.genus_count());
  CHECK(classify_genus(chars[0]));
  for (long long N : in_scope_up_to(100)) {
    ClassGroup GN = class_group(-4 * N);
    auto cs = character_group(GN);
    long long count = static_cast<long long>(std::count_if(
        cs.begin(), cs.end(), [](const IdealClassCharacter& c) { return classify_genus(c); }));
    REQUIRE(count == GN.genus_count());
  }
}

TEST_CASE("match_splittings: bijection with real characters") {
  for (long long N : in_scope_up_to(100)) {
    ClassGroup G = class_group(-4 * N);
    auto chars = character_group(G);
    auto pairs = match_splittings(G, chars);
    REQUIRE(pairs.size() == static_cast<std::size_t>(G.genus_count()));
    std::set<std::size_t> used_chars;
    for (auto [s, c] : pairs) {
      used_chars.insert(c);
      REQUIRE(chars[c].splitting.has_value());
      REQUIRE(chars[c].real_valued());
    }
    REQUIRE(used_chars.size() == pairs.size());
  }
  // D=-84: all four characters of Z/2 x Z/2 are genus characters
  ClassGroup G84 = class_group(-84);
  auto chars84 = character_group(G84);
  auto pairs84 = match_splittings(G84, chars84);
  CHECK(pairs84.size() == 4);
  for (const auto& chi : chars84) CHECK(chi.splitting.has_value());
  // D=-20: the (-4,5) splitting matches the unique nontrivial character
  ClassGroup G20 = class_group(-20);
  auto chars20 = character_group(G20);
  match_splittings(G20, chars20);
  REQUIRE(chars20[1].splitting.has_value());
  auto sp = *chars20[1].splitting;
  CHECK(((sp.first == -4 && sp.second == 5) || (sp.first == 5 && sp.second == -4)));
}

TEST_CASE("conjugate characters pair up") {
  for (long long N : {14LL, 26LL, 17LL}) {
    ClassGroup G = class_group(-4 * N);
    auto chars = character_group(G);
    for (const auto& chi : chars) {
      int conj_count = 0;
      for (const auto& other : chars) conj_count += chi.conjugate_values(other) ? 1 : 0;
      REQUIRE(conj_count == 1);  // exactly one conjugate partner (itself when real)
    }
  }
}
