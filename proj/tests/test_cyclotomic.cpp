#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "genuslab/cyclotomic.hpp"

using namespace genuslab;

TEST_CASE("cyclotomic polynomials") {
  CHECK(CyclotomicField::get(1).degree() == 1);
  CHECK(CyclotomicField::get(2).degree() == 1);
  CHECK(CyclotomicField::get(4).degree() == 2);   // x^2 + 1
  CHECK(CyclotomicField::get(6).degree() == 2);   // x^2 - x + 1
  CHECK(CyclotomicField::get(12).degree() == 4);
  const auto& phi4 = CyclotomicField::get(4).polynomial();
  CHECK(phi4 == std::vector<BigInt>{1, 0, 1});
  const auto& phi6 = CyclotomicField::get(6).polynomial();
  CHECK(phi6 == std::vector<BigInt>{1, -1, 1});
  // first index with a coefficient of magnitude 2
  const auto& phi105 = CyclotomicField::get(105).polynomial();
  bool has_two = false;
  for (const auto& c : phi105) has_two |= (c == -2 || c == 2);
  CHECK(has_two);
}

TEST_CASE("roots of unity multiply by adding exponents") {
  for (int m : {1, 2, 3, 4, 6, 8, 12}) {
    for (int a = 0; a < m; ++a) {
      for (int b = 0; b < m; ++b) {
        CHECK(CycRat::root_of_unity(m, a) * CycRat::root_of_unity(m, b) ==
              CycRat::root_of_unity(m, a + b));
      }
    }
  }
}

TEST_CASE("full-cycle sums vanish") {
  for (int m : {2, 3, 4, 5, 6, 8, 12}) {
    CycRat s;
    for (int k = 0; k < m; ++k) s += CycRat::root_of_unity(m, k);
    CHECK(s.is_zero());
    CHECK(s.is_rational());
  }
}

TEST_CASE("conjugation") {
  for (int m : {3, 4, 6, 8, 12}) {
    for (int k = 0; k < m; ++k) {
      CycRat z = CycRat::root_of_unity(m, k);
      CHECK(z.conj() == CycRat::root_of_unity(m, -k));
      CHECK((z * z.conj()) == CycRat::one());
    }
  }
  // |1 + zeta_6|^2 = 3 exactly
  CycRat v = CycRat::one() + CycRat::root_of_unity(6, 1);
  CycRat norm = v * v.conj();
  CHECK(norm.is_rational());
  CHECK(norm.rational_value() == 3);
}

TEST_CASE("mixed conductors lift to the lcm") {
  CycRat i = CycRat::root_of_unity(4, 1);
  CycRat w = CycRat::root_of_unity(3, 1);
  CycRat prod = i * w;
  CHECK(prod == CycRat::root_of_unity(12, 7));  // 1/4 + 1/3 = 7/12
  CHECK(CycRat(Rational(5)) + CycRat::root_of_unity(2, 1) == CycRat(Rational(4)));
}

TEST_CASE("inverse") {
  CHECK(CycRat(Rational(4)).inverse() == CycRat(Rational(1, 4)));
  for (int m : {3, 4, 6, 8, 12}) {
    for (int k = 0; k < m; ++k) {
      CycRat z = CycRat::root_of_unity(m, k);
      CHECK(z.inverse() * z == CycRat::one());
    }
  }
  CycRat v = CycRat(Rational(2)) + CycRat::root_of_unity(4, 1);  // 2 + i
  CHECK(v.inverse() * v == CycRat::one());
  CHECK_THROWS_AS(CycRat().inverse(), std::domain_error);
}

TEST_CASE("numeric embedding matches the symbolic value") {
  for (int m : {1, 2, 3, 4, 5, 6, 8, 12}) {
    for (int k = 0; k < m; ++k) {
      auto z = CycRat::root_of_unity(m, k).to_complex();
      double angle = 2.0 * 3.14159265358979323846 * k / m;
      CHECK(std::abs(z.real() - std::cos(angle)) < 1e-12);
      CHECK(std::abs(z.imag() - std::sin(angle)) < 1e-12);
    }
  }
}
