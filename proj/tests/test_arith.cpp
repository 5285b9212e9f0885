#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gmpxx.h>

#include <numeric>
#include <random>

#include "genuslab/arith.hpp"

using namespace genuslab;

namespace {

// brute-force oracle: is x^2 = d (mod p) solvable?
bool square_mod_solvable(long long d, long long p) {
  long long dd = ((d % p) + p) % p;
  for (long long x = 0; x < p; ++x) {
    if ((x * x) % p == dd) return true;
  }
  return false;
}

int gmp_kronecker(long long d, long long n) {
  mpz_class a(static_cast<long>(d)), b(static_cast<long>(n));
  return mpz_kronecker(a.get_mpz_t(), b.get_mpz_t());
}

}  // namespace

TEST_CASE("kronecker: fixed values") {
  for (long long d : {-84, -20, -8, -4, -3, 1, 5, 8, 21}) CHECK(kronecker(d, 1) == 1);
  // chi_{-4}(n) = +1 iff n = 1 mod 4
  CHECK(kronecker(-4, 3) == -1);
  CHECK(kronecker(-4, 5) == 1);
  // -20 = 1 mod 7 and 1 is a square
  CHECK(square_mod_solvable(-20, 7));
  CHECK(kronecker(-20, 7) == 1);
  CHECK(kronecker(-8, 2) == 0);
  CHECK(kronecker(0, 1) == 1);
  CHECK(kronecker(0, 5) == 0);
  CHECK(kronecker(7, 0) == 0);
  CHECK(kronecker(1, 0) == 1);
  CHECK(kronecker(-1, 0) == 1);
}

TEST_CASE("kronecker: (d/2) and (d/-1) conventions") {
  CHECK(kronecker(2, 2) == 0);
  CHECK(kronecker(17, 2) == 1);   // 17 = 1 mod 8
  CHECK(kronecker(-9, 2) == 1);   // -9 = -1 mod 8
  CHECK(kronecker(5, 2) == -1);   // 5 = -3 mod 8
  CHECK(kronecker(-4, -7) == 1);  // (-4/-1) = -1 and (-4/7) = -1
  CHECK(kronecker(4, -7) == 1);
}

TEST_CASE("kronecker: agrees with GMP on random pairs") {
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<long long> dist(-2000, 2000);
  for (int it = 0; it < 20000; ++it) {
    long long d = dist(rng), n = dist(rng);
    CAPTURE(d);
    CAPTURE(n);
    REQUIRE(kronecker(d, n) == gmp_kronecker(d, n));
  }
}

TEST_CASE("kronecker: multiplicative in n") {
  const long long ds[] = {-4, 8, -8, -20, 5, -7, 21, -56, -84};
  for (long long d : ds) {
    for (long long m = -60; m <= 60; ++m) {
      for (long long n = -60; n <= 60; ++n) {
        REQUIRE(kronecker(d, m * n) == kronecker(d, m) * kronecker(d, n));
      }
    }
  }
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long long> dist(-10000, 10000);
  for (long long d : ds) {
    for (int it = 0; it < 4000; ++it) {
      long long m = dist(rng), n = dist(rng);
      REQUIRE(kronecker(d, m * n) == kronecker(d, m) * kronecker(d, n));
    }
  }
}

TEST_CASE("kronecker: zero exactly on shared factors") {
  for (long long d : {-84, -20, -4, 5, 21}) {
    for (long long n = 1; n <= 500; ++n) {
      bool shares = std::gcd(d < 0 ? -d : d, n) > 1;
      REQUIRE((kronecker(d, n) == 0) == shares);
    }
  }
}

TEST_CASE("kronecker: Legendre symbol for odd primes away from d") {
  const long long ds[] = {-4, 8, -8, -20, 5, -7, 21, -56, -84};
  for (long long p : prime_sieve(200)) {
    if (p == 2) continue;
    for (long long d : ds) {
      if (d % p == 0) continue;
      REQUIRE(kronecker(d, p) == (square_mod_solvable(d, p) ? 1 : -1));
    }
  }
}

TEST_CASE("factorize: fixed values") {
  CHECK(factorize(1).empty());
  CHECK(factorize(56) == Factorization{{2, 3}, {7, 1}});
  CHECK(factorize(9991) == Factorization{{97, 1}, {103, 1}});
  CHECK_THROWS_AS(factorize(0), std::invalid_argument);
}

TEST_CASE("factorize: round-trip up to 1e5") {
  for (unsigned long long n = 1; n <= 100000; ++n) {
    unsigned long long prod = 1;
    long long last_p = 0;
    for (const auto& pp : factorize(n)) {
      REQUIRE(pp.p > last_p);
      REQUIRE(pp.e >= 1);
      last_p = pp.p;
      for (int e = 0; e < pp.e; ++e) prod *= static_cast<unsigned long long>(pp.p);
    }
    REQUIRE(prod == n);
  }
}

TEST_CASE("factorize: large cofactors") {
  // 2^61 - 1 is prime
  CHECK(factorize(2305843009213693951ULL) == Factorization{{2305843009213693951LL, 1}});
  // product of two primes above the sieve bound
  unsigned long long p = 1000000007ULL, q = 1000000009ULL;
  CHECK(factorize(p * q) == Factorization{{1000000007LL, 1}, {1000000009LL, 1}});
  // square of a large prime
  CHECK(factorize(p * p) == Factorization{{1000000007LL, 2}});
}

TEST_CASE("is_squarefree") {
  CHECK(is_squarefree(1));
  CHECK(is_squarefree(10));
  CHECK_FALSE(is_squarefree(12));
  CHECK_FALSE(is_squarefree(49));
  CHECK(is_squarefree(2 * 3 * 5 * 7 * 11));
}

TEST_CASE("divisors") {
  CHECK(divisors(1) == std::vector<long long>{1});
  CHECK(divisors(21) == std::vector<long long>{1, 3, 7, 21});
  CHECK(divisors(56).size() == 8);  // tau(56) = (3+1)(1+1)
  auto d56 = divisors(56);
  CHECK(std::is_sorted(d56.begin(), d56.end()));
  for (long long d : d56) CHECK(56 % d == 0);
}

TEST_CASE("prime_sieve") {
  CHECK(prime_sieve(10) == std::vector<long long>{2, 3, 5, 7});
  CHECK(prime_sieve(2) == std::vector<long long>{2});
  CHECK(prime_sieve(100).size() == 25);
  CHECK_THROWS_AS(prime_sieve(1), std::invalid_argument);
  // cross-check against a naive primality loop
  auto primes = prime_sieve(2000);
  std::size_t idx = 0;
  for (long long n = 2; n <= 2000; ++n) {
    bool prime = true;
    for (long long d = 2; d * d <= n; ++d) {
      if (n % d == 0) {
        prime = false;
        break;
      }
    }
    if (prime) {
      REQUIRE(idx < primes.size());
      REQUIRE(primes[idx] == n);
      ++idx;
    }
  }
  CHECK(idx == primes.size());
}

TEST_CASE("is_fundamental_discriminant") {
  for (long long d : {1, -4, -8, 8, -20, -24, 5, -7, -84, -56}) CHECK(is_fundamental_discriminant(d));
  for (long long d : {0, -12, -9, 2, 3, -16, -100, -44 * 4}) CHECK_FALSE(is_fundamental_discriminant(d));
}
