// arith.hpp — exact integer utilities: primes, factorization, divisors,
// squarefree tests, and the Kronecker symbol.
#pragma once

#include <vector>

namespace genuslab {

// One prime power p^e of a factorization.
struct PrimePower {
  long long p = 0;
  int e = 0;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Prime factorization: primes strictly increasing, exponents >= 1,
// product of p^e reconstructs the input. Empty for n = 1.
using Factorization = std::vector<PrimePower>;

// Kronecker symbol (d/n), defined for all integer pairs.
// Conventions: (d/2) = 0 for even d, +1 for d = +-1 mod 8, -1 for
// d = +-3 mod 8; (d/-1) = +1 for d >= 0 and -1 for d < 0;
// (d/0) = 1 iff d = +-1, else 0.
int kronecker(long long d, long long n);

// Exact deterministic factorization of n >= 1. Trial division over a
// cached prime sieve, then Miller-Rabin plus Pollard-Brent for large
// cofactors. Throws std::invalid_argument for n = 0.
Factorization factorize(unsigned long long n);

bool is_squarefree(unsigned long long n);

// All divisors of n >= 1, ascending.
std::vector<long long> divisors(unsigned long long n);

// Distinct prime factors of n, ascending.
std::vector<long long> distinct_primes(unsigned long long n);

// All primes <= limit, ascending. Requires limit >= 2.
std::vector<long long> prime_sieve(long long limit);

// Deterministic 64-bit primality test.
bool is_prime(unsigned long long n);

// True iff d is a fundamental discriminant: d = 1 mod 4 squarefree, or
// d = 4q with q = 2,3 mod 4 squarefree. d = 1 counts (trivial splitting
// factor); d = 0 does not.
bool is_fundamental_discriminant(long long d);

}  // namespace genuslab
