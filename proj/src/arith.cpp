// arith.cpp — integer utilities behind every character and sieve.
#include "genuslab/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace genuslab {

namespace {

using u64 = unsigned long long;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

const std::vector<long long>& small_primes() {
  static const std::vector<long long> primes = prime_sieve(1'000'000);
  return primes;
}

u64 isqrt_u64(u64 n) {
  if (n == 0) return 0;
  u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Pollard-Brent with a fixed parameter schedule, so factorizations are
// reproducible. n must be composite, odd, and free of tiny factors.
u64 pollard_brent(u64 n) {
  for (u64 c = 1;; ++c) {
    u64 x = 2, y = 2, d = 1;
    u64 power = 1, lam = 1;
    while (d == 1) {
      if (power == lam) {
        x = y;
        power *= 2;
        lam = 0;
      }
      y = (mulmod(y, y, n) + c) % n;
      ++lam;
      u64 diff = x > y ? x - y : y - x;
      d = std::gcd(diff, n);
    }
    if (d != n) return d;
  }
}

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic witness set for all 64-bit integers.
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

int kronecker(long long d, long long n) {
  if (n == 0) return (d == 1 || d == -1) ? 1 : 0;
  if ((d & 1) == 0 && (n & 1) == 0) return 0;
  int r = 1;
  if (n < 0) {
    n = -n;
    if (d < 0) r = -r;
  }
  int dm8 = static_cast<int>(((d % 8) + 8) % 8);
  while ((n & 1) == 0) {
    n >>= 1;
    if (dm8 == 3 || dm8 == 5) r = -r;
  }
  // n odd positive: Jacobi symbol (d mod n / n) by quadratic reciprocity.
  long long a = d % n;
  if (a < 0) a += n;
  long long b = n;
  while (a != 0) {
    while ((a & 1) == 0) {
      a >>= 1;
      long long bm8 = b & 7;
      if (bm8 == 3 || bm8 == 5) r = -r;
    }
    std::swap(a, b);
    if ((a & 3) == 3 && (b & 3) == 3) r = -r;
    a %= b;
  }
  return b == 1 ? r : 0;
}

Factorization factorize(u64 n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be >= 1");
  Factorization out;
  for (long long p : small_primes()) {
    u64 up = static_cast<u64>(p);
    if (up * up > n) break;
    if (n % up == 0) {
      int e = 0;
      while (n % up == 0) {
        n /= up;
        ++e;
      }
      out.push_back({p, e});
    }
  }
  if (n > 1) {
    // Cofactor has no prime factor below 1e6; split it recursively.
    std::vector<u64> pending{n};
    std::vector<u64> large;
    while (!pending.empty()) {
      u64 m = pending.back();
      pending.pop_back();
      if (is_prime(m)) {
        large.push_back(m);
        continue;
      }
      u64 s = isqrt_u64(m);
      if (s * s == m) {
        pending.push_back(s);
        pending.push_back(s);
        continue;
      }
      u64 f = pollard_brent(m);
      pending.push_back(f);
      pending.push_back(m / f);
    }
    std::sort(large.begin(), large.end());
    for (std::size_t i = 0; i < large.size();) {
      std::size_t j = i;
      while (j < large.size() && large[j] == large[i]) ++j;
      out.push_back({static_cast<long long>(large[i]), static_cast<int>(j - i)});
      i = j;
    }
  }
  return out;
}

bool is_squarefree(u64 n) {
  if (n == 0) throw std::invalid_argument("is_squarefree: n must be >= 1");
  for (const auto& pp : factorize(n)) {
    if (pp.e > 1) return false;
  }
  return true;
}

std::vector<long long> divisors(u64 n) {
  std::vector<long long> out{1};
  for (const auto& pp : factorize(n)) {
    std::size_t base = out.size();
    long long q = 1;
    for (int e = 1; e <= pp.e; ++e) {
      q *= pp.p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * q);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<long long> distinct_primes(u64 n) {
  std::vector<long long> out;
  for (const auto& pp : factorize(n)) out.push_back(pp.p);
  return out;
}

bool is_fundamental_discriminant(long long d) {
  if (d == 0) return false;
  long long r = ((d % 4) + 4) % 4;
  if (r == 1) return is_squarefree(static_cast<unsigned long long>(d < 0 ? -d : d));
  if (r != 0) return false;
  long long q = d / 4;
  long long qr = ((q % 4) + 4) % 4;
  if (qr != 2 && qr != 3) return false;
  return is_squarefree(static_cast<unsigned long long>(q < 0 ? -q : q));
}

std::vector<long long> prime_sieve(long long limit) {
  if (limit < 2) throw std::invalid_argument("prime_sieve: limit must be >= 2");
  std::vector<char> composite(static_cast<std::size_t>(limit) + 1, 0);
  std::vector<long long> primes;
  for (long long i = 2; i <= limit; ++i) {
    if (composite[static_cast<std::size_t>(i)]) continue;
    primes.push_back(i);
    if (i > limit / i) continue;
    for (long long j = i * i; j <= limit; j += i) composite[static_cast<std::size_t>(j)] = 1;
  }
  return primes;
}

}  // namespace genuslab
