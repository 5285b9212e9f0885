// quadforms.cpp — form reduction, Dirichlet composition, class groups.
#include "genuslab/quadforms.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "genuslab/arith.hpp"
#include "genuslab/errors.hpp"

namespace genuslab {

namespace {

using i128 = __int128;

long long checked_ll(i128 v, const char* where) {
  if (v > i128(1) << 62 || v < -(i128(1) << 62)) throw std::overflow_error(where);
  return static_cast<long long>(v);
}

// Extended gcd: g = ax + by.
long long ext_gcd(long long a, long long b, long long& x, long long& y) {
  if (b == 0) {
    x = a >= 0 ? 1 : -1;
    y = 0;
    return a >= 0 ? a : -a;
  }
  long long x1, y1;
  long long g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

// Solve A*t = B (mod M), M > 0. Returns false if no solution; otherwise
// writes the smallest nonnegative solution and the solution modulus.
bool solve_linear_congruence(i128 A, i128 B, i128 M, i128& t, i128& mod) {
  A %= M;
  if (A < 0) A += M;
  B %= M;
  if (B < 0) B += M;
  long long x, y;
  long long g = ext_gcd(checked_ll(A, "congruence"), checked_ll(M, "congruence"), x, y);
  if (B % g != 0) return false;
  i128 m2 = M / g;
  i128 sol = (i128(x) % m2) * ((B / g) % m2) % m2;
  if (sol < 0) sol += m2;
  t = sol;
  mod = m2;
  return true;
}

QuadForm reduce_i128(i128 a, i128 b, i128 c) {
  if (a <= 0) throw std::invalid_argument("reduce: form must be positive definite");
  while (true) {
    // normalize: b into (-a, a]
    if (b > a || b <= -a) {
      i128 t = b - a;  // ceil((b - a) / (2a))
      i128 den = 2 * a;
      i128 q = t / den;
      if (t % den != 0 && (t > 0) == (den > 0)) ++q;
      c += a * q * q - b * q;
      b -= 2 * a * q;
    }
    if (a > c) {
      std::swap(a, c);
      b = -b;
      continue;
    }
    break;
  }
  if (b < 0 && a == c) b = -b;
  return {checked_ll(a, "reduce"), checked_ll(b, "reduce"), checked_ll(c, "reduce")};
}

// Apply the unimodular substitution (x, y) -> (p x + q y, r x + s y),
// ps - qr = 1.
QuadForm transform(const QuadForm& f, long long p, long long q, long long r, long long s) {
  i128 a = i128(f.a) * p * p + i128(f.b) * p * r + i128(f.c) * r * r;
  i128 b = 2 * i128(f.a) * p * q + i128(f.b) * (i128(p) * s + i128(q) * r) + 2 * i128(f.c) * r * s;
  i128 c = i128(f.a) * q * q + i128(f.b) * q * s + i128(f.c) * s * s;
  return {checked_ll(a, "transform"), checked_ll(b, "transform"), checked_ll(c, "transform")};
}

// Replace g by an equivalent form whose leading coefficient is coprime
// to m (a primitive form represents values coprime to any modulus).
QuadForm equivalent_with_leading_coprime(const QuadForm& g, long long m) {
  for (long long bound = 1; bound <= 128; ++bound) {
    for (long long x = -bound; x <= bound; ++x) {
      for (long long y = -bound; y <= bound; ++y) {
        if (std::max(std::llabs(x), std::llabs(y)) != bound && bound > 1) continue;
        if (std::gcd(x, y) != 1) continue;
        long long val = g.eval(x, y);
        if (val <= 0 || std::gcd(val, m) != 1) continue;
        long long u, v;
        ext_gcd(x, y, u, v);  // x*u + y*v = 1
        // columns (x, y) and (-v, u): det = x*u - y*(-v) = 1
        return transform(g, x, -v, y, u);
      }
    }
  }
  throw std::logic_error("compose: no representative with coprime leading coefficient found");
}

}  // namespace

bool QuadForm::is_reduced() const {
  if (!(std::llabs(b) <= a && a <= c)) return false;
  if ((std::llabs(b) == a || a == c) && b < 0) return false;
  return true;
}

QuadForm make_form(long long a, long long b, long long c) {
  if (a <= 0) throw std::invalid_argument("QuadForm: a must be positive");
  i128 disc = i128(b) * b - 4 * i128(a) * c;
  if (disc >= 0) throw std::invalid_argument("QuadForm: discriminant must be negative");
  if (std::gcd(std::gcd(a, b), c) != 1) throw std::invalid_argument("QuadForm: form must be primitive");
  return {a, b, c};
}

QuadForm reduce(QuadForm f) {
  make_form(f.a, f.b, f.c);
  return reduce_i128(f.a, f.b, f.c);
}

std::vector<QuadForm> reduced_forms(long long D) {
  if (D >= 0 || (((D % 4) + 4) % 4) == 2 || (((D % 4) + 4) % 4) == 3)
    throw std::invalid_argument("reduced_forms: D must be negative and 0 or 1 mod 4");
  std::vector<QuadForm> out;
  long long amax = static_cast<long long>(std::sqrt(static_cast<double>(-D) / 3.0)) + 1;
  for (long long a = 1; a <= amax; ++a) {
    long long bstart = (D % 2 == 0) ? 0 : 1;
    for (long long babs = bstart; babs <= a; babs += 2) {
      for (int sign : {+1, -1}) {
        if (babs == 0 && sign < 0) continue;
        long long b = sign * babs;
        i128 num = i128(b) * b - D;
        if (num % (4 * a) != 0) continue;
        long long c = checked_ll(num / (4 * a), "reduced_forms");
        if (c < a) continue;
        if ((babs == a || a == c) && b < 0) continue;
        if (std::gcd(std::gcd(a, b), c) != 1) continue;
        out.push_back({a, b, c});
      }
    }
  }
  // principal form first; the a-ascending scan already yields it first
  // ((1, 0, -D/4) or (1, 1, (1-D)/4)), but assert rather than assume.
  if (out.empty() || out[0].a != 1) throw std::logic_error("reduced_forms: principal form missing");
  return out;
}

QuadForm compose(const QuadForm& f, const QuadForm& g) {
  i128 Df = i128(f.b) * f.b - 4 * i128(f.a) * f.c;
  i128 Dg = i128(g.b) * g.b - 4 * i128(g.a) * g.c;
  if (Df != Dg) throw std::invalid_argument("compose: discriminant mismatch");
  long long D = checked_ll(Df, "compose");

  QuadForm F = reduce(f);
  QuadForm G = reduce(g);
  long long s = (F.b + G.b) / 2;
  if (std::gcd(std::gcd(F.a, G.a), s) != 1) {
    G = equivalent_with_leading_coprime(G, F.a);
    s = (F.b + G.b) / 2;
  }

  // Unique B mod 2 a1 a2 with B = b1 (2 a1), B = b2 (2 a2),
  // s*B = (D + b1 b2)/2 (2 a1 a2); then (a1 a2, B, (B^2-D)/(4 a1 a2)).
  i128 a1 = F.a, a2 = G.a;
  i128 r = F.b, mod = 2 * a1;
  {
    // merge with B = b2 (mod 2 a2)
    i128 t, tmod;
    if (!solve_linear_congruence(mod, G.b - r, 2 * a2, t, tmod))
      throw std::logic_error("compose: congruence unsolvable");
    r = r + mod * t;
    mod = mod * tmod;
    r %= mod;
    if (r < 0) r += mod;
  }
  {
    i128 M3 = 2 * a1 * a2;
    i128 rhs = (i128(D) + i128(F.b) * G.b) / 2 - i128(s) * r;
    i128 t, tmod;
    if (!solve_linear_congruence(i128(s) * mod % M3, rhs, M3, t, tmod))
      throw std::logic_error("compose: quadratic congruence unsolvable");
    r = r + mod * t;
  }
  i128 A = a1 * a2;
  i128 B = r % (2 * A);
  if (B < 0) B += 2 * A;
  i128 C = (B * B - D) / (4 * A);
  if ((B * B - D) % (4 * A) != 0) throw std::logic_error("compose: nonintegral c");
  return reduce_i128(A, B, C);
}

int ClassGroup::index_of(const QuadForm& f) const {
  for (std::size_t i = 0; i < forms.size(); ++i) {
    if (forms[i] == f) return static_cast<int>(i);
  }
  return -1;
}

int ClassGroup::inverse_of(int i) const {
  for (int j = 0; j < static_cast<int>(h); ++j) {
    if (mul(i, j) == 0) return j;
  }
  throw std::logic_error("ClassGroup: no inverse");
}

int ClassGroup::power(int i, long long e) const {
  int acc = 0;
  long long ee = e % std::max<long long>(order_of(i), 1);
  if (ee < 0) ee += order_of(i);
  for (long long t = 0; t < ee; ++t) acc = mul(acc, i);
  return acc;
}

long long ClassGroup::order_of(int i) const {
  long long ord = 1;
  int cur = i;
  while (cur != 0) {
    cur = mul(cur, i);
    ++ord;
    if (ord > h) throw std::logic_error("ClassGroup: order exceeds group size");
  }
  return ord;
}

namespace {

struct SmallGroup {
  int n = 1;
  std::vector<std::vector<int>> mul;  // identity at index 0
};

long long sg_order(const SmallGroup& G, int x) {
  long long ord = 1;
  int cur = x;
  while (cur != 0) {
    cur = G.mul[static_cast<std::size_t>(cur)][static_cast<std::size_t>(x)];
    ++ord;
  }
  return ord;
}

int sg_pow(const SmallGroup& G, int x, long long e) {
  int acc = 0;
  for (long long t = 0; t < e; ++t) acc = G.mul[static_cast<std::size_t>(acc)][static_cast<std::size_t>(x)];
  return acc;
}

// Decompose a finite abelian group (given by its table) into cyclic
// factors of descending-divisibility orders, returning generator element
// indices. Greedy maximal-order extraction; the complement is reached
// through the quotient, lifting each quotient generator to an element of
// the same order.
void sg_decompose(const SmallGroup& G, std::vector<int>& gens, std::vector<long long>& orders) {
  if (G.n == 1) return;
  int g = 0;
  long long best = 1;
  for (int x = 0; x < G.n; ++x) {
    long long o = sg_order(G, x);
    if (o > best) {
      best = o;
      g = x;
    }
  }
  gens.push_back(g);
  orders.push_back(best);
  if (best == G.n) return;

  // cosets of <g>
  std::vector<int> coset_of(static_cast<std::size_t>(G.n), -1);
  std::vector<int> reps;
  for (int x = 0; x < G.n; ++x) {
    if (coset_of[static_cast<std::size_t>(x)] != -1) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(x);
    int cur = x;
    do {
      coset_of[static_cast<std::size_t>(cur)] = id;
      cur = G.mul[static_cast<std::size_t>(cur)][static_cast<std::size_t>(g)];
    } while (cur != x);
  }
  SmallGroup Q;
  Q.n = static_cast<int>(reps.size());
  Q.mul.assign(static_cast<std::size_t>(Q.n), std::vector<int>(static_cast<std::size_t>(Q.n), 0));
  // identity coset must sit at index 0
  if (coset_of[0] != 0) {
    std::swap(reps[0], reps[static_cast<std::size_t>(coset_of[0])]);
    std::vector<int> remap(static_cast<std::size_t>(Q.n));
    for (int i = 0; i < Q.n; ++i) remap[static_cast<std::size_t>(i)] = i;
    remap[0] = coset_of[0];
    remap[static_cast<std::size_t>(coset_of[0])] = 0;
    for (int& c : coset_of) c = remap[static_cast<std::size_t>(c)];
  }
  for (int i = 0; i < Q.n; ++i) {
    for (int j = 0; j < Q.n; ++j) {
      int prod = G.mul[static_cast<std::size_t>(reps[static_cast<std::size_t>(i)])]
                      [static_cast<std::size_t>(reps[static_cast<std::size_t>(j)])];
      Q.mul[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = coset_of[static_cast<std::size_t>(prod)];
    }
  }

  std::vector<int> qgens;
  std::vector<long long> qorders;
  sg_decompose(Q, qgens, qorders);

  // lift: q^r lands in <g>, say g^s with r | s; q * g^{-s/r} has order r.
  long long m = best;
  std::vector<int> gpow(static_cast<std::size_t>(m));
  gpow[0] = 0;
  for (long long t = 1; t < m; ++t)
    gpow[static_cast<std::size_t>(t)] =
        G.mul[static_cast<std::size_t>(gpow[static_cast<std::size_t>(t - 1)])][static_cast<std::size_t>(g)];
  for (std::size_t idx = 0; idx < qgens.size(); ++idx) {
    int q = reps[static_cast<std::size_t>(qgens[idx])];
    long long rr = qorders[idx];
    int qr = sg_pow(G, q, rr);
    long long spow = -1;
    for (long long t = 0; t < m; ++t) {
      if (gpow[static_cast<std::size_t>(t)] == qr) {
        spow = t;
        break;
      }
    }
    if (spow < 0 || spow % rr != 0) throw std::logic_error("abelian decomposition: lift failed");
    long long adj = (m - spow / rr) % m;
    int lifted = G.mul[static_cast<std::size_t>(q)][static_cast<std::size_t>(gpow[static_cast<std::size_t>(adj)])];
    if (sg_order(G, lifted) != rr) throw std::logic_error("abelian decomposition: lifted order wrong");
    gens.push_back(lifted);
    orders.push_back(rr);
  }
}

}  // namespace

std::vector<long long> prime_discriminant_factorization(long long D) {
  if (!is_fundamental_discriminant(D))
    throw ScopeError("prime_discriminant_factorization: D must be a fundamental discriminant");
  long long absD = D < 0 ? -D : D;
  std::vector<long long> odd_stars;
  long long prod = 1;
  for (long long p : distinct_primes(static_cast<unsigned long long>(absD))) {
    if (p == 2) continue;
    long long star = (p % 4 == 1) ? p : -p;
    odd_stars.push_back(star);
    prod *= star;
  }
  long long residual = D / prod;
  if (D % prod != 0) throw std::logic_error("prime discriminants: residual not integral");
  std::vector<long long> out;
  if (residual != 1) {
    if (residual != -4 && residual != 8 && residual != -8)
      throw std::logic_error("prime discriminants: unexpected even factor");
    out.push_back(residual);
  }
  out.insert(out.end(), odd_stars.begin(), odd_stars.end());
  long long check = 1;
  for (long long P : out) check *= P;
  if (check != D) throw std::logic_error("prime discriminants: product mismatch");
  return out;
}

std::vector<std::pair<long long, long long>> genus_splittings(long long D) {
  std::vector<long long> P = prime_discriminant_factorization(D);
  int k = static_cast<int>(P.size());
  std::vector<std::pair<long long, long long>> out;
  std::map<std::pair<long long, long long>, bool> seen;
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    long long d1 = 1;
    for (int i = 0; i < k; ++i) {
      if (mask & (1u << i)) d1 *= P[static_cast<std::size_t>(i)];
    }
    long long d2 = D / d1;
    auto key = std::minmax(d1, d2);
    if (seen[{key.first, key.second}]) continue;
    seen[{key.first, key.second}] = true;
    // canonical orientation: the factor built from fewer prime
    // discriminants first; on ties, the side containing P_1
    int size1 = std::popcount(mask);
    int size2 = k - size1;
    bool swap_pair = size1 > size2 || (size1 == size2 && !(mask & 1u));
    if (swap_pair) std::swap(d1, d2);
    out.emplace_back(d1, d2);
  }
  return out;
}

ClassGroup class_group(long long D) {
  if (D >= 0) throw std::invalid_argument("class_group: D must be negative");
  if (!is_fundamental_discriminant(D))
    throw ScopeError("class_group: non-fundamental discriminant (nonmaximal order unsupported)");
  ClassGroup G;
  G.D = D;
  G.forms = reduced_forms(D);
  G.h = static_cast<long long>(G.forms.size());
  int h = static_cast<int>(G.h);

  std::map<QuadForm, int> index;
  for (int i = 0; i < h; ++i) index[G.forms[static_cast<std::size_t>(i)]] = i;
  G.table.assign(static_cast<std::size_t>(h), std::vector<int>(static_cast<std::size_t>(h), -1));
  for (int i = 0; i < h; ++i) {
    for (int j = i; j < h; ++j) {
      QuadForm prod = compose(G.forms[static_cast<std::size_t>(i)], G.forms[static_cast<std::size_t>(j)]);
      auto it = index.find(prod);
      if (it == index.end()) throw std::logic_error("class_group: product not a reduced representative");
      G.table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = it->second;
      G.table[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = it->second;
    }
  }
  // group axioms: identity, inverses, associativity
  for (int i = 0; i < h; ++i) {
    if (G.mul(0, i) != i) throw std::logic_error("class_group: principal class is not the identity");
    bool has_inv = false;
    for (int j = 0; j < h; ++j) has_inv |= (G.mul(i, j) == 0);
    if (!has_inv) throw std::logic_error("class_group: missing inverse");
  }
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < h; ++j)
      for (int l = 0; l < h; ++l)
        if (G.mul(G.mul(i, j), l) != G.mul(i, G.mul(j, l)))
          throw std::logic_error("class_group: associativity failure");

  SmallGroup sg;
  sg.n = h;
  sg.mul = G.table;
  sg_decompose(sg, G.generators, G.generator_orders);
  for (std::size_t i = 1; i < G.generator_orders.size(); ++i) {
    if (G.generator_orders[i - 1] % G.generator_orders[i] != 0)
      throw std::logic_error("class_group: generator orders not a divisibility chain");
  }
  G.exponent = G.generator_orders.empty() ? 1 : G.generator_orders[0];

  // coordinates: enumerate all generator-power tuples; must hit every class once
  G.coords.assign(static_cast<std::size_t>(h), {});
  std::size_t r = G.generators.size();
  std::vector<int> tuple(r, 0);
  long long total = 1;
  for (long long o : G.generator_orders) total *= o;
  if (total != G.h) throw std::logic_error("class_group: decomposition order mismatch");
  std::vector<bool> hit(static_cast<std::size_t>(h), false);
  while (true) {
    int elem = 0;
    for (std::size_t j = 0; j < r; ++j) {
      for (int t = 0; t < tuple[j]; ++t) elem = G.mul(elem, G.generators[j]);
    }
    if (hit[static_cast<std::size_t>(elem)]) throw std::logic_error("class_group: decomposition not free");
    hit[static_cast<std::size_t>(elem)] = true;
    G.coords[static_cast<std::size_t>(elem)] = tuple;
    std::size_t j = 0;
    for (; j < r; ++j) {
      if (++tuple[j] < G.generator_orders[j]) break;
      tuple[j] = 0;
    }
    if (j == r) break;
  }

  G.invariant_factors.assign(G.generator_orders.rbegin(), G.generator_orders.rend());
  G.prime_discs = prime_discriminant_factorization(D);
  G.k = static_cast<int>(G.prime_discs.size());
  G.splittings = genus_splittings(D);
  return G;
}

bool in_scope(long long N) {
  if (N < 1) return false;
  if (((N % 4) + 4) % 4 == 3) return false;  // -N = 1 mod 4: nonmaximal order
  return is_squarefree(static_cast<unsigned long long>(N));
}

void require_in_scope(long long N) {
  if (!in_scope(N)) {
    throw ScopeError("N=" + std::to_string(N) +
                     " out of scope: need squarefree N >= 1 with -N not congruent to 1 mod 4 "
                     "(Z[sqrt(-N)] must be the maximal order)");
  }
}

bool is_solvable(long long N) {
  require_in_scope(N);
  return class_group(-4 * N).is_solvable();
}

long long represented_value_coprime(const QuadForm& f, long long m) {
  if (m < 1) throw std::invalid_argument("represented_value_coprime: m must be >= 1");
  make_form(f.a, f.b, f.c);
  long long D = f.discriminant();
  for (long long bound = std::max({f.a, f.c, 2LL});; bound *= 4) {
    long long best = 0;
    long long ymax = static_cast<long long>(std::sqrt(4.0 * static_cast<double>(f.a) *
                                                      static_cast<double>(bound) /
                                                      static_cast<double>(-D))) + 2;
    for (long long y = -ymax; y <= ymax; ++y) {
      // f(x,y) <= bound on the x-interval around the vertex -by/(2a)
      double sq = static_cast<double>(D) * static_cast<double>(y) * static_cast<double>(y) +
                  4.0 * static_cast<double>(f.a) * static_cast<double>(bound);
      if (sq < 0) continue;
      double root = std::sqrt(sq);
      long long xlo = static_cast<long long>(std::floor((-static_cast<double>(f.b) * y - root) /
                                                        (2.0 * f.a))) - 1;
      long long xhi = static_cast<long long>(std::ceil((-static_cast<double>(f.b) * y + root) /
                                                       (2.0 * f.a))) + 1;
      for (long long x = xlo; x <= xhi; ++x) {
        i128 val = i128(f.a) * x * x + i128(f.b) * x * y + i128(f.c) * y * y;
        if (val <= 0 || val > bound) continue;
        long long v = static_cast<long long>(val);
        if (std::gcd(v, m) == 1 && (best == 0 || v < best)) best = v;
      }
    }
    if (best != 0) return best;
    if (bound > (1LL << 40)) throw std::logic_error("represented_value_coprime: search bound exceeded");
  }
}

}  // namespace genuslab
