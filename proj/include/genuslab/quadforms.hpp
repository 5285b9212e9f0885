// quadforms.hpp — primitive positive definite integral binary quadratic
// forms: reduction, enumeration, Dirichlet composition, class group
// structure, prime-discriminant factorization, genus splittings, and the
// one-form-per-genus solvability test.
#pragma once

#include <utility>
#include <vector>

namespace genuslab {

// a x^2 + b xy + c y^2 with a > 0, b^2 - 4ac < 0, gcd(a,b,c) = 1.
struct QuadForm {
  long long a = 0, b = 0, c = 0;

  long long discriminant() const { return b * b - 4 * a * c; }
  long long eval(long long x, long long y) const { return a * x * x + b * x * y + c * y * y; }
  bool is_reduced() const;

  friend bool operator==(const QuadForm&, const QuadForm&) = default;
  friend auto operator<=>(const QuadForm&, const QuadForm&) = default;
};

// Validates positivity, negative discriminant, and primitivity.
QuadForm make_form(long long a, long long b, long long c);

// The unique reduced representative of f's class:
// |b| <= a <= c, with b >= 0 when |b| = a or a = c.
QuadForm reduce(QuadForm f);

// All primitive reduced forms of discriminant D < 0 (D = 0,1 mod 4),
// principal form first; length is the class number h(D).
std::vector<QuadForm> reduced_forms(long long D);

// Reduced representative of the composed class (Dirichlet composition).
QuadForm compose(const QuadForm& f, const QuadForm& g);

struct ClassGroup {
  long long D = 0;
  std::vector<QuadForm> forms;               // reduced reps, principal first
  std::vector<std::vector<int>> table;       // Cayley table
  std::vector<long long> invariant_factors;  // ascending divisibility chain
  long long h = 1;
  std::vector<long long> prime_discs;        // P_1..P_k, even factor first
  int k = 1;
  std::vector<std::pair<long long, long long>> splittings;  // (1, D) first

  // Basis decomposition: forms[generators[j]] has order generator_orders[j]
  // (descending divisibility chain) and every class i factors uniquely as
  // prod_j generators[j]^coords[i][j].
  std::vector<int> generators;
  std::vector<long long> generator_orders;
  std::vector<std::vector<int>> coords;
  long long exponent = 1;

  int index_of(const QuadForm& reduced_rep) const;  // -1 if absent
  int mul(int i, int j) const { return table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  int inverse_of(int i) const;
  int power(int i, long long e) const;
  long long order_of(int i) const;
  long long genus_count() const { return 1LL << (k - 1); }
  bool is_solvable() const { return h == genus_count(); }
};

// Full class group of a fundamental discriminant D < 0, with verified
// group axioms and cyclic decomposition. Non-fundamental D (the
// nonmaximal-order case) raises ScopeError.
ClassGroup class_group(long long D);

// Unique factorization of a fundamental discriminant into prime
// discriminants (-4, +-8, or p* = +-p with p* = 1 mod 4).
std::vector<long long> prime_discriminant_factorization(long long D);

// The 2^{k-1} unordered factorizations D = D1 * D2 into two discriminants,
// including the trivial pair (1, D).
std::vector<std::pair<long long, long long>> genus_splittings(long long D);

// True iff the class number of discriminant -4N equals the genus count.
bool is_solvable(long long N);

// Smallest value f(x,y) > 0 coprime to m (exists for every primitive form).
long long represented_value_coprime(const QuadForm& f, long long m);

// Scope gate for the family D = -4N: N >= 1 squarefree, -N != 1 (mod 4).
bool in_scope(long long N);
void require_in_scope(long long N);  // throws ScopeError with uniform message

}  // namespace genuslab
