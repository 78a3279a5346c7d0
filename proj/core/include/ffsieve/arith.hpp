#pragma once

#include <cstdint>
#include <vector>

#include "ffsieve/field.hpp"
#include "ffsieve/numeric.hpp"
#include "ffsieve/poly.hpp"

namespace ffsieve {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed5eedULL;

/// Rabin's test: deg n, t^{q^n} = t mod f and gcd(t^{q^{n/l}} - t, f) = 1 for primes l | n.
/// Monicity is not checked. Units are not irreducible. Throws std::invalid_argument on zero.
bool is_irreducible(const Field& F, const Poly& f);
/// True iff f is monic and irreducible, i.e. a prime of F_q[t].
bool is_prime_poly(const Field& F, const Poly& f);

struct PrimePower {
  Poly prime;  // monic irreducible
  int multiplicity;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct Factorization {
  Elem unit = 1;                  // leading coefficient of the input
  std::vector<PrimePower> factors;  // sorted by (degree, enumeration order)

  Poly expand(const Field& F) const;
  bool is_squarefree() const;
  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Squarefree decomposition, distinct-degree splitting, then equal-degree splitting
/// (Cantor-Zassenhaus, trace map in characteristic 2) driven by a seeded generator.
/// The result does not depend on the seed.
Factorization factorize(const Field& F, const Poly& f, std::uint64_t seed = kDefaultSeed);

int moebius(const Factorization& fac);
int moebius(const Field& F, const Poly& f);

/// phi(f) = |f| prod_{p | f} (1 - 1/|p|).
std::uint64_t totient(const Field& F, const Factorization& fac);
std::uint64_t totient(const Field& F, const Poly& f);

/// theta(f) = deg f if f is a prime, else 0.
int theta(const Field& F, const Poly& f);

/// P^-(f): least degree of a prime factor; kPosInf for units.
int least_prime_degree(const Factorization& fac);
int least_prime_degree(const Field& F, const Poly& f);

/// Number of primes of degree n: (1/n) sum_{d | n} mu(d) q^{n/d}.
BigInt prime_count(std::uint64_t q, int n);
/// prime_count(q, n) / q^n as a double, without forming q^n.
double prime_density(std::uint64_t q, int n);

/// Squarefree monic divisors of f, as (degree, mu) aggregates: out[D] = sum mu(d) over
/// squarefree d | f with deg d = D, truncated at max_degree.
std::vector<long long> signed_divisor_degree_counts(const Field& F, const Factorization& fac,
                                                     int max_degree);

}  // namespace ffsieve
