#include "ffsieve/arith.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace ffsieve {

// ------------------------------------------------------------ integer helpers

std::vector<std::uint64_t> integer_prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

int integer_moebius(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("moebius(0)");
  int mu = 1;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      n /= d;
      if (n % d == 0) return 0;
      mu = -mu;
    }
  }
  if (n > 1) mu = -mu;
  return mu;
}

std::vector<std::uint64_t> integer_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> lo, hi;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      lo.push_back(d);
      if (d != n / d) hi.push_back(n / d);
    }
  }
  lo.insert(lo.end(), hi.rbegin(), hi.rend());
  return lo;
}

std::complex<double> log1p_over(std::complex<double> z) {
  if (std::abs(z) < 1e-5) return 1.0 - z / 2.0 + z * z / 3.0;
  return std::log(1.0 + z) / z;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

// ------------------------------------------------------------ irreducibility

bool is_irreducible(const Field& F, const Poly& f) {
  if (f.is_zero()) throw std::invalid_argument("is_irreducible: zero polynomial");
  const int n = f.degree();
  if (n <= 0) return false;
  if (n == 1) return true;
  const Poly g = make_monic(F, f);
  const Poly t = Poly::t();
  // powers[k] = t^{q^k} mod g
  std::vector<Poly> powers(static_cast<std::size_t>(n) + 1);
  powers[0] = rem(F, t, g);
  for (int k = 1; k <= n; ++k) powers[k] = frobenius_mod(F, powers[k - 1], g);
  if (powers[n] != powers[0]) return false;
  for (auto l : integer_prime_factors(static_cast<std::uint64_t>(n))) {
    const Poly h = sub(F, powers[n / l], t);
    if (!gcd(F, g, h).is_one()) return false;
  }
  return true;
}

bool is_prime_poly(const Field& F, const Poly& f) {
  return !f.is_zero() && f.is_monic() && is_irreducible(F, f);
}

// ------------------------------------------------------------ factorization

namespace {

using Parts = std::vector<std::pair<Poly, int>>;

Parts squarefree_decomposition(const Field& F, const Poly& f) {
  Parts out;
  if (f.degree() <= 0) return out;
  const int p = static_cast<int>(F.characteristic());
  const Poly fp = derivative(F, f);
  if (fp.is_zero()) {
    for (auto& [g, m] : squarefree_decomposition(F, pth_root(F, f))) out.emplace_back(g, m * p);
    return out;
  }
  Poly c = gcd(F, f, fp);
  Poly w = exact_div(F, f, c);
  int i = 1;
  while (!w.is_one()) {
    const Poly y = gcd(F, w, c);
    const Poly fac = exact_div(F, w, y);
    if (!fac.is_one()) out.emplace_back(fac, i);
    ++i;
    w = y;
    c = exact_div(F, c, y);
  }
  if (!c.is_one()) {
    for (auto& [g, m] : squarefree_decomposition(F, pth_root(F, c))) out.emplace_back(g, m * p);
  }
  return out;
}

// (product of all prime factors of degree d, d) for squarefree monic f.
Parts distinct_degree(const Field& F, const Poly& f) {
  Parts out;
  Poly rest = f;
  const Poly t = Poly::t();
  Poly h = rem(F, t, rest);
  for (int i = 1; rest.degree() >= 2 * i; ++i) {
    h = frobenius_mod(F, h, rest);
    const Poly g = gcd(F, rest, sub(F, h, t));
    if (!g.is_one()) {
      out.emplace_back(g, i);
      rest = exact_div(F, rest, g);
      h = rem(F, h, rest);
    }
  }
  if (rest.degree() > 0) out.emplace_back(rest, rest.degree());
  return out;
}

Poly random_poly(const Field& F, int below_degree, std::mt19937_64& rng) {
  std::vector<Elem> c(static_cast<std::size_t>(below_degree));
  for (auto& x : c) x = static_cast<Elem>(rng() % F.order());
  return Poly(std::move(c));
}

void equal_degree(const Field& F, const Poly& g, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (g.degree() == d) {
    out.push_back(g);
    return;
  }
  const std::uint64_t q = F.order();
  for (;;) {
    const Poly a = random_poly(F, g.degree(), rng);
    if (a.degree() <= 0) continue;
    Poly cand;
    if (q % 2 == 1) {
      // a^{(q^d - 1)/2} = (a^{1 + q + ... + q^{d-1}})^{(q-1)/2}
      Poly conj = a, prod = rem(F, a, g);
      for (int i = 1; i < d; ++i) {
        conj = frobenius_mod(F, conj, g);
        prod = mulmod(F, prod, conj, g);
      }
      const Poly b = powmod(F, prod, (q - 1) / 2, g);
      cand = gcd(F, g, sub(F, b, Poly::one()));
    } else {
      // Absolute trace to F_2: sum_{i < e d} a^{2^i}.
      const int steps = static_cast<int>(F.degree()) * d;
      Poly term = rem(F, a, g), acc = term;
      for (int i = 1; i < steps; ++i) {
        term = mulmod(F, term, term, g);
        acc = add(F, acc, term);
      }
      if (acc.is_zero()) continue;
      cand = gcd(F, g, acc);
    }
    if (cand.degree() > 0 && cand.degree() < g.degree()) {
      equal_degree(F, cand, d, rng, out);
      equal_degree(F, exact_div(F, g, cand), d, rng, out);
      return;
    }
  }
}

}  // namespace

Factorization factorize(const Field& F, const Poly& f, std::uint64_t seed) {
  if (f.is_zero()) throw std::invalid_argument("factorize: zero polynomial");
  Factorization fac;
  fac.unit = f.lead();
  const Poly g = make_monic(F, f);
  std::mt19937_64 rng(seed);
  std::map<Poly, int> acc;
  for (const auto& [part, mult] : squarefree_decomposition(F, g)) {
    for (const auto& [block, d] : distinct_degree(F, part)) {
      std::vector<Poly> primes;
      equal_degree(F, block, d, rng, primes);
      for (auto& pr : primes) acc[pr] += mult;
    }
  }
  fac.factors.reserve(acc.size());
  for (auto& [pr, m] : acc) fac.factors.push_back({pr, m});
  return fac;
}

Poly Factorization::expand(const Field& F) const {
  Poly out = Poly::constant(unit);
  for (const auto& pp : factors)
    for (int i = 0; i < pp.multiplicity; ++i) out = mul(F, out, pp.prime);
  return out;
}

bool Factorization::is_squarefree() const {
  return std::all_of(factors.begin(), factors.end(), [](const PrimePower& pp) { return pp.multiplicity == 1; });
}

int moebius(const Factorization& fac) {
  if (!fac.is_squarefree()) return 0;
  return fac.factors.size() % 2 == 0 ? 1 : -1;
}

int moebius(const Field& F, const Poly& f) {
  if (f.is_zero()) throw std::invalid_argument("moebius: zero polynomial");
  return moebius(factorize(F, f));
}

std::uint64_t totient(const Field& F, const Factorization& fac) {
  std::uint64_t out = 1;
  for (const auto& pp : fac.factors) {
    const std::uint64_t np = norm(F, pp.prime);
    std::uint64_t term = np - 1;
    for (int i = 1; i < pp.multiplicity; ++i) {
      if (term > ~std::uint64_t(0) / np) throw std::overflow_error("totient exceeds 64 bits");
      term *= np;
    }
    if (term != 0 && out > ~std::uint64_t(0) / term) throw std::overflow_error("totient exceeds 64 bits");
    out *= term;
  }
  return out;
}

std::uint64_t totient(const Field& F, const Poly& f) {
  if (f.is_zero()) throw std::invalid_argument("totient: zero polynomial");
  return totient(F, factorize(F, f));
}

int theta(const Field& F, const Poly& f) {
  if (f.is_zero()) throw std::invalid_argument("theta: zero polynomial");
  return is_prime_poly(F, f) ? f.degree() : 0;
}

int least_prime_degree(const Factorization& fac) {
  if (fac.factors.empty()) return kPosInf;
  return fac.factors.front().prime.degree();
}

int least_prime_degree(const Field& F, const Poly& f) {
  if (f.is_zero()) throw std::invalid_argument("least_prime_degree: zero polynomial");
  return least_prime_degree(factorize(F, f));
}

BigInt prime_count(std::uint64_t q, int n) {
  if (n <= 0) throw std::invalid_argument("prime_count: degree must be >= 1");
  BigInt total = 0;
  for (auto d : integer_divisors(static_cast<std::uint64_t>(n))) {
    const int mu = integer_moebius(d);
    if (mu == 0) continue;
    BigInt term = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(n / d));
    total += mu > 0 ? term : BigInt(-term);
  }
  return total / n;
}

double prime_density(std::uint64_t q, int n) {
  if (n <= 0) throw std::invalid_argument("prime_density: degree must be >= 1");
  const double lq = std::log(static_cast<double>(q));
  double s = 0.0;
  for (auto d : integer_divisors(static_cast<std::uint64_t>(n))) {
    const int mu = integer_moebius(d);
    if (mu == 0) continue;
    const double gap = static_cast<double>(n) - static_cast<double>(n / d);  // exponent deficit
    s += mu * std::exp(-gap * lq);
  }
  return s / n;
}

std::vector<long long> signed_divisor_degree_counts(const Field&, const Factorization& fac, int max_degree) {
  std::vector<long long> c(static_cast<std::size_t>(std::max(max_degree, 0)) + 1, 0);
  c[0] = 1;
  for (const auto& pp : fac.factors) {
    const int d = pp.prime.degree();
    for (int D = max_degree; D >= d; --D) c[D] -= c[D - d];
  }
  return c;
}

}  // namespace ffsieve
