#include <doctest.h>

#include <cmath>

#include "ffsieve/arith.hpp"
#include "ffsieve/primes.hpp"
#include "ffsieve/zeta.hpp"
#include "helpers.hpp"

using namespace fft;

TEST_CASE("irreducibility examples") {
  const Field F2 = Field::of_order(2), F3 = Field::of_order(3);
  for (std::uint64_t q : {2, 3, 4, 5, 7}) CHECK(is_irreducible(Field::of_order(q), Poly::t()));
  CHECK_FALSE(is_irreducible(F2, P(F2, "t^2+1")));
  CHECK(is_irreducible(F2, P(F2, "t^2+t+1")));
  CHECK(is_irreducible(F3, P(F3, "t^2+1")));
}

TEST_CASE("irreducibility matches trial division, q <= 5, deg <= 6") {
  for (std::uint64_t q : {2, 3, 4, 5}) {
    const Field F = Field::of_order(q);
    for (int d = 1; d <= 6 && checked_pow(q, d) <= 20000; ++d)
      for (const Poly& f : enumerate_monic(F, d)) {
        CAPTURE(to_string(F, f));
        CHECK(is_irreducible(F, f) == brute_irreducible(F, f));
      }
  }
}

TEST_CASE("factorization examples") {
  const Field F2 = Field::of_order(2), F3 = Field::of_order(3);
  const auto one = factorize(F3, Poly::one());
  CHECK(one.factors.empty());
  CHECK(one.unit == 1);
  const auto a = factorize(F2, P(F2, "t^3+t"));
  REQUIRE(a.factors.size() == 2);
  CHECK(a.factors[0].prime == Poly::t());
  CHECK(a.factors[0].multiplicity == 1);
  CHECK(a.factors[1].prime == P(F2, "t+1"));
  CHECK(a.factors[1].multiplicity == 2);
  const auto b = factorize(F3, P(F3, "t^2+2"));
  REQUIRE(b.factors.size() == 2);
  CHECK(b.factors[0].prime == P(F3, "t+1"));
  CHECK(b.factors[1].prime == P(F3, "t+2"));
}

TEST_CASE("factorization reconstructs f with irreducible factors") {
  std::mt19937_64 rng(3);
  for (std::uint64_t q : {2, 3, 4, 5, 9}) {
    const Field F = Field::of_order(q);
    for (int it = 0; it < 100; ++it) {
      const Poly f = random_poly(F, rng, 14);
      if (f.is_zero()) continue;
      const auto fac = factorize(F, f, rng());
      CHECK(fac.expand(F) == f);
      for (const auto& pp : fac.factors) {
        CHECK(pp.prime.is_monic());
        CHECK(is_irreducible(F, pp.prime));
      }
      // result does not depend on the seed
      CHECK(factorize(F, f, 1) == factorize(F, f, 2));
    }
  }
}

TEST_CASE("moebius, theta and least prime degree") {
  const Field F2 = Field::of_order(2), F3 = Field::of_order(3);
  CHECK(moebius(F2, Poly::one()) == 1);
  CHECK(moebius(F2, P(F2, "t^2")) == 0);
  CHECK(moebius(F2, P(F2, "t^2+t")) == 1);
  CHECK(moebius(F2, Poly::t()) == -1);
  CHECK(theta(F2, Poly::t()) == 1);
  CHECK(theta(F2, P(F2, "t^2+1")) == 0);
  CHECK(theta(F3, P(F3, "t^3+2t+1")) == 3);
  CHECK(least_prime_degree(F2, Poly::one()) == kPosInf);
  CHECK(least_prime_degree(F2, P(F2, "t^3+t^2+t")) == 1);
  CHECK(least_prime_degree(F2, P(F2, "t^3+t+1")) == 3);
}

TEST_CASE("moebius sums to zero over divisors") {
  const Field F3 = Field::of_order(3);
  for (int d = 1; d <= 4; ++d)
    for (const Poly& f : enumerate_monic(F3, d)) {
      int s = 0;
      for (int e = 0; e <= d; ++e)
        for (const Poly& g : enumerate_monic(F3, e))
          if (divides(F3, g, f)) s += moebius(F3, g);
      CHECK(s == 0);
    }
}

TEST_CASE("totient matches brute count, q <= 3, deg <= 5") {
  CHECK(totient(Field::of_order(2), Poly::one()) == 1);
  for (std::uint64_t q : {2, 3}) {
    const Field F = Field::of_order(q);
    for (int d = 1; d <= 5; ++d)
      for (const Poly& f : enumerate_monic(F, d)) {
        std::uint64_t c = 0;
        for (std::uint64_t i = 0; i < checked_pow(q, d); ++i)
          if (gcd(F, from_index(F, i), f).is_one()) ++c;
        CAPTURE(to_string(F, f));
        CHECK(totient(F, f) == c);
      }
  }
}

TEST_CASE("prime counts") {
  CHECK(prime_count(2, 1) == 2);
  CHECK(prime_count(2, 4) == 3);
  for (std::uint64_t q : {2, 3, 4, 5})
    for (int n = 1; n <= 12; ++n) {
      BigInt s = 0;
      for (int d = 1; d <= n; ++d)
        if (n % d == 0) s += BigInt(d) * prime_count(q, d);
      BigInt want = 1;
      for (int i = 0; i < n; ++i) want *= q;
      CHECK(s == want);
    }
}

TEST_CASE("prime enumeration") {
  const Field F2 = Field::of_order(2);
  CHECK(*enumerate_primes(F2, 3) == std::vector<Poly>{P(F2, "t^3+t+1"), P(F2, "t^3+t^2+1")});
  CHECK(*enumerate_primes(F2, 2) == std::vector<Poly>{P(F2, "t^2+t+1")});
  for (std::uint64_t q : {2, 3}) {
    const Field F = Field::of_order(q);
    for (int n = 1; n <= 10; ++n) CHECK(BigInt(enumerate_primes(F, n)->size()) == prime_count(q, n));
  }
}

TEST_CASE("prime table cache round trip on disk") {
  const auto dir = std::filesystem::temp_directory_path() / "ffsieve_unit_cache";
  std::filesystem::remove_all(dir);
  const Field F3 = Field::of_order(3);
  {
    PrimeTableCache cache(dir);
    CHECK(cache.get(F3, 5)->size() == 48);
  }
  CHECK(std::filesystem::exists(PrimeTableCache(dir).file_for(F3, 5)));
  PrimeTableCache again(dir);
  CHECK(*again.get(F3, 5) == compute_primes(F3, 5));
  std::filesystem::remove_all(dir);
}

TEST_CASE("zeta") {
  const auto closed = zeta(2, {2.0, 0.0});
  CHECK(closed.closed());
  CHECK(closed.value.real() == doctest::Approx(2.0).epsilon(1e-14));
  const auto trunc = zeta(2, {2.0, 0.0}, 25);
  CHECK(std::abs(trunc.value - closed.value) < 1e-6);
  // error shrinks as D grows
  double prev = INFINITY;
  for (int D : {5, 10, 20, 40}) {
    const double e = std::abs(zeta(3, {1.5, 2.0}, D).value - zeta(3, {1.5, 2.0}).value);
    CHECK(e < prev);
    CHECK(e <= zeta_truncation_bound(3, 1.5, D));
    prev = e;
  }
}

TEST_CASE("zeta with small primes removed") {
  const Field F3 = Field::of_order(3);
  Poly W = Poly::one();
  for (const Poly& p : primes_up_to(F3, 1)) W = mul(F3, W, p);
  const std::complex<double> s(2.0, 0.5);
  std::complex<double> want = zeta(3, s).value;
  for (const Poly& p : primes_up_to(F3, 1)) want *= 1.0 - std::pow(3.0, -s);
  CHECK(std::abs(zeta_w(F3, s, W).value - want) < 1e-12);
}
