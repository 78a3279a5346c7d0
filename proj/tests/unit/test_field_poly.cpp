#include <doctest.h>

#include <set>

#include "helpers.hpp"

using namespace fft;

TEST_CASE("field construction") {
  CHECK(Field::make(2, 1).order() == 2);
  CHECK(Field::make(2, 1).modulus().empty());
  CHECK(Field::make(2, 2).modulus() == std::vector<std::uint32_t>{1, 1, 1});
  CHECK_THROWS_AS(Field::make(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(Field::of_order(6), std::invalid_argument);
  CHECK(Field::of_order(9).characteristic() == 3);
}

TEST_CASE("field axioms, exhaustive for small orders") {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
    CAPTURE(q);
    const Field F = Field::of_order(q);
    for (Elem a = 0; a < q; ++a) {
      CHECK(F.add(a, F.neg(a)) == 0);
      if (a) CHECK(F.mul(a, F.inv(a)) == 1);
      for (Elem b = 0; b < q; ++b) {
        CHECK(F.add(a, b) == F.add(b, a));
        CHECK(F.mul(a, b) == F.mul(b, a));
        for (Elem c = 0; c < q; ++c) CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
      }
    }
  }
}

TEST_CASE("division examples") {
  const Field F2 = Field::of_order(2), F3 = Field::of_order(3);
  auto [q1, r1] = divmod(F2, P(F2, "t^2+1"), Poly::t());
  CHECK(q1 == Poly::t());
  CHECK(r1 == Poly::one());
  auto [q2, r2] = divmod(F3, P(F3, "t^3+2t+1"), P(F3, "t^2+1"));
  CHECK(q2 == Poly::t());
  CHECK(r2 == P(F3, "t+1"));
  const Poly f = P(F3, "2t^5+t^2+2");
  auto [q3, r3] = divmod(F3, f, Poly::one());
  CHECK(q3 == f);
  CHECK(r3.is_zero());
  CHECK_THROWS(divmod(F3, f, Poly()));
}

TEST_CASE("gcd examples") {
  const Field F2 = Field::of_order(2), F3 = Field::of_order(3);
  CHECK(gcd(F3, P(F3, "2t^2+1"), Poly()) == P(F3, "t^2+2"));
  CHECK(gcd(F3, P(F3, "t^2+2"), P(F3, "t+2")) == P(F3, "t+2"));
  CHECK(gcd(F2, Poly::t(), P(F2, "t+1")).is_one());
}

TEST_CASE("norm") {
  const Field F3 = Field::of_order(3);
  CHECK(norm(F3, Poly::one()) == 1);
  CHECK(norm(F3, Poly()) == 0);
  CHECK(norm(F3, P(F3, "t^2+1")) == 9);
}

TEST_CASE("monic enumeration") {
  const Field F2 = Field::of_order(2);
  std::vector<Poly> got;
  for (const Poly& f : enumerate_monic(F2, 2)) got.push_back(f);
  CHECK(got == std::vector<Poly>{P(F2, "t^2"), P(F2, "t^2+1"), P(F2, "t^2+t"), P(F2, "t^2+t+1")});
  for (std::uint64_t q : {2, 3, 4, 5}) {
    const Field F = Field::of_order(q);
    for (int n = 0; n <= 10 && checked_pow(q, n) <= 1000000; ++n) {
      std::uint64_t c = 0;
      Poly prev;
      bool ordered = true;
      for (const Poly& f : enumerate_monic(F, n)) {
        if (c && !(prev < f)) ordered = false;
        prev = f;
        ++c;
      }
      CHECK(c == checked_pow(q, n));
      CHECK(ordered);
    }
  }
}

TEST_CASE("ring properties on random polynomials") {
  std::mt19937_64 rng(7);
  for (std::uint64_t q : {2, 3, 4, 5, 9}) {
    const Field F = Field::of_order(q);
    for (int it = 0; it < 200; ++it) {
      const Poly a = random_poly(F, rng, 8), b = random_poly(F, rng, 8), c = random_poly(F, rng, 5);
      CHECK(mul(F, a, add(F, b, c)) == add(F, mul(F, a, b), mul(F, a, c)));
      CHECK(sub(F, add(F, a, b), b) == a);
      if (!b.is_zero()) {
        auto [qq, rr] = divmod(F, a, b);
        CHECK(add(F, mul(F, qq, b), rr) == a);
        CHECK(rr.degree() < b.degree());
      }
      const Poly g = gcd(F, a, b);
      if (!g.is_zero()) {
        CHECK(g.is_monic());
        CHECK(divides(F, g, a));
        CHECK(divides(F, g, b));
        const auto e = ext_gcd(F, a, b);
        CHECK(add(F, mul(F, e.s, a), mul(F, e.t, b)) == g);
      }
    }
  }
}

TEST_CASE("index round trip") {
  for (std::uint64_t q : {2, 3, 4}) {
    const Field F = Field::of_order(q);
    for (std::uint64_t i = 0; i < checked_pow(q, 5); ++i) CHECK(index_of(F, from_index(F, i)) == i);
  }
}

TEST_CASE("crt against brute force") {
  const Field F3 = Field::of_order(3);
  const Poly m1 = P(F3, "t+1"), m2 = P(F3, "t^2+1");
  const std::vector<std::pair<Poly, Poly>> cs{{P(F3, "2"), m1}, {P(F3, "t"), m2}};
  const auto sol = crt(F3, cs);
  REQUIRE(sol);
  CHECK(sol->second == mul(F3, m1, m2));
  CHECK(rem(F3, sol->first, m1) == P(F3, "2"));
  CHECK(rem(F3, sol->first, m2) == P(F3, "t"));
  const std::vector<std::pair<Poly, Poly>> bad{{P(F3, "1"), Poly::t()}, {P(F3, "2"), P(F3, "t^2")}};
  CHECK_FALSE(crt(F3, bad));
}

TEST_CASE("count_monic_in_class against enumeration") {
  const Field F3 = Field::of_order(3);
  const Poly m = P(F3, "t^2+t");
  for (int n = 0; n <= 5; ++n)
    for (const Poly& c : std::vector<Poly>{Poly(), Poly::one(), P(F3, "t+2")}) {
      std::uint64_t want = 0;
      for (const Poly& f : enumerate_monic(F3, n))
        if (rem(F3, f, m) == c) ++want;
      CHECK(count_monic_in_class(F3, n, c, m) == want);
    }
}

TEST_CASE("text round trip") {
  std::mt19937_64 rng(11);
  for (std::uint64_t q : {2, 3, 4, 9}) {
    const Field F = Field::of_order(q);
    for (int it = 0; it < 100; ++it) {
      const Poly f = random_poly(F, rng, 7);
      CHECK(parse_poly(F, to_string(F, f)) == f);
    }
  }
  const Field F2 = Field::of_order(2);
  CHECK(to_string(F2, P(F2, "t^3 + t + 1")) == "t^3 + t + 1");
  CHECK(to_string(F2, Poly()) == "0");
  CHECK_THROWS_AS(parse_poly(F2, "t^^2"), std::invalid_argument);
}
