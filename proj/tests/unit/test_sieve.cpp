#include <doctest.h>

#include <cmath>
#include <cstring>
#include <set>

#include "ffsieve/arith.hpp"
#include "ffsieve/errors.hpp"
#include "ffsieve/parallel.hpp"
#include "ffsieve/primes.hpp"
#include "ffsieve/sieve.hpp"
#include "ffsieve/weight.hpp"
#include "helpers.hpp"

using namespace fft;

namespace {

SieveParams make(const Field& F, const std::string& H, int n, int w = 2, double eta = 0.4, double eps = 0.2,
                 int a = 0) {
  TupleH T(parse_poly_list(F, H));
  const int k = static_cast<int>(T.size());
  return SieveParams::make(F, std::move(T), 0, eta, w, eps, n, a ? a : k + 1);
}

bool covers(const Field& F, const std::vector<Poly>& H, const Poly& p) {
  for (std::uint64_t i = 0; i < checked_pow(F.order(), p.degree()); ++i) {
    const Poly c = from_index(F, i);
    bool ok = true;
    for (const Poly& h : H)
      if (rem(F, add(F, c, h), p).is_zero()) ok = false;
    if (ok) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("admissibility examples") {
  const Field F2 = Field::of_order(2);
  CHECK(is_admissible(F2, TupleH({Poly()})).admissible);
  const auto a = is_admissible(F2, TupleH({Poly(), Poly::one()}));
  CHECK_FALSE(a.admissible);
  REQUIRE(a.witness);
  CHECK(*a.witness == Poly::t());
  for (std::uint64_t q : {2, 3, 4, 5, 7}) {
    const Field F = Field::of_order(q);
    std::vector<Poly> H;
    for (Elem c = 1; c < q; ++c) H.push_back(Poly::monomial(c, 2));
    CHECK(is_admissible(F, TupleH(H)).admissible);
  }
}

TEST_CASE("admissibility matches brute-force covering, q <= 3, k <= 3, deg h <= 2") {
  for (std::uint64_t q : {2, 3}) {
    const Field F = Field::of_order(q);
    std::vector<Poly> elems;
    for (std::uint64_t i = 0; i < checked_pow(q, 3); ++i) elems.push_back(from_index(F, i));
    const auto primes = primes_up_to(F, 2);
    std::mt19937_64 rng(q);
    for (int it = 0; it < 300; ++it) {
      const int k = 1 + static_cast<int>(rng() % 3);
      std::set<Poly> s;
      while (static_cast<int>(s.size()) < k) s.insert(elems[rng() % elems.size()]);
      const std::vector<Poly> H(s.begin(), s.end());
      bool brute = true;
      for (const Poly& p : primes)
        if (covers(F, H, p)) brute = false;
      CHECK(is_admissible(F, TupleH(H)).admissible == brute);
    }
  }
}

TEST_CASE("TupleH validation") {
  const Field F2 = Field::of_order(2);
  CHECK_THROWS_AS(TupleH(std::vector<Poly>{}), std::invalid_argument);
  CHECK_THROWS_AS(TupleH({Poly::t(), Poly::t()}), std::invalid_argument);
  const TupleH H({Poly::t(), Poly()});
  CHECK(H[0].is_zero());
  CHECK(H.max_degree() == 1);
}

TEST_CASE("W and b") {
  const Field F2 = Field::of_order(2), F3 = Field::of_order(3);
  CHECK(build_W(F3, 1).is_one());
  CHECK(build_W(F2, 2) == P(F2, "t^2+t"));
  for (std::uint64_t q : {2, 3})
    for (int w = 1; w <= 4; ++w) {
      BigInt want = 0;
      for (int d = 1; d < w; ++d) want += BigInt(d) * prime_count(q, d);
      CHECK(BigInt(build_W(Field::of_order(q), w).degree()) == want);
    }
  CHECK(choose_b(F2, P(F2, "t^2+t"), TupleH({Poly()})).is_one());
  CHECK_THROWS_AS(choose_b(F2, P(F2, "t^2+t"), TupleH({Poly(), Poly::one()})), NoValidResidue);
  CHECK(choose_b(F3, P(F3, "t^3-t"), TupleH({Poly(), P(F3, "t^3-t")})).is_one());
}

TEST_CASE("chosen b is coprime to W on every translate") {
  for (std::uint64_t q : {3, 4, 5}) {
    const Field F = Field::of_order(q);
    const Poly W = build_W(F, 3);
    const TupleH H({Poly(), Poly::t(), P(F, "t^2")});
    if (!is_admissible(F, H).admissible) continue;
    const Poly b = choose_b(F, W, H);
    for (const Poly& h : H) CHECK(gcd(F, W, add(F, b, h)).is_one());
  }
}

TEST_CASE("sieve parameter validation") {
  const Field F2 = Field::of_order(2);
  CHECK_THROWS_AS(make(F2, "0", 12, 2, 0.6), std::invalid_argument);
  CHECK_THROWS_AS(make(F2, "0", 12, 2, 0.4, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(make(F2, "0", 2), std::invalid_argument);
  CHECK_THROWS_AS(make(F2, "0,t^2", 12, 2), std::invalid_argument);
  CHECK_THROWS_AS(make(F2, "0,1", 12), NoValidResidue);
  const auto P1 = make(F2, "0", 12);
  CHECK(P1.r == 4);
  CHECK(P1.W == P(F2, "t^2+t"));
  CHECK(P1.w_ratio == doctest::Approx(4.0));
}

TEST_CASE("weight lambda") {
  const Field F2 = Field::of_order(2);
  const auto P1 = make(F2, "0", 12);
  std::vector<Poly> d{Poly::one()};
  CHECK(weight_lambda(d, P1) == 1.0);
  d = {P(F2, "t^2+1")};
  CHECK(weight_lambda(d, P1) == 0.0);
  d = {enumerate_primes(F2, 5)->front()};
  CHECK(weight_lambda(d, P1) == 0.0);
  d = {P(F2, "t^2+t+1")};
  CHECK(weight_lambda(d, P1) == doctest::Approx(-0.25));
}

TEST_CASE("weight function evaluation") {
  const WeightFn F(2, 3);
  std::vector<double> t{0.25, 0.25};
  CHECK(F(t) == doctest::Approx(0.125));
  t = {0.75, 0.5};
  CHECK(F(t) == 0.0);
  CHECK_THROWS_AS(WeightFn(3, 2), std::invalid_argument);
  std::vector<int> degs{1, 1};
  CHECK(F.rational_at_degrees(degs, 4) == Rational(1, 8));
}

TEST_CASE("functionals closed forms and quadrature") {
  const auto e11 = functionals_exact(WeightFn(1, 1));
  CHECK(e11.alpha == 1);
  CHECK(e11.beta == 1);
  const auto e23 = functionals_exact(WeightFn(2, 3));
  CHECK(e23.alpha == 3);
  CHECK(e23.beta == Rational(9, 5));
  CHECK(e23.gamma == 18);
  for (auto [k, a] : {std::pair{1, 1}, std::pair{1, 3}, std::pair{2, 3}, std::pair{3, 4}}) {
    CAPTURE(k);
    CAPTURE(a);
    const WeightFn W(k, a);
    const auto ex = to_functionals(functionals_exact(W), k);
    const auto qd = functionals_quadrature(W);
    CHECK(std::abs(qd.alpha - ex.alpha) <= 1e-9 * std::max(1.0, ex.alpha));
    CHECK(std::abs(qd.beta - ex.beta) <= 1e-9 * std::max(1.0, ex.beta));
    CHECK(std::abs(qd.gamma - ex.gamma) <= 1e-9 * std::max(1.0, ex.gamma));
  }
}

TEST_CASE("simplex quadrature volume") {
  for (int dim = 1; dim <= 4; ++dim) {
    const auto r = integrate_simplex(dim, [](std::span<const double>) { return 1.0; }, 1e-12);
    double want = 1;
    for (int i = 2; i <= dim; ++i) want /= i;
    CHECK(r.value == doctest::Approx(want).epsilon(1e-12));
  }
}

TEST_CASE("S3 and S4") {
  const Field F2 = Field::of_order(2);
  // all primes of degree <= r divide W
  const auto boundary = make(F2, "0", 5, 3);
  CHECK(sum_S3_S4(boundary).first.exact == 1.0);
  for (int n = 5; n <= 20; ++n) {
    const auto P1 = make(F2, "0", n);
    if (P1.r > 8) break;
    auto [a3, a4] = sum_S3_S4(P1, Route::Direct);
    auto [b3, b4] = sum_S3_S4(P1, Route::Factored);
    CHECK(a3.exact == doctest::Approx(b3.exact).epsilon(1e-9));
    CHECK(a4.exact == doctest::Approx(b4.exact).epsilon(1e-9));
  }
  CHECK_THROWS(sum_S3_S4(make(F2, "0", 10), Route::Expanded));
}

TEST_CASE("Euler product") {
  const int r = 5, d = 2;
  const double L = r * std::log(3.0), np = 9.0;
  const auto Kp = euler_K_p(3, d, r, 0, 0);
  CHECK(Kp.real() == doctest::Approx(-2 * std::pow(np, -1 - 1 / L) + std::pow(np, -1 - 2 / L)).epsilon(1e-14));
  const Field F2 = Field::of_order(2);
  const auto P1 = make(F2, "0", 20);
  for (int D : {20, 40, 80}) {
    const double diff = std::abs(euler_K(P1, 0, 0, 2 * D) - euler_K(P1, 0, 0, D));
    CHECK(diff <= euler_K_tail_bound(P1, D));
  }
}

TEST_CASE("S1, S2, S_g: direct and expanded agree exactly") {
  const Field F2 = Field::of_order(2), F3 = Field::of_order(3);
  SumOptions dir, exp;
  exp.route = Route::Expanded;
  const auto P1 = make(F2, "0", 12, 2, 0.4, 0.2, 1);
  CHECK(sum_S1(P1, dir).exact == sum_S1(P1, exp).exact);
  CHECK(sum_S1(P1, dir).exact == 738.0);
  CHECK(sum_S2(P1, 0, dir).exact == sum_S2(P1, 0, exp).exact);
  CHECK(sum_Sg(P1, P(F2, "t^2+t+1"), dir).exact == doctest::Approx(52.5));
  CHECK(sum_Sg(P1, P(F2, "t^2+t+1"), exp).exact == doctest::Approx(52.5));
  REQUIRE(is_admissible(F3, TupleH({Poly(), Poly::t()})).admissible);
  const auto P2 = make(F3, "0,t", 10);
  CHECK(sum_S1(P2, dir).exact == doctest::Approx(sum_S1(P2, exp).exact).epsilon(1e-12));
  for (std::size_t j = 0; j < 2; ++j)
    CHECK(sum_S2(P2, j, dir).exact == doctest::Approx(sum_S2(P2, j, exp).exact).epsilon(1e-12));
}

TEST_CASE("rational mode matches floating point") {
  const Field F3 = Field::of_order(3);
  const auto P2 = make(F3, "0,t", 10);
  SumOptions opt;
  opt.rational = true;
  const auto rep = sum_S1(P2, opt);
  REQUIRE(rep.exact_rational);
  CHECK(to_double(*rep.exact_rational) == doctest::Approx(rep.exact).epsilon(1e-14));
}

TEST_CASE("S2 only needs trivial divisors at the prime coordinate") {
  const Field F2 = Field::of_order(2);
  const auto P1 = make(F2, "0", 12);
  SumOptions triv;
  triv.only_trivial_j = true;
  CHECK(sum_S2(P1, 0).exact == doctest::Approx(sum_S2(P1, 0, triv).exact).epsilon(1e-12));
}

TEST_CASE("S_g and the bad set") {
  const Field F2 = Field::of_order(2);
  const auto P1 = make(F2, "0", 12);
  CHECK(sum_Sg(P1, Poly::t()).exact == 0.0);
  CHECK(sum_Sg(P1, P(F2, "t+1")).exact == 0.0);
  CHECK_THROWS(sum_Sg(P1, P(F2, "t^2+1")));
  CHECK(concentration_total(P1).extras.at("slack") >= 0);
  double prev = INFINITY;
  for (double eps : {0.3, 0.15, 0.075, 0.0375}) {
    const double v = concentration_total(make(F2, "0", 12, 2, 0.4, eps)).exact;
    CHECK(v <= prev);
    prev = v;
  }
}

TEST_CASE("density experiment") {
  const Field F2 = Field::of_order(2), F3 = Field::of_order(3);
  const auto P1 = make(F2, "0", 10);
  const auto rep = density_experiment(P1);
  std::uint64_t want = 0;
  for (const Poly& p : *enumerate_primes(F2, 10))
    if (rem(F2, p, P1.W) == rem(F2, P1.b, P1.W) && in_P_eps(P1, p)) ++want;
  CHECK(rep.count_A == want);
  if (rep.maincount > 0) CHECK(rep.count_A > 0);
  const auto r2 = density_experiment(make(F3, "0,t", 10));
  CHECK(r2.measured_a > 0);
}

TEST_CASE("budget is enforced") {
  const Field F2 = Field::of_order(2);
  TupleH T({Poly()});
  const auto P1 = SieveParams::make(F2, T, 0, 0.4, 2, 0.2, 12, 2, 10);
  CHECK_THROWS_AS(sum_S1(P1), BudgetExceeded);
}

TEST_CASE("worker count does not change results") {
  const Field F3 = Field::of_order(3);
  const auto P2 = make(F3, "0,t", 10);
  set_worker_count(1);
  const double one = sum_S1(P2).exact;
  set_worker_count(4);
  const double four = sum_S1(P2).exact;
  set_worker_count(0);
  CHECK(std::memcmp(&one, &four, sizeof one) == 0);
}
