#include <algorithm>
#include <cmath>
#include <cstring>
#include <map>
#include <functional>
#include <sstream>

#include "commands.hpp"
#include "report.hpp"
#include "ffsieve/arith.hpp"
#include "ffsieve/errors.hpp"
#include "ffsieve/poly_io.hpp"
#include "ffsieve/primes.hpp"
#include "ffsieve/search.hpp"
#include "ffsieve/sieve.hpp"
#include "ffsieve/transference.hpp"
#include "ffsieve/weight.hpp"
#include "ffsieve/zeta.hpp"

namespace ffsieve::cli {

namespace {

struct Suite {
  std::vector<SelftestResult> results;

  void check(const std::string& name, const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    try {
      ok = body(detail);
    } catch (const std::exception& e) {
      detail = std::string("threw: ") + e.what();
    }
    results.push_back({name, ok, detail});
  }
};

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

template <class T>
std::string show(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

bool same_polys(const Field& F, const std::vector<Poly>& got, const std::vector<std::string>& want, std::string& d) {
  std::vector<Poly> w;
  for (const auto& s : want) w.push_back(parse_poly(F, s));
  for (const auto& g : got) d += to_string(F, g) + "; ";
  return got == w;
}

SieveParams tiny(const Field& F, const std::string& H, int n, int w = 2, double eta = 0.4, double eps = 0.2) {
  TupleH T(parse_poly_list(F, H));
  const int k = static_cast<int>(T.size());
  return SieveParams::make(F, std::move(T), 0, eta, w, eps, n, k + 1);
}

void field_and_poly(Suite& s) {
  s.check("field F_2 has no modulus", [](std::string&) { return Field::make(2, 1).modulus().empty(); });
  s.check("field F_4 modulus t^2+t+1", [](std::string&) {
    return Field::make(2, 2).modulus() == std::vector<std::uint32_t>{1, 1, 1};
  });
  s.check("field F_4 with p = 4 rejected", [](std::string& d) {
    try {
      Field::make(4, 1);
    } catch (const std::invalid_argument&) {
      return true;
    }
    d = "no error";
    return false;
  });
  const Field F2 = Field::of_order(2), F3 = Field::of_order(3);
  s.check("divmod t^2+1 by t over F_2", [&](std::string&) {
    auto [qq, rr] = divmod(F2, parse_poly(F2, "t^2+1"), Poly::t());
    return qq == Poly::t() && rr == Poly::one();
  });
  s.check("divmod by 1", [&](std::string&) {
    const Poly f = parse_poly(F3, "2t^4+t+1");
    auto [qq, rr] = divmod(F3, f, Poly::one());
    return qq == f && rr.is_zero();
  });
  s.check("divmod t^3+2t+1 by t^2+1 over F_3", [&](std::string&) {
    auto [qq, rr] = divmod(F3, parse_poly(F3, "t^3+2t+1"), parse_poly(F3, "t^2+1"));
    return qq == Poly::t() && rr == parse_poly(F3, "t+1");
  });
  s.check("gcd(f, 0) is monic f", [&](std::string&) {
    return gcd(F3, parse_poly(F3, "2t^2+1"), Poly()) == parse_poly(F3, "t^2+2");
  });
  s.check("gcd(t^2+2, t+2) over F_3", [&](std::string&) {
    return gcd(F3, parse_poly(F3, "t^2+2"), parse_poly(F3, "t+2")) == parse_poly(F3, "t+2");
  });
  s.check("gcd(t, t+1) = 1", [&](std::string&) { return gcd(F2, Poly::t(), parse_poly(F2, "t+1")).is_one(); });
  s.check("norm(1) = 1, norm(0) = 0", [&](std::string&) { return norm(F3, Poly::one()) == 1 && norm(F3, Poly()) == 0; });
  s.check("norm(t^2+1) = 9 over F_3", [&](std::string&) { return norm(F3, parse_poly(F3, "t^2+1")) == 9; });
  s.check("enumerate_monic n = 0", [&](std::string&) {
    auto R = enumerate_monic(F3, 0);
    return R.size() == 1 && R.at(R.begin_index()).is_one();
  });
  s.check("enumerate_monic q = 2, n = 2", [&](std::string& d) {
    std::vector<Poly> got(enumerate_monic(F2, 2).begin(), enumerate_monic(F2, 2).end());
    return same_polys(F2, got, {"t^2", "t^2+1", "t^2+t", "t^2+t+1"}, d);
  });
  s.check("enumerate_monic length q^n", [](std::string& d) {
    for (std::uint64_t q : {2, 3, 4, 5}) {
      const Field F = Field::of_order(q);
      for (int n = 0; n <= 10 && checked_pow(q, n) <= 1000000; ++n) {
        std::uint64_t c = 0;
        for (auto it = enumerate_monic(F, n).begin(), e = enumerate_monic(F, n).end(); it != e; ++it) ++c;
        if (c != checked_pow(q, n)) {
          d = "q=" + show(q) + " n=" + show(n);
          return false;
        }
      }
    }
    return true;
  });
}

void arithmetic(Suite& s) {
  const Field F2 = Field::of_order(2), F3 = Field::of_order(3);
  s.check("t is irreducible", [](std::string&) {
    for (std::uint64_t q : {2, 3, 4, 5, 7})
      if (!is_irreducible(Field::of_order(q), Poly::t())) return false;
    return true;
  });
  s.check("irreducibility of quadratics over F_2", [&](std::string&) {
    return !is_irreducible(F2, parse_poly(F2, "t^2+1")) && is_irreducible(F2, parse_poly(F2, "t^2+t+1"));
  });
  s.check("t^2+1 irreducible over F_3", [&](std::string&) { return is_irreducible(F3, parse_poly(F3, "t^2+1")); });
  s.check("factorize(1)", [&](std::string&) {
    auto fac = factorize(F3, Poly::one());
    return fac.factors.empty() && fac.unit == 1;
  });
  s.check("factorize t^3+t over F_2", [&](std::string&) {
    auto fac = factorize(F2, parse_poly(F2, "t^3+t"));
    return fac.factors.size() == 2 && fac.factors[0].prime == Poly::t() && fac.factors[0].multiplicity == 1 &&
           fac.factors[1].prime == parse_poly(F2, "t+1") && fac.factors[1].multiplicity == 2;
  });
  s.check("factorize t^2+2 over F_3", [&](std::string&) {
    auto fac = factorize(F3, parse_poly(F3, "t^2+2"));
    return fac.factors.size() == 2 && fac.factors[0].prime == parse_poly(F3, "t+1") &&
           fac.factors[1].prime == parse_poly(F3, "t+2");
  });
  s.check("moebius values", [&](std::string&) {
    return moebius(F2, Poly::one()) == 1 && moebius(F2, parse_poly(F2, "t^2")) == 0 &&
           moebius(F2, parse_poly(F2, "t^2+t")) == 1;
  });
  s.check("totient values", [&](std::string&) {
    return totient(F2, Poly::one()) == 1 && totient(F2, parse_poly(F2, "t^2")) == 2 &&
           totient(F2, parse_poly(F2, "t^2+t+1")) == 3;
  });
  s.check("theta values", [&](std::string&) {
    return theta(F2, Poly::t()) == 1 && theta(F2, parse_poly(F2, "t^2+1")) == 0 &&
           theta(F3, parse_poly(F3, "t^3+2t+1")) == 3;
  });
  s.check("least prime degree", [&](std::string&) {
    return least_prime_degree(F2, Poly::one()) == kPosInf &&
           least_prime_degree(F2, parse_poly(F2, "t^3+t^2+t")) == 1 &&
           least_prime_degree(F2, parse_poly(F2, "t^3+t+1")) == 3;
  });
  s.check("prime counts over F_2", [](std::string&) { return prime_count(2, 1) == 2 && prime_count(2, 4) == 3; });
  s.check("Gauss identity q <= 5, n <= 12", [](std::string& d) {
    for (std::uint64_t q : {2, 3, 4, 5})
      for (int n = 1; n <= 12; ++n) {
        BigInt sum = 0;
        for (int dd = 1; dd <= n; ++dd)
          if (n % dd == 0) sum += BigInt(dd) * prime_count(q, dd);
        BigInt want = 1;
        for (int i = 0; i < n; ++i) want *= q;
        if (sum != want) {
          d = "q=" + show(q) + " n=" + show(n);
          return false;
        }
      }
    return true;
  });
  s.check("primes of degree 3 over F_2", [&](std::string& d) {
    return same_polys(F2, *enumerate_primes(F2, 3), {"t^3+t+1", "t^3+t^2+1"}, d);
  });
  s.check("primes of degree 2 over F_2", [&](std::string& d) {
    return same_polys(F2, *enumerate_primes(F2, 2), {"t^2+t+1"}, d);
  });
  s.check("prime lists match counts q <= 3, n <= 10", [](std::string& d) {
    for (std::uint64_t q : {2, 3}) {
      const Field F = Field::of_order(q);
      for (int n = 1; n <= 10; ++n)
        if (BigInt(enumerate_primes(F, n)->size()) != prime_count(q, n)) {
          d = "q=" + show(q) + " n=" + show(n);
          return false;
        }
    }
    return true;
  });
  s.check("zeta closed at q = 2, s = 2", [](std::string& d) {
    const auto z = zeta(2, {2.0, 0.0});
    d = show(z.value.real());
    return near(z.value.real(), 2.0, 1e-12) && std::abs(z.value.imag()) < 1e-12;
  });
  s.check("zeta_W factorization", [&](std::string& d) {
    const Poly W = build_W(F2, 3);
    const std::complex<double> sv(2.5, 0.3);
    std::complex<double> want = zeta(2, sv).value;
    for (const Poly& p : primes_up_to(F2, 2)) want *= 1.0 - std::pow(std::pow(2.0, p.degree()), -sv);
    const auto got = zeta_w(F2, sv, W).value;
    d = show(got) + " vs " + show(want);
    return std::abs(got - want) < 1e-12;
  });
  s.check("zeta truncation error at D = 25", [](std::string& d) {
    const double err = std::abs(zeta(2, {2.0, 0.0}, 25).value - zeta(2, {2.0, 0.0}).value);
    d = show(err);
    return err < 1e-6;
  });
}

void sieve(Suite& s) {
  const Field F2 = Field::of_order(2), F3 = Field::of_order(3);
  s.check("H = {0} admissible", [&](std::string&) { return is_admissible(F3, TupleH({Poly()})).admissible; });
  s.check("H = {0, 1} over F_2 not admissible, witness t", [&](std::string&) {
    auto a = is_admissible(F2, TupleH({Poly(), Poly::one()}));
    return !a.admissible && a.witness && *a.witness == Poly::t();
  });
  s.check("H = {alpha t^d} admissible", [](std::string& d) {
    for (std::uint64_t q : {2, 3, 4, 5})
      for (int deg = 0; deg <= 2; ++deg) {
        const Field F = Field::of_order(q);
        std::vector<Poly> H;
        for (Elem c = 1; c < q; ++c) H.push_back(Poly::monomial(c, deg));
        if (!is_admissible(F, TupleH(H)).admissible) {
          d = "q=" + show(q) + " d=" + show(deg);
          return false;
        }
      }
    return true;
  });
  s.check("build_W(1) = 1", [&](std::string&) { return build_W(F3, 1).is_one(); });
  s.check("build_W(2) = t^2+t over F_2", [&](std::string&) { return build_W(F2, 2) == parse_poly(F2, "t^2+t"); });
  s.check("deg W = sum d pi(d)", [](std::string& d) {
    for (std::uint64_t q : {2, 3})
      for (int w = 1; w <= 4; ++w) {
        BigInt want = 0;
        for (int dd = 1; dd < w; ++dd) want += BigInt(dd) * prime_count(q, dd);
        if (BigInt(build_W(Field::of_order(q), w).degree()) != want) {
          d = "q=" + show(q) + " w=" + show(w);
          return false;
        }
      }
    return true;
  });
  s.check("choose_b with H = {0}", [&](std::string&) {
    return choose_b(F2, build_W(F2, 3), TupleH({Poly()})).is_one() &&
           choose_b(F3, build_W(F3, 2), TupleH({Poly()})).is_one();
  });
  s.check("choose_b H = {0, 1} over F_2 has no residue", [&](std::string& d) {
    try {
      choose_b(F2, parse_poly(F2, "t^2+t"), TupleH({Poly(), Poly::one()}));
    } catch (const NoValidResidue&) {
      return true;
    }
    d = "no error";
    return false;
  });
  s.check("choose_b H = {0, t^3-t} over F_3", [&](std::string&) {
    return choose_b(F3, parse_poly(F3, "t^3+2t"), TupleH({Poly(), parse_poly(F3, "t^3-t")})).is_one();
  });

  const SieveParams P1 = tiny(F2, "0", 12);
  s.check("lambda at all-ones is F(0)", [&](std::string&) {
    std::vector<Poly> d{Poly::one()};
    return weight_lambda(d, P1) == 1.0;
  });
  s.check("lambda vanishes on squares", [&](std::string&) {
    std::vector<Poly> d{parse_poly(F2, "t^2+1")};
    return weight_lambda(d, P1) == 0.0;
  });
  s.check("lambda vanishes past r", [&](std::string&) {
    std::vector<Poly> d{enumerate_primes(F2, P1.r + 1)->front()};
    return weight_lambda(d, P1) == 0.0;
  });
  s.check("functionals k = 1, a = 1", [](std::string&) {
    auto ex = functionals_exact(WeightFn(1, 1));
    return ex.alpha == 1 && ex.beta == 1;
  });
  s.check("functionals k = 2, a = 3", [](std::string&) {
    auto ex = functionals_exact(WeightFn(2, 3));
    return ex.alpha == 3 && ex.beta == Rational(9, 5) && ex.gamma == 18;
  });
  s.check("functionals quadrature agrees", [](std::string& d) {
    for (auto [k, a] : {std::pair{1, 1}, std::pair{2, 3}}) {
      const WeightFn W(k, a);
      const auto ex = to_functionals(functionals_exact(W), k);
      const auto qd = functionals_quadrature(W);
      if (!near(qd.alpha, ex.alpha, 1e-9) || !near(qd.beta, ex.beta, 1e-9) || !near(qd.gamma, ex.gamma, 1e-9)) {
        d = "k=" + show(k);
        return false;
      }
    }
    return true;
  });
  s.check("S3 boundary: only the all-ones tuple", [&](std::string& d) {
    // w > r: every prime of degree <= r divides W
    const SieveParams P = tiny(F2, "0", 5, 3);
    auto [s3, s4] = sum_S3_S4(P);
    d = show(s3.exact);
    return s3.exact == 1.0;
  });
  s.check("S3/S4 direct equals factored, q = 2, k = 1, r <= 8", [&](std::string& d) {
    for (int n = 5; n <= 20; n += 3) {
      const SieveParams P = tiny(F2, "0", n);
      if (P.r > 8) break;
      auto [a3, a4] = sum_S3_S4(P, Route::Direct);
      auto [b3, b4] = sum_S3_S4(P, Route::Factored);
      if (!near(a3.exact, b3.exact, 1e-9) || !near(a4.exact, b4.exact, 1e-9)) {
        d = "n=" + show(n);
        return false;
      }
    }
    return true;
  });
  s.check("Euler factor at x = x' = 0", [](std::string& d) {
    const int r = 5, deg = 2;
    const double L = r * std::log(3.0), np = std::pow(3.0, deg);
    const double want = -2 * std::pow(np, -1 - 1 / L) + std::pow(np, -1 - 2 / L);
    const auto got = euler_K_p(3, deg, r, 0, 0);
    d = show(got) + " vs " + show(want);
    return std::abs(got.real() - want) < 1e-15 && std::abs(got.imag()) < 1e-15;
  });
  s.check("K doubling D within the tail bound", [&](std::string& d) {
    const SieveParams P = tiny(F2, "0", 20);
    const int D = 40;
    const double diff = std::abs(euler_K(P, 0, 0, 2 * D) - euler_K(P, 0, 0, D));
    d = show(diff) + " <= " + show(euler_K_tail_bound(P, D));
    return diff <= euler_K_tail_bound(P, D);
  });
  s.check("S1 and S2 direct equal expanded", [&](std::string& d) {
    SumOptions dir, exp;
    exp.route = Route::Expanded;
    const double a = sum_S1(P1, dir).exact, b = sum_S1(P1, exp).exact;
    const double c = sum_S2(P1, 0, dir).exact, e = sum_S2(P1, 0, exp).exact;
    d = show(a) + "/" + show(b) + " " + show(c) + "/" + show(e);
    return near(a, b, 1e-9) && near(c, e, 1e-9);
  });
  s.check("S2 with all tuples equals trivial d_j", [&](std::string& d) {
    SumOptions all, triv;
    triv.only_trivial_j = true;
    const double a = sum_S2(P1, 0, all).exact, b = sum_S2(P1, 0, triv).exact;
    d = show(a) + " vs " + show(b);
    return near(a, b, 1e-12);
  });
  s.check("S_g = 0 for g | W", [&](std::string&) {
    return sum_Sg(P1, Poly::t()).exact == 0.0 && sum_Sg(P1, parse_poly(F2, "t+1")).exact == 0.0;
  });
  s.check("bad-set slack nonnegative", [&](std::string& d) {
    const auto rep = concentration_total(P1);
    d = show(rep.extras.at("slack"));
    return rep.extras.at("slack") >= 0;
  });
  s.check("bad-set sum shrinks as eps halves", [&](std::string& d) {
    double prev = INFINITY;
    for (double eps : {0.3, 0.15, 0.075}) {
      const double v = concentration_total(tiny(F2, "0", 12, 2, 0.4, eps)).exact;
      d += show(v) + " ";
      if (v > prev) return false;
      prev = v;
    }
    return true;
  });
  s.check("density m = 0, H = {0} matches prime filter", [&](std::string& d) {
    const SieveParams P = tiny(F2, "0", 10);
    const auto rep = density_experiment(P);
    std::uint64_t want = 0;
    for (const Poly& p : *enumerate_primes(F2, 10))
      if (rem(F2, p, P.W) == rem(F2, P.b, P.W) && in_P_eps(P, p)) ++want;
    d = show(rep.count_A) + " vs " + show(want);
    return rep.count_A == want;
  });
  s.check("measured density positive at q = 3, H = {0, t}", [&](std::string& d) {
    if (!is_admissible(F3, TupleH({Poly(), Poly::t()})).admissible) return false;
    const auto rep = density_experiment(tiny(F3, "0,t", 10));
    d = show(rep.measured_a);
    return rep.count_A > 0 && rep.measured_a > 0;
  });
}

void transference(Suite& s) {
  const Field F2 = Field::of_order(2);
  const SieveParams sp = tiny(F2, "0", 10);
  const MeasureParams mp = MeasureParams::make(sp, 0.1);
  s.check("Lambda_r(1) = 1", [&](std::string&) { return gy_divisor_sum(F2, Poly::one(), 4, mp.G) == 1.0; });
  s.check("Lambda_r = 1 when all prime factors exceed r", [&](std::string&) {
    const Poly f = mul(F2, enumerate_primes(F2, 5)->front(), enumerate_primes(F2, 6)->back());
    return gy_divisor_sum(F2, f, 4, mp.G) == 1.0;
  });
  s.check("Lambda_r on a product of two linears", [&](std::string& d) {
    const double got = gy_divisor_sum(F2, parse_poly(F2, "t^2+t"), 4, mp.G);
    const double want = 1 - 2 * mp.G(0.25) + mp.G(0.5);
    d = show(got) + " vs " + show(want);
    return near(got, want, 1e-15);
  });
  const auto table = nu_table(mp);
  s.check("nu is nonnegative", [&](std::string&) {
    for (double v : table)
      if (v < 0) return false;
    return true;
  });
  s.check("nu on prime values equals the scale", [&](std::string& d) {
    int seen = 0;
    for (std::uint64_t i = 0; i < table.size(); ++i) {
      const Poly f = from_index(F2, i);
      const Poly v = add(F2, mul(F2, mp.W, f), mp.b);
      if (v.degree() > mp.r && is_prime_poly(F2, v)) {
        ++seen;
        if (!near(table[i], mp.scale, 1e-15)) {
          d = to_string(F2, f);
          return false;
        }
      }
    }
    return seen > 0;
  });
  s.check("phi weight: zero off A, nu on A", [&](std::string& d) {
    const Membership in_A = [&](const Poly& v) { return is_prime_poly(F2, v) && in_P_eps(sp, v); };
    for (std::uint64_t i = 0; i < table.size(); ++i) {
      const Poly f = from_index(F2, i);
      const Poly v = add(F2, mul(F2, mp.W, f), mp.b);
      const double ph = phi_weight(f, mp, in_A);
      if ((in_A(v) && ph != table[i]) || (!in_A(v) && ph != 0.0) || ph > std::pow(sp.n, sp.k)) {
        d = to_string(F2, f);
        return false;
      }
    }
    return true;
  });
  const FqnSpace V(F2, 4);
  s.check("linear form drops the diagonal term", [&](std::string&) {
    std::vector<std::uint64_t> xs{5, 9};
    return linear_form(V, 1, xs) == 9 && linear_form(V, 2, xs) == V.times(-1, 5);
  });
  s.check("linear form degenerates in characteristic 2", [&](std::string&) {
    std::vector<std::uint64_t> xs{3, 7, 11};
    return linear_form(V, 1, xs) == 7;
  });
  s.check("estimate is 1 for nu = 1", [&](std::string&) {
    const std::vector<double> ones(V.size(), 1.0);
    return pseudorandom_estimate(V, ones, ExponentPattern::all_ones(2), Sampler::Exhaustive).estimate == 1.0 &&
           pseudorandom_estimate(V, ones, ExponentPattern::all_ones(2), Sampler::MonteCarlo, 500).estimate == 1.0;
  });
  s.check("estimate is 1 for the empty pattern", [&](std::string&) {
    const FqnSpace V10(F2, 10);
    return pseudorandom_estimate(V10, table, ExponentPattern::all_zero(2), Sampler::Exhaustive).estimate == 1.0;
  });
  s.check("GY estimate at n = 6 finite and reproducible", [&](std::string& d) {
    const SieveParams p6 = tiny(F2, "0", 6, 2, 0.4, 0.3);
    const MeasureParams m6 = MeasureParams::make(p6, 0.2);
    const FqnSpace V6(F2, 6);
    const auto t6 = nu_table(m6);
    const double a = pseudorandom_estimate(V6, t6, ExponentPattern::all_ones(2), Sampler::Exhaustive).estimate;
    const double b = pseudorandom_estimate(V6, t6, ExponentPattern::all_ones(2), Sampler::Exhaustive).estimate;
    d = show(a);
    return std::isfinite(a) && std::memcmp(&a, &b, sizeof a) == 0;
  });
}

void search(Suite& s) {
  const Field F2 = Field::of_order(2), F3 = Field::of_order(3);
  s.check("g = 0 configuration is constant", [&](std::string&) {
    const Poly f = parse_poly(F3, "t^2+1");
    for (const Poly& e : config_elements(F3, f, Poly(), 2))
      if (e != f) return false;
    return true;
  });
  s.check("configuration of t^2 with g = 1", [&](std::string& d) {
    return same_polys(F2, config_elements(F2, parse_poly(F2, "t^2"), Poly::one(), 1), {"t^2", "t^2+1"}, d);
  });
  s.check("configuration has q^ell distinct elements", [&](std::string&) {
    auto v = config_elements(F3, parse_poly(F3, "t^4"), parse_poly(F3, "t+2"), 2);
    std::sort(v.begin(), v.end());
    return std::unique(v.begin(), v.end()) == v.end() && v.size() == 9;
  });
  s.check("ell = 0 configuration", [&](std::string&) {
    return is_prime_config(F2, parse_poly(F2, "t^2+t+1"), Poly::one(), 0) &&
           !is_prime_config(F2, parse_poly(F2, "t^2+1"), Poly::one(), 0);
  });
  s.check("t^3+t+1, g = t^2+t is a prime configuration", [&](std::string&) {
    return is_prime_config(F2, parse_poly(F2, "t^3+t+1"), parse_poly(F2, "t^2+t"), 1);
  });
  s.check("configurations containing t^2 fail", [&](std::string&) {
    return !is_prime_config(F2, parse_poly(F2, "t^2"), Poly::one(), 1) &&
           !is_prime_config(F2, parse_poly(F2, "t^2+1"), Poly::one(), 1);
  });
  auto contains = [](const SearchReport& rep, const Poly& f, const Poly& g) {
    for (const auto& c : rep.found)
      if (c.f == f && c.g == g) return true;
    return false;
  };
  s.check("prime configurations q = 2, ell = 1, n = 3", [&](std::string& d) {
    const auto rep = find_prime_configs(F2, 3, 1);
    d = show(rep.found.size()) + " found";
    return contains(rep, parse_poly(F2, "t^3+t+1"), parse_poly(F2, "t^2+t")) && reverify(F2, rep);
  });
  s.check("no prime configurations q = 3, ell = 1, n = 2", [&](std::string&) {
    return find_prime_configs(F3, 2, 1).found.empty();
  });
  s.check("no twin pairs f, f+1 over F_2", [&](std::string&) {
    for (int n = 2; n <= 8; ++n)
      if (!find_twin_configs(F2, n, 0, Poly::one()).found.empty()) return false;
    return true;
  });
  s.check("twin pair over F_3 at n = 3", [&](std::string& d) {
    const auto rep = find_twin_configs(F3, 3, 0, Poly::one());
    d = show(rep.found.size()) + " found";
    return contains(rep, parse_poly(F3, "t^3+2t+1"), Poly::one()) && reverify(F3, rep);
  });
  s.check("translates with H = {0} match configurations", [&](std::string&) {
    const auto a = find_prime_configs(F2, 4, 1);
    const auto b = find_mplus1_translates(F2, 4, {Poly()}, 1, 0);
    if (a.found.size() != b.found.size()) return false;
    for (std::size_t i = 0; i < a.found.size(); ++i)
      if (a.found[i].f != b.found[i].f || a.found[i].g != b.found[i].g) return false;
    return true;
  });
  s.check("twin pairs appear among translates with m = 0", [&](std::string&) {
    const auto tw = find_twin_configs(F3, 3, 0, Poly::one());
    const auto tr = find_mplus1_translates(F3, 3, {Poly(), Poly::one()}, 0, 0);
    for (const auto& c : tw.found)
      if (!contains(tr, c.f, c.g)) return false;
    return !tw.found.empty();
  });
  s.check("m = 1 translates over F_3 at n = 3", [&](std::string&) {
    const auto rep = find_mplus1_translates(F3, 3, {Poly(), Poly::one()}, 0, 1);
    return contains(rep, parse_poly(F3, "t^3+2t+1"), Poly::one()) && reverify(F3, rep);
  });
  s.check("partition classes", [&](std::string& d) {
    for (int ell = 0; ell <= 3; ++ell) {
      const auto cls = partition_classes(F3, 4, ell);
      std::map<std::uint64_t, std::uint64_t> sizes;
      for (auto c : cls) ++sizes[c];
      if (sizes.size() != checked_pow(3, ell)) {
        d = "ell=" + show(ell);
        return false;
      }
      for (auto [c, n] : sizes)
        if (n != checked_pow(3, 4 - ell)) return false;
      for (std::uint64_t i = 0; i < cls.size(); i += 7)
        for (std::uint64_t j = 0; j < cls.size(); j += 5)
          if (cls[i] == cls[j] && sub(F3, from_index(F3, i), from_index(F3, j)).degree() >= 4 - ell) return false;
    }
    return true;
  });
}

void cli(Suite& s) {
  auto run = [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int rc = cmd_dispatch(args, out, err);
    return std::pair{rc, nlohmann::json::parse(out.str())};
  };
  s.check("cli primes --q 2 --n 4 --count", [&](std::string&) {
    auto [rc, j] = run({"primes", "--q", "2", "--n", "4", "--count"});
    return rc == 0 && j["count"] == 3;
  });
  s.check("cli admissible --q 2 --H 0,1", [&](std::string&) {
    auto [rc, j] = run({"admissible", "--q", "2", "--H", "0,1"});
    return rc == 0 && j["admissible"] == false && j["witness"] == "t";
  });
  s.check("cli zeta --q 2 --s 2 --closed", [&](std::string&) {
    auto [rc, j] = run({"zeta", "--q", "2", "--s", "2", "--closed"});
    return rc == 0 && j["value"]["re"] == 2.0;
  });
}

}  // namespace

std::vector<SelftestResult> run_selftest() {
  Suite s;
  field_and_poly(s);
  arithmetic(s);
  sieve(s);
  transference(s);
  search(s);
  cli(s);
  return s.results;
}

}  // namespace ffsieve::cli
