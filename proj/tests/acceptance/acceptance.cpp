// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "ffsieve/arith.hpp"
#include "ffsieve/primes.hpp"
#include "ffsieve/search.hpp"
#include "ffsieve/sieve.hpp"
#include "ffsieve/transference.hpp"
#include "ffsieve/weight.hpp"
#include "ffsieve/zeta.hpp"
#include "ffsieve/poly_io.hpp"

using namespace ffsieve;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

bool trial_irreducible(const Field& F, const Poly& f) {
  if (f.degree() < 1) return false;
  for (int d = 1; 2 * d <= f.degree(); ++d)
    for (const Poly& g : enumerate_monic(F, d))
      if (rem(F, f, g).is_zero()) return false;
  return true;
}

std::string fmt(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

double rel_diff(double a, double b) { return std::abs(a - b) / std::max(std::abs(a), std::abs(b)); }

SieveParams params(const Field& F, std::vector<Poly> H, int n, int a, double eta = 0.4, double eps = 0.2) {
  return SieveParams::make(F, TupleH(std::move(H)), 0, eta, 2, eps, n, a);
}

Outcome exact_identities() {
  Outcome o;
  for (std::uint64_t q : {2, 3, 4, 5})
    for (int n = 1; n <= 12; ++n) {
      BigInt s = 0, want = 1;
      for (int d = 1; d <= n; ++d)
        if (n % d == 0) s += BigInt(d) * prime_count(q, d);
      for (int i = 0; i < n; ++i) want *= q;
      o.require(s == want, "Gauss identity q=" + std::to_string(q) + " n=" + std::to_string(n));
    }
  for (std::uint64_t q : {2, 3}) {
    const Field F = Field::of_order(q);
    for (int n = 1; n <= 10; ++n)
      o.require(BigInt(compute_primes(F, n).size()) == prime_count(q, n),
                "prime list q=" + std::to_string(q) + " n=" + std::to_string(n));
  }
  const double err = std::abs(zeta(2, {2.0, 0.0}, 25).value - zeta(2, {2.0, 0.0}).value);
  o.require(err < 1e-6, "zeta truncation error " + std::to_string(err));
  if (o.ok) o.note = "zeta error " + fmt(err);
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  std::uint64_t tested = 0;
  for (std::uint64_t q : {2, 3, 4, 5}) {
    const Field F = Field::of_order(q);
    for (int d = 1; d <= 6; ++d)
      for (const Poly& f : enumerate_monic(F, d)) {
        ++tested;
        o.require(is_irreducible(F, f) == trial_irreducible(F, f), "irreducible " + to_string(F, f));
      }
  }
  for (std::uint64_t q : {2, 3}) {
    const Field F = Field::of_order(q);
    for (int d = 0; d <= 5; ++d)
      for (const Poly& f : enumerate_monic(F, d)) {
        std::uint64_t c = d == 0 ? 1 : 0;
        for (std::uint64_t i = 0; d > 0 && i < checked_pow(q, d); ++i)
          if (gcd(F, from_index(F, i), f).is_one()) ++c;
        o.require(totient(F, f) == c, "totient " + to_string(F, f));
      }
  }
  // every H of size <= 3 with element degree <= 2
  for (std::uint64_t q : {2, 3}) {
    const Field F = Field::of_order(q);
    const std::uint64_t N = checked_pow(q, 3);
    std::vector<Poly> primes;
    for (int d = 1; checked_pow(q, d) <= 3; ++d)
      for (const Poly& p : *enumerate_primes(F, d)) primes.push_back(p);
    for (std::uint64_t a = 0; a < N; ++a)
      for (std::uint64_t b = a; b < N; ++b)
        for (std::uint64_t c = b; c < N; ++c) {
          const std::set<std::uint64_t> ids{a, b, c};
          std::vector<Poly> H;
          for (auto i : ids) H.push_back(from_index(F, i));
          bool brute = true;
          for (const Poly& p : primes) {
            bool covered = true;
            for (std::uint64_t r = 0; r < checked_pow(q, p.degree()); ++r) {
              bool hit = false;
              for (const Poly& h : H) hit = hit || rem(F, add(F, from_index(F, r), h), p).is_zero();
              if (!hit) covered = false;
            }
            if (covered) brute = false;
          }
          o.require(is_admissible(F, TupleH(H)).admissible == brute, "admissibility");
        }
  }
  if (o.ok) o.note = std::to_string(tested) + " irreducibility cases";
  return o;
}

Outcome functionals() {
  Outcome o;
  for (auto [k, a] : {std::pair{1, 1}, std::pair{1, 3}, std::pair{2, 3}, std::pair{3, 4}}) {
    const WeightFn W(k, a);
    const auto ex = to_functionals(functionals_exact(W), k);
    const auto qd = functionals_quadrature(W);
    const std::string tag = "(k,a)=(" + std::to_string(k) + "," + std::to_string(a) + ")";
    o.require(std::abs(qd.alpha - ex.alpha) <= 1e-9 * std::max(1.0, ex.alpha), "alpha " + tag);
    o.require(std::abs(qd.beta - ex.beta) <= 1e-9 * std::max(1.0, ex.beta), "beta " + tag);
    o.require(std::abs(qd.gamma - ex.gamma) <= 1e-9 * std::max(1.0, ex.gamma), "gamma " + tag);
  }
  const auto e = functionals_exact(WeightFn(2, 3));
  o.require(e.alpha == 3 && e.beta == Rational(9, 5) && e.gamma == 18, "(2,3) closed form");
  return o;
}

Outcome route_equivalence() {
  Outcome o;
  const Field F2 = Field::of_order(2), F3 = Field::of_order(3);
  const TupleH H2({Poly(), Poly::t()});
  o.require(is_admissible(F3, H2).admissible, "{0, t} not admissible at q = 3");
  struct Case {
    SieveParams P;
    Poly g;
  };
  const std::vector<Case> cases{{params(F2, {Poly()}, 12, 1), parse_poly(F2, "t^2+t+1")},
                                {params(F3, {Poly(), Poly::t()}, 10, 3), parse_poly(F3, "t^2+1")}};
  SumOptions dir, exp;
  exp.route = Route::Expanded;
  double worst = 0;
  for (const auto& c : cases) {
    auto cmp = [&](double a, double b, const std::string& what) {
      const double d = a == b ? 0.0 : rel_diff(a, b);
      worst = std::max(worst, d);
      o.require(d <= 1e-9, what + " q=" + std::to_string(c.P.F.order()));
    };
    cmp(sum_S1(c.P, dir).exact, sum_S1(c.P, exp).exact, "S1");
    for (std::size_t j = 0; j < c.P.H.size(); ++j) cmp(sum_S2(c.P, j, dir).exact, sum_S2(c.P, j, exp).exact, "S2");
    cmp(sum_Sg(c.P, c.g, dir).exact, sum_Sg(c.P, c.g, exp).exact, "Sg");
  }
  if (o.ok) o.note = "max rel diff " + fmt(worst);
  return o;
}

Outcome trends() {
  Outcome o;
  const Field F3 = Field::of_order(3), F2 = Field::of_order(2);
  std::ostringstream note;
  double prev = INFINITY;
  // r = floor(0.4 n)
  for (int n : {20, 30, 40}) {
    const auto P = params(F3, {Poly()}, n, 1);
    const double e = sum_S3_S4(P).first.rel_error;
    note << (n == 20 ? "" : " ") << "S3 r=" << P.r << ":" << e;
    o.require(e < prev, "S3 error not decreasing at r=" + std::to_string(P.r));
    prev = e;
  }
  prev = INFINITY;
  for (int n : {40, 80, 160}) {
    const auto P = params(F2, {Poly()}, n, 2);
    const auto K = euler_K(P, 0, 0, 60 * P.r);
    const auto A = euler_K_asymptotic(P, 0, 0);
    const double e = std::abs(K - A) / std::abs(A);
    note << " K r=" << P.r << ":" << e;
    o.require(e < prev, "K error not decreasing at r=" + std::to_string(P.r));
    prev = e;
  }
  if (o.ok) o.note = note.str();
  return o;
}

Outcome concentration() {
  Outcome o;
  const Field F2 = Field::of_order(2);
  double prev = INFINITY;
  for (double eps : {0.3, 0.15, 0.075, 0.0375}) {
    const auto rep = concentration_total(params(F2, {Poly()}, 12, 2, 0.4, eps));
    o.require(rep.exact <= prev, "bad-set sum increased at eps=" + std::to_string(eps));
    o.require(rep.extras.at("slack") >= 0, "negative slack");
    prev = rep.exact;
  }
  const auto P = params(F2, {Poly()}, 12, 2);
  for (const Poly& p : primes_up_to(F2, P.w - 1))
    if (divides(F2, p, P.W)) o.require(sum_Sg(P, p).exact == 0.0, "S_g nonzero for g | W");
  return o;
}

Outcome transference() {
  Outcome o;
  const Field F2 = Field::of_order(2);
  for (int n = 5; n <= 10; ++n) {
    const auto sp = params(F2, {Poly()}, n, 2, 0.4, 0.3);
    const auto mp = MeasureParams::make(sp, 0.2);
    const auto chk = check_transference(sp, mp, density_experiment(sp));
    const std::string tag = " n=" + std::to_string(n);
    o.require(chk.phi_nonnegative_below_nu, "0 <= phi <= nu" + tag);
    o.require(chk.phi_equals_nu_on_A, "phi = nu on A" + tag);
    o.require(chk.sup_phi <= chk.sup_bound, "sup phi" + tag);
    o.require(chk.mean_at_least_delta, "mean phi" + tag);
  }
  const FqnSpace V(F2, 6);
  const std::vector<double> ones(V.size(), 1.0);
  const auto sp = params(F2, {Poly()}, 6, 2, 0.4, 0.3);
  const auto table = nu_table(MeasureParams::make(sp, 0.2));
  for (int ell : {1, 2, 3}) {
    const Sampler s = ell < 3 ? Sampler::Exhaustive : Sampler::MonteCarlo;
    o.require(pseudorandom_estimate(V, ones, ExponentPattern::all_ones(ell), s, 2000).estimate == 1.0,
              "nu = 1 estimate");
    o.require(pseudorandom_estimate(V, table, ExponentPattern::all_zero(ell), Sampler::Exhaustive).estimate == 1.0,
              "all-zero pattern estimate");
  }
  const double a = pseudorandom_estimate(V, table, ExponentPattern::all_ones(2), Sampler::Exhaustive).estimate;
  const double b = pseudorandom_estimate(V, table, ExponentPattern::all_ones(2), Sampler::Exhaustive).estimate;
  o.require(std::isfinite(a), "GY estimate not finite");
  o.require(std::memcmp(&a, &b, sizeof a) == 0, "GY estimate differs on re-run");
  if (o.ok) o.note = "GY estimate n=6: " + fmt(a);
  return o;
}

Outcome search() {
  Outcome o;
  const Field F2 = Field::of_order(2), F3 = Field::of_order(3);
  auto has = [](const SearchReport& r, const Poly& f, const Poly& g) {
    for (const auto& c : r.found)
      if (c.f == f && c.g == g) return true;
    return false;
  };
  const auto c1 = find_prime_configs(F2, 3, 1);
  o.require(has(c1, parse_poly(F2, "t^3+t+1"), parse_poly(F2, "t^2+t")), "q=2 configuration missing");
  const auto tw = find_twin_configs(F3, 3, 0, Poly::one());
  o.require(has(tw, parse_poly(F3, "t^3+2t+1"), Poly::one()), "q=3 twin pair missing");
  for (int n = 2; n <= 8; ++n)
    o.require(find_twin_configs(F2, n, 0, Poly::one()).found.empty(), "q=2 pair search not empty");
  const auto e3 = find_prime_configs(F3, 2, 1);
  o.require(e3.found.empty(), "q=3, ell=1, n=2 not empty");
  for (const auto* r : {&c1, &tw, &e3}) o.require(reverify(r == &c1 ? F2 : F3, *r), "re-verification");
  return o;
}

Outcome determinism() {
  Outcome o;
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "ffsieve_acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const std::vector<std::vector<std::string>> runs{
      {"primes", "--q", "3", "--n", "4", "--list"},
      {"zeta", "--q", "2", "--s", "2", "--D", "25"},
      {"admissible", "--q", "3", "--H", "0,t"},
      {"setup", "--q", "3", "--H", "0,t", "--n", "10"},
      {"functionals", "--H", "0,t", "--quadrature"},
      {"sums", "--q", "2", "--n", "12", "--sum", "s1", "--route", "both"},
      {"sums", "--q", "3", "--n", "10", "--H", "0,t", "--sum", "s2", "--j", "1"},
      {"sums", "--q", "2", "--n", "12", "--sum", "sg", "--g", "t^2+t+1"},
      {"sums", "--q", "2", "--n", "12", "--sum", "s3", "--route", "both"},
      {"sums", "--q", "2", "--n", "12", "--sum", "conc"},
      {"sums", "--q", "2", "--n", "40", "--sum", "k"},
      {"density", "--q", "3", "--n", "10", "--H", "0,t"},
      {"measure", "--q", "2", "--n", "10", "--eps", "0.3", "--rho", "0.2", "--what", "check"},
      {"measure", "--q", "2", "--n", "10", "--what", "nu", "--f", "t^3+1"},
      {"measure", "--q", "2", "--n", "10", "--what", "lambda-r", "--f", "t^5+t"},
      {"measure", "--q", "2", "--n", "8", "--eps", "0.3", "--rho", "0.2", "--what", "pseudorandom", "--ell", "2",
       "--sampler", "monte_carlo", "--samples", "5000", "--seed", "7"},
      {"search", "--q", "2", "--n", "3", "--ell", "1"},
      {"search", "--q", "3", "--n", "4", "--ell", "1", "--mode", "randomized", "--seed", "11"},
      {"search", "--q", "3", "--n", "3", "--kind", "twins", "--ell", "0"},
      {"search", "--q", "3", "--n", "3", "--kind", "translates", "--H", "0,1", "--ell", "0", "--m", "1"},
      {"selftest"},
  };
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
  };
  int idx = 0;
  for (const auto& args : runs) {
    for (const std::string fmt : {"json", "csv"}) {
      std::string files[2];
      for (int rep = 0; rep < 2; ++rep) {
        const fs::path p = dir / (std::to_string(idx) + "_" + std::to_string(rep) + "." + fmt);
        auto full = args;
        full.insert(full.end(), {"--format", fmt, "--threads", rep ? "3" : "1", "--out", p.string()});
        std::ostringstream out, err;
        const int rc = ffsieve::cli::cmd_dispatch(full, out, err);
        o.require(rc == 0, args[0] + " exit " + std::to_string(rc) + " " + err.str());
        files[rep] = slurp(p);
      }
      o.require(!files[0].empty() && files[0] == files[1], "report differs: " + args[0] + " #" + std::to_string(idx));
    }
    ++idx;
  }
  fs::remove_all(dir);
  if (o.ok) o.note = std::to_string(runs.size()) + " configurations, json and csv";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"exact identities", 30, exact_identities},   {"oracle equivalence", 120, oracle_equivalence},
      {"functionals", 60, functionals},             {"route equivalence", 300, route_equivalence},
      {"asymptotic trends", 600, trends},           {"concentration", 300, concentration},
      {"transference conditions", 600, transference}, {"search existence", 120, search},
      {"determinism", 600, determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.ok && secs > criteria[i].limit_s) o = {false, "runtime " + std::to_string(secs) + " s over limit"};
    if (!o.ok) ++failed;
    std::printf("%s criterion %zu (%s) [%.2f s]%s%s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].name, secs,
                o.note.empty() ? "" : ": ", o.note.c_str());
    std::fflush(stdout);
  }
  return failed ? 1 : 0;
}
