#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "ffsieve/parallel.hpp"
#include "ffsieve/sieve.hpp"
#include "sieve_internal.hpp"

namespace ffsieve {

namespace detail {

StateSpace::StateSpace(int slots, int r) : slots_(slots), r_(r) {
  std::uint64_t cells = 1;
  for (int i = 0; i < slots; ++i) {
    cells *= static_cast<std::uint64_t>(r);
    if (cells > (1ULL << 26)) throw BudgetExceeded("degree state space", cells, 1ULL << 26);
  }
  lookup_.assign(cells, -1);
  std::vector<int> cur(slots, 0);
  std::function<void(int, int)> rec = [&](int slot, int left) {
    if (slot == slots) {
      lookup_[code(cur)] = static_cast<int>(states_.size());
      states_.push_back(cur);
      return;
    }
    for (int d = 0; d <= left; ++d) {
      cur[slot] = d;
      rec(slot + 1, left - d);
    }
    cur[slot] = 0;
  };
  rec(0, r - 1);
}

std::size_t StateSpace::code(const std::vector<int>& v) const {
  std::size_t c = 0;
  for (int x : v) c = c * r_ + x;
  return c;
}

int StateSpace::shift(int s, int j, int d) const {
  std::vector<int> v = states_[s];
  v[j] += d;
  if (std::accumulate(v.begin(), v.end(), 0) >= r_) return -1;
  return lookup_[code(v)];
}

std::vector<std::vector<Divisor>> coprime_squarefree(const Field& F, const Poly& W, int max_degree) {
  std::vector<std::vector<Divisor>> out(static_cast<std::size_t>(std::max(max_degree, -1) + 1));
  for (int D = 0; D <= max_degree; ++D) {
    for (const Poly& d : enumerate_monic(F, D)) {
      const Factorization fac = factorize(F, d);
      if (!fac.is_squarefree()) continue;
      if (!gcd(F, d, W).is_one()) continue;
      out[D].push_back({d, D, moebius(fac), totient(F, fac)});
    }
  }
  return out;
}

std::vector<Tuple> weight_tuples(const std::vector<std::vector<Divisor>>& divs, const WeightFn& F, int slots,
                                 int r, bool leading_zero, std::uint64_t budget) {
  std::vector<Tuple> out;
  Tuple cur;
  cur.d.resize(slots);
  cur.deg.resize(slots);
  std::function<void(int, int, int)> rec = [&](int slot, int left, int sign) {
    if (slot == slots) {
      std::vector<int> degs = cur.deg;
      if (leading_zero) degs.insert(degs.begin(), 0);
      Tuple t = cur;
      t.lambda = sign * F.at_degrees(degs, r);
      if (t.lambda == 0) return;
      out.push_back(std::move(t));
      check_budget("weight tuples", out.size(), budget);
      return;
    }
    for (int D = 0; D <= left; ++D) {
      for (const Divisor& dv : divs[D]) {
        cur.d[slot] = &dv;
        cur.deg[slot] = D;
        rec(slot + 1, left - D, sign * dv.mu);
      }
    }
  };
  rec(0, r - 1, 1);
  return out;
}

}  // namespace detail

using detail::Divisor;
using detail::StateSpace;
using detail::Tuple;

namespace {

Functionals exact_functionals(const SieveParams& P) { return to_functionals(functionals_exact(P.weight), P.k); }

// ---------------------------------------------------------------------------------------
// S3 / S4

double s3s4_factored(const SieveParams& P, bool s4) {
  const int slots = s4 ? P.k - 1 : P.k;
  const int r = P.r;
  const StateSpace S(slots, r);
  const std::size_t H = S.size();
  std::vector<double> A(H * H, 0.0);
  A[0] = 1.0;
  const double q = P.F.order();

  for (int d = std::max(P.w, 1); d < r && slots > 0; ++d) {
    const double N = to_double(Rational(prime_count(P.F.order(), d)));
    if (N == 0) continue;
    const double omega = s4 ? 1.0 / (std::pow(q, d) - 1.0) : std::pow(q, -d);
    std::vector<std::vector<int>> next(slots, std::vector<int>(H));
    for (int j = 0; j < slots; ++j)
      for (std::size_t s = 0; s < H; ++s) next[j][s] = S.shift(static_cast<int>(s), j, d);

    std::vector<double> acc = A, T = A, U(H * H);
    double c = 1.0;
    for (int m = 1; m <= N; ++m) {
      std::fill(U.begin(), U.end(), 0.0);
      bool any = false;
      for (std::size_t s = 0; s < H; ++s) {
        for (std::size_t t = 0; t < H; ++t) {
          const double v = T[s * H + t];
          if (v == 0) continue;
          for (int j = 0; j < slots; ++j) {
            const int sj = next[j][s], tj = next[j][t];
            if (sj >= 0) U[sj * H + t] -= v, any = true;
            if (tj >= 0) U[s * H + tj] -= v, any = true;
            if (sj >= 0 && tj >= 0) U[sj * H + tj] += v;
          }
        }
      }
      if (!any) break;
      c *= (N - m + 1) / m * omega;
      for (std::size_t i = 0; i < H * H; ++i) acc[i] += c * U[i];
      T.swap(U);
    }
    A.swap(acc);
  }

  std::vector<double> Fv(H);
  for (std::size_t s = 0; s < H; ++s) {
    std::vector<int> degs = S.state(s);
    if (s4) degs.insert(degs.begin(), 0);
    Fv[s] = P.weight.at_degrees(degs, r);
  }
  CompensatedSum sum;
  for (std::size_t s = 0; s < H; ++s)
    for (std::size_t t = 0; t < H; ++t)
      if (A[s * H + t] != 0) sum += A[s * H + t] * Fv[s] * Fv[t];
  return sum.value();
}

double s3s4_direct(const SieveParams& P, bool s4, std::uint64_t& visited) {
  const auto divs = detail::coprime_squarefree(P.F, P.W, P.r - 1);
  const int slots = s4 ? P.k - 1 : P.k;
  const auto tuples = detail::weight_tuples(divs, P.weight, slots, P.r, s4, P.budget);
  check_budget("S3/S4 tuple pairs", static_cast<std::uint64_t>(tuples.size()) * tuples.size(), P.budget);
  visited += tuples.size() * tuples.size();
  CompensatedSum sum;
  std::vector<Poly> L(slots);
  for (const Tuple& a : tuples) {
    for (const Tuple& b : tuples) {
      double denom = 1.0;
      for (int j = 0; j < slots; ++j) {
        L[j] = lcm(P.F, a.d[j]->d, b.d[j]->d);
        denom *= s4 ? static_cast<double>(totient(P.F, L[j])) : std::pow(double(P.F.order()), L[j].degree());
      }
      bool coprime = true;
      for (int i = 0; i < slots && coprime; ++i)
        for (int j = i + 1; j < slots && coprime; ++j) coprime = gcd(P.F, L[i], L[j]).is_one();
      if (!coprime) continue;
      sum += a.lambda * b.lambda / denom;
    }
  }
  return sum.value();
}

// ---------------------------------------------------------------------------------------
// S1 / S2 / Sg

enum class Kind { S1, S2, Sg, Conc };

struct DirectResult {
  CompensatedSum main, union_bound;
  Rational exact = 0;
  std::uint64_t visited = 0, bad = 0;
};

// Inner weight sum for one f, given per-translate signed divisor-degree counts.
template <class T, class Fv>
T inner_sum(const StateSpace& S, const std::vector<std::vector<long long>>& c, const Fv& fval) {
  T total = 0;
  for (std::size_t s = 0; s < S.size(); ++s) {
    const auto& D = S.state(s);
    long long prod = 1;
    for (std::size_t j = 0; j < D.size() && prod; ++j) prod *= c[j][D[j]];
    if (prod) total += T(prod) * fval[s];
  }
  return total;
}

DirectResult direct_pass(const SieveParams& P, Kind kind, std::size_t jsel, const Poly* g, bool rational) {
  const int degW = P.deg_W();
  const MonicRange range(P.F, P.n - degW);
  check_budget("direct route over A_n", range.size(), P.budget);
  const StateSpace S(P.k, P.r);
  std::vector<double> Fd(S.size());
  std::vector<Rational> Fr(rational ? S.size() : 0);
  for (std::size_t s = 0; s < S.size(); ++s) {
    Fd[s] = P.weight.at_degrees(S.state(s), P.r);
    if (rational) Fr[s] = P.weight.rational_at_degrees(S.state(s), P.r);
  }
  const double eps_bound = P.eps * P.n - 1e-9;
  const auto parts = range.split(kReductionChunks);
  std::vector<DirectResult> res(parts.size());

  for_each_chunk(parts.size(), [&](std::size_t ci) {
    DirectResult& R = res[ci];
    std::vector<std::vector<long long>> c(P.k);
    std::vector<Factorization> facs(P.k);
    for (const Poly& gg : parts[ci]) {
      const Poly f = add(P.F, mul(P.F, P.W, gg), P.b);
      ++R.visited;
      if (kind == Kind::Sg && !divides(P.F, *g, add(P.F, f, P.H[0]))) continue;
      double theta_w = 1.0;
      if (kind == Kind::S2) {
        theta_w = theta(P.F, add(P.F, f, P.H[jsel]));
        if (theta_w == 0) continue;
      }
      for (int j = 0; j < P.k; ++j) {
        facs[j] = factorize(P.F, add(P.F, f, P.H[j]), P.seed);
        c[j] = signed_divisor_degree_counts(P.F, facs[j], P.r - 1);
      }
      if (rational) {
        const Rational lam = inner_sum<Rational>(S, c, Fr);
        R.exact += Rational(static_cast<long long>(theta_w)) * lam * lam;
      }
      const double lam = inner_sum<double>(S, c, Fd);
      const double val = theta_w * lam * lam;
      if (kind != Kind::Conc) {
        R.main += val;
        continue;
      }
      // Concentration: bad if some prime factor has degree < eps n; the union bound
      // counts each (j, p) with deg p <= eps n.
      bool bad = false;
      long long pieces = 0;
      for (int j = 0; j < P.k; ++j)
        for (const auto& pp : facs[j].factors) {
          const int dp = pp.prime.degree();
          if (dp < eps_bound) bad = true;
          if (dp <= P.eps * P.n + 1e-9) ++pieces;
        }
      if (bad) {
        R.main += val;
        ++R.bad;
      }
      R.union_bound += pieces * val;
    }
  });

  DirectResult out;
  for (auto& r : res) {
    out.main.merge(r.main);
    out.union_bound.merge(r.union_bound);
    out.exact += r.exact;
    out.visited += r.visited;
    out.bad += r.bad;
  }
  return out;
}

struct ExpandedResult {
  double value = 0;
  std::uint64_t visited = 0;
};

ExpandedResult expanded_pass(const SieveParams& P, Kind kind, std::size_t jsel, const Poly* g, bool only_trivial_j) {
  const auto divs = detail::coprime_squarefree(P.F, P.W, P.r - 1);
  auto tuples = detail::weight_tuples(divs, P.weight, P.k, P.r, false, P.budget);
  if (only_trivial_j)
    std::erase_if(tuples, [&](const Tuple& t) { return t.deg[jsel] != 0; });
  check_budget("expanded tuple pairs", static_cast<std::uint64_t>(tuples.size()) * tuples.size(), P.budget);

  // S2: the f = b mod W in A_n with f + h_j prime, found by enumeration.
  std::vector<Poly> prime_f;
  if (kind == Kind::S2) {
    const MonicRange range(P.F, P.n - P.deg_W());
    check_budget("prime class enumeration", range.size(), P.budget);
    for (const Poly& gg : range) {
      const Poly f = add(P.F, mul(P.F, P.W, gg), P.b);
      if (theta(P.F, add(P.F, f, P.H[jsel])) > 0) prime_f.push_back(f);
    }
  }

  std::vector<Poly> negh(P.k);
  for (int j = 0; j < P.k; ++j) negh[j] = neg(P.F, P.H[j]);

  const std::size_t T = tuples.size();
  std::vector<CompensatedSum> part(kReductionChunks);
  for_each_chunk(kReductionChunks, [&](std::size_t ci) {
    std::vector<std::pair<Poly, Poly>> cong;
    for (std::size_t a = ci; a < T; a += kReductionChunks) {
      for (std::size_t b = 0; b < T; ++b) {
        cong.clear();
        cong.emplace_back(P.b, P.W);
        for (int j = 0; j < P.k; ++j) {
          const Poly L = lcm(P.F, tuples[a].d[j]->d, tuples[b].d[j]->d);
          cong.emplace_back(rem(P.F, negh[j], L), L);
        }
        if (kind == Kind::Sg) cong.emplace_back(rem(P.F, negh[0], *g), *g);
        const auto sol = crt(P.F, cong);
        if (!sol) continue;
        double count;
        if (kind == Kind::S2) {
          std::uint64_t hits = 0;
          for (const Poly& f : prime_f)
            if (rem(P.F, f, sol->second) == sol->first) ++hits;
          count = static_cast<double>(hits) * P.n;
        } else {
          count = static_cast<double>(count_monic_in_class(P.F, P.n, sol->first, sol->second));
        }
        if (count != 0) part[ci] += tuples[a].lambda * tuples[b].lambda * count;
      }
    }
  });
  CompensatedSum total;
  for (auto& p : part) total.merge(p);
  return {total.value(), static_cast<std::uint64_t>(T) * T};
}

SumReport finish(std::string label, Route route, double exact, double predicted, std::uint64_t visited) {
  SumReport rep;
  rep.label = std::move(label);
  rep.route = to_string(route);
  rep.exact = exact;
  rep.predicted = predicted;
  rep.rel_error = relative_error(exact, predicted);
  rep.visited = visited;
  return rep;
}

SumReport run_sum(const SieveParams& P, Kind kind, std::size_t jsel, const Poly* g, const SumOptions& opt,
                  const char* label, double predicted) {
  if (opt.route == Route::Factored) throw std::invalid_argument(std::string(label) + ": factored route applies to S3/S4 only");
  if (opt.rational && (kind != Kind::S1 || opt.route != Route::Direct))
    throw std::invalid_argument("exact rational mode is available for the direct S1 route only");
  if (opt.route == Route::Direct) {
    const auto d = direct_pass(P, kind, jsel, g, opt.rational);
    SumReport rep = finish(label, opt.route, d.main.value(), predicted, d.visited);
    if (opt.rational) {
      rep.exact_rational = d.exact;
      rep.exact = to_double(d.exact);
      rep.rel_error = relative_error(rep.exact, predicted);
    }
    return rep;
  }
  const auto e = expanded_pass(P, kind, jsel, g, opt.only_trivial_j);
  return finish(label, opt.route, e.value, predicted, e.visited);
}

}  // namespace

std::pair<SumReport, SumReport> sum_S3_S4(const SieveParams& P, Route route) {
  if (route == Route::Expanded) throw std::invalid_argument("S3/S4: routes are direct or factored");
  const Functionals fn = exact_functionals(P);
  const double base = P.w_ratio / P.r;
  std::uint64_t visited = 0;
  double s3, s4;
  if (route == Route::Factored) {
    s3 = s3s4_factored(P, false);
    s4 = s3s4_factored(P, true);
  } else {
    s3 = s3s4_direct(P, false, visited);
    s4 = s3s4_direct(P, true, visited);
  }
  return {finish("S3", route, s3, fn.alpha * std::pow(base, P.k), visited),
          finish("S4", route, s4, fn.beta * std::pow(base, P.k - 1), visited)};
}

SumReport sum_S1(const SieveParams& P, const SumOptions& opt) {
  const double pred = exact_functionals(P).alpha * P.sum_scale() * std::pow(P.r, -P.k);
  return run_sum(P, Kind::S1, 0, nullptr, opt, "S1", pred);
}

SumReport sum_S2(const SieveParams& P, std::size_t j, const SumOptions& opt) {
  if (j >= P.H.size()) throw std::invalid_argument("sum_S2: translate index out of range");
  const double pred = exact_functionals(P).beta * P.sum_scale() * std::pow(P.r, -(P.k - 1));
  SumReport rep = run_sum(P, Kind::S2, j, nullptr, opt, "S2", pred);
  rep.extras["j"] = static_cast<double>(j);
  return rep;
}

SumReport sum_Sg(const SieveParams& P, const Poly& g, const SumOptions& opt) {
  if (!is_prime_poly(P.F, g)) throw std::invalid_argument("sum_Sg: g must be a prime");
  const double dg = g.degree();
  const double pred = exact_functionals(P).gamma * dg * dg * std::pow(double(P.F.order()), -dg) *
                      std::pow(P.r, -2) * P.sum_scale() * std::pow(P.r, -P.k);
  SumReport rep = run_sum(P, Kind::Sg, 0, &g, opt, "Sg", pred);
  rep.extras["deg_g"] = dg;
  rep.extras["g_divides_W"] = divides(P.F, g, P.W) ? 1.0 : 0.0;
  return rep;
}

SumReport concentration_total(const SieveParams& P) {
  const double pred = P.eps * P.sum_scale() * std::pow(P.r, -P.k);
  const auto d = direct_pass(P, Kind::Conc, 0, nullptr, false);
  SumReport rep = finish("conc", Route::Direct, d.main.value(), pred, d.visited);
  rep.extras["union_bound"] = d.union_bound.value();
  rep.extras["slack"] = d.union_bound.value() - d.main.value();
  rep.extras["constant"] = pred != 0 ? d.main.value() / pred : std::nan("");
  rep.extras["bad_count"] = static_cast<double>(d.bad);
  return rep;
}

}  // namespace ffsieve
