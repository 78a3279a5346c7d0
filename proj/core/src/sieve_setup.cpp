#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "ffsieve/parallel.hpp"
#include "ffsieve/poly_io.hpp"
#include "ffsieve/primes.hpp"
#include "ffsieve/sieve.hpp"

namespace ffsieve {

namespace {
std::atomic<unsigned> g_workers{0};
}

void set_worker_count(unsigned n) { g_workers = n; }

unsigned worker_count() {
  const unsigned n = g_workers.load();
  if (n) return n;
  return std::max(1u, std::thread::hardware_concurrency());
}

TupleH::TupleH(std::vector<Poly> elements) : h_(std::move(elements)) {
  if (h_.empty()) throw std::invalid_argument("TupleH: empty set");
  std::sort(h_.begin(), h_.end());
  if (std::adjacent_find(h_.begin(), h_.end()) != h_.end())
    throw std::invalid_argument("TupleH: elements must be distinct");
}

int TupleH::max_degree() const { return h_.empty() ? kNegInf : h_.back().degree(); }

TupleH TupleH::translate(const Field& F, const Poly& c) const {
  std::vector<Poly> out;
  out.reserve(h_.size());
  for (const auto& h : h_) out.push_back(add(F, h, c));
  return TupleH(std::move(out));
}

Admissibility is_admissible(const Field& F, const TupleH& H) {
  const std::uint64_t k = H.size(), q = F.order();
  for (int d = 1;; ++d) {
    const std::uint64_t size = checked_pow(q, d);
    if (size > k) break;
    for (const Poly& p : *enumerate_primes(F, d)) {
      std::set<std::uint64_t> hit;
      for (const Poly& h : H) hit.insert(index_of(F, rem(F, h, p)));
      if (hit.size() == size) return {false, p};
    }
  }
  return {true, std::nullopt};
}

Poly build_W(const Field& F, int w) {
  if (w < 1) throw std::invalid_argument("build_W: w must be >= 1");
  Poly W = Poly::one();
  for (const Poly& p : primes_up_to(F, w - 1)) W = mul(F, W, p);
  return W;
}

Poly choose_b(const Field& F, const Poly& W, const TupleH& H) {
  if (W.is_zero() || !W.is_monic()) throw std::invalid_argument("choose_b: W must be monic");
  std::vector<std::pair<Poly, Poly>> congruences;
  for (const auto& pp : factorize(F, W).factors) {
    const Poly& p = pp.prime;
    std::set<std::uint64_t> excluded;
    for (const Poly& h : H) excluded.insert(index_of(F, rem(F, neg(F, h), p)));
    const std::uint64_t size = checked_pow(F.order(), p.degree());
    std::uint64_t c = 0;
    while (c < size && excluded.count(c)) ++c;
    if (c == size)
      throw NoValidResidue("choose_b: every residue mod " + to_string(F, p) + " is excluded", p);
    congruences.emplace_back(from_index(F, c), p);
  }
  if (congruences.empty()) return Poly();
  const auto sol = crt(F, congruences);
  if (!sol) throw std::logic_error("choose_b: CRT over distinct primes failed");
  return sol->first;
}

SieveParams SieveParams::make(const Field& F, TupleH H, int m, double eta, int w, double eps, int n, int a,
                              std::uint64_t budget, std::uint64_t seed) {
  SieveParams P;
  P.F = F;
  P.k = static_cast<int>(H.size());
  if (P.k < 1) throw std::invalid_argument("SieveParams: H must be non-empty");
  if (m < 0 || m >= P.k) throw std::invalid_argument("SieveParams: need 0 <= m < k");
  if (!(eta > 0 && eta < 0.5)) throw std::invalid_argument("SieveParams: eta must lie in (0, 1/2)");
  if (!(eps > 0 && eps < eta)) throw std::invalid_argument("SieveParams: eps must lie in (0, eta)");
  if (w < 1) throw std::invalid_argument("SieveParams: w must be >= 1");
  if (H.max_degree() >= w) throw std::invalid_argument("SieveParams: w must exceed deg h_k");
  if (n < 1) throw std::invalid_argument("SieveParams: n must be >= 1");
  P.r = static_cast<int>(std::floor(eta * n + 1e-9));
  if (P.r < 1) throw std::invalid_argument("SieveParams: r = floor(eta n) must be >= 1");
  if (2 * P.r >= n) throw std::invalid_argument("SieveParams: need 2r < n");
  P.H = std::move(H);
  P.m = m;
  P.eta = eta;
  P.w = w;
  P.eps = eps;
  P.n = n;
  P.weight = WeightFn(P.k, a);
  P.budget = budget;
  P.seed = seed;
  P.W = build_W(F, w);
  if (P.W.degree() > n) throw std::invalid_argument("SieveParams: deg W exceeds n");
  P.b = choose_b(F, P.W, P.H);

  const double q = F.order();
  double ratio = 1.0;
  for (int d = 1; d < w; ++d) ratio *= std::pow(1.0 - std::pow(q, -d), -to_double(Rational(prime_count(F.order(), d))));
  P.w_ratio = ratio;
  try {
    P.w_norm = checked_pow(F.order(), P.W.degree());
    P.w_phi = totient(F, P.W);
  } catch (const std::overflow_error&) {
    P.w_norm.reset();
    P.w_phi.reset();
  }
  return P;
}

double SieveParams::sum_scale() const {
  return std::pow(w_ratio, k) * std::pow(static_cast<double>(F.order()), n - deg_W());
}

double weight_lambda(std::span<const Poly> d, const SieveParams& P) {
  if (d.size() != static_cast<std::size_t>(P.k)) throw std::invalid_argument("weight_lambda: need k divisors");
  std::vector<int> deg(d.size());
  int sign = 1;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i].is_zero() || !d[i].is_monic()) throw std::invalid_argument("weight_lambda: divisors must be monic");
    const int mu = moebius(P.F, d[i]);
    if (mu == 0) return 0.0;
    sign *= mu;
    deg[i] = d[i].degree();
  }
  return sign * P.weight.at_degrees(deg, P.r);
}

std::string to_string(Route r) {
  switch (r) {
    case Route::Direct: return "direct";
    case Route::Expanded: return "expanded";
    case Route::Factored: return "factored";
  }
  return "direct";
}

Route parse_route(const std::string& s) {
  if (s == "direct") return Route::Direct;
  if (s == "expanded") return Route::Expanded;
  if (s == "factored") return Route::Factored;
  throw std::invalid_argument("unknown route '" + s + "'");
}

double relative_error(double exact, double predicted) {
  if (predicted == 0) return std::nan("");
  return std::abs(exact - predicted) / std::abs(predicted);
}

bool in_P_eps(const SieveParams& P, const Poly& f) {
  const double bound = P.eps * P.n - 1e-9;
  for (const Poly& h : P.H) {
    const Poly x = add(P.F, f, h);
    if (x.is_zero()) return false;
    const int lpd = least_prime_degree(P.F, x);
    if (lpd != kPosInf && lpd < bound) return false;
  }
  return true;
}

}  // namespace ffsieve
