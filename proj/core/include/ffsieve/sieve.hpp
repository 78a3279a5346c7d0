#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ffsieve/arith.hpp"
#include "ffsieve/errors.hpp"
#include "ffsieve/field.hpp"
#include "ffsieve/numeric.hpp"
#include "ffsieve/poly.hpp"
#include "ffsieve/weight.hpp"

namespace ffsieve {

inline constexpr std::uint64_t kDefaultBudget = 1ULL << 26;

/// A finite set {h_1, ..., h_k} of polynomials, sorted by (degree, enumeration order).
class TupleH {
 public:
  TupleH() = default;
  /// Throws std::invalid_argument on duplicates or an empty set.
  TupleH(std::vector<Poly> elements);

  std::size_t size() const { return h_.size(); }
  const Poly& operator[](std::size_t i) const { return h_[i]; }
  const std::vector<Poly>& elements() const { return h_; }
  /// deg h_k; kNegInf for H = {0}.
  int max_degree() const;
  TupleH translate(const Field& F, const Poly& c) const;

  auto begin() const { return h_.begin(); }
  auto end() const { return h_.end(); }

 private:
  std::vector<Poly> h_;
};

struct Admissibility {
  bool admissible = true;
  std::optional<Poly> witness;  // a prime whose residues are all hit by H
};

/// Checks every prime p with |p| <= k; larger primes cannot be covered by k residues.
Admissibility is_admissible(const Field& F, const TupleH& H);

/// Product of all primes of degree < w.
Poly build_W(const Field& F, int w);

/// Least residue b mod W with gcd(W, b + h_j) = 1 for all j: per prime factor p of W the
/// least residue (enumeration order) outside {-h_j mod p}, combined by CRT.
/// Throws NoValidResidue naming the first prime whose residues are all excluded.
Poly choose_b(const Field& F, const Poly& W, const TupleH& H);

/// Immutable sieve setup. Construct with SieveParams::make, which validates
/// 0 < eps < eta < 1/2, w > deg h_k, r = floor(eta n) >= 1, 2r < n, and that b exists.
struct SieveParams {
  Field F;
  TupleH H;
  int m = 0;
  int k = 1;
  double eta = 0.4;
  int w = 2;
  double eps = 0.2;
  int n = 10;
  int r = 4;
  Poly W;
  Poly b;
  WeightFn weight{1, 1};
  std::uint64_t budget = kDefaultBudget;
  std::uint64_t seed = kDefaultSeed;

  /// |W| / phi(W) = prod_{deg p < w} (1 - q^{-deg p})^{-1}
  double w_ratio = 1.0;
  /// |W| and phi(W) when they fit in 64 bits.
  std::optional<std::uint64_t> w_norm, w_phi;

  static SieveParams make(const Field& F, TupleH H, int m, double eta, int w, double eps, int n, int a,
                          std::uint64_t budget = kDefaultBudget, std::uint64_t seed = kDefaultSeed);

  int deg_W() const { return W.degree(); }
  /// |W|^{k-1} phi(W)^{-k} |A_n|, the common scale of S1, S2 and S_g.
  double sum_scale() const;
};

/// lambda_{d_1..d_k} = prod mu(d_j) * F(deg d_1 / r, ..., deg d_k / r).
double weight_lambda(std::span<const Poly> d, const SieveParams& P);

enum class Route { Direct, Expanded, Factored };
std::string to_string(Route r);
Route parse_route(const std::string& s);

struct SumReport {
  std::string label;  // S1 S2 S3 S4 Sg conc
  std::string route;
  double exact = 0;
  double predicted = 0;
  double rel_error = 0;  // NaN when predicted = 0
  std::optional<Rational> exact_rational;
  std::map<std::string, double> extras;
  std::map<std::string, std::string> notes;
  std::uint64_t visited = 0;
};

/// |exact - predicted| / |predicted|, NaN when predicted = 0.
double relative_error(double exact, double predicted);

struct SumOptions {
  Route route = Route::Direct;
  /// Accumulate in exact rationals (DIRECT route of S1 only).
  bool rational = false;
  /// S2 EXPANDED: keep only tuples with d_j = e_j = 1.
  bool only_trivial_j = false;
};

/// S3 = sum' lambda_d lambda_e / prod |[d_j, e_j]| and
/// S4 = sum' lambda_d lambda_e / prod_{i != j} phi([d_i, e_i]) with d_j = e_j = 1,
/// over squarefree tuples coprime to W with the lcms pairwise coprime.
/// Routes: Direct (tuple enumeration) or Factored (per-degree Euler recursion).
std::pair<SumReport, SumReport> sum_S3_S4(const SieveParams& P, Route route = Route::Factored);

/// S1 = sum_{f in A_n, f = b mod W} (sum_{d_j | f + h_j} lambda_d)^2.
SumReport sum_S1(const SieveParams& P, const SumOptions& opt = {});
/// S2^{(j)}: the S1 summand weighted by theta(f + h_j). j is 0-based.
SumReport sum_S2(const SieveParams& P, std::size_t j, const SumOptions& opt = {});
/// S_g: the S1 sum restricted to g | f + h_1.
SumReport sum_Sg(const SieveParams& P, const Poly& g, const SumOptions& opt = {});

/// Sum of the S1 summand over f outside P_eps(H), with the union bound
/// sum_j sum_{g prime, deg g <= eps n} S_g^{(j)} and its slack in extras.
SumReport concentration_total(const SieveParams& P);

/// K_p(x, x') for a prime of degree d, including the 1/|p| factor:
/// -|p|^{-1-(1+ix)/(r log q)} - |p|^{-1-(1+ix')/(r log q)} + |p|^{-1-(2+ix+ix')/(r log q)}.
std::complex<double> euler_K_p(std::uint64_t q, int d, int r, double x, double xp);
/// prod_{w <= deg p <= D} (1 + K_p(x, x')).
std::complex<double> euler_K(const SieveParams& P, double x, double xp, int D);
/// (|W| / (phi(W) r)) (1 + ix)(1 + ix') / (2 + ix + ix').
std::complex<double> euler_K_asymptotic(const SieveParams& P, double x, double xp);
/// Bound on |log K_D' - log K_D| for any D' > D.
double euler_K_tail_bound(const SieveParams& P, int D);

struct DensityReport {
  std::uint64_t count_A = 0;       // |A|
  std::uint64_t candidates = 0;    // f in A_n with f = b mod W
  std::uint64_t in_P_eps = 0;      // of those, f in P_eps(H)
  double maincount = 0;            // sum over P_eps of (sum_j theta(f + h_j) - m n) * (sum lambda)^2
  double measured_a = 0;           // |A| phi(W)^k n^k / (|W|^{k-1} |A_n|)
  std::optional<Rational> measured_a_exact;
  std::vector<Poly> members;       // A in enumeration order
};

DensityReport density_experiment(const SieveParams& P);

/// f in P_eps(H): every prime factor of prod (f + h_j) has degree >= eps n.
bool in_P_eps(const SieveParams& P, const Poly& f);

}  // namespace ffsieve
