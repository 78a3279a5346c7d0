#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ffsieve/sieve.hpp"

namespace ffsieve {

/// Cutoff G(x) = (1 - x)^a on [0, 1], zero beyond. The constraints G(0) = 1 and
/// int G'^2 = 1 are checked numerically at construction; among this family only a = 1
/// satisfies both, so other exponents are rejected.
class CutoffG {
 public:
  explicit CutoffG(int exponent = 1);
  int exponent() const { return a_; }
  double operator()(double x) const;
  double derivative(double x) const;
  /// int_0^inf G'(x)^2 dx, as measured at construction.
  double normalization() const { return norm_; }

 private:
  int a_;
  double norm_;
};

struct MeasureParams {
  Field F;
  TupleH H;
  int k = 1;
  int n = 1;
  double rho = 0.1;
  double eps = 0.2;
  int r = 1;  // floor(rho n)
  Poly W, b;
  CutoffG G;
  /// r phi(W) / |W|
  double scale = 1.0;
  std::optional<Rational> scale_exact;

  /// Takes W, b, H, n, eps from the sieve setup; requires 0 < rho < eps and r >= 1.
  static MeasureParams make(const SieveParams& sp, double rho, int G_exponent = 1);
};

/// Lambda_r(f) = sum_{d | f monic} mu(d) G(deg d / r), over squarefree divisors.
double gy_divisor_sum(const Field& F, const Poly& f, int r, const CutoffG& G);

/// nu_j(f) = (r phi(W)/|W|) Lambda_r(Wf + b + h_j)^2 and nu(f) = prod_j nu_j(f).
/// A zero argument (possible only when W = 1) contributes Lambda = 0.
double nu(const Poly& f, const MeasureParams& mp);

using Membership = std::function<bool(const Poly&)>;

/// (r phi(W)/|W|)^k if Wf + b is in A, else 0.
double phi_weight(const Poly& f, const MeasureParams& mp, const Membership& in_A);

/// F_{q^n} as the polynomials of degree < n, identified with their indices.
class FqnSpace {
 public:
  FqnSpace(const Field& F, int n);
  std::uint64_t size() const { return size_; }
  int degree() const { return n_; }
  const Field& field() const { return F_; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
  /// Integer multiple c * a with c taken mod the characteristic.
  std::uint64_t times(long long c, std::uint64_t a) const;

 private:
  Field F_;
  int n_;
  std::uint64_t size_;
  bool xor_add_;
};

/// sum_{i=1}^{ell} (i - j) x_i with j 1-based and xs[i-1] = x_{i, omega_i}.
std::uint64_t linear_form(const FqnSpace& V, int j, std::span<const std::uint64_t> xs);

/// Exponents c_{j, omega} in {0, 1} for j in [1, ell], omega in {0,1}^{[1,ell] \ {j}}.
/// omega is encoded as a bitmask over the indices i != j in increasing order.
class ExponentPattern {
 public:
  explicit ExponentPattern(int ell, bool fill = false);
  static ExponentPattern all_ones(int ell) { return ExponentPattern(ell, true); }
  static ExponentPattern all_zero(int ell) { return ExponentPattern(ell, false); }
  /// Bits listed for j = 1..ell, omega ascending; length ell * 2^{ell-1}.
  static ExponentPattern from_bits(int ell, const std::string& bits);

  int ell() const { return ell_; }
  std::size_t size() const { return c_.size(); }
  bool get(int j, std::uint32_t omega) const;
  void set(int j, std::uint32_t omega, bool v);
  std::string id() const;
  /// Some active form has a coefficient (i - j) divisible by p with i != j.
  bool degenerate(std::uint32_t p) const;

 private:
  int ell_;
  std::vector<std::uint8_t> c_;
};

enum class Sampler { Exhaustive, MonteCarlo };

struct EstimateReport {
  int ell = 0;
  std::string pattern_id;
  std::string mode;
  std::uint64_t samples = 0;  // points averaged over
  std::uint64_t seed = 0;
  double estimate = 0;
  double stderr_ = 0;  // 0 for exhaustive
  bool degenerate = false;
  int variables = 0;  // variables the pattern actually depends on
};

/// Mean over x_{i,b} in F_{q^n} (i in [1, ell], b in {0,1}) of
/// prod_j prod_omega nu(sum_i (i - j) x_{i, omega_i})^{c_{j, omega}}.
/// nu_table[idx] is nu at the element with that index. Exhaustive mode enumerates the
/// variables the pattern uses and requires q^{n * used} <= budget.
EstimateReport pseudorandom_estimate(const FqnSpace& V, const std::vector<double>& nu_table,
                                     const ExponentPattern& pattern, Sampler sampler,
                                     std::uint64_t samples = 0, std::uint64_t seed = kDefaultSeed,
                                     std::uint64_t budget = 1ULL << 30);

/// nu over every element of F_{q^n}, in index order.
std::vector<double> nu_table(const MeasureParams& mp);

/// Conditions (i)-(iv) of the measure construction, checked over all of F_{q^n}.
struct TransferenceCheck {
  std::uint64_t elements = 0;
  std::uint64_t in_A = 0;              // |{f : Wf + b in A}|
  bool phi_nonnegative_below_nu = true;  // 0 <= phi <= nu
  bool phi_equals_nu_on_A = true;
  bool phi_zero_off_A = true;
  double sup_phi = 0;
  double sup_bound = 0;  // n^k
  Rational mean_phi;     // exact
  Rational delta;        // a rho_eff^k / |W|, rho_eff = r / n
  bool mean_at_least_delta = false;
};

TransferenceCheck check_transference(const SieveParams& sp, const MeasureParams& mp, const DensityReport& density);

}  // namespace ffsieve
