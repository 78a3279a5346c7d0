#include <cmath>

#include "ffsieve/parallel.hpp"
#include "ffsieve/sieve.hpp"
#include "sieve_internal.hpp"

namespace ffsieve {

DensityReport density_experiment(const SieveParams& P) {
  const MonicRange range(P.F, P.n - P.deg_W());
  check_budget("density experiment", range.size(), P.budget);
  const detail::StateSpace S(P.k, P.r);
  std::vector<double> Fd(S.size());
  for (std::size_t s = 0; s < S.size(); ++s) Fd[s] = P.weight.at_degrees(S.state(s), P.r);
  const double eps_bound = P.eps * P.n - 1e-9;

  struct Part {
    std::vector<Poly> members;
    std::uint64_t in_P = 0;
    CompensatedSum main;
  };
  const auto parts = range.split(kReductionChunks);
  std::vector<Part> res(parts.size());
  for_each_chunk(parts.size(), [&](std::size_t ci) {
    Part& R = res[ci];
    std::vector<std::vector<long long>> c(P.k);
    for (const Poly& g : parts[ci]) {
      const Poly f = add(P.F, mul(P.F, P.W, g), P.b);
      bool good = true;
      int primes = 0, theta_sum = 0;
      for (int j = 0; j < P.k; ++j) {
        const Factorization fac = factorize(P.F, add(P.F, f, P.H[j]), P.seed);
        for (const auto& pp : fac.factors)
          if (pp.prime.degree() < eps_bound) good = false;
        if (fac.factors.size() == 1 && fac.factors[0].multiplicity == 1 && fac.unit == 1) {
          ++primes;
          theta_sum += fac.factors[0].prime.degree();
        }
        c[j] = signed_divisor_degree_counts(P.F, fac, P.r - 1);
      }
      if (!good) continue;
      ++R.in_P;
      double lam = 0;
      for (std::size_t s = 0; s < S.size(); ++s) {
        long long prod = 1;
        for (int j = 0; j < P.k && prod; ++j) prod *= c[j][S.state(s)[j]];
        if (prod) lam += prod * Fd[s];
      }
      R.main += (theta_sum - static_cast<double>(P.m) * P.n) * lam * lam;
      if (primes >= P.m + 1) R.members.push_back(f);
    }
  });

  DensityReport rep;
  CompensatedSum main;
  for (auto& r : res) {
    rep.in_P_eps += r.in_P;
    main.merge(r.main);
    rep.members.insert(rep.members.end(), r.members.begin(), r.members.end());
  }
  rep.candidates = range.size();
  rep.count_A = rep.members.size();
  rep.maincount = main.value();
  rep.measured_a = rep.count_A * std::pow(double(P.n), P.k) / P.sum_scale();
  if (P.w_norm && P.w_phi) {
    using boost::multiprecision::pow;
    const BigInt num = BigInt(rep.count_A) * pow(BigInt(*P.w_phi), P.k) * pow(BigInt(P.n), P.k);
    const BigInt den = pow(BigInt(*P.w_norm), P.k - 1) * pow(BigInt(P.F.order()), P.n);
    rep.measured_a_exact = Rational(num, den);
    rep.measured_a = to_double(*rep.measured_a_exact);
  }
  return rep;
}

}  // namespace ffsieve
