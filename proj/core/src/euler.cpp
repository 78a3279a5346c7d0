#include <cmath>
#include <limits>

#include "ffsieve/sieve.hpp"

namespace ffsieve {

namespace {

using cd = std::complex<double>;

// |p| K_p(x, x') for deg p = d.
cd kappa(int d, int r, double x, double xp) {
  const double s = static_cast<double>(d) / r;
  const cd i(0, 1);
  return -std::exp(-s * (1.0 + i * x)) - std::exp(-s * (1.0 + i * xp)) + std::exp(-s * (2.0 + i * x + i * xp));
}

}  // namespace

std::complex<double> euler_K_p(std::uint64_t q, int d, int r, double x, double xp) {
  if (d < 1 || r < 1) throw std::invalid_argument("euler_K_p: need d >= 1 and r >= 1");
  return kappa(d, r, x, xp) * std::pow(static_cast<double>(q), -d);
}

std::complex<double> euler_K(const SieveParams& P, double x, double xp, int D) {
  if (D < P.w) throw std::invalid_argument("euler_K: truncation degree must be >= w");
  const std::uint64_t q = P.F.order();
  cd log_sum = 0.0;
  for (int d = std::max(P.w, 1); d <= D; ++d) {
    const double density = prime_density(q, d);
    const cd kap = kappa(d, P.r, x, xp);
    const cd z = kap * std::pow(static_cast<double>(q), -d);
    log_sum += density * kap * log1p_over(z);
  }
  return std::exp(log_sum);
}

std::complex<double> euler_K_asymptotic(const SieveParams& P, double x, double xp) {
  const cd i(0, 1);
  return (P.w_ratio / P.r) * (1.0 + i * x) * (1.0 + i * xp) / (2.0 + i * x + i * xp);
}

double euler_K_tail_bound(const SieveParams& P, int D) {
  // pi(d) <= q^d / d and |K_p| <= 3 e^{-d/r} q^{-d}; |log(1 + z)| <= 2|z| needs |z| <= 1/2.
  if (3.0 * std::pow(static_cast<double>(P.F.order()), -(D + 1)) > 0.5)
    return std::numeric_limits<double>::infinity();
  const double decay = std::exp(-1.0 / P.r);
  return 6.0 * std::exp(-(D + 1.0) / P.r) / ((D + 1.0) * (1.0 - decay));
}

}  // namespace ffsieve
