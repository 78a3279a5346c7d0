#include "ffsieve/zeta.hpp"

#include <cmath>
#include <stdexcept>

#include "ffsieve/arith.hpp"

namespace ffsieve {

std::map<int, int> prime_degree_profile(const Field& F, const Poly& W) {
  std::map<int, int> out;
  if (W.is_zero()) throw std::invalid_argument("prime_degree_profile: zero modulus");
  for (const auto& pp : factorize(F, W).factors) ++out[pp.prime.degree()];
  return out;
}

namespace {

using cd = std::complex<double>;

cd closed_form(std::uint64_t q, cd s) {
  const cd x = std::exp((1.0 - s) * std::log(static_cast<double>(q)));
  if (std::abs(1.0 - x) < 1e-14) throw std::domain_error("zeta: pole at q^{1-s} = 1");
  return 1.0 / (1.0 - x);
}

cd truncated_product(std::uint64_t q, cd s, int D, const std::map<int, int>& excluded) {
  if (s.real() <= 1.0) throw std::invalid_argument("zeta: truncated Euler product needs Re(s) > 1");
  if (D < 0) throw std::invalid_argument("zeta: truncation degree must be >= 0");
  const double lq = std::log(static_cast<double>(q));
  cd log_sum = 0.0;
  for (int d = 1; d <= D; ++d) {
    double density = prime_density(q, d);
    if (auto it = excluded.find(d); it != excluded.end()) density -= it->second * std::exp(-d * lq);
    if (density <= 0.0) continue;
    // -N_d log(1 - q^{-ds}) = N_d q^{-d} * q^{d(1-s)} * log1p(z)/z with z = -q^{-ds}
    const cd z = -std::exp(-static_cast<double>(d) * s * lq);
    const cd scaled = std::exp(static_cast<double>(d) * (1.0 - s) * lq);
    log_sum += density * scaled * log1p_over(z);
  }
  return std::exp(log_sum);
}

}  // namespace

ZetaValue zeta(std::uint64_t q, std::complex<double> s, std::optional<int> truncation) {
  if (q < 2) throw std::invalid_argument("zeta: q must be >= 2");
  if (!truncation) return {s, closed_form(q, s), std::nullopt};
  return {s, truncated_product(q, s, *truncation, {}), truncation};
}

ZetaValue zeta_w(const Field& F, std::complex<double> s, const Poly& W, std::optional<int> truncation) {
  const auto profile = prime_degree_profile(F, W);
  const std::uint64_t q = F.order();
  if (!truncation) {
    cd v = closed_form(q, s);
    const double lq = std::log(static_cast<double>(q));
    for (auto [d, count] : profile) {
      const cd factor = 1.0 - std::exp(-static_cast<double>(d) * s * lq);
      for (int i = 0; i < count; ++i) v *= factor;
    }
    return {s, v, std::nullopt};
  }
  return {s, truncated_product(q, s, *truncation, profile), truncation};
}

double zeta_truncation_bound(std::uint64_t q, double re_s, int D) {
  const double lq = std::log(static_cast<double>(q));
  double bound = 0.0;
  for (int d = D + 1; d <= D + 4000; ++d) {
    const double term = 2.0 * std::exp(d * (1.0 - re_s) * lq) / d;
    bound += term;
    if (term < 1e-300) break;
  }
  return bound;
}

}  // namespace ffsieve
