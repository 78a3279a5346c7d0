#pragma once

#include <complex>
#include <map>
#include <optional>

#include "ffsieve/field.hpp"
#include "ffsieve/poly.hpp"

namespace ffsieve {

struct ZetaValue {
  std::complex<double> s;
  std::complex<double> value;
  std::optional<int> truncation;  // nullopt: closed form
  bool closed() const { return !truncation.has_value(); }
};

/// Number of distinct primes dividing W, by degree.
std::map<int, int> prime_degree_profile(const Field& F, const Poly& W);

/// zeta(s) = sum over monic f of |f|^{-s}.
/// Closed form 1/(1 - q^{1-s}) when truncation is nullopt (throws std::domain_error at
/// the poles q^{1-s} = 1); otherwise the Euler product over primes of degree <= D,
/// which requires Re(s) > 1.
ZetaValue zeta(std::uint64_t q, std::complex<double> s, std::optional<int> truncation = std::nullopt);

/// zeta_W: the Euler product with the primes dividing W removed. The closed variant is
/// zeta(s) * prod_{p | W} (1 - |p|^{-s}).
ZetaValue zeta_w(const Field& F, std::complex<double> s, const Poly& W,
                 std::optional<int> truncation = std::nullopt);

/// Tail bound for truncating log zeta_W at degree D: sum_{d > D} (1/d) q^{d(1 - Re s)} * 2.
double zeta_truncation_bound(std::uint64_t q, double re_s, int D);

}  // namespace ffsieve
