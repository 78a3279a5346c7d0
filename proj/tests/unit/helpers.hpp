#pragma once

#include <random>
#include <string>

#include "ffsieve/field.hpp"
#include "ffsieve/poly.hpp"
#include "ffsieve/poly_io.hpp"

namespace fft {

using namespace ffsieve;

inline Poly P(const Field& F, const std::string& s) { return parse_poly(F, s); }

inline Poly random_poly(const Field& F, std::mt19937_64& rng, int max_deg, bool monic = false) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<Elem> coef(0, F.order() - 1);
  const int d = deg(rng);
  std::vector<Elem> c(d + 1);
  for (auto& x : c) x = coef(rng);
  if (monic || c.back() == 0) c.back() = monic ? 1 : 1 + coef(rng) % (F.order() - 1);
  return Poly(c);
}

// Brute-force irreducibility: no monic divisor of degree 1..deg/2.
inline bool brute_irreducible(const Field& F, const Poly& f) {
  if (f.degree() < 1) return false;
  for (int d = 1; 2 * d <= f.degree(); ++d)
    for (const Poly& g : enumerate_monic(F, d))
      if (rem(F, f, g).is_zero()) return false;
  return true;
}

}  // namespace fft
