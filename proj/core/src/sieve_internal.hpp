#pragma once

#include <cstdint>
#include <vector>

#include "ffsieve/sieve.hpp"

namespace ffsieve::detail {

/// Degree vectors (D_1, ..., D_slots) with sum < r, indexed densely.
class StateSpace {
 public:
  StateSpace(int slots, int r);
  std::size_t size() const { return states_.size(); }
  const std::vector<int>& state(std::size_t s) const { return states_[s]; }
  /// Index of state s with d added to coordinate j, or -1 when it leaves the simplex.
  int shift(int s, int j, int d) const;

 private:
  std::size_t code(const std::vector<int>& v) const;
  int slots_;
  int r_;
  std::vector<std::vector<int>> states_;
  std::vector<int> lookup_;
};

struct Divisor {
  Poly d;
  int deg;
  int mu;
  std::uint64_t phi;
};

/// Squarefree monic d with gcd(d, W) = 1 and deg d <= max_degree, grouped by degree.
std::vector<std::vector<Divisor>> coprime_squarefree(const Field& F, const Poly& W, int max_degree);

struct Tuple {
  std::vector<const Divisor*> d;
  std::vector<int> deg;
  double lambda = 0;
};

/// All tuples (d_1..d_slots) from divs with nonzero weight; with leading_zero the
/// weight is evaluated at (0, deg d_1, ...).
std::vector<Tuple> weight_tuples(const std::vector<std::vector<Divisor>>& divs, const WeightFn& F, int slots,
                                 int r, bool leading_zero, std::uint64_t budget);

}  // namespace ffsieve::detail
