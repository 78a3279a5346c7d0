#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "ffsieve/poly.hpp"

namespace ffsieve {

/// An enumeration would visit more objects than its configured budget allows.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t required, std::uint64_t budget)
      : std::runtime_error(what + ": needs " + std::to_string(required) + ", budget " + std::to_string(budget)),
        required_(required),
        budget_(budget) {}
  std::uint64_t required() const { return required_; }
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

/// Every residue modulo `prime` is excluded by some -h_j; no b with gcd(W, b + h_j) = 1.
class NoValidResidue : public std::runtime_error {
 public:
  NoValidResidue(const std::string& what, Poly prime) : std::runtime_error(what), prime_(std::move(prime)) {}
  const Poly& prime() const { return prime_; }

 private:
  Poly prime_;
};

inline void check_budget(const char* what, std::uint64_t required, std::uint64_t budget) {
  if (required > budget) throw BudgetExceeded(what, required, budget);
}

}  // namespace ffsieve
