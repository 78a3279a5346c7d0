#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ffsieve/arith.hpp"
#include "ffsieve/field.hpp"
#include "ffsieve/poly.hpp"

namespace ffsieve {

/// C_ell(f, g) = {f + g h : deg h < ell}, in enumeration order of h (q^ell values).
std::vector<Poly> config_elements(const Field& F, const Poly& f, const Poly& g, int ell);
/// Every element of C_ell(f, g) is monic irreducible.
bool is_prime_config(const Field& F, const Poly& f, const Poly& g, int ell);

enum class SearchMode { Exhaustive, Randomized };

struct SearchOptions {
  std::uint64_t budget = 1ULL << 26;  // max (f, g) pairs examined
  SearchMode mode = SearchMode::Exhaustive;
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t draws = 64;  // randomized: number of g samples
};

struct TranslateHit {
  std::size_t j;             // index into the translate set
  Poly shift;                // h_j
  std::vector<Poly> elements;  // h_j + C_ell(f, g)
  std::vector<bool> verdicts;  // irreducibility of each element
};

struct FoundConfig {
  Poly f, g;
  int ell = 0;
  std::vector<Poly> elements;  // C_ell(f, g)
  std::vector<TranslateHit> translates;
};

struct SearchReport {
  std::string kind;  // configs | twins | translates
  int n = 0;
  int ell = 0;
  int m = 0;
  std::vector<Poly> H;
  std::string mode;
  std::uint64_t seed = 0;
  std::uint64_t space_size = 0;  // (f, g) pairs in the full search space
  std::uint64_t visited = 0;
  bool partial = false;          // stopped by the budget
  std::vector<FoundConfig> found;  // sorted by (g, f)
};

/// f monic of degree n, g != 0 with deg g < n - ell + 1 (g = 1 when ell = 0): every f + gh
/// is then monic of degree n. Reports all (f, g) whose configuration is all-prime.
SearchReport find_prime_configs(const Field& F, int n, int ell, const SearchOptions& opt = {});
/// Both C_ell(f, g) and h + C_ell(f, g) all-prime; requires deg h < n.
SearchReport find_twin_configs(const Field& F, int n, int ell, const Poly& h, const SearchOptions& opt = {});
/// At least m + 1 of the translates h_j + C_ell(f, g) all-prime; requires deg h_j < n, m + 1 <= k.
SearchReport find_mplus1_translates(const Field& F, int n, const std::vector<Poly>& H, int ell, int m,
                                    const SearchOptions& opt = {});

/// Re-checks every reported translate with is_prime_poly.
bool reverify(const Field& F, const SearchReport& rep);

/// Class of the element with index idx in F_{q^n}: its top ell coefficients.
std::uint64_t class_of(const Field& F, int n, int ell, const Poly& f);
/// Class of every element of F_{q^n}, in index order.
std::vector<std::uint64_t> partition_classes(const Field& F, int n, int ell);

}  // namespace ffsieve
