#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <tuple>
#include <vector>

#include "ffsieve/field.hpp"
#include "ffsieve/poly.hpp"

namespace ffsieve {

using PrimeTable = std::vector<Poly>;

/// Per-(q, n) tables of monic irreducibles, kept in memory and optionally on disk.
///
/// Disk format, one file `primes_q<q>_n<n>.txt` per table:
///   line 1: `q=<q> n=<n> count=<count>`
///   then one prime per line in canonical text, enumeration order.
/// Files that fail to parse or disagree with their header are regenerated.
/// Safe for concurrent readers; the first builder of a table holds an exclusive lock.
class PrimeTableCache {
 public:
  explicit PrimeTableCache(std::optional<std::filesystem::path> dir = std::nullopt);

  /// Process-wide cache; its directory comes from FFSIEVE_CACHE_DIR when set.
  static PrimeTableCache& global();

  std::shared_ptr<const PrimeTable> get(const Field& F, int n);
  const std::optional<std::filesystem::path>& directory() const { return dir_; }
  std::filesystem::path file_for(const Field& F, int n) const;

 private:
  using Key = std::tuple<std::uint32_t, unsigned, int>;
  std::shared_ptr<const PrimeTable> load(const Field& F, int n) const;
  void store(const Field& F, int n, const PrimeTable& table) const;

  std::optional<std::filesystem::path> dir_;
  mutable std::shared_mutex mu_;
  std::map<Key, std::shared_ptr<const PrimeTable>> tables_;
};

/// Primes of degree n by direct irreducibility testing of every monic polynomial.
PrimeTable compute_primes(const Field& F, int n);

/// enumerate_primes: the primes of degree n in enumeration order, via the global cache.
std::shared_ptr<const PrimeTable> enumerate_primes(const Field& F, int n);

/// Primes of degree <= max_degree, increasing degree.
std::vector<Poly> primes_up_to(const Field& F, int max_degree);

}  // namespace ffsieve
