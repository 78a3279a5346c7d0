#include "ffsieve/primes.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "ffsieve/arith.hpp"
#include "ffsieve/poly_io.hpp"

namespace ffsieve {

PrimeTable compute_primes(const Field& F, int n) {
  if (n < 1) throw std::invalid_argument("enumerate_primes: degree must be >= 1");
  PrimeTable out;
  for (const Poly& f : enumerate_monic(F, n))
    if (is_irreducible(F, f)) out.push_back(f);
  return out;
}

PrimeTableCache::PrimeTableCache(std::optional<std::filesystem::path> dir) : dir_(std::move(dir)) {}

PrimeTableCache& PrimeTableCache::global() {
  static PrimeTableCache cache = [] {
    const char* env = std::getenv("FFSIEVE_CACHE_DIR");
    if (env && *env) return PrimeTableCache(std::filesystem::path(env));
    return PrimeTableCache();
  }();
  return cache;
}

std::filesystem::path PrimeTableCache::file_for(const Field& F, int n) const {
  const std::string name = "primes_q" + std::to_string(F.order()) + "_n" + std::to_string(n) + ".txt";
  return dir_ ? *dir_ / name : std::filesystem::path(name);
}

std::shared_ptr<const PrimeTable> PrimeTableCache::load(const Field& F, int n) const {
  if (!dir_) return nullptr;
  std::ifstream in(file_for(F, n));
  if (!in) return nullptr;
  std::string header;
  if (!std::getline(in, header)) return nullptr;
  unsigned long long q = 0, count = 0;
  int nn = 0;
  if (std::sscanf(header.c_str(), "q=%llu n=%d count=%llu", &q, &nn, &count) != 3) return nullptr;
  if (q != F.order() || nn != n) return nullptr;
  auto table = std::make_shared<PrimeTable>();
  table->reserve(count);
  std::string line;
  try {
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      Poly f = parse_poly(F, line);
      if (f.degree() != n || !f.is_monic()) return nullptr;
      table->push_back(std::move(f));
    }
  } catch (const std::invalid_argument&) {
    return nullptr;
  }
  if (table->size() != count) return nullptr;
  return table;
}

void PrimeTableCache::store(const Field& F, int n, const PrimeTable& table) const {
  if (!dir_) return;
  std::error_code ec;
  std::filesystem::create_directories(*dir_, ec);
  const auto final_path = file_for(F, n);
  auto tmp = final_path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return;  // cache is best-effort
    out << "q=" << F.order() << " n=" << n << " count=" << table.size() << "\n";
    for (const auto& f : table) out << to_string(F, f) << "\n";
  }
  std::filesystem::rename(tmp, final_path, ec);
}

std::shared_ptr<const PrimeTable> PrimeTableCache::get(const Field& F, int n) {
  const Key key{F.characteristic(), F.degree(), n};
  {
    std::shared_lock lock(mu_);
    if (auto it = tables_.find(key); it != tables_.end()) return it->second;
  }
  std::unique_lock lock(mu_);
  if (auto it = tables_.find(key); it != tables_.end()) return it->second;
  auto table = load(F, n);
  if (!table) {
    auto fresh = std::make_shared<PrimeTable>(compute_primes(F, n));
    store(F, n, *fresh);
    table = std::move(fresh);
  }
  tables_.emplace(key, table);
  return table;
}

std::shared_ptr<const PrimeTable> enumerate_primes(const Field& F, int n) {
  if (n < 1) throw std::invalid_argument("enumerate_primes: degree must be >= 1");
  return PrimeTableCache::global().get(F, n);
}

std::vector<Poly> primes_up_to(const Field& F, int max_degree) {
  std::vector<Poly> out;
  for (int d = 1; d <= max_degree; ++d) {
    const auto t = enumerate_primes(F, d);
    out.insert(out.end(), t->begin(), t->end());
  }
  return out;
}

}  // namespace ffsieve
