#include "ffsieve/search.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "ffsieve/parallel.hpp"
#include "ffsieve/primes.hpp"

namespace ffsieve {

std::vector<Poly> config_elements(const Field& F, const Poly& f, const Poly& g, int ell) {
  if (ell < 0) throw std::invalid_argument("config_elements: ell must be >= 0");
  const std::uint64_t count = checked_pow(F.order(), ell);
  std::vector<Poly> out;
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) out.push_back(add(F, f, mul(F, g, from_index(F, i))));
  return out;
}

bool is_prime_config(const Field& F, const Poly& f, const Poly& g, int ell) {
  for (const Poly& x : config_elements(F, f, g, ell))
    if (!is_prime_poly(F, x)) return false;
  return true;
}

namespace {

struct Engine {
  const Field& F;
  int n, ell, m;
  std::vector<Poly> H;
  std::unordered_set<Poly, PolyHash> primes;
  std::vector<Poly> hs;  // deg h < ell

  Engine(const Field& F_, int n_, int ell_, int m_, std::vector<Poly> H_) : F(F_), n(n_), ell(ell_), m(m_), H(std::move(H_)) {
    const auto table = enumerate_primes(F, n);
    primes.insert(table->begin(), table->end());
    const std::uint64_t count = checked_pow(F.order(), ell);
    for (std::uint64_t i = 0; i < count; ++i) hs.push_back(from_index(F, i));
  }

  // Scans every monic f of degree n against one g.
  void scan(const Poly& g, std::vector<FoundConfig>& out) const {
    std::vector<Poly> gh;
    for (const Poly& h : hs) gh.push_back(mul(F, g, h));
    for (const Poly& f : enumerate_monic(F, n)) {
      std::vector<std::size_t> J;
      for (std::size_t j = 0; j < H.size(); ++j) {
        const Poly base = add(F, f, H[j]);
        bool all = true;
        for (const Poly& x : gh)
          if (!primes.count(add(F, base, x))) {
            all = false;
            break;
          }
        if (all) J.push_back(j);
      }
      if (static_cast<int>(J.size()) < m + 1) continue;
      FoundConfig fc;
      fc.f = f;
      fc.g = g;
      fc.ell = ell;
      fc.elements = config_elements(F, f, g, ell);
      for (std::size_t j : J) {
        TranslateHit t;
        t.j = j;
        t.shift = H[j];
        t.elements = config_elements(F, add(F, f, H[j]), g, ell);
        for (const Poly& x : t.elements) t.verdicts.push_back(is_irreducible(F, x));
        fc.translates.push_back(std::move(t));
      }
      out.push_back(std::move(fc));
    }
  }
};

SearchReport run(const Field& F, const std::string& kind, int n, int ell, int m, std::vector<Poly> H,
                 const SearchOptions& opt) {
  if (n < 1) throw std::invalid_argument("search: n must be >= 1");
  if (ell < 0 || ell > n) throw std::invalid_argument("search: need 0 <= ell <= n");
  if (H.empty()) throw std::invalid_argument("search: translate set is empty");
  if (m < 0 || m + 1 > static_cast<int>(H.size())) throw std::invalid_argument("search: need m + 1 <= k");
  for (const Poly& h : H)
    if (h.degree() >= n) throw std::invalid_argument("search: translates must have degree < n");

  SearchReport rep;
  rep.kind = kind;
  rep.n = n;
  rep.ell = ell;
  rep.m = m;
  rep.H = H;
  rep.seed = opt.seed;
  rep.mode = opt.mode == SearchMode::Exhaustive ? "exhaustive" : "randomized";

  const std::uint64_t fcount = checked_pow(F.order(), n);
  // g ranges over nonzero polynomials of degree < n - ell + 1; a single g = 1 when ell = 0.
  const std::uint64_t gcount = ell == 0 ? 1 : checked_pow(F.order(), n - ell + 1) - 1;
  rep.space_size = gcount * fcount;

  std::vector<Poly> gs;
  if (ell == 0) {
    gs.push_back(Poly::one());
  } else if (opt.mode == SearchMode::Exhaustive) {
    for (std::uint64_t i = 1; i <= gcount; ++i) gs.push_back(from_index(F, i));
  } else {
    std::mt19937_64 rng(opt.seed);
    const int max_deg = n - ell;
    std::vector<double> w;
    for (int d = 0; d <= max_deg; ++d) w.push_back(std::ldexp(1.0, -d));
    std::discrete_distribution<int> pick_deg(w.begin(), w.end());
    std::set<Poly> chosen;
    const std::uint64_t q = F.order();
    for (std::uint64_t s = 0; s < opt.draws; ++s) {
      const int d = pick_deg(rng);
      std::vector<Elem> c(d + 1);
      for (int i = 0; i < d; ++i) c[i] = static_cast<Elem>(rng() % q);
      c[d] = static_cast<Elem>(1 + rng() % (q - 1));
      chosen.insert(Poly(c));
    }
    gs.assign(chosen.begin(), chosen.end());
  }

  std::uint64_t allowed = gs.size();
  if (fcount != 0 && opt.budget / fcount < allowed) {
    allowed = opt.budget / fcount;
    rep.partial = true;
  }
  gs.resize(allowed);
  rep.visited = allowed * fcount;

  const Engine E(F, n, ell, m, std::move(H));
  const std::size_t chunks = std::min<std::size_t>(kReductionChunks, std::max<std::size_t>(gs.size(), 1));
  std::vector<std::vector<FoundConfig>> parts(chunks);
  for_each_chunk(chunks, [&](std::size_t c) {
    const std::size_t lo = gs.size() * c / chunks, hi = gs.size() * (c + 1) / chunks;
    for (std::size_t i = lo; i < hi; ++i) E.scan(gs[i], parts[c]);
  });
  for (auto& p : parts)
    for (auto& fc : p) rep.found.push_back(std::move(fc));
  std::stable_sort(rep.found.begin(), rep.found.end(), [](const FoundConfig& a, const FoundConfig& b) {
    if (a.g != b.g) return a.g < b.g;
    return a.f < b.f;
  });
  return rep;
}

}  // namespace

SearchReport find_prime_configs(const Field& F, int n, int ell, const SearchOptions& opt) {
  return run(F, "configs", n, ell, 0, {Poly()}, opt);
}

SearchReport find_twin_configs(const Field& F, int n, int ell, const Poly& h, const SearchOptions& opt) {
  if (h.is_zero()) throw std::invalid_argument("find_twin_configs: h must be nonzero");
  return run(F, "twins", n, ell, 1, {Poly(), h}, opt);
}

SearchReport find_mplus1_translates(const Field& F, int n, const std::vector<Poly>& H, int ell, int m,
                                    const SearchOptions& opt) {
  std::vector<Poly> sorted = H;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("find_mplus1_translates: translates must be distinct");
  return run(F, "translates", n, ell, m, std::move(sorted), opt);
}

bool reverify(const Field& F, const SearchReport& rep) {
  for (const auto& fc : rep.found) {
    if (static_cast<int>(fc.translates.size()) < rep.m + 1) return false;
    for (const auto& t : fc.translates) {
      const auto elems = config_elements(F, add(F, fc.f, t.shift), fc.g, fc.ell);
      if (elems != t.elements) return false;
      for (const Poly& x : elems)
        if (x.degree() != rep.n || !is_prime_poly(F, x)) return false;
    }
  }
  return true;
}

std::uint64_t class_of(const Field& F, int n, int ell, const Poly& f) {
  if (ell < 0 || ell > n) throw std::invalid_argument("class_of: need 0 <= ell <= n");
  if (f.degree() >= n) throw std::invalid_argument("class_of: need deg f < n");
  return index_of(F, f) / checked_pow(F.order(), n - ell);
}

std::vector<std::uint64_t> partition_classes(const Field& F, int n, int ell) {
  if (ell < 0 || ell > n) throw std::invalid_argument("partition_classes: need 0 <= ell <= n");
  const std::uint64_t size = checked_pow(F.order(), n), block = checked_pow(F.order(), n - ell);
  std::vector<std::uint64_t> out(size);
  for (std::uint64_t i = 0; i < size; ++i) out[i] = i / block;
  return out;
}

}  // namespace ffsieve
