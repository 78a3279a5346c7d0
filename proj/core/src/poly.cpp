#include "ffsieve/poly.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ffsieve {

Poly Poly::monomial(Elem c, int d) {
  if (d < 0) throw std::invalid_argument("monomial degree must be >= 0");
  std::vector<Elem> v(static_cast<std::size_t>(d) + 1, 0);
  v[d] = c;
  return Poly(std::move(v));
}

std::strong_ordering operator<=>(const Poly& a, const Poly& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (std::size_t i = a.c_.size(); i-- > 0;) {
    if (auto c = a.c_[i] <=> b.c_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

Poly add(const Field& F, const Poly& a, const Poly& b) {
  const auto ca = a.coeffs(), cb = b.coeffs();
  std::vector<Elem> out(std::max(ca.size(), cb.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const Elem x = i < ca.size() ? ca[i] : 0;
    const Elem y = i < cb.size() ? cb[i] : 0;
    out[i] = F.add(x, y);
  }
  return Poly(std::move(out));
}

Poly neg(const Field& F, const Poly& a) {
  std::vector<Elem> out(a.coeffs().begin(), a.coeffs().end());
  for (auto& x : out) x = F.neg(x);
  return Poly(std::move(out));
}

Poly sub(const Field& F, const Poly& a, const Poly& b) {
  const auto ca = a.coeffs(), cb = b.coeffs();
  std::vector<Elem> out(std::max(ca.size(), cb.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const Elem x = i < ca.size() ? ca[i] : 0;
    const Elem y = i < cb.size() ? cb[i] : 0;
    out[i] = F.sub(x, y);
  }
  return Poly(std::move(out));
}

Poly scale(const Field& F, Elem c, const Poly& a) {
  if (c == 0) return Poly();
  std::vector<Elem> out(a.coeffs().begin(), a.coeffs().end());
  for (auto& x : out) x = F.mul(c, x);
  return Poly(std::move(out));
}

Poly mul(const Field& F, const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  const auto ca = a.coeffs(), cb = b.coeffs();
  std::vector<Elem> out(ca.size() + cb.size() - 1, 0);
  if (F.degree() == 1) {
    // Accumulate in 64 bits and reduce lazily; safe while the running sum stays below 2^64.
    const std::uint64_t p = F.characteristic();
    std::vector<std::uint64_t> acc(out.size(), 0);
    const std::uint64_t limit = ~std::uint64_t(0) - (p - 1) * (p - 1);
    for (std::size_t i = 0; i < ca.size(); ++i) {
      if (ca[i] == 0) continue;
      for (std::size_t j = 0; j < cb.size(); ++j) {
        std::uint64_t& s = acc[i + j];
        s += std::uint64_t(ca[i]) * cb[j];
        if (s >= limit) s %= p;
      }
    }
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<Elem>(acc[i] % p);
  } else {
    for (std::size_t i = 0; i < ca.size(); ++i) {
      if (ca[i] == 0) continue;
      for (std::size_t j = 0; j < cb.size(); ++j) out[i + j] = F.add(out[i + j], F.mul(ca[i], cb[j]));
    }
  }
  return Poly(std::move(out));
}

Poly shift(const Poly& a, int k) {
  if (a.is_zero() || k == 0) return a;
  std::vector<Elem> out(static_cast<std::size_t>(k), 0);
  out.insert(out.end(), a.coeffs().begin(), a.coeffs().end());
  return Poly(std::move(out));
}

std::pair<Poly, Poly> divmod(const Field& F, const Poly& f, const Poly& g) {
  if (g.is_zero()) throw std::domain_error("polynomial division by zero");
  if (f.degree() < g.degree()) return {Poly(), f};
  std::vector<Elem> r(f.coeffs().begin(), f.coeffs().end());
  const auto cg = g.coeffs();
  const std::size_t dg = cg.size() - 1;
  const Elem inv_lead = F.inv(cg[dg]);
  std::vector<Elem> q(r.size() - dg, 0);
  for (std::size_t k = r.size(); k-- > dg;) {
    const Elem c = r[k];
    if (c == 0) continue;
    const Elem factor = F.mul(c, inv_lead);
    q[k - dg] = factor;
    const Elem nf = F.neg(factor);
    for (std::size_t i = 0; i <= dg; ++i) r[k - dg + i] = F.add(r[k - dg + i], F.mul(nf, cg[i]));
  }
  r.resize(dg);
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly rem(const Field& F, const Poly& f, const Poly& g) {
  if (g.is_zero()) throw std::domain_error("polynomial division by zero");
  if (f.degree() < g.degree()) return f;
  std::vector<Elem> r(f.coeffs().begin(), f.coeffs().end());
  const auto cg = g.coeffs();
  const std::size_t dg = cg.size() - 1;
  const Elem inv_lead = F.inv(cg[dg]);
  for (std::size_t k = r.size(); k-- > dg;) {
    const Elem c = r[k];
    if (c == 0) continue;
    const Elem nf = F.neg(F.mul(c, inv_lead));
    for (std::size_t i = 0; i <= dg; ++i) r[k - dg + i] = F.add(r[k - dg + i], F.mul(nf, cg[i]));
  }
  r.resize(dg);
  return Poly(std::move(r));
}

Poly exact_div(const Field& F, const Poly& f, const Poly& g) {
  auto [q, r] = divmod(F, f, g);
  if (!r.is_zero()) throw std::logic_error("exact_div: divisor does not divide dividend");
  return q;
}

bool divides(const Field& F, const Poly& d, const Poly& f) {
  if (d.is_zero()) return f.is_zero();
  return rem(F, f, d).is_zero();
}

Poly make_monic(const Field& F, const Poly& f) {
  if (f.is_zero() || f.is_monic()) return f;
  return scale(F, F.inv(f.lead()), f);
}

Poly gcd(const Field& F, const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd(0, 0) is undefined");
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = rem(F, x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return make_monic(F, x);
}

Poly lcm(const Field& F, const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) throw std::invalid_argument("lcm of zero polynomial");
  return make_monic(F, mul(F, exact_div(F, a, gcd(F, a, b)), b));
}

ExtendedGcd ext_gcd(const Field& F, const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd(0, 0) is undefined");
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::one(), s1;
  Poly t0, t1 = Poly::one();
  while (!r1.is_zero()) {
    auto [q, r] = divmod(F, r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = sub(F, s0, mul(F, q, s1));
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly t2 = sub(F, t0, mul(F, q, t1));
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const Elem inv = F.inv(r0.lead());
  return {scale(F, inv, r0), scale(F, inv, s0), scale(F, inv, t0)};
}

Poly derivative(const Field& F, const Poly& f) {
  const auto c = f.coeffs();
  if (c.size() <= 1) return Poly();
  std::vector<Elem> out(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) out[i - 1] = F.mul(F.from_int(static_cast<long long>(i)), c[i]);
  return Poly(std::move(out));
}

Poly mulmod(const Field& F, const Poly& a, const Poly& b, const Poly& m) {
  return rem(F, mul(F, a, b), m);
}

Poly powmod(const Field& F, Poly base, std::uint64_t e, const Poly& m) {
  Poly acc = rem(F, Poly::one(), m);
  base = rem(F, base, m);
  while (e) {
    if (e & 1) acc = mulmod(F, acc, base, m);
    e >>= 1;
    if (e) base = mulmod(F, base, base, m);
  }
  return acc;
}

Poly frobenius_mod(const Field& F, const Poly& base, const Poly& m) {
  return powmod(F, base, F.order(), m);
}

Poly pth_root(const Field& F, const Poly& f) {
  const std::uint32_t p = F.characteristic();
  const auto c = f.coeffs();
  if (c.empty()) return f;
  std::vector<Elem> out((c.size() - 1) / p + 1, 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    if (i % p != 0) throw std::invalid_argument("pth_root: exponent not divisible by p");
    out[i / p] = F.pth_root(c[i]);
  }
  return Poly(std::move(out));
}

std::uint64_t checked_pow(std::uint64_t q, int k) {
  if (k < 0) throw std::invalid_argument("checked_pow: negative exponent");
  std::uint64_t v = 1;
  for (int i = 0; i < k; ++i) {
    if (v > ~std::uint64_t(0) / q) throw std::overflow_error("q^" + std::to_string(k) + " exceeds 64 bits");
    v *= q;
  }
  return v;
}

std::uint64_t norm(const Field& F, const Poly& f) {
  if (f.is_zero()) return 0;
  return checked_pow(F.order(), f.degree());
}

std::uint64_t index_of(const Field& F, const Poly& f) {
  const std::uint64_t q = F.order();
  std::uint64_t v = 0;
  const auto c = f.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    if (v > (~std::uint64_t(0) - c[i]) / q) throw std::overflow_error("polynomial index exceeds 64 bits");
    v = v * q + c[i];
  }
  return v;
}

Poly from_index(const Field& F, std::uint64_t idx) {
  const std::uint64_t q = F.order();
  std::vector<Elem> c;
  while (idx) {
    c.push_back(static_cast<Elem>(idx % q));
    idx /= q;
  }
  return Poly(std::move(c));
}

std::optional<std::pair<Poly, Poly>> crt(const Field& F,
                                         std::span<const std::pair<Poly, Poly>> congruences) {
  Poly x;             // current residue
  Poly m = Poly::one();  // current modulus
  for (const auto& [ci, mi_raw] : congruences) {
    if (mi_raw.is_zero()) throw std::invalid_argument("crt: zero modulus");
    const Poly mi = make_monic(F, mi_raw);
    const Poly c = rem(F, ci, mi);
    const Poly g = gcd(F, m, mi);
    const Poly diff = sub(F, c, x);
    auto [dq, dr] = divmod(F, diff, g);
    if (!dr.is_zero()) return std::nullopt;
    const Poly m_red = exact_div(F, m, g);
    const Poly mi_red = exact_div(F, mi, g);
    Poly u;
    if (mi_red.degree() > 0) {
      const ExtendedGcd eg = ext_gcd(F, rem(F, m_red, mi_red), mi_red);
      u = mulmod(F, rem(F, dq, mi_red), eg.s, mi_red);
    }
    const Poly new_m = mul(F, m, mi_red);
    x = rem(F, add(F, x, mul(F, m, u)), new_m);
    m = new_m;
  }
  return std::make_pair(std::move(x), std::move(m));
}

std::uint64_t count_monic_in_class(const Field& F, int n, const Poly& c, const Poly& m) {
  const int dm = m.degree();
  if (dm <= n) return checked_pow(F.order(), n - dm);
  const Poly r = rem(F, c, m);
  return (r.degree() == n && r.is_monic()) ? 1 : 0;
}

// ---------------------------------------------------------------- MonicRange

MonicRange::MonicRange(Field F, int n) : F_(std::move(F)), n_(n) {
  if (n < 0) throw std::invalid_argument("enumerate_monic: degree must be >= 0");
  total_ = checked_pow(F_.order(), n);
  begin_ = 0;
  end_ = total_;
}

MonicRange::MonicRange(Field F, int n, std::uint64_t begin, std::uint64_t end) : MonicRange(std::move(F), n) {
  if (begin > end || end > total_) throw std::out_of_range("MonicRange: bad sub-range");
  begin_ = begin;
  end_ = end;
}

Poly MonicRange::at(std::uint64_t idx) const {
  if (idx >= total_) throw std::out_of_range("MonicRange::at");
  std::vector<Elem> c(static_cast<std::size_t>(n_) + 1, 0);
  const std::uint64_t q = F_.order();
  for (int i = 0; i < n_; ++i) {
    c[i] = static_cast<Elem>(idx % q);
    idx /= q;
  }
  c[n_] = 1;
  return Poly(std::move(c));
}

std::vector<MonicRange> MonicRange::split(std::size_t parts) const {
  if (parts == 0) throw std::invalid_argument("split into zero parts");
  std::vector<MonicRange> out;
  out.reserve(parts);
  const std::uint64_t n = size();
  for (std::size_t i = 0; i < parts; ++i) {
    const std::uint64_t lo = begin_ + n * i / parts;
    const std::uint64_t hi = begin_ + n * (i + 1) / parts;
    out.emplace_back(F_, n_, lo, hi);
  }
  return out;
}

MonicRange::iterator::iterator(std::uint32_t q, std::vector<Elem> digits, std::uint64_t idx)
    : q_(q), digits_(std::move(digits)), idx_(idx) {
  std::vector<Elem> c = digits_;
  c.push_back(1);
  cur_ = Poly(std::move(c));
}

MonicRange::iterator& MonicRange::iterator::operator++() {
  ++idx_;
  for (auto& d : digits_) {
    if (++d < q_) break;
    d = 0;
  }
  std::vector<Elem> c = digits_;
  c.push_back(1);
  cur_ = Poly(std::move(c));
  return *this;
}

MonicRange::iterator MonicRange::begin() const {
  std::vector<Elem> digits(static_cast<std::size_t>(n_), 0);
  std::uint64_t idx = begin_;
  for (int i = 0; i < n_; ++i) {
    digits[i] = static_cast<Elem>(idx % F_.order());
    idx /= F_.order();
  }
  return iterator(F_.order(), std::move(digits), begin_);
}

MonicRange::iterator MonicRange::end() const {
  iterator it;
  it.idx_ = end_;
  return it;
}

MonicRange enumerate_monic(const Field& F, int n) { return MonicRange(F, n); }

std::size_t PolyHash::operator()(const Poly& f) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (Elem c : f.coeffs()) {
    h ^= c + 0x9e3779b97f4a7c15ULL;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h ^ f.size());
}

}  // namespace ffsieve
