#include "ffsieve/field.hpp"

#include <sstream>
#include <stdexcept>

#include "ffsieve/arith.hpp"
#include "ffsieve/poly.hpp"
#include "ffsieve/poly_io.hpp"

namespace ffsieve {

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

using Residues = std::vector<std::uint32_t>;

// Product of two residue vectors modulo the (monic) modulus over F_p.
Residues mul_mod_raw(const Residues& a, const Residues& b, const Residues& modulus,
                     std::uint32_t p) {
  const std::size_t e = modulus.size() - 1;
  std::vector<std::uint64_t> prod(2 * e, 0);
  for (std::size_t i = 0; i < e; ++i)
    for (std::size_t j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + std::uint64_t(a[i]) * b[j]) % p;
  for (std::size_t k = 2 * e - 1; k >= e; --k) {
    const std::uint64_t c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    for (std::size_t i = 0; i < e; ++i)
      prod[k - e + i] = (prod[k - e + i] + (p - c) * modulus[i]) % p;
  }
  Residues out(e);
  for (std::size_t i = 0; i < e; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
  return out;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

Residues unpack(std::uint32_t a, std::uint32_t p, unsigned e) {
  Residues r(e);
  for (unsigned i = 0; i < e; ++i) {
    r[i] = a % p;
    a /= p;
  }
  return r;
}

std::uint32_t pack(const Residues& r, std::uint32_t p) {
  std::uint32_t v = 0;
  for (std::size_t i = r.size(); i-- > 0;) v = v * p + r[i];
  return v;
}

// Least monic irreducible of degree e over F_p, tuples (c_0, ..., c_{e-1}) compared
// lexicographically with c_0 most significant.
Residues least_irreducible(std::uint32_t p, unsigned e) {
  const Field fp = Field::make(p, 1);
  std::vector<std::uint32_t> c(e, 0);
  for (;;) {
    std::vector<Elem> coeffs(c.begin(), c.end());
    coeffs.push_back(1);
    Poly f(std::move(coeffs));
    if (is_irreducible(fp, f)) {
      Residues m(c.begin(), c.end());
      m.push_back(1);
      return m;
    }
    // c_{e-1} is the least significant position of the comparison.
    std::size_t i = e;
    while (i-- > 0) {
      if (++c[i] < p) break;
      c[i] = 0;
      if (i == 0) throw std::logic_error("no irreducible polynomial found");
    }
  }
}

}  // namespace

Field Field::make(std::uint32_t p, unsigned e) {
  if (!is_prime_u64(p)) throw std::invalid_argument("field_make: p = " + std::to_string(p) + " is not prime");
  if (e == 0) throw std::invalid_argument("field_make: extension degree must be >= 1");
  auto d = std::make_shared<detail::FieldData>();
  d->p = p;
  d->e = e;
  if (e == 1) {
    if (p >= (1u << 31)) throw std::invalid_argument("field_make: p must be < 2^31");
    d->q = p;
    d->pow_p = {1, p};
    return Field(std::move(d));
  }
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    q *= p;
    if (q > (1u << 16)) throw std::invalid_argument("field_make: extension fields limited to q <= 65536");
  }
  d->q = static_cast<std::uint32_t>(q);
  d->pow_p.resize(e + 1);
  d->pow_p[0] = 1;
  for (unsigned i = 1; i <= e; ++i) d->pow_p[i] = d->pow_p[i - 1] * p;
  d->modulus = least_irreducible(p, e);

  // Primitive element search for log/exp tables.
  const std::uint64_t order = q - 1;
  const auto factors = prime_factors(order);
  Residues gen;
  for (std::uint32_t cand = 2; cand < q; ++cand) {
    Residues g = unpack(cand, p, e);
    bool primitive = true;
    for (auto l : factors) {
      Residues acc = unpack(1, p, e), base = g;
      for (std::uint64_t k = order / l; k; k >>= 1) {
        if (k & 1) acc = mul_mod_raw(acc, base, d->modulus, p);
        base = mul_mod_raw(base, base, d->modulus, p);
      }
      if (pack(acc, p) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      gen = std::move(g);
      break;
    }
  }
  if (gen.empty()) throw std::logic_error("field_make: no primitive element");
  d->exp.assign(2 * order, 0);
  d->log.assign(q, 0);
  Residues cur = unpack(1, p, e);
  for (std::uint64_t i = 0; i < order; ++i) {
    const std::uint32_t v = pack(cur, p);
    d->exp[i] = v;
    d->exp[i + order] = v;
    d->log[v] = static_cast<std::uint32_t>(i);
    cur = mul_mod_raw(cur, gen, d->modulus, p);
  }
  d->neg_tab.resize(q);
  for (std::uint32_t a = 0; a < q; ++a) {
    Residues r = unpack(a, p, e);
    for (auto& x : r) x = x == 0 ? 0 : p - x;
    d->neg_tab[a] = pack(r, p);
  }
  if (q <= detail::kAddTableMax) {
    d->add_tab.resize(std::size_t(q) * q);
    for (std::uint32_t a = 0; a < q; ++a) {
      const Residues ra = unpack(a, p, e);
      for (std::uint32_t b = 0; b < q; ++b) {
        Residues rb = unpack(b, p, e);
        for (unsigned i = 0; i < e; ++i) rb[i] = (ra[i] + rb[i]) % p;
        d->add_tab[std::size_t(a) * q + b] = static_cast<std::uint16_t>(pack(rb, p));
      }
    }
  }
  return Field(std::move(d));
}

Field Field::of_order(std::uint64_t q) {
  if (q < 2) throw std::invalid_argument("field order must be >= 2");
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  unsigned e = 0;
  std::uint64_t m = q;
  while (m % p == 0) {
    m /= p;
    ++e;
  }
  if (m != 1) throw std::invalid_argument("field order " + std::to_string(q) + " is not a prime power");
  if (p > 0xffffffffULL) throw std::invalid_argument("characteristic too large");
  return make(static_cast<std::uint32_t>(p), e);
}

Elem Field::add_slow(Elem a, Elem b) const {
  Elem out = 0;
  for (unsigned i = 0; i < e_; ++i) {
    const std::uint32_t s = (a % p_ + b % p_) % p_;
    out += s * d_->pow_p[i];
    a /= p_;
    b /= p_;
  }
  return out;
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inverse of zero field element");
  if (e_ == 1) {
    // Extended Euclid over the integers.
    std::int64_t t = 0, nt = 1, r = p_, nr = a;
    while (nr != 0) {
      const std::int64_t quo = r / nr;
      std::int64_t tmp = t - quo * nt;
      t = nt;
      nt = tmp;
      tmp = r - quo * nr;
      r = nr;
      nr = tmp;
    }
    if (t < 0) t += p_;
    return static_cast<Elem>(t);
  }
  const std::uint32_t order = q_ - 1;
  return d_->exp[(order - d_->log[a]) % order];
}

Elem Field::pow(Elem a, std::uint64_t k) const {
  Elem acc = 1;
  while (k) {
    if (k & 1) acc = mul(acc, a);
    a = mul(a, a);
    k >>= 1;
  }
  return acc;
}

Elem Field::pth_root(Elem a) const {
  if (e_ == 1) return a;
  // a^{p^{e-1}} inverts the Frobenius.
  return pow(a, d_->pow_p[e_ - 1]);
}

Elem Field::from_int(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

std::vector<std::uint32_t> Field::residues(Elem a) const { return unpack(a, p_, e_); }

Elem Field::from_residues(std::span<const std::uint32_t> r) const {
  if (r.size() != e_) throw std::invalid_argument("residue vector has wrong length");
  Elem v = 0;
  for (std::size_t i = r.size(); i-- > 0;) {
    if (r[i] >= p_) throw std::invalid_argument("residue out of range");
    v = v * p_ + r[i];
  }
  return v;
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "F_" << q_;
  if (e_ > 1) {
    const Field fp = make(p_, 1);
    std::vector<Elem> m(d_->modulus.begin(), d_->modulus.end());
    os << " = F_" << p_ << "[t]/(" << to_string(fp, Poly(std::move(m))) << ")";
  }
  return os.str();
}

}  // namespace ffsieve
