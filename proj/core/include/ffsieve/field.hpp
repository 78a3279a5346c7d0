#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace ffsieve {

/// Packed field element. For F_q with q = p^e the residues (c_0, ..., c_{e-1})
/// of the power-basis representation are packed as c_0 + c_1 p + ... + c_{e-1} p^{e-1}.
/// Packing order doubles as the enumeration order of field elements.
using Elem = std::uint32_t;

namespace detail {
struct FieldData {
  std::uint32_t p = 2;
  unsigned e = 1;
  std::uint32_t q = 2;
  std::vector<std::uint32_t> modulus;  // low-degree first, length e + 1; empty when e == 1
  // Extension-field tables (e > 1).
  std::vector<std::uint32_t> log;      // log[a] for a != 0
  std::vector<std::uint32_t> exp;      // exp[i] for i in [0, 2(q-1))
  std::vector<std::uint16_t> add_tab;  // q*q entries when q <= kAddTableMax
  std::vector<std::uint32_t> neg_tab;  // q entries
  std::vector<std::uint32_t> pow_p;    // p^i, i in [0, e]
};
inline constexpr std::uint32_t kAddTableMax = 1024;
}  // namespace detail

/// The coefficient field F_q. Immutable and cheap to copy; copies share tables.
class Field {
 public:
  /// field_make: F_{p^e}. For e > 1 the modulus is the least monic irreducible of
  /// degree e over F_p, coefficient tuples compared low-degree-first.
  /// Throws std::invalid_argument for non-prime p, e == 0, or unsupported sizes.
  static Field make(std::uint32_t p, unsigned e = 1);
  /// Field of order q; q must be a prime power.
  static Field of_order(std::uint64_t q);

  Field() : Field(make(2, 1)) {}

  std::uint32_t characteristic() const { return p_; }
  unsigned degree() const { return e_; }
  std::uint32_t order() const { return q_; }
  /// Modulus coefficients, low-degree first; empty for prime fields.
  const std::vector<std::uint32_t>& modulus() const { return d_->modulus; }

  Elem add(Elem a, Elem b) const {
    if (e_ == 1) {
      std::uint32_t s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    if (!d_->add_tab.empty()) return d_->add_tab[std::size_t(a) * q_ + b];
    return add_slow(a, b);
  }
  Elem neg(Elem a) const {
    if (e_ == 1) return a == 0 ? 0 : p_ - a;
    return d_->neg_tab[a];
  }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    if (e_ == 1) return static_cast<Elem>((std::uint64_t(a) * b) % p_);
    if (a == 0 || b == 0) return 0;
    return d_->exp[d_->log[a] + d_->log[b]];
  }
  /// Multiplicative inverse; throws std::domain_error on zero.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t k) const;
  /// Inverse Frobenius a -> a^{1/p}.
  Elem pth_root(Elem a) const;

  /// Image of an integer in the prime subfield.
  Elem from_int(long long v) const;
  bool in_prime_field(Elem a) const { return a < p_; }

  /// Power-basis residues (c_0, ..., c_{e-1}).
  std::vector<std::uint32_t> residues(Elem a) const;
  Elem from_residues(std::span<const std::uint32_t> r) const;

  /// "F_q" style label, e.g. "F_9 = F_3[x]/(x^2 + 1)".
  std::string describe() const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.p_ == b.p_ && a.e_ == b.e_ && a.d_->modulus == b.d_->modulus;
  }

 private:
  explicit Field(std::shared_ptr<const detail::FieldData> d)
      : d_(std::move(d)), p_(d_->p), e_(d_->e), q_(d_->q) {}
  Elem add_slow(Elem a, Elem b) const;

  std::shared_ptr<const detail::FieldData> d_;
  std::uint32_t p_;
  unsigned e_;
  std::uint32_t q_;
};

bool is_prime_u64(std::uint64_t n);

}  // namespace ffsieve
