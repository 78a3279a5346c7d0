#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ffsieve/field.hpp"

namespace ffsieve {

/// Degree of the zero polynomial; compares below every real degree.
inline constexpr int kNegInf = std::numeric_limits<int>::min();
/// "No prime factor" marker returned by least_prime_degree for units.
inline constexpr int kPosInf = std::numeric_limits<int>::max();

/// Element of F_q[t]. Coefficients are stored lowest degree first with no trailing
/// zeros, so the zero polynomial has an empty coefficient vector.
///
/// Polys carry no field pointer; every operation takes the Field explicitly.
/// Ordering is by degree, then by coefficients from the leading term down, which is
/// exactly the order in which enumerate_monic produces polynomials.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Elem> coeffs) : c_(std::move(coeffs)) { normalize(); }

  static Poly constant(Elem c) { return Poly(std::vector<Elem>{c}); }
  static Poly one() { return constant(1); }
  /// c * t^d
  static Poly monomial(Elem c, int d);
  static Poly t() { return monomial(1, 1); }

  int degree() const { return c_.empty() ? kNegInf : static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  Elem lead() const { return c_.empty() ? 0 : c_.back(); }
  Elem coeff(int i) const {
    return (i >= 0 && static_cast<std::size_t>(i) < c_.size()) ? c_[i] : 0;
  }
  std::span<const Elem> coeffs() const { return c_; }
  std::size_t size() const { return c_.size(); }

  friend bool operator==(const Poly&, const Poly&) = default;
  friend std::strong_ordering operator<=>(const Poly& a, const Poly& b);

 private:
  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Elem> c_;
};

Poly add(const Field& F, const Poly& a, const Poly& b);
Poly sub(const Field& F, const Poly& a, const Poly& b);
Poly neg(const Field& F, const Poly& a);
Poly scale(const Field& F, Elem c, const Poly& a);
Poly mul(const Field& F, const Poly& a, const Poly& b);
/// a * t^k
Poly shift(const Poly& a, int k);

/// poly_divmod: f = quotient * g + remainder, deg remainder < deg g.
/// Throws std::domain_error when g is zero.
std::pair<Poly, Poly> divmod(const Field& F, const Poly& f, const Poly& g);
Poly rem(const Field& F, const Poly& f, const Poly& g);
/// Exact quotient; throws std::logic_error if g does not divide f.
Poly exact_div(const Field& F, const Poly& f, const Poly& g);
bool divides(const Field& F, const Poly& d, const Poly& f);

Poly make_monic(const Field& F, const Poly& f);
/// Monic gcd. Throws std::invalid_argument for gcd(0, 0).
Poly gcd(const Field& F, const Poly& a, const Poly& b);
/// Monic lcm of nonzero inputs.
Poly lcm(const Field& F, const Poly& a, const Poly& b);

struct ExtendedGcd {
  Poly g;  // monic gcd
  Poly s;  // s*a + t*b = g
  Poly t;
};
ExtendedGcd ext_gcd(const Field& F, const Poly& a, const Poly& b);

Poly derivative(const Field& F, const Poly& f);
Poly mulmod(const Field& F, const Poly& a, const Poly& b, const Poly& m);
Poly powmod(const Field& F, Poly base, std::uint64_t e, const Poly& m);
/// base^(q) mod m, the Frobenius on F_q[t]/(m).
Poly frobenius_mod(const Field& F, const Poly& base, const Poly& m);
/// p-th root of f; every exponent of f must be a multiple of p.
Poly pth_root(const Field& F, const Poly& f);

/// norm |f| = q^{deg f}; 0 for the zero polynomial. Throws std::overflow_error past 2^64.
std::uint64_t norm(const Field& F, const Poly& f);
/// q^k with overflow check.
std::uint64_t checked_pow(std::uint64_t q, int k);

/// Integer index sum_i c_i q^i; the inverse is from_index. Throws on overflow.
std::uint64_t index_of(const Field& F, const Poly& f);
Poly from_index(const Field& F, std::uint64_t idx);

/// Solve f = c_i mod m_i for all i. Moduli need not be coprime; returns nullopt when the
/// congruences are inconsistent. The result is (residue, modulus) with deg residue < deg modulus.
std::optional<std::pair<Poly, Poly>> crt(const Field& F,
                                         std::span<const std::pair<Poly, Poly>> congruences);

/// Number of monic f with deg f = n and f = c mod m (m monic, c reduced mod m).
std::uint64_t count_monic_in_class(const Field& F, int n, const Poly& c, const Poly& m);

/// enumerate_monic: monic polynomials of degree n in lexicographic order of their
/// coefficient tuples, the constant coefficient varying fastest. The index of a member
/// is the integer formed by its non-leading coefficients in base q.
class MonicRange {
 public:
  MonicRange(Field F, int n);
  MonicRange(Field F, int n, std::uint64_t begin, std::uint64_t end);

  std::uint64_t size() const { return end_ - begin_; }
  std::uint64_t begin_index() const { return begin_; }
  std::uint64_t end_index() const { return end_; }
  int degree() const { return n_; }
  Poly at(std::uint64_t idx) const;
  /// Split into `parts` contiguous sub-ranges (some may be empty), in order.
  std::vector<MonicRange> split(std::size_t parts) const;

  class iterator {
   public:
    using value_type = Poly;
    using difference_type = std::ptrdiff_t;
    iterator() = default;
    const Poly& operator*() const { return cur_; }
    const Poly* operator->() const { return &cur_; }
    iterator& operator++();
    iterator operator++(int) {
      iterator t = *this;
      ++*this;
      return t;
    }
    bool operator==(const iterator& o) const { return idx_ == o.idx_; }
    std::uint64_t index() const { return idx_; }

   private:
    friend class MonicRange;
    iterator(std::uint32_t q, std::vector<Elem> digits, std::uint64_t idx);
    std::uint32_t q_ = 2;
    std::vector<Elem> digits_;
    std::uint64_t idx_ = 0;
    Poly cur_;
  };
  iterator begin() const;
  iterator end() const;

 private:
  Field F_;
  int n_;
  std::uint64_t total_;
  std::uint64_t begin_;
  std::uint64_t end_;
};

MonicRange enumerate_monic(const Field& F, int n);

struct PolyHash {
  std::size_t operator()(const Poly& f) const noexcept;
};

}  // namespace ffsieve
