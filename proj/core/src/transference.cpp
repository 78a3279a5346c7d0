#include "ffsieve/transference.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <unordered_set>

#include "ffsieve/parallel.hpp"

namespace ffsieve {

CutoffG::CutoffG(int exponent) : a_(exponent), norm_(0) {
  if (exponent < 1) throw std::invalid_argument("CutoffG: exponent must be >= 1");
  norm_ = integrate_simplex(1, [this](std::span<const double> x) {
    const double d = derivative(x[0]);
    return d * d;
  }).value;
  if ((*this)(0.0) != 1.0 || std::abs(norm_ - 1.0) > 1e-8)
    throw std::invalid_argument("CutoffG: (1 - x)^" + std::to_string(a_) +
                                " violates int G'^2 = 1 (got " + std::to_string(norm_) + ")");
}

double CutoffG::operator()(double x) const {
  if (x < 0 || x >= 1) return x < 0 ? 1.0 : 0.0;
  return std::pow(1.0 - x, a_);
}

double CutoffG::derivative(double x) const {
  if (x < 0 || x >= 1) return 0.0;
  return -a_ * std::pow(1.0 - x, a_ - 1);
}

MeasureParams MeasureParams::make(const SieveParams& sp, double rho, int G_exponent) {
  if (!(rho > 0 && rho < sp.eps)) throw std::invalid_argument("MeasureParams: need 0 < rho < eps");
  MeasureParams mp;
  mp.F = sp.F;
  mp.H = sp.H;
  mp.k = sp.k;
  mp.n = sp.n;
  mp.rho = rho;
  mp.eps = sp.eps;
  mp.r = static_cast<int>(std::floor(rho * sp.n + 1e-9));
  if (mp.r < 1) throw std::invalid_argument("MeasureParams: r = floor(rho n) must be >= 1");
  mp.W = sp.W;
  mp.b = sp.b;
  mp.G = CutoffG(G_exponent);
  mp.scale = mp.r / sp.w_ratio;
  if (sp.w_norm && sp.w_phi) {
    mp.scale_exact = Rational(BigInt(mp.r) * *sp.w_phi, BigInt(*sp.w_norm));
    mp.scale = to_double(*mp.scale_exact);
  }
  return mp;
}

double gy_divisor_sum(const Field& F, const Poly& f, int r, const CutoffG& G) {
  if (f.is_zero()) throw std::invalid_argument("gy_divisor_sum: zero input");
  if (r < 1) throw std::invalid_argument("gy_divisor_sum: r must be >= 1");
  const Factorization fac = factorize(F, f);
  std::vector<int> deg;
  for (const auto& pp : fac.factors) deg.push_back(pp.prime.degree());
  CompensatedSum sum;
  // Squarefree divisors only; G vanishes once deg d >= r.
  auto rec = [&](auto&& self, std::size_t i, int d, int sign) -> void {
    if (i == deg.size()) {
      sum += sign * G(static_cast<double>(d) / r);
      return;
    }
    self(self, i + 1, d, sign);
    if (d + deg[i] < r) self(self, i + 1, d + deg[i], -sign);
  };
  rec(rec, 0, 0, 1);
  return sum.value();
}

double nu(const Poly& f, const MeasureParams& mp) {
  const Poly base = add(mp.F, mul(mp.F, mp.W, f), mp.b);
  double v = 1.0;
  for (const Poly& h : mp.H) {
    const Poly x = add(mp.F, base, h);
    const double L = x.is_zero() ? 0.0 : gy_divisor_sum(mp.F, x, mp.r, mp.G);
    v *= mp.scale * L * L;
  }
  return v;
}

double phi_weight(const Poly& f, const MeasureParams& mp, const Membership& in_A) {
  if (!in_A(add(mp.F, mul(mp.F, mp.W, f), mp.b))) return 0.0;
  double v = 1.0;
  for (int j = 0; j < mp.k; ++j) v *= mp.scale * 1.0 * 1.0;
  return v;
}

std::vector<double> nu_table(const MeasureParams& mp) {
  const std::uint64_t size = checked_pow(mp.F.order(), mp.n);
  std::vector<double> out(size);
  for_each_chunk(kReductionChunks, [&](std::size_t c) {
    for (std::uint64_t i = c; i < size; i += kReductionChunks) out[i] = nu(from_index(mp.F, i), mp);
  });
  return out;
}

// ---------------------------------------------------------------------------------------

FqnSpace::FqnSpace(const Field& F, int n)
    : F_(F), n_(n), size_(checked_pow(F.order(), n)), xor_add_(F.order() == 2) {
  if (n < 1) throw std::invalid_argument("FqnSpace: n must be >= 1");
}

std::uint64_t FqnSpace::add(std::uint64_t a, std::uint64_t b) const {
  if (xor_add_) return a ^ b;
  const std::uint64_t q = F_.order();
  std::uint64_t out = 0, place = 1;
  for (int i = 0; i < n_; ++i) {
    out += place * F_.add(static_cast<Elem>(a % q), static_cast<Elem>(b % q));
    a /= q;
    b /= q;
    place *= q;
  }
  return out;
}

std::uint64_t FqnSpace::times(long long c, std::uint64_t a) const {
  const Elem s = F_.from_int(c);
  if (s == 0) return 0;
  if (s == 1) return a;
  const std::uint64_t q = F_.order();
  std::uint64_t out = 0, place = 1;
  for (int i = 0; i < n_; ++i) {
    out += place * F_.mul(s, static_cast<Elem>(a % q));
    a /= q;
    place *= q;
  }
  return out;
}

std::uint64_t linear_form(const FqnSpace& V, int j, std::span<const std::uint64_t> xs) {
  const int ell = static_cast<int>(xs.size());
  if (j < 1 || j > ell) throw std::invalid_argument("linear_form: j out of range");
  std::uint64_t out = 0;
  for (int i = 1; i <= ell; ++i)
    if (i != j) out = V.add(out, V.times(i - j, xs[i - 1]));
  return out;
}

ExponentPattern::ExponentPattern(int ell, bool fill) : ell_(ell) {
  if (ell < 1 || ell > 16) throw std::invalid_argument("ExponentPattern: ell must lie in [1, 16]");
  c_.assign(static_cast<std::size_t>(ell) << (ell - 1), fill ? 1 : 0);
}

ExponentPattern ExponentPattern::from_bits(int ell, const std::string& bits) {
  ExponentPattern p(ell);
  if (bits.size() != p.c_.size())
    throw std::invalid_argument("ExponentPattern: expected " + std::to_string(p.c_.size()) + " bits");
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != '0' && bits[i] != '1') throw std::invalid_argument("ExponentPattern: bits must be 0 or 1");
    p.c_[i] = bits[i] == '1';
  }
  return p;
}

bool ExponentPattern::get(int j, std::uint32_t omega) const {
  return c_.at((static_cast<std::size_t>(j - 1) << (ell_ - 1)) + omega) != 0;
}

void ExponentPattern::set(int j, std::uint32_t omega, bool v) {
  c_.at((static_cast<std::size_t>(j - 1) << (ell_ - 1)) + omega) = v;
}

std::string ExponentPattern::id() const {
  std::string s;
  for (auto b : c_) s += b ? '1' : '0';
  return s;
}

bool ExponentPattern::degenerate(std::uint32_t p) const {
  for (int j = 1; j <= ell_; ++j) {
    bool active = false;
    for (std::uint32_t w = 0; w < (1u << (ell_ - 1)); ++w) active = active || get(j, w);
    if (!active) continue;
    for (int i = 1; i <= ell_; ++i)
      if (i != j && (std::abs(i - j) % p) == 0) return true;
  }
  return false;
}

namespace {

struct Term {
  std::vector<std::pair<int, long long>> vars;  // (used-variable slot, coefficient)
};

}  // namespace

EstimateReport pseudorandom_estimate(const FqnSpace& V, const std::vector<double>& nu_table,
                                     const ExponentPattern& pattern, Sampler sampler, std::uint64_t samples,
                                     std::uint64_t seed, std::uint64_t budget) {
  if (nu_table.size() != V.size()) throw std::invalid_argument("pseudorandom_estimate: nu table size mismatch");
  const int ell = pattern.ell();
  const std::uint32_t p = V.field().characteristic();

  // Variable x_{i,b} has id 2(i-1) + b; only those with a nonzero coefficient in an active form are used.
  std::vector<int> slot_of(2 * ell, -1);
  std::vector<Term> terms;
  int used = 0;
  for (int j = 1; j <= ell; ++j) {
    for (std::uint32_t w = 0; w < (1u << (ell - 1)); ++w) {
      if (!pattern.get(j, w)) continue;
      Term t;
      int bit = 0;
      for (int i = 1; i <= ell; ++i) {
        if (i == j) continue;
        const int b = (w >> bit++) & 1;
        const long long coeff = i - j;
        if (V.field().from_int(coeff) == 0) continue;
        int& slot = slot_of[2 * (i - 1) + b];
        if (slot < 0) slot = used++;
        t.vars.emplace_back(slot, coeff);
      }
      terms.push_back(std::move(t));
    }
  }

  EstimateReport rep;
  rep.ell = ell;
  rep.pattern_id = pattern.id();
  rep.seed = seed;
  rep.degenerate = pattern.degenerate(p);
  rep.variables = used;

  auto eval = [&](const std::vector<std::uint64_t>& x) {
    double v = 1.0;
    for (const Term& t : terms) {
      std::uint64_t idx = 0;
      for (auto [s, c] : t.vars) idx = V.add(idx, V.times(c, x[s]));
      v *= nu_table[idx];
    }
    return v;
  };

  const std::uint64_t S = V.size();
  if (sampler == Sampler::Exhaustive) {
    rep.mode = "exhaustive";
    // saturates at the u64 maximum
    std::uint64_t total = 1;
    for (int u = 0; u < used; ++u)
      total = total > std::numeric_limits<std::uint64_t>::max() / S ? std::numeric_limits<std::uint64_t>::max()
                                                                    : total * S;
    check_budget("exhaustive pseudorandom estimate", total, budget);
    rep.samples = total;
    if (used == 0) {
      rep.estimate = eval({});
      return rep;
    }
    std::vector<CompensatedSum> part(kReductionChunks);
    for_each_chunk(kReductionChunks, [&](std::size_t c) {
      const std::uint64_t lo = S * c / kReductionChunks, hi = S * (c + 1) / kReductionChunks;
      std::vector<std::uint64_t> x(used, 0);
      for (std::uint64_t first = lo; first < hi; ++first) {
        x[0] = first;
        std::fill(x.begin() + 1, x.end(), 0);
        for (;;) {
          part[c] += eval(x);
          int pos = 1;
          while (pos < used && ++x[pos] == S) x[pos++] = 0;
          if (pos == used) break;
        }
      }
    });
    CompensatedSum sum;
    for (auto& s : part) sum.merge(s);
    rep.estimate = sum.value() / static_cast<double>(total);
    return rep;
  }

  rep.mode = "monte_carlo";
  if (samples == 0) throw std::invalid_argument("pseudorandom_estimate: Monte Carlo needs samples > 0");
  check_budget("Monte Carlo samples", samples, budget);
  rep.samples = samples;
  std::vector<CompensatedSum> s1(kReductionChunks), s2(kReductionChunks);
  for_each_chunk(kReductionChunks, [&](std::size_t c) {
    const std::uint64_t count = samples / kReductionChunks + (c < samples % kReductionChunks ? 1 : 0);
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(c)};
    std::mt19937_64 rng(seq);
    std::vector<std::uint64_t> x(used);
    for (std::uint64_t s = 0; s < count; ++s) {
      for (auto& v : x) v = rng() % S;
      const double v = eval(x);
      s1[c] += v;
      s2[c] += v * v;
    }
  });
  CompensatedSum a, b;
  for (std::size_t c = 0; c < kReductionChunks; ++c) {
    a.merge(s1[c]);
    b.merge(s2[c]);
  }
  const double N = static_cast<double>(samples);
  rep.estimate = a.value() / N;
  if (samples > 1) {
    const double var = std::max(0.0, (b.value() - N * rep.estimate * rep.estimate) / (N - 1));
    rep.stderr_ = std::sqrt(var / N);
  }
  return rep;
}

TransferenceCheck check_transference(const SieveParams& sp, const MeasureParams& mp, const DensityReport& density) {
  if (!mp.scale_exact || !sp.w_norm || !density.measured_a_exact)
    throw std::invalid_argument("check_transference: |W| too large for exact comparison");
  std::unordered_set<Poly, PolyHash> A(density.members.begin(), density.members.end());
  const Membership in_A = [&](const Poly& x) { return A.count(x) > 0; };

  TransferenceCheck chk;
  const std::uint64_t size = checked_pow(mp.F.order(), mp.n);
  chk.elements = size;
  chk.sup_bound = std::pow(static_cast<double>(mp.n), mp.k);
  const std::vector<double> nus = nu_table(mp);
  for (std::uint64_t i = 0; i < size; ++i) {
    const Poly f = from_index(mp.F, i);
    const double ph = phi_weight(f, mp, in_A);
    const bool member = in_A(add(mp.F, mul(mp.F, mp.W, f), mp.b));
    if (member) ++chk.in_A;
    if (!(ph >= 0 && ph <= nus[i])) chk.phi_nonnegative_below_nu = false;
    if (member && ph != nus[i]) chk.phi_equals_nu_on_A = false;
    if (!member && ph != 0) chk.phi_zero_off_A = false;
    chk.sup_phi = std::max(chk.sup_phi, ph);
  }
  using boost::multiprecision::pow;
  Rational scale_k = 1;
  for (int j = 0; j < mp.k; ++j) scale_k *= *mp.scale_exact;
  chk.mean_phi = scale_k * Rational(BigInt(chk.in_A), BigInt(size));
  Rational rho_k = 1;
  for (int j = 0; j < mp.k; ++j) rho_k *= Rational(mp.r, mp.n);
  chk.delta = *density.measured_a_exact * rho_k / Rational(BigInt(*sp.w_norm));
  chk.mean_at_least_delta = chk.mean_phi >= chk.delta;
  return chk;
}

}  // namespace ffsieve
