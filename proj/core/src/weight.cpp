#include "ffsieve/weight.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace ffsieve {

namespace {

Rational factorial(int n) {
  BigInt v = 1;
  for (int i = 2; i <= n; ++i) v *= i;
  return Rational(v);
}

// a!/(a-m)!
double falling(int a, int m) {
  double v = 1;
  for (int i = 0; i < m; ++i) v *= (a - i);
  return v;
}

}  // namespace

WeightFn::WeightFn(int k, int a) : k_(k), a_(a) {
  if (k < 1) throw std::invalid_argument("WeightFn: arity k must be >= 1");
  if (a < k) throw std::invalid_argument("WeightFn: exponent a must be >= k");
}

bool WeightFn::in_support(std::span<const double> t) const {
  double s = 0;
  for (double x : t) {
    if (x < 0) return false;
    s += x;
  }
  return s <= 1.0;
}

double WeightFn::operator()(std::span<const double> t) const {
  if (!in_support(t)) return 0.0;
  const double s = std::accumulate(t.begin(), t.end(), 0.0);
  return std::pow(1.0 - s, a_);
}

double WeightFn::partial(std::span<const int> orders, std::span<const double> t) const {
  const int m = std::accumulate(orders.begin(), orders.end(), 0);
  if (m == 0) return (*this)(t);
  if (m > a_) return 0.0;
  double s = 0;
  for (double x : t) {
    if (x < 0) return 0.0;
    s += x;
  }
  if (s >= 1.0) return 0.0;
  const double sign = (m % 2 == 0) ? 1.0 : -1.0;
  return sign * falling(a_, m) * std::pow(1.0 - s, a_ - m);
}

double WeightFn::at_degrees(std::span<const int> degrees, int r) const {
  if (r < 1) throw std::invalid_argument("WeightFn::at_degrees: r must be >= 1");
  long long s = 0;
  for (int d : degrees) {
    if (d < 0) return 0.0;
    s += d;
  }
  if (s >= r) return 0.0;
  return std::pow(static_cast<double>(r - s) / r, a_);
}

Rational WeightFn::rational_at_degrees(std::span<const int> degrees, int r) const {
  if (r < 1) throw std::invalid_argument("WeightFn::rational_at_degrees: r must be >= 1");
  long long s = 0;
  for (int d : degrees) {
    if (d < 0) return Rational(0);
    s += d;
  }
  if (s >= r) return Rational(0);
  const BigInt num = boost::multiprecision::pow(BigInt(r - s), static_cast<unsigned>(a_));
  const BigInt den = boost::multiprecision::pow(BigInt(r), static_cast<unsigned>(a_));
  return Rational(num, den);
}

ExactFunctionals functionals_exact(const WeightFn& F) {
  const int k = F.arity(), a = F.exponent();
  auto sq = [](const Rational& x) { return x * x; };
  ExactFunctionals out;
  out.alpha = sq(factorial(a) / factorial(a - k)) * factorial(2 * a - 2 * k) / factorial(2 * a - k);
  out.beta = sq(factorial(a) / factorial(a - k + 1)) * factorial(2 * a - 2 * k + 2) / factorial(2 * a - k + 1);
  if (a >= k + 1)
    out.gamma = sq(factorial(a) / factorial(a - k - 1)) * factorial(2 * a - 2 * k - 2) / factorial(2 * a - k - 2);
  else
    out.gamma = 0;
  return out;
}

Functionals to_functionals(const ExactFunctionals& ex, int k) {
  Functionals f;
  f.alpha = to_double(ex.alpha);
  f.beta = to_double(ex.beta);
  f.gamma = to_double(ex.gamma);
  f.crucial_ratio = to_double(ex.crucial_ratio(k));
  f.method = "exact";
  return f;
}

Functionals functionals_quadrature(const WeightFn& F, double tol) {
  const int k = F.arity();
  Functionals out;
  out.method = "quadrature";

  // alpha: d^k F / dt_1 ... dt_k, squared, over the k-simplex.
  std::vector<int> ones(k, 1);
  auto alpha = integrate_simplex(k, [&](std::span<const double> t) {
    const double v = F.partial(ones, t);
    return v * v;
  }, tol);

  // beta: E(t_2..t_k) = F(0, t_2, ..., t_k); mixed partial in t_2..t_k, squared.
  std::vector<int> boundary(k, 1);
  boundary[0] = 0;
  auto beta = integrate_simplex(k - 1, [&](std::span<const double> rest) {
    std::vector<double> t(k, 0.0);
    std::copy(rest.begin(), rest.end(), t.begin() + 1);
    const double v = F.partial(boundary, t);
    return v * v;
  }, tol);

  std::vector<int> second(k, 1);
  second[0] = 2;
  auto gamma = integrate_simplex(k, [&](std::span<const double> t) {
    const double v = F.partial(second, t);
    return v * v;
  }, tol);

  out.alpha = alpha.value;
  out.beta = beta.value;
  out.gamma = gamma.value;
  out.crucial_ratio = k * out.beta / out.alpha;
  out.achieved_error = std::max({alpha.error, beta.error, gamma.error});
  return out;
}

}  // namespace ffsieve
