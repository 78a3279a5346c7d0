#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <string>

#include "ffsieve/numeric.hpp"

namespace ffsieve {

/// Sieve weight F(t) = (1 - t_1 - ... - t_k)^a on the simplex {t >= 0, sum t <= 1},
/// zero outside. Symmetric; requires integer a >= k >= 1 so the k-th mixed partial
/// exists almost everywhere.
class WeightFn {
 public:
  WeightFn(int k, int a);

  int arity() const { return k_; }
  int exponent() const { return a_; }
  std::string family() const { return "power"; }

  bool in_support(std::span<const double> t) const;
  double operator()(std::span<const double> t) const;
  /// Partial derivative with orders[i] derivatives in t_i, evaluated a.e.: zero outside
  /// the open simplex and whenever the total order exceeds a.
  double partial(std::span<const int> orders, std::span<const double> t) const;

  /// F(D_1/r, ..., D_k/r) for integer degrees.
  double at_degrees(std::span<const int> degrees, int r) const;
  Rational rational_at_degrees(std::span<const int> degrees, int r) const;

 private:
  int k_;
  int a_;
};

struct ExactFunctionals {
  Rational alpha, beta, gamma;
  /// k beta / alpha
  Rational crucial_ratio(int k) const { return Rational(k) * beta / alpha; }
};

struct Functionals {
  double alpha = 0, beta = 0, gamma = 0;
  double crucial_ratio = 0;      // k beta / alpha
  double achieved_error = 0;     // quadrature error estimate; 0 for exact
  std::string method;            // "exact" or "quadrature"
};

/// Closed forms (Beta-function rationals):
///   alpha = (a!/(a-k)!)^2 (2a-2k)!/(2a-k)!
///   beta  = (a!/(a-k+1)!)^2 (2a-2k+2)!/(2a-k+1)!
///   gamma = (a!/(a-k-1)!)^2 (2a-2k-2)!/(2a-k-2)!   (0 when a = k)
ExactFunctionals functionals_exact(const WeightFn& F);
/// alpha, beta, gamma by adaptive quadrature of the squared partials over the simplex.
Functionals functionals_quadrature(const WeightFn& F, double tol = 1e-12);
Functionals to_functionals(const ExactFunctionals& ex, int k);

class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double achieved) : std::runtime_error(what), achieved_(achieved) {}
  double achieved() const { return achieved_; }

 private:
  double achieved_;
};

struct QuadratureResult {
  double value = 0;
  double error = 0;
  long evaluations = 0;
};

/// Integral over the standard simplex {t in [0,1]^dim : sum t <= 1} by iterated adaptive
/// Gauss-Kronrod (7/15) quadrature. dim = 0 evaluates f at the empty point.
/// Throws QuadratureError if the tolerance is not reached.
QuadratureResult integrate_simplex(int dim, const std::function<double(std::span<const double>)>& f,
                                   double tol = 1e-12);

}  // namespace ffsieve
