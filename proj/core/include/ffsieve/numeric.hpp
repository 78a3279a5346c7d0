#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ffsieve {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  CompensatedSum& operator+=(double x) {
    add(x);
    return *this;
  }
  void merge(const CompensatedSum& o) {
    add(o.sum_);
    add(o.comp_);
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// Moebius function on positive integers.
int integer_moebius(std::uint64_t n);
/// Positive divisors in increasing order.
std::vector<std::uint64_t> integer_divisors(std::uint64_t n);
/// Distinct prime divisors in increasing order.
std::vector<std::uint64_t> integer_prime_factors(std::uint64_t n);

/// log(1 + z) / z, accurate for tiny |z| (returns 1 at z = 0).
std::complex<double> log1p_over(std::complex<double> z);

double to_double(const Rational& r);

}  // namespace ffsieve
