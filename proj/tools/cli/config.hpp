#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "ffsieve/arith.hpp"
#include "ffsieve/field.hpp"
#include "ffsieve/sieve.hpp"
#include "ffsieve/transference.hpp"

namespace CLI {
class App;
}

namespace ffsieve::cli {

/// Every knob of one experiment run. Loaded from flags and an optional key=value file
/// (flags win), then validated before any computation.
struct ExperimentConfig {
  // field: either q, or p with e
  std::uint64_t q = 2;
  std::uint32_t p = 0;
  unsigned e = 1;

  int n = 10;
  int k = 0;  // 0: taken from H
  int m = 0;
  double eta = 0.4;
  int w = 2;
  double eps = 0.2;
  double rho = 0.1;
  int ell = 1;
  std::string H = "0";
  int a = 0;  // weight exponent; 0 selects k + 1
  int G_exponent = 1;
  std::string route = "direct";
  std::uint64_t budget = kDefaultBudget;
  std::uint64_t seed = kDefaultSeed;
  std::string out;
  std::string format = "json";
  unsigned threads = 0;
  bool timing = false;
  std::string manifest;

  // primes
  bool count = false;
  bool list = false;
  // zeta
  double s_re = 2.0;
  double s_im = 0.0;
  bool closed = false;
  int D = -1;
  // functionals
  bool quadrature = false;
  // sums
  std::string sum = "s1";
  int j = 0;
  std::string g;
  double x = 0.0;
  double xp = 0.0;
  // measure
  std::string what = "check";
  std::string f;
  std::string pattern = "ones";
  std::string sampler = "exhaustive";
  std::uint64_t samples = 10000;
  // search
  std::string kind = "configs";
  std::string h = "1";
  std::string mode = "exhaustive";
  std::uint64_t draws = 64;

  void add_options(CLI::App& app);
  /// Range checks shared by every subcommand; throws std::invalid_argument.
  void validate() const;

  Field field() const;
  TupleH tuple(const Field& F) const;
  int exponent(int k) const { return a > 0 ? a : k + 1; }
  SieveParams sieve(const Field& F) const;
  MeasureParams measure(const SieveParams& sp) const;

  /// Effective configuration, echoed into manifests.
  nlohmann::json echo() const;
};

}  // namespace ffsieve::cli
