#include "config.hpp"

#include <CLI11.hpp>

#include "ffsieve/poly_io.hpp"

namespace ffsieve::cli {

void ExperimentConfig::add_options(CLI::App& app) {
  app.add_option("--q", q, "Field order (prime power)");
  app.add_option("--p", p, "Field characteristic; overrides --q together with --e");
  app.add_option("--e", e, "Extension degree over F_p");
  app.add_option("--n", n, "Working degree");
  app.add_option("--k", k, "Tuple size; must equal |H| when given");
  app.add_option("--m", m, "Target prime count minus one");
  app.add_option("--eta", eta, "Sieve level fraction in (0, 1/2)");
  app.add_option("--w", w, "Small-prime cutoff degree");
  app.add_option("--eps", eps, "Almost-prime threshold in (0, eta)");
  app.add_option("--rho", rho, "Measure level fraction in (0, eps)");
  app.add_option("--ell", ell, "Configuration size parameter");
  app.add_option("--H", H, "Comma-separated shift polynomials");
  app.add_option("--F-exponent", a, "Weight exponent a in (1 - sum t)^a (default k + 1)");
  app.add_option("--G-exponent", G_exponent, "Cutoff exponent in (1 - x)^a");
  app.add_option("--route", route, "direct | expanded | both (s3/s4: direct | factored | both)");
  app.add_option("--budget", budget, "Maximum objects visited by an enumeration");
  app.add_option("--seed", seed, "Seed for randomized steps");
  app.add_option("--out", out, "Report path (stdout when omitted)");
  app.add_option("--format", format, "json | csv");
  app.add_option("--threads", threads, "Worker threads (0: machine parallelism)");
  app.add_flag("--timing", timing, "Include runtime_ms in the report");
  app.add_option("--manifest", manifest, "Write a run manifest to this path");

  app.add_flag("--count", count, "primes: print the count");
  app.add_flag("--list", list, "primes: list the primes");
  app.add_option("--s", s_re, "zeta: real part of s");
  app.add_option("--s-imag", s_im, "zeta: imaginary part of s");
  app.add_flag("--closed", closed, "zeta: closed form");
  app.add_option("--D", D, "zeta / K: truncation degree");
  app.add_flag("--quadrature", quadrature, "functionals: also integrate numerically");
  app.add_option("--sum", sum, "sums: s1 | s2 | s3 | s4 | sg | conc | k");
  app.add_option("--j", j, "sums: translate index for s2 (0-based)");
  app.add_option("--g", g, "sums: prime g for sg");
  app.add_option("--x", x, "sums k: first argument of K");
  app.add_option("--xp", xp, "sums k: second argument of K");
  app.add_option("--what", what, "measure: lambda-r | nu | pseudorandom | check");
  app.add_option("--f", f, "measure: polynomial argument");
  app.add_option("--pattern", pattern, "measure: ones | zeros | bit string");
  app.add_option("--sampler", sampler, "measure: exhaustive | monte_carlo");
  app.add_option("--samples", samples, "measure: Monte Carlo sample count");
  app.add_option("--kind", kind, "search: configs | twins | translates");
  app.add_option("--h", h, "search: twin shift");
  app.add_option("--mode", mode, "search: exhaustive | randomized");
  app.add_option("--draws", draws, "search: randomized g samples");
}

void ExperimentConfig::validate() const {
  auto fail = [](const std::string& msg) { throw std::invalid_argument("invalid config: " + msg); };
  if (p == 0 && q < 2) fail("q must be a prime power >= 2");
  if (n < 1) fail("n must be >= 1");
  if (k < 0) fail("k must be >= 0");
  if (m < 0) fail("m must be >= 0");
  if (!(eta > 0 && eta < 0.5)) fail("eta must lie in (0, 1/2)");
  if (!(eps > 0 && eps < eta)) fail("eps must lie in (0, eta)");
  if (!(rho > 0 && rho < eps)) fail("rho must lie in (0, eps)");
  if (w < 1) fail("w must be >= 1");
  if (ell < 0 || ell > n) fail("ell must lie in [0, n]");
  if (a < 0) fail("F-exponent must be >= 1");
  if (budget == 0) fail("budget must be positive");
  if (format != "json" && format != "csv") fail("format must be json or csv");
  if (route != "direct" && route != "expanded" && route != "factored" && route != "both")
    fail("route must be direct, expanded, factored or both");
  if (sampler != "exhaustive" && sampler != "monte_carlo") fail("sampler must be exhaustive or monte_carlo");
  if (mode != "exhaustive" && mode != "randomized") fail("mode must be exhaustive or randomized");
  const Field F = field();
  const TupleH T = tuple(F);
  if (k != 0 && static_cast<std::size_t>(k) != T.size()) fail("k does not match |H|");
  if (a != 0 && a < static_cast<int>(T.size())) fail("F-exponent must be >= k");
}

Field ExperimentConfig::field() const {
  try {
    return p ? Field::make(p, e) : Field::of_order(q);
  } catch (const std::exception& ex) {
    throw std::invalid_argument(std::string("invalid config: ") + ex.what());
  }
}

TupleH ExperimentConfig::tuple(const Field& F) const { return TupleH(parse_poly_list(F, H)); }

SieveParams ExperimentConfig::sieve(const Field& F) const {
  TupleH T = tuple(F);
  const int kk = static_cast<int>(T.size());
  return SieveParams::make(F, std::move(T), m, eta, w, eps, n, exponent(kk), budget, seed);
}

MeasureParams ExperimentConfig::measure(const SieveParams& sp) const { return MeasureParams::make(sp, rho, G_exponent); }

nlohmann::json ExperimentConfig::echo() const {
  return {{"q", q},           {"p", p},
          {"e", e},           {"n", n},
          {"k", k},           {"m", m},
          {"eta", eta},       {"w", w},
          {"eps", eps},       {"rho", rho},
          {"ell", ell},       {"H", H},
          {"F_exponent", a},  {"G_exponent", G_exponent},
          {"route", route},   {"budget", budget},
          {"seed", seed},     {"out", out},
          {"format", format}, {"threads", threads},
          {"timing", timing}, {"count", count},
          {"list", list},     {"s", s_re},
          {"s_imag", s_im},   {"closed", closed},
          {"D", D},           {"quadrature", quadrature},
          {"sum", sum},       {"j", j},
          {"g", g},           {"x", x},
          {"xp", xp},         {"what", what},
          {"f", f},           {"pattern", pattern},
          {"sampler", sampler}, {"samples", samples},
          {"kind", kind},     {"h", h},
          {"mode", mode},     {"draws", draws}};
}

}  // namespace ffsieve::cli
