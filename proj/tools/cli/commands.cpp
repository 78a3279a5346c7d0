#include "commands.hpp"

#include <chrono>
#include <ctime>
#include <functional>

#include <CLI11.hpp>

#include "config.hpp"
#include "ffsieve/parallel.hpp"
#include "ffsieve/poly_io.hpp"
#include "ffsieve/primes.hpp"
#include "ffsieve/zeta.hpp"
#include "report.hpp"

namespace ffsieve::cli {

namespace {

std::string utc_now() {
  const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json complex_json(std::complex<double> z) { return {{"re", z.real()}, {"im", z.imag()}}; }

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json cmd_primes(const ExperimentConfig& c) {
  const Field F = c.field();
  json j = field_json(F);
  j["command"] = "primes";
  j["n"] = c.n;
  j["count"] = bigint_json(prime_count(F.order(), c.n));
  if (c.list) j["primes"] = poly_list_json(F, *enumerate_primes(F, c.n));
  return j;
}

json cmd_zeta(const ExperimentConfig& c) {
  const Field F = c.field();
  const std::complex<double> s(c.s_re, c.s_im);
  const bool closed = c.closed || c.D < 0;
  const ZetaValue z = closed ? zeta(F.order(), s) : zeta(F.order(), s, c.D);
  json j = field_json(F);
  j["command"] = "zeta";
  j["s"] = complex_json(s);
  j["value"] = complex_json(z.value);
  j["closed"] = z.closed();
  j["D"] = closed ? json(nullptr) : json(c.D);
  if (!closed) {
    j["closed_value"] = complex_json(zeta(F.order(), s).value);
    j["tail_bound"] = zeta_truncation_bound(F.order(), c.s_re, c.D);
  }
  return j;
}

json cmd_admissible(const ExperimentConfig& c) {
  const Field F = c.field();
  const TupleH H = c.tuple(F);
  const Admissibility a = is_admissible(F, H);
  json j = field_json(F);
  j["command"] = "admissible";
  j["H"] = poly_list_json(F, H.elements());
  j["admissible"] = a.admissible;
  j["witness"] = a.witness ? poly_json(F, *a.witness) : json(nullptr);
  return j;
}

json cmd_setup(const ExperimentConfig& c) {
  const Field F = c.field();
  const SieveParams P = c.sieve(F);
  json j = params_json(P);
  j["command"] = "setup";
  j["deg_W"] = P.deg_W();
  j["w_ratio"] = P.w_ratio;
  j["norm_W"] = P.w_norm ? json(*P.w_norm) : json(nullptr);
  j["phi_W"] = P.w_phi ? json(*P.w_phi) : json(nullptr);
  j["admissible"] = is_admissible(F, P.H).admissible;
  return j;
}

json cmd_functionals(const ExperimentConfig& c) {
  const Field F = c.field();
  const int k = c.k > 0 ? c.k : static_cast<int>(c.tuple(F).size());
  const WeightFn W(k, c.exponent(k));
  const ExactFunctionals ex = functionals_exact(W);
  json j = to_json(to_functionals(ex, k));
  j["command"] = "functionals";
  j["k"] = k;
  j["a"] = W.exponent();
  j["m"] = c.m;
  j["eta"] = c.eta;
  j["alpha_exact"] = rational_json(ex.alpha);
  j["beta_exact"] = rational_json(ex.beta);
  j["gamma_exact"] = rational_json(ex.gamma);
  j["crucial_ratio_exact"] = rational_json(ex.crucial_ratio(k));
  j["crucial_margin"] = to_double(ex.crucial_ratio(k)) - 2.0 * c.m / c.eta;
  if (c.quadrature) j["quadrature"] = to_json(functionals_quadrature(W));
  return j;
}

json cmd_sums(const ExperimentConfig& c) {
  const Field F = c.field();
  const SieveParams P = c.sieve(F);
  const std::string& which = c.sum;

  if (which == "k") {
    const int D = c.D >= 0 ? c.D : 60 * P.r;
    const auto K = euler_K(P, c.x, c.xp, D);
    const auto A = euler_K_asymptotic(P, c.x, c.xp);
    json j = params_json(P);
    j["label"] = "K";
    j["D"] = D;
    j["x"] = c.x;
    j["xp"] = c.xp;
    j["value"] = complex_json(K);
    j["predicted"] = complex_json(A);
    j["rel_error"] = std::abs(K - A) / std::abs(A);
    j["tail_bound"] = euler_K_tail_bound(P, D);
    return j;
  }

  std::vector<Route> routes;
  const bool s34 = which == "s3" || which == "s4";
  if (c.route == "both")
    routes = s34 ? std::vector<Route>{Route::Direct, Route::Factored} : std::vector<Route>{Route::Direct, Route::Expanded};
  else
    routes = {parse_route(c.route)};

  auto one = [&](Route route) -> SumReport {
    SumOptions opt;
    opt.route = route;
    if (which == "s1") return sum_S1(P, opt);
    if (which == "s2") return sum_S2(P, static_cast<std::size_t>(c.j), opt);
    if (which == "sg") {
      if (c.g.empty()) throw std::invalid_argument("invalid config: sums --sum sg needs --g");
      return sum_Sg(P, parse_poly(F, c.g), opt);
    }
    if (which == "conc") {
      if (route != Route::Direct) throw std::invalid_argument("invalid config: conc uses the direct route");
      return concentration_total(P);
    }
    if (s34) {
      auto [s3, s4] = sum_S3_S4(P, route);
      return which == "s3" ? s3 : s4;
    }
    throw UsageError("unknown sum '" + which + "' (s1|s2|s3|s4|sg|conc|k)");
  };

  if (routes.size() == 1) {
    json j = to_json(one(routes[0]), P);
    if (which == "sg") j["g"] = c.g;
    return j;
  }
  const SumReport a = one(routes[0]), b = one(routes[1]);
  json j = params_json(P);
  j["label"] = a.label;
  j[a.route] = to_json(a, P);
  j[b.route] = to_json(b, P);
  j["route_rel_diff"] = relative_error(a.exact, b.exact);
  return j;
}

json cmd_density(const ExperimentConfig& c) {
  const Field F = c.field();
  const SieveParams P = c.sieve(F);
  return to_json(density_experiment(P), P);
}

ExponentPattern make_pattern(const std::string& s, int ell) {
  if (s == "ones") return ExponentPattern::all_ones(ell);
  if (s == "zeros") return ExponentPattern::all_zero(ell);
  return ExponentPattern::from_bits(ell, s);
}

json cmd_measure(const ExperimentConfig& c) {
  const Field F = c.field();
  const SieveParams P = c.sieve(F);
  const MeasureParams mp = c.measure(P);
  json j = params_json(P);
  j["rho"] = mp.rho;
  j["r_measure"] = mp.r;
  j["what"] = c.what;
  if (c.what == "lambda-r" || c.what == "nu") {
    if (c.f.empty()) throw std::invalid_argument("invalid config: measure --what " + c.what + " needs --f");
    const Poly f = parse_poly(F, c.f);
    j["f"] = poly_json(F, f);
    if (c.what == "lambda-r") {
      j["value"] = gy_divisor_sum(F, f, mp.r, mp.G);
    } else {
      if (f.degree() >= c.n) throw std::invalid_argument("invalid config: nu needs deg f < n");
      j["value"] = nu(f, mp);
    }
    return j;
  }
  if (c.what == "pseudorandom") {
    const FqnSpace V(F, c.n);
    const auto table = nu_table(mp);
    const auto pat = make_pattern(c.pattern, c.ell);
    const Sampler s = c.sampler == "exhaustive" ? Sampler::Exhaustive : Sampler::MonteCarlo;
    json e = to_json(pseudorandom_estimate(V, table, pat, s, c.samples, c.seed, c.budget));
    e["params"] = j;
    return e;
  }
  if (c.what == "check") {
    const DensityReport d = density_experiment(P);
    json chk = to_json(check_transference(P, mp, d));
    chk["params"] = j;
    chk["measured_a"] = d.measured_a;
    return chk;
  }
  throw UsageError("unknown measure '" + c.what + "' (lambda-r|nu|pseudorandom|check)");
}

json cmd_search(const ExperimentConfig& c) {
  const Field F = c.field();
  SearchOptions opt;
  opt.budget = c.budget;
  opt.seed = c.seed;
  opt.draws = c.draws;
  opt.mode = c.mode == "exhaustive" ? SearchMode::Exhaustive : SearchMode::Randomized;
  SearchReport rep;
  if (c.kind == "configs")
    rep = find_prime_configs(F, c.n, c.ell, opt);
  else if (c.kind == "twins")
    rep = find_twin_configs(F, c.n, c.ell, parse_poly(F, c.h), opt);
  else if (c.kind == "translates")
    rep = find_mplus1_translates(F, c.n, c.tuple(F).elements(), c.ell, c.m, opt);
  else
    throw UsageError("unknown search kind '" + c.kind + "' (configs|twins|translates)");
  json j = to_json(F, rep);
  j["reverified"] = reverify(F, rep);
  return j;
}

json cmd_selftest(int& status) {
  const auto results = run_selftest();
  json checks = json::array();
  int failed = 0;
  for (const auto& r : results) {
    checks.push_back({{"name", r.name}, {"ok", r.ok}, {"detail", r.detail}});
    if (!r.ok) ++failed;
  }
  status = failed ? kExitFailure : kExitOk;
  return {{"command", "selftest"}, {"passed", results.size() - failed}, {"failed", failed}, {"checks", checks}};
}

void print_error(std::ostream& err, const std::string& kind, const std::string& msg) {
  err << compact_dump(json{{"error", kind}, {"message", msg}}) << "\n";
}

}  // namespace

int cmd_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  ExperimentConfig cfg;
  CLI::App app{"Sieve and configuration experiments over F_q[t]", "ffsieve"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.set_version_flag("--version", kToolVersion);
  app.set_config("--config", "", "key=value configuration file; flags override it");
  cfg.add_options(app);
  app.require_subcommand(1, 1);

  using Handler = std::function<json(const ExperimentConfig&, int&)>;
  std::vector<std::pair<CLI::App*, Handler>> subs;
  auto add = [&](const char* name, const char* help, Handler h) {
    CLI::App* s = app.add_subcommand(name, help);
    s->fallthrough();
    subs.emplace_back(s, std::move(h));
  };
  auto plain = [](json (*fn)(const ExperimentConfig&)) {
    return [fn](const ExperimentConfig& c, int&) { return fn(c); };
  };
  add("primes", "Prime counts and lists", plain(cmd_primes));
  add("zeta", "Zeta function, closed or truncated", plain(cmd_zeta));
  add("admissible", "Admissibility of H", plain(cmd_admissible));
  add("setup", "W, b and derived sieve parameters", plain(cmd_setup));
  add("functionals", "alpha, beta, gamma and the crucial ratio", plain(cmd_functionals));
  add("sums", "Sieve sums s1|s2|s3|s4|sg|conc and K", plain(cmd_sums));
  add("density", "Direct count of A and the measured constant", plain(cmd_density));
  add("measure", "Divisor sums, measures and pseudorandomness estimates", plain(cmd_measure));
  add("search", "Configuration searches", plain(cmd_search));
  add("selftest", "Run the worked-example suite", [](const ExperimentConfig&, int& st) { return cmd_selftest(st); });

  const std::string started = utc_now();
  const auto t0 = std::chrono::steady_clock::now();
  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
      app.parse(rev);
    } catch (const CLI::Success&) {
      out << (app.get_option("--version")->count() ? std::string(kToolVersion) + "\n" : app.help());
      return kExitOk;
    } catch (const CLI::ParseError& e) {
      throw UsageError(e.what());
    }
    cfg.validate();
    set_worker_count(cfg.threads);
    const Format format = parse_format(cfg.format);

    int status = kExitOk;
    json report;
    std::string command;
    for (auto& [sub, handler] : subs) {
      if (!sub->parsed()) continue;
      command = sub->get_name();
      report = handler(cfg, status);
    }
    if (cfg.timing)
      report["runtime_ms"] =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    emit_report(report, format, cfg.out, out);

    if (!cfg.manifest.empty()) {
      json m = {{"tool", "ffsieve"},
                {"tool_version", kToolVersion},
                {"command", command},
                {"config", cfg.echo()},
                {"started_utc", started},
                {"finished_utc", utc_now()},
                {"exit_code", status},
                {"reports", cfg.out.empty() ? json::array() : json::array({cfg.out})}};
      emit_report(m, Format::Json, cfg.manifest, out);
    }
    return status;
  } catch (const UsageError& e) {
    print_error(err, "usage", e.what());
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    print_error(err, "budget", e.what());
    return kExitBudget;
  } catch (const IoError& e) {
    print_error(err, "io", e.what());
    return kExitIo;
  } catch (const NoValidResidue& e) {
    print_error(err, "invalid_config", e.what());
    return kExitInvalidConfig;
  } catch (const QuadratureError& e) {
    print_error(err, "quadrature", std::string(e.what()) + " (achieved " + std::to_string(e.achieved()) + ")");
    return kExitFailure;
  } catch (const std::invalid_argument& e) {
    print_error(err, "invalid_config", e.what());
    return kExitInvalidConfig;
  } catch (const std::domain_error& e) {
    print_error(err, "invalid_config", e.what());
    return kExitInvalidConfig;
  } catch (const std::exception& e) {
    print_error(err, "error", e.what());
    return kExitFailure;
  }
}

}  // namespace ffsieve::cli
