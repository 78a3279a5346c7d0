#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "report.hpp"

using namespace ffsieve::cli;

namespace {

struct Run {
  int rc;
  std::string out, err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int rc = cmd_dispatch(args, out, err);
  return {rc, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("cli examples") {
  auto r = run({"primes", "--q", "2", "--n", "4", "--count"});
  CHECK(r.rc == 0);
  CHECK(json::parse(r.out)["count"] == 3);
  r = run({"admissible", "--q", "2", "--H", "0,1"});
  CHECK(json::parse(r.out)["admissible"] == false);
  CHECK(json::parse(r.out)["witness"] == "t");
  r = run({"zeta", "--q", "2", "--s", "2", "--closed"});
  CHECK(json::parse(r.out)["value"]["re"] == 2.0);
}

TEST_CASE("exit codes") {
  CHECK(run({}).rc == kExitUsage);
  CHECK(run({"primes", "--bogus"}).rc == kExitUsage);
  CHECK(run({"--help"}).rc == kExitOk);
  CHECK(run({"primes", "--q", "6"}).rc == kExitInvalidConfig);
  CHECK(run({"setup", "--q", "2", "--H", "0,1", "--n", "12"}).rc == kExitInvalidConfig);
  CHECK(run({"setup", "--eta", "0.7"}).rc == kExitInvalidConfig);
  CHECK(run({"sums", "--q", "2", "--n", "12", "--budget", "10"}).rc == kExitBudget);
  CHECK(run({"primes", "--out", "/nonexistent/dir/x.json"}).rc == kExitIo);
  const auto e = run({"primes", "--q", "6"});
  CHECK(json::parse(e.err)["error"] == "invalid_config");
}

TEST_CASE("sums with both routes") {
  const auto r = run({"sums", "--q", "2", "--n", "12", "--sum", "s1", "--route", "both", "--F-exponent", "1"});
  REQUIRE(r.rc == 0);
  const auto j = json::parse(r.out);
  CHECK(j["direct"]["exact"] == 738.0);
  CHECK(j["expanded"]["exact"] == 738.0);
  CHECK(j["route_rel_diff"] == 0.0);
}

TEST_CASE("config file, flags win") {
  const auto path = std::filesystem::temp_directory_path() / "ffsieve_cli_test.ini";
  std::ofstream(path) << "q=3\nn=2\n";
  auto r = run({"primes", "--config", path.string()});
  CHECK(json::parse(r.out)["count"] == 3);
  r = run({"primes", "--config", path.string(), "--n", "3"});
  CHECK(json::parse(r.out)["count"] == 8);
  std::filesystem::remove(path);
}

TEST_CASE("reports are byte-identical on re-run") {
  const auto dir = std::filesystem::temp_directory_path() / "ffsieve_cli_det";
  std::filesystem::create_directories(dir);
  for (const std::string fmt : {"json", "csv"}) {
    const auto a = dir / ("a." + fmt), b = dir / ("b." + fmt);
    const std::vector<std::string> base{"search", "--q", "3", "--n", "3", "--kind", "twins", "--ell", "0", "--format", fmt,
                                        "--out"};
    auto args = base;
    args.push_back(a.string());
    CHECK(run(args).rc == 0);
    args = base;
    args.push_back(b.string());
    CHECK(run(args).rc == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK(!slurp(a).empty());
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("manifest") {
  const auto path = std::filesystem::temp_directory_path() / "ffsieve_manifest.json";
  const auto r = run({"primes", "--manifest", path.string()});
  CHECK(r.rc == 0);
  const auto m = json::parse(slurp(path));
  CHECK(m["command"] == "primes");
  CHECK(m["tool_version"] == kToolVersion);
  CHECK(m["config"]["q"] == 2);
  std::filesystem::remove(path);
}

TEST_CASE("stable dump") {
  json j = {{"b", 0.1 + 0.2}, {"a", -0.0}, {"c", std::nan("")}};
  const auto s = stable_dump(j);
  CHECK(s == "{\n  \"a\": 0,\n  \"b\": 0.3,\n  \"c\": null\n}\n");
  CHECK(json::parse(s)["b"] == 0.3);
}

TEST_CASE("json round trip") {
  const auto r = run({"functionals", "--H", "0,t", "--q", "3", "--quadrature"});
  REQUIRE(r.rc == 0);
  const auto j = json::parse(r.out);
  CHECK(json::parse(stable_dump(j)) == j);
  CHECK(j["alpha_exact"] == "3");
  CHECK(j["beta_exact"] == "9/5");
}

TEST_CASE("csv header is the sorted key set") {
  const json j = {{"b", 1}, {"a", "x,y"}, {"c", {1, 2}}};
  const auto csv = to_csv(j);
  CHECK(csv.substr(0, csv.find('\n')) == "a,b,c");
  CHECK(csv.find("\"x,y\"") != std::string::npos);
}
