#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "agc/cli.hpp"
#include "agc/surface_invariants.hpp"

using json = nlohmann::json;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int rc = agc::cli::run(args, out, err);
  return {rc, out.str(), err.str()};
}

/// Self-deleting fixture file.
class TempJson {
 public:
  TempJson(const std::string& name, const std::string& content)
      : path_("cli_test_" + name + ".json") {
    std::ofstream f(path_);
    f << content;
  }
  ~TempJson() { std::remove(path_.c_str()); }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

}  // namespace

TEST_CASE("invariants round trip against the in-process report") {
  TempJson cubic("cubic", R"({"d": 3, "N": 3, "s3_odd": {"0": 6}})");
  const RunResult r = run_cli({"invariants", cubic.path()});
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j.at("K_square") == 3);
  CHECK(j.at("euler_X") == 9);
  CHECK(j.at("chi_OX").at("num") == 1);
  CHECK(j.at("chi_OX").at("den") == 1);
  CHECK(j.at("noether_ok") == true);
  CHECK(j.at("hodge_bound").at("num") == 3);
  CHECK(j.at("hodge_ok") == true);

  agc::SingularProfile p;
  p.d = 3;
  p.N = 3;
  p.n[0] = 6;
  const agc::InvariantReport report = agc::make_invariant_report(p);
  CHECK(j.at("genus_B").get<long>() == report.genus_B.get_si());
  CHECK(j.at("dual_degree").get<long>() == report.dual_degree.get_si());
  CHECK(j.at("R_square").get<long>() == report.R_square.get_si());
}

TEST_CASE("json output is byte-for-byte deterministic") {
  TempJson quartic("quartic",
                   R"({"d": 6, "N": 4, "s3_odd": {"0": 24}, "s2": {"1": 12}})");
  const RunResult a = run_cli({"invariants", quartic.path()});
  const RunResult b = run_cli({"invariants", quartic.path()});
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);

  const RunResult g1 = run_cli({"galois", quartic.path()});
  const RunResult g2 = run_cli({"galois", quartic.path()});
  CHECK(g1.exit_code == 0);
  CHECK(g1.out == g2.out);
}

TEST_CASE("check rejects a cusp-divisibility violation with exit 2") {
  TempJson bad("bad", R"({"d": 3, "N": 3, "s3_odd": {"0": 1}})");
  const RunResult r = run_cli({"check", bad.path()});
  CHECK(r.exit_code == agc::cli::kExitValidation);
  const json j = json::parse(r.out);
  CHECK(j.at("admissible") == false);
  bool cusp_failed = false;
  for (const auto& c : j.at("checks")) {
    if (c.at("name") == "cusp_divisibility") cusp_failed = !c.at("passed");
  }
  CHECK(cusp_failed);
}

TEST_CASE("structurally invalid profiles exit 2 before computing") {
  TempJson invalid("invalid", R"({"d": 3, "N": 2, "s3_odd": {"0": 3}})");
  const RunResult r = run_cli({"invariants", invalid.path()});
  CHECK(r.exit_code == agc::cli::kExitValidation);
  CHECK(r.err.find("S3-requires-N>=3") != std::string::npos);
}

TEST_CASE("galois report carries the discrepancy flags") {
  TempJson cubic("cubic2", R"({"d": 3, "N": 3, "s3_odd": {"0": 6}})");
  const RunResult r = run_cli({"galois", cubic.path()});
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j.at("eZ_closed").at("num") == 42);
  CHECK(j.at("eZ_assembled").at("num") == 24);
  CHECK(j.at("chiZ_from_assembled").at("num") == 2);
  const auto& flags = j.at("discrepancy_flags");
  CHECK(std::find(flags.begin(), flags.end(), "eZ_closed_vs_assembled") !=
        flags.end());
}

TEST_CASE("local-model verify passes and exits 0") {
  const RunResult r = run_cli({"local-model", "--n", "2", "--verify"});
  CHECK(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j.at("all_passed") == true);
  CHECK(j.at("classification") == "A5");
}

TEST_CASE("monodromy subcommand certifies the three models") {
  const RunResult smooth = run_cli({"monodromy", "--model", "smooth2"});
  REQUIRE(smooth.exit_code == 0);
  const json js = json::parse(smooth.out);
  CHECK(js.at("group") == "Z2");
  CHECK(js.at("order") == 2);
  CHECK(js.at("generators").size() == 1);

  const RunResult s3 = run_cli({"monodromy", "--model", "s3", "--n", "2"});
  REQUIRE(s3.exit_code == 0);
  const json j3 = json::parse(s3.out);
  CHECK(j3.at("group") == "S3");
  CHECK(j3.at("order") == 6);
  CHECK(j3.at("certified") == true);

  const RunResult s2 = run_cli({"monodromy", "--model", "s2pair", "--k", "3"});
  REQUIRE(s2.exit_code == 0);
  CHECK(json::parse(s2.out).at("group") == "Z2xZ2");
}

TEST_CASE("enumerate emits one admissible profile per line") {
  const RunResult r =
      run_cli({"enumerate", "--d", "3", "--N", "3", "--k-max", "0"});
  REQUIRE(r.exit_code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::vector<json> rows;
  while (std::getline(lines, line)) rows.push_back(json::parse(line));
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].at("profile").at("s3_odd").at("0") == 6);
  CHECK(rows[1].at("profile").at("s3_odd").at("0") == 9);
  for (const auto& row : rows) CHECK(row.at("admissible") == true);
}

TEST_CASE("enumerate brute force agrees with the pruned default") {
  const std::vector<std::string> base{"enumerate", "--d",        "2",
                                      "--N",       "4",          "--k-max",
                                      "1",         "--count-cap", "5"};
  std::vector<std::string> brute = base;
  brute.push_back("--brute-force");
  const RunResult a = run_cli(base);
  const RunResult b = run_cli(brute);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("table format prints aligned rows") {
  TempJson cubic("cubic3", R"({"d": 3, "N": 3, "s3_odd": {"0": 6}})");
  const RunResult r =
      run_cli({"invariants", cubic.path(), "--format", "table"});
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("K_square") != std::string::npos);
  CHECK(r.out.find("chi_OX") != std::string::npos);
  // rationals render as plain integers when the denominator is one
  CHECK(r.out.find("/") == std::string::npos);
}

TEST_CASE("usage and file errors") {
  CHECK(run_cli({"no-such-command"}).exit_code == agc::cli::kExitUsage);
  CHECK(run_cli({}).exit_code == agc::cli::kExitUsage);
  CHECK(run_cli({"invariants", "does_not_exist.json"}).exit_code ==
        agc::cli::kExitFile);
  CHECK(run_cli({"enumerate", "--d", "3", "--bogus"}).exit_code ==
        agc::cli::kExitUsage);
  TempJson garbage("garbage", "{not json");
  CHECK(run_cli({"invariants", garbage.path()}).exit_code ==
        agc::cli::kExitValidation);
}
