#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
  int exit_code;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::string& args) {
  const std::string out_path = "/tmp/vilenkin_cli_out.txt";
  const std::string err_path = "/tmp/vilenkin_cli_err.txt";
  const std::string cmd = std::string(VILENKIN_CLI_PATH) + " " + args + " > " +
                          out_path + " 2> " + err_path;
  const int status = std::system(cmd.c_str());
  auto slurp = [](const std::string& path) {
    std::ifstream f(path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
  };
  return RunResult{WEXITSTATUS(status), slurp(out_path), slurp(err_path)};
}

}  // namespace

TEST_CASE("decompose-indicator emits the expected exact payload") {
  const auto r = run_cli("decompose-indicator --p 2 --r 1 --x 0");
  REQUIRE(r.exit_code == 0);
  const auto doc = nlohmann::ordered_json::parse(r.out);
  CHECK(doc["command"] == "decompose-indicator");
  CHECK(doc["status"] == "ok");
  CHECK(doc["result"]["reconstruction_error"] == "0");
  const auto& coefs = doc["result"]["coefficients"];
  REQUIRE(coefs.size() == 2);
  CHECK(coefs[0]["coeff"] == "1/2");
  CHECK(coefs[1]["coeff"] == "1/2");
}

TEST_CASE("every subcommand's JSON payload round-trips byte for byte") {
  const std::vector<std::string> cmds = {
      "decompose-indicator --p 3 --r 2 --x 4",
      "heis-decompose --p 2 --r 1 --vx 1 --vy 0 --vz 1",
      "sigma-table --p 3 --m 1 --max-n 30",
      "transform-bench --p 2 --r 6 --trials 3",
      "rw-dim --p 2 --n 1",
      "rw-dim --group heis --p 2 --n 1 --at 1,2,3",
      "dirac-spectrum --p 2 --s 1 --shells 6",
      "commutator-check --p 2 --shell 1 --L 4",
      "qdq-check --p 2 --r 1 --x 0 --L 2 --trials 3",
      "gk-growth --p 2 --N 3 --gens 2 --k-max 12",
      "phi-check --p 2 --m 1 --N 16 --family translate --c 2",
      "dual-enumerate --p 3 --n 1",
  };
  for (const auto& cmd : cmds) {
    CAPTURE(cmd);
    const auto r = run_cli(cmd);
    REQUIRE(r.exit_code == 0);
    const auto doc = nlohmann::ordered_json::parse(r.out);
    CHECK(doc.dump(2) + "\n" == r.out);
  }
}

TEST_CASE("config errors exit 2 with a machine-readable diagnostic") {
  const auto bad_p = run_cli("decompose-indicator --p 1 --r 1 --x 0");
  CHECK(bad_p.exit_code == 2);
  const auto diag = nlohmann::ordered_json::parse(bad_p.err);
  const std::string msg = diag["error"];
  CHECK(msg.find("prime") != std::string::npos);

  CHECK(run_cli("decompose-indicator --p 4 --r 1 --x 0").exit_code == 2);
  CHECK(run_cli("sigma-table --p 2 --m 1 --max-n 99999999").exit_code == 2);
  CHECK(run_cli("rw-dim --p 3 --n 1 --mults 0,1,0").exit_code == 2);
}

TEST_CASE("violations exit 1") {
  const auto r = run_cli("phi-check --p 2 --m 1 --N 16 --family swap");
  CHECK(r.exit_code == 1);
  const auto doc = nlohmann::ordered_json::parse(r.out);
  CHECK(doc["status"] == "violation-found");
  CHECK(doc["result"]["commuting"]["passed"] == false);
}

TEST_CASE("CSV output and --out files") {
  const auto r = run_cli("sigma-table --p 2 --m 1 --max-n 8 --format csv");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("n,sigma_closed,sigma_brute,equal") != std::string::npos);
  CHECK(r.out.find("status,ok") != std::string::npos);

  const auto w = run_cli(
      "dual-enumerate --p 2 --n 1 --out /tmp/vilenkin_dual.json");
  REQUIRE(w.exit_code == 0);
  std::ifstream f("/tmp/vilenkin_dual.json");
  REQUIRE(f.good());
  const auto doc = nlohmann::ordered_json::parse(f);
  CHECK(doc["result"]["count"] == 5);
  CHECK(doc["result"]["sum_dim_sq"] == 8);
}

TEST_CASE("transform-bench asserts equality before timing") {
  const auto r = run_cli("transform-bench --p 3 --r 4 --trials 5 --seed 9");
  REQUIRE(r.exit_code == 0);
  const auto doc = nlohmann::ordered_json::parse(r.out);
  CHECK(std::stod(doc["result"]["max_deviation"].get<std::string>()) <= 1e-9);
  CHECK(doc["result"].contains("fast_ms"));
  CHECK(doc["result"].contains("naive_ms"));
}
