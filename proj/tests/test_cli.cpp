// Integration tests driving the installed CLI as a subprocess: exit codes,
// byte determinism and the documented interfaces.
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#ifndef POISSON_GEOM_CLI_PATH
#error "POISSON_GEOM_CLI_PATH must point at the CLI binary"
#endif

namespace {

struct CommandResult {
  int exit_code = -1;
  std::string output;
};

CommandResult run_command(const std::string& args,
                          const std::string& env = "") {
  const std::string cmd =
      env + " " + std::string(POISSON_GEOM_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CommandResult result;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) {
    result.output.append(buf, n);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace

TEST_CASE("verify runs clean and is byte-deterministic") {
  const CommandResult a = run_command("verify --seed 42 --trials 40");
  const CommandResult b = run_command("verify --seed 42 --trials 40");
  CHECK(a.exit_code == 0);
  CHECK(b.exit_code == 0);
  CHECK(a.output == b.output);
  CHECK(a.output.find("\"pass\": true") != std::string::npos);
  CHECK(a.output.find("\"tomihisa\"") != std::string::npos);
}

TEST_CASE("the report is valid json with the documented shape") {
  const CommandResult r = run_command("verify --seed 13 --trials 15");
  REQUIRE(r.exit_code == 0);
  const nlohmann::json doc = nlohmann::json::parse(r.output);
  CHECK(doc.at("version").is_string());
  CHECK(doc.at("seed").get<std::uint64_t>() == 13);
  CHECK(doc.at("trials").get<std::uint64_t>() == 15);
  CHECK(doc.at("pass").get<bool>());
  REQUIRE(doc.at("contexts").size() == 12);
  for (const auto& ctx : doc.at("contexts")) {
    CHECK(ctx.at("checks").size() == 5);
    for (const auto& check : ctx.at("checks")) {
      CHECK(check.at("max_residual").get<double>() <
            check.at("tolerance").get<double>());
      CHECK(check.at("pass").get<bool>());
    }
  }
  CHECK(doc.at("geometry").size() == 7);
}

TEST_CASE("the full twelve-context run stays under the identity tolerances") {
  const CommandResult r =
      run_command("verify --seed 42 --trials 1000 --contexts all");
  REQUIRE(r.exit_code == 0);
  const nlohmann::json doc = nlohmann::json::parse(r.output);
  for (const auto& ctx : doc.at("contexts")) {
    for (const auto& check : ctx.at("checks")) {
      if (check.at("name") == "tomihisa") {
        CHECK(check.at("max_residual").get<double>() < 1e-11);
      }
    }
  }
}

TEST_CASE("help and missing subcommands") {
  CHECK(run_command("--help").exit_code == 0);
  CHECK(run_command("").exit_code == 2);
  CHECK(run_command("conjugate").exit_code == 2);
}

TEST_CASE("verify exit codes") {
  CHECK(run_command("verify --trials 0").exit_code == 2);
  CHECK(run_command("verify --contexts sedenion --trials 5").exit_code == 2);
  CHECK(run_command("verify --seed 7 --trials 5 --tol jacobi=1e-30")
            .exit_code == 1);
  CHECK(run_command("verify --trials 5 --format svg").exit_code == 2);
  CHECK(run_command("verify --trials 5 --tol bogus=1").exit_code == 2);
}

TEST_CASE("the seed falls back to the environment variable") {
  const CommandResult flagged = run_command("verify --seed 99 --trials 20");
  const CommandResult env =
      run_command("verify --trials 20", "POISSON_GEOM_SEED=99");
  CHECK(flagged.exit_code == 0);
  CHECK(env.exit_code == 0);
  CHECK(flagged.output == env.output);
  CHECK(run_command("verify --trials 20", "POISSON_GEOM_SEED=pi").exit_code ==
        2);
}

TEST_CASE("outputs can be written to files") {
  const std::string report_path = "/tmp/poisson_geom_cli_report.json";
  const std::string svg_path = "/tmp/poisson_geom_cli_figure.svg";
  const CommandResult v = run_command("verify --seed 5 --trials 10 --out " +
                                      report_path);
  CHECK(v.exit_code == 0);
  std::ifstream report(report_path);
  REQUIRE(report.good());
  std::stringstream report_bytes;
  report_bytes << report.rdbuf();
  CHECK(report_bytes.str() ==
        run_command("verify --seed 5 --trials 10").output);

  CHECK(run_command("figure eh-duality --out " + svg_path).exit_code == 0);
  std::ifstream svg(svg_path);
  REQUIRE(svg.good());
  std::string first_line;
  std::getline(svg, first_line);
  CHECK(first_line.rfind("<?xml", 0) == 0);
}

TEST_CASE("figure configs are read from json files") {
  const std::string config_path = "/tmp/poisson_geom_cli_pappus.json";
  {
    std::ofstream config(config_path);
    config << R"({"a": [[0,0,1],[1,0,1],[2,0,1]],
                  "b": [[0,1,1],[1.5,1,1],[2.5,1,1]]})";
  }
  const CommandResult r =
      run_command("figure pappus --config " + config_path + " --format json");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("collinearity_residual") != std::string::npos);

  {
    std::ofstream config(config_path);
    config << "{not json";
  }
  CHECK(run_command("figure pappus --config " + config_path).exit_code == 2);
  CHECK(run_command("figure pappus --config /no/such/file.json").exit_code ==
        2);

  // Disc figure with a custom ellipse absolute.
  const std::string disc_path = "/tmp/poisson_geom_cli_disc.json";
  {
    std::ofstream config(disc_path);
    config << R"({"conic": [1.4, 0.3, 0.1, 0.9, -0.2, -1.0]})";
  }
  const CommandResult disc =
      run_command("figure disc-altitudes --config " + disc_path);
  CHECK(disc.exit_code == 0);
  CHECK(disc.output.find("<ellipse") != std::string::npos);
  {
    std::ofstream config(disc_path);
    config << R"({"conic": [1, 0, 0, 1, 0, 1]})";
  }
  CHECK(run_command("figure disc-altitudes --config " + disc_path).exit_code ==
        3);
}

TEST_CASE("figures emit deterministic svg") {
  const CommandResult a = run_command("figure pappus");
  const CommandResult b = run_command("figure pappus");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  CHECK(a.output.rfind("<?xml", 0) == 0);

  CHECK(run_command("figure nonagon").exit_code == 2);
  CHECK(run_command("figure spherical-altitudes --triangle default")
            .exit_code == 0);
  // Degenerate geometry: an antipodal vertex pair.
  const CommandResult degenerate = run_command(
      "figure spherical-altitudes --triangle '[[1,0,0],[-1,0,0],[0,0,1]]'");
  CHECK(degenerate.exit_code == 3);

  const CommandResult as_json = run_command("figure pappus --format json");
  CHECK(as_json.exit_code == 0);
  CHECK(as_json.output.find("collinearity_residual") != std::string::npos);
}

TEST_CASE("demos run") {
  for (const char* name : {"orthocenter", "eh", "pappus", "tomihisa"}) {
    const CommandResult r = run_command(std::string("demo ") + name);
    CHECK(r.exit_code == 0);
    CHECK(!r.output.empty());
  }
  CHECK(run_command("demo daydream").exit_code == 2);
}

TEST_CASE("bracket subcommand computes bracket triples") {
  const CommandResult sphere =
      run_command("bracket --context sphere 1,0,0 0,1,0");
  CHECK(sphere.exit_code == 0);
  CHECK(sphere.output == "0 0 1\n");

  const CommandResult quadratic =
      run_command("bracket --context quadratic 1,0,0 0,1,0");
  CHECK(quadratic.output == "0 0 -4\n");

  const CommandResult sig =
      run_command("bracket --context '+,+,-' 1,0,0 0,1,0 --format json");
  CHECK(sig.exit_code == 0);
  CHECK(sig.output.find("\"result\"") != std::string::npos);

  CHECK(run_command("bracket --context sphere 1,0 0,1,0").exit_code == 2);
}
