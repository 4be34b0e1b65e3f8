#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(BAF_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

json run_json(const std::string& args) {
  auto res = run_cli("--format json " + args);
  REQUIRE(res.exit_code == 0);
  return json::parse(res.out);
}

}  // namespace

TEST_CASE("bwb subcommand") {
  SUBCASE("negative weight after the separator") {
    auto j = run_json("bwb A1 -- -2");
    CHECK(j["vanishes"] == false);
    CHECK(j["degree"] == 1);
    CHECK(j["mu"] == json::array({0}));
    CHECK(j["dim"] == 1);
    CHECK(j["word"] == json::array({1}));
  }
  SUBCASE("singular weight vanishes") {
    auto j = run_json("bwb A1 -- -1");
    CHECK(j["vanishes"] == true);
    CHECK(!j.contains("degree"));
  }
  SUBCASE("dominant weight reports the dimension") {
    auto j = run_json("bwb A2 1,1");
    CHECK(j["degree"] == 0);
    CHECK(j["dim"] == 8);
  }
  SUBCASE("table output agrees with json") {
    auto res = run_cli("bwb A2 1,1");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("dim 8") != std::string::npos);
  }
}

TEST_CASE("xcoh subcommand") {
  SUBCASE("single degree") {
    auto j = run_json("xcoh A2 --degree 1");
    CHECK(j["multiplicity"] == 2);
    CHECK(j["classes"].size() == 2);
  }
  SUBCASE("histogram") {
    auto j = run_json("xcoh A2");
    CHECK(j["histogram"] == json::array({1, 2, 2, 1}));
  }
  SUBCASE("degree zero") {
    auto j = run_json("xcoh A1 --degree 0");
    CHECK(j["multiplicity"] == 1);
    CHECK(j["classes"][0]["e_weight"] == json::array({0}));
  }
  SUBCASE("out of range degree exits 3") {
    CHECK(run_cli("xcoh A2 --degree 9").exit_code == 3);
  }
}

TEST_CASE("svariety subcommand") {
  SUBCASE("Z/2 for the doubled weight in A1") {
    auto j = run_json("svariety A1 --gens 2");
    CHECK(j["saturated"] == "holds");
    CHECK(j["q_gamma"] == "Z/2");
  }
  SUBCASE("failure with witness") {
    auto j = run_json("svariety A1 --gens '2;3'");
    CHECK(j["saturated"] == "fails");
    CHECK(j["witness"] == json::array({1}));
  }
  SUBCASE("torus quotient for the A2 highest root") {
    auto j = run_json("svariety A2 --gens 1,1");
    CHECK(j["saturated"] == "holds");
    CHECK(j["torus_rank"] == 1);
  }
}

TEST_CASE("peta subcommand") {
  CHECK(run_json("peta A1 1")["poly"] == "h1");
  auto twisted = run_json("peta A1 1 --twist w0");
  CHECK(twisted["poly"] == "-h1 - 2");
  auto psi = run_json("peta A2 1,1 --psi 1,1");
  CHECK(psi["poly"] == "4*y1^4 + 2*y1^3");
  CHECK(psi["variables"] == "y");
  CHECK(psi["k"] == 4);
}

TEST_CASE("minorbit subcommand") {
  SUBCASE("family table") {
    auto j = run_json("minorbit --table");
    CHECK(j["table"].size() == 9);
  }
  SUBCASE("A3") {
    auto j = run_json("minorbit A3");
    CHECK(j["k"] == 6);
    CHECK(j["surjectivity"] == "NotSurjective");
  }
  SUBCASE("G2 outside the classical criterion") {
    auto j = run_json("minorbit G2");
    CHECK(j["k"] == 10);
    CHECK(j["surjectivity"] == "CriterionNotApplicable");
  }
  SUBCASE("products are rejected as non-simple") {
    CHECK(run_cli("minorbit A1xA1").exit_code == 3);
  }
}

TEST_CASE("kvalue and weyl subcommands") {
  CHECK(run_json("kvalue A2 1,1")["k"] == 4);
  CHECK(run_json("kvalue G2 0,1")["k"] == 10);

  auto j = run_json("weyl B2");
  CHECK(j["order"] == 8);
  CHECK(j["poincare"] == json::array({1, 2, 2, 2, 1}));

  auto listed = run_json("weyl A2 --enumerate");
  CHECK(listed["elements"].size() == 6);
}

TEST_CASE("exit codes") {
  CHECK(run_cli("bwb Z9 1").exit_code == 2);           // unparseable type
  CHECK(run_cli("bwb A2 1").exit_code == 2);           // wrong arity
  CHECK(run_cli("nosuchcommand").exit_code == 2);      // unknown subcommand
  CHECK(run_cli("peta A2 -- -1,0").exit_code == 3);    // non-dominant eta
  CHECK(run_cli("weyl G2 --enumerate --weyl-cap 10").exit_code == 4);  // cap
  CHECK(run_cli("--help").exit_code == 0);
}
