#include "symobs/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>

using namespace symobs;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("classify output") {
  auto r = run({"classify", "(su(2), su(2))"});
  REQUIRE(r.code == kExitOk);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == 1);
  CHECK(j["a_holds"] == true);
  CHECK(j["certificates"][0]["labels"][0] == "B1");
  auto csv = run({"classify", "(su(1,1), so(1,1))", "--format", "csv"});
  CHECK(csv.code == kExitOk);
  CHECK(csv.out.rfind("pair,a_holds,summand,certificate\n", 0) == 0);
  CHECK(csv.out.find("FAIL-rank-test") != std::string::npos);
  auto md = run({"classify", "(su(1,1), so(1,1))", "--format", "markdown"});
  CHECK(md.out.find("a_holds: false") != std::string::npos);
}

TEST_CASE("invariants output") {
  auto r = run({"invariants", "sl(5,R)"});
  REQUIRE(r.code == kExitOk);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["rank"] == 4);
  CHECK(j["compact_rank"] == 2);
  CHECK(j["profile"] == nlohmann::json{{"5", 1}, {"9", 1}});
  auto realized = run({"invariants", "sl(3,R)", "--realize"});
  REQUIRE(realized.code == kExitOk);
  CHECK(nlohmann::json::parse(realized.out)["realization"]["primitive_minus_theta"] == nlohmann::json{{"5", 1}});
}

TEST_CASE("table output is deterministic") {
  auto a = run({"table", "--bound", "3", "--format", "csv"});
  auto b = run({"table", "--bound", "3", "--format", "csv"});
  REQUIRE(a.code == kExitOk);
  CHECK(a.out == b.out);
  CHECK(a.out.find("algebra,rank,compact_rank,d1,d2,d3,d4,profile\n") != std::string::npos);
  auto j = run({"table", "--bound", "2"});
  CHECK(nlohmann::json::parse(j.out)["bound"] == 2);
  auto no_cert = run({"table", "--bound", "2", "--format", "csv", "--no-certificates"});
  CHECK(no_cert.out.find("certificate") == std::string::npos);
}

TEST_CASE("verify runs both engines") {
  auto r = run({"verify", "(sl(2,R), so(2))"});
  REQUIRE(r.code == kExitOk);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["consistent"] == true);
  CHECK(j["summands"][0].contains("realization"));
  CHECK(j["summands"][0].contains("oracle"));
  CHECK_FALSE(j["summands"][0]["realization"].contains("elapsed_ms"));
  auto only = nlohmann::json::parse(run({"verify", "(su(1,1), so(1,1))", "--realization"}).out);
  CHECK_FALSE(only["summands"][0].contains("oracle"));
  CHECK(only["a_holds"] == false);
  auto timed = nlohmann::json::parse(run({"verify", "(su(2), su(2))", "--oracle", "--timing"}).out);
  CHECK(timed["summands"][0]["oracle"].contains("elapsed_ms"));
}

TEST_CASE("exit codes") {
  CHECK(run({"classify", "(su(1,1)"}).code == kExitParse);
  CHECK(run({"classify", "(sl(3,R), su(3))"}).code == kExitParse);
  CHECK(run({"invariants", "xx(3)"}).code == kExitParse);
  CHECK(run({"table", "--bound", "0"}).code == kExitParse);
  CHECK(run({"frobnicate"}).code == kExitParse);
  CHECK(run({}).code == kExitParse);
  CHECK(run({"--max-dim", "4", "verify", "(sl(3,R), so(3))"}).code == kExitCap);
  CHECK(run({"verify", "(sp(2,R), su(1,1) + T)"}).code == kExitCap);
  CHECK(run({"--help"}).code == kExitOk);
}
