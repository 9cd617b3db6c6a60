#include <doctest.h>

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "spmet/cli.hpp"

using namespace spmet;

namespace {

struct RunResult {
  int code;
  std::string out, err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli_run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("compute subcommands") {
  RunResult r = run({"bracket", "b(1,1)", "c(1,1)"});
  CHECK(r.code == 0);
  CHECK(r.out == "4*a(1,1)\n");

  r = run({"rho", "c(1,2)"});
  CHECK(r.code == 0);
  CHECK(r.out == "-x1*x2\n");

  r = run({"mul", "weyl", "d1", "x1"});
  CHECK(r.code == 0);
  CHECK(r.out == "1 + x1*d1\n");

  r = run({"mul", "poly", "X1+X2", "X1"});
  CHECK(r.code == 0);
  CHECK(r.out == "X1*X2 + X1^2\n");

  r = run({"act", "d1", "X1^2"});
  CHECK(r.code == 0);
  CHECK(r.out == "2*X1\n");

  r = run({"tau", "1", "x1*d1"});
  CHECK(r.code == 0);
  CHECK(r.out == "-1 - x1*d1\n");

  r = run({"sigma", "1", "c(1,1)"});
  CHECK(r.code == 0);
  CHECK(r.out == "-b(1,1)\n");

  r = run({"exp", "c(1,1)", "--precision", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("1 + 3*c(1,1) + 9/2*c(1,1)^2 + 9/2*c(1,1)^3") == 0);
  CHECK(r.out.find("tail_floor >= 3") != std::string::npos);
}

TEST_CASE("json output and determinism") {
  std::vector<std::string> args = {"bracket", "b(1,1)", "c(1,1)", "--format",
                                   "json"};
  RunResult r1 = run(args), r2 = run(args);
  CHECK(r1.code == 0);
  CHECK(r1.out == r2.out);
  auto j = nlohmann::json::parse(r1.out);
  CHECK(j["command"] == "bracket");
  CHECK(j["result"] == "4*a(1,1)");

  std::vector<std::string> vargs = {"verify", "--suite", "burnside",
                                    "--format", "json"};
  RunResult v1 = run(vargs), v2 = run(vargs);
  CHECK(v1.code == 0);
  CHECK(v1.out == v2.out);
  auto jv = nlohmann::json::parse(v1.out);
  CHECK(jv["all_pass"] == true);
  CHECK(jv["checks"].is_array());
  CHECK(jv["checks"][0].contains("name"));
  CHECK(jv["checks"][0]["status"] == "pass");
  CHECK(!jv["checks"][0].contains("seconds"));  // timing only on request

  RunResult vt = run({"verify", "--suite", "burnside", "--format", "json",
                      "--timing"});
  auto jt = nlohmann::json::parse(vt.out);
  CHECK(jt["checks"][0].contains("seconds"));
}

TEST_CASE("check alias") {
  RunResult r = run({"check", "burnside"});
  CHECK(r.code == 0);
  CHECK(r.out.find("[PASS]") != std::string::npos);
}

TEST_CASE("verify failure exit code") {
  // at precision 1 the truncated series for G-1 is empty, so the operator
  // family degenerates and the experiment honestly fails
  RunResult r = run({"verify", "--suite", "faithfulness", "--precision", "1"});
  CHECK(r.code == 1);
  CHECK(r.out.find("[FAIL]") != std::string::npos);
}

TEST_CASE("usage and parse errors exit 2") {
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"bracket", "b(1,1"}).code == 2);
  CHECK(run({"bracket", "x1", "x2"}).code == 2);     // sort error
  CHECK(run({"mul", "lie", "a(1,1)", "a(1,2)"}).code == 2);
  CHECK(run({"verify", "--suite", "nope"}).code == 2);
  CHECK(run({"sigma", "9", "c(1,1)"}).code == 2);
  CHECK(run({"rho", "c(1,2)", "--p", "4"}).code == 2);  // not a prime
  CHECK(run({}).code == 2);
}

TEST_CASE("expand and rank from json files") {
  {
    std::ofstream f("/tmp/spmet_test_iwasawa.json");
    f << R"json({"generators": ["c(1,2)"], "terms": [{"alpha": [1], "coeff": "1"}]})json";
  }
  RunResult r = run({"expand", "/tmp/spmet_test_iwasawa.json", "--precision",
                     "6"});
  CHECK(r.code == 0);
  CHECK(r.out.find("-3*x1*x2") == 0);

  {
    std::ofstream f("/tmp/spmet_test_rank.json");
    f << R"json({"ops": ["d1", "x1"], "domain": ["X1"], "window": 4})json";
  }
  RunResult k = run({"rank", "/tmp/spmet_test_rank.json", "--format", "json"});
  CHECK(k.code == 0);
  auto j = nlohmann::json::parse(k.out);
  CHECK(j["rank"] == 2);

  CHECK(run({"expand", "/tmp/no_such_file.json"}).code == 2);
}

TEST_CASE("help exits zero") {
  RunResult r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("spmet") != std::string::npos);
}
