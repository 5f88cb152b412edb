#include <doctest.h>

#include <sstream>

#include "snc/commands.hpp"

using namespace snc;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("documented examples") {
  Run r = run({"--n", "1", "eval", "x*y"});
  CHECK(r.code == 0);
  CHECK(r.out == "x1*y1\n");
  r = run({"--n", "1", "mixed", "x*y"});
  CHECK(r.code == 0);
  CHECK(r.out == "1 - E(0,0)\n");
  r = run({"--n", "2", "index", "1+(y1-1)*E[2](0|0)"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"index\":1") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run({"eval", "x1"}).code == kUsage);
  CHECK(run({"--n", "1", "frobnicate"}).code == kUsage);
  CHECK(run({"--n", "1", "eval", "x1 +"}).code == kParse);
  CHECK(run({"--n", "1", "eval", "x2"}).code == kParse);
  CHECK(run({"--n", "1", "eval", "x1^-1"}).code == kDomain);
  CHECK(run({"--n", "1", "invert", "x1"}).code == kDomain);
  CHECK(run({"--n", "2", "jacobian", "{\"perm\":[1,1]}"}).code != kOk);
  CHECK(run({"--n", "2", "jacobian", "{not json"}).code == kParse);
}

TEST_CASE("subcommands") {
  Run r = run({"--n", "1", "act", "x*y", "2*x1^2 + 1"});
  CHECK(r.code == 0);
  r = run({"--n", "2", "member", "--ideal", "p:1", "E[1](0|0)*x2"});
  CHECK(r.code == 0);
  CHECK(r.out == "true\n");
  r = run({"--n", "2", "member", "--ideal", "F", "E[1](0|0)*x2"});
  CHECK(r.out == "false\n");
  r = run({"--n", "3", "ind-i", "theta[1,2,3;1,2]"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"ind\":[1,-1,0]}\n");
  r = run({"--n", "2", "ind-i", "--det", "--i", "1", "theta[1,2;1,2]"});
  CHECK(r.out == "1\n");
  r = run({"--n", "2", "invert", "theta[1,2;1,2]"});
  CHECK(r.code == 0);
  r = run({"--n", "2", "factor-nn1", "theta[1,2;2,1]^2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"exponents\":[2]") != std::string::npos);
  r = run({"--n", "2", "jacobian", "{\"perm\":[2,1]}"});
  CHECK(r.out == "-1\n");
  r = run({"--n", "1", "jacobian", "--exotic", "{\"u\":\"1 + E[1](0|0)\"}"});
  CHECK(r.code == 0);
  CHECK(r.out == "2\n");
  r = run({"--n", "2", "verify-suite", "--filter", "tmJ"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("PASS tmJ", 0) == 0);
  CHECK(run({"--n", "2", "verify-suite", "--filter", "nope"}).code == kUsage);
}
