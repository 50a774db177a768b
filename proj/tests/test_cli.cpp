#include <doctest.h>

#include <sstream>

#include "qfock/cli.hpp"
#include "qfock/serialize.hpp"

using namespace qfock;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "qfock");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("documented invocations") {
  CHECK(run({"apply", "--sector", "0", "f0"}).out == "q^2 * e^{1a}\n");
  CHECK(run({"--json", "straighten", "1,4,1"}).out == "{\"sign\":-1,\"partition\":[3,2,1]}\n");
  CHECK(run({"x", "--sign", "minus", "--n", "0", "--sector", "0", "--charge", "1", "--mu", "1"}).out ==
        "-1 * s[2] e^{0a} + q^4 * s[1,1] e^{0a}\n");
}

TEST_CASE("subcommands") {
  CHECK(run({"straighten", "1,2,2"}).out == "0\n");
  CHECK(run({"conjugate", "4,1"}).out == "2,1,1,1\n");
  CHECK(run({"lr", "2,1", "1"}).out == run({"lr", "--oracle", "2,1", "1"}).out);
  CHECK(run({"lr", "1", "1"}).out == "1 * s[2] + 1 * s[1,1]\n");
  CHECK(run({"pieri", "--kind", "e", "--n", "2", "1"}).out == "1 * s[2,1] + 1 * s[1,1,1]\n");
  CHECK(run({"jt", "2,1"}).out == "-1 * h[3] + 1 * h[2,1]\n");
  CHECK(run({"convert", "2,1"}).out == "-1/3 * p[3] + 1/3 * p[1,1,1]\n");
  CHECK(run({"convert", "--from", "power", "2"}).out == "1 * s[2] + -1 * s[1,1]\n");
  CHECK(run({"mixed", "--mu", "1", "--nu", "2,1,1,1"}).out == "1 * s[3,2,1]\n");
  CHECK(run({"mixed", "--mu", "1", "--nu", "2,2"}).out == "0\n");
  CHECK(run({"inner", "2,1", "2,1"}).out == "1\n");
  CHECK(run({"inner", "--deformed", "1", "1"}).out == "1 / (q^2 + 1)\n");
  CHECK(run({"divided", "--sign", "minus", "--n", "0", "--r", "2", "--charge", "1"}).out == "-q * e^{-1a}\n");
  CHECK(run({"apply", "--sector", "1", "f1^(3) f0^(2) f1"}).out == "q^6 * e^{-2a+a/2}\n");
  CHECK(run({"apply", "--sector", "1", "e1"}).out == "0 e^{a/2}\n");
}

TEST_CASE("json output parses back") {
  const Run r = run({"--json", "x", "--sign", "plus", "--n", "-1", "--charge", "-1", "--mu", "2,1"});
  REQUIRE(r.code == 0);
  const FockVector v = fock_from_json(Json::parse(r.out));
  CHECK(render(v) + "\n" == run({"x", "--sign", "plus", "--n", "-1", "--charge", "-1", "--mu", "2,1"}).out);
  const Run s = run({"--json", "lr", "2,1", "2,1"});
  CHECK(schur_from_json(Json::parse(s.out)) == lr_product({2, 1}, {2, 1}));
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"conjugate", "1,2"}).code == kExitUsage);
  CHECK(run({"x", "--sign", "plus", "--n", "0", "--sector", "2"}).code == kExitUsage);
  CHECK(run({"pieri", "--n", "-1", "1"}).code == kExitUsage);
  CHECK(run({"mixed", "--nu", "-1"}).code == kExitUsage);
  CHECK(run({"divided", "--n", "0", "--r", "0"}).code == kExitUsage);
  const Run bad = run({"apply", "f0 f2"});
  CHECK(bad.code == kExitUsage);
  CHECK(bad.err.find("parse error at token 2") != std::string::npos);
  CHECK(run({"check", "vandermonde"}).code == kExitOk);
  CHECK(run({"check", "nonsense"}).code == kExitUsage);
  const Run golden = run({"--json", "check", "golden"});
  CHECK(golden.code == kExitCheckFailed);
  const Json j = Json::parse(golden.out);
  CHECK(j.size() == 2);
  CHECK(j[0]["pass"] == true);
  CHECK(j[1]["pass"] == false);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"check", "serre", "--max-weight", "2"};
  CHECK(run(args).out == run(args).out);
  CHECK(run(args).code == kExitOk);
}
