#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "json.hpp"
#include "rhall/cli.hpp"
#include "rhall/fixtures.hpp"
#include "rhall/graph.hpp"

using namespace rhall;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("bracket of the bubble and the triangle") {
  const auto r = run({"graphalg", "bracket-star", "BUB", "TRI"});
  CHECK(r.code == 0);
  const auto ga = canonical_form(fixture_graph("G_a"));
  const auto gb = canonical_form(fixture_graph("G_b"));
  CHECK(r.out.find("6/1 " + ga + "\n") != std::string::npos);
  CHECK(r.out.find("-12/1 " + gb + "\n") != std::string::npos);
  CHECK(run({"graphalg", "bracket-star", "BUB.fg", "TRI.fg"}).out == r.out);
}

TEST_CASE("forest product and verification") {
  CHECK(run({"treealg", "product", "()", "()"}).out == "1/1 (())\n2/1 () ()\n");
  const auto v = run({"verify", "hopf-trees", "--max-size", "5"});
  CHECK(v.code == 0);
  CHECK(v.out.rfind("hopf-trees: PASS", 0) == 0);
  CHECK(run({"verify", "paper-example"}).code == 0);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"tree", "frobnicate"}).code == cli::kUsage);
  CHECK(run({"verify", "nosuch"}).code == cli::kUsage);
  CHECK(run({"tree", "canon", "(()"}).code == cli::kInvalidInput);
  CHECK(run({"graph", "validate", "v 0;h 0 0"}).code == cli::kInvalidInput);
  const auto big = run({"oracle", "hom", "(((((((((((())))))))))))", "()"});
  CHECK(big.code == cli::kBoundExceeded);
  CHECK_FALSE(big.err.empty());
}

TEST_CASE("identical invocations give identical output") {
  const std::vector<std::string> args{"graphalg", "product", "BUB", "TRI"};
  const auto a = run(args);
  CHECK(a.code == 0);
  CHECK_FALSE(a.out.empty());
  CHECK(run(args).out == a.out);
}

TEST_CASE("canonical text round-trips") {
  const auto canon = run({"tree", "canon", "(()(()))"}).out;
  CHECK(canon == "((())())\n");
  CHECK(run({"tree", "canon", canon.substr(0, canon.size() - 1)}).out == canon);
  const auto g = run({"graph", "canon", "Gamma_eg"}).out;
  CHECK(run({"graph", "canon", g.substr(0, g.size() - 1)}).out == g);
}

TEST_CASE("structured output carries the same numbers") {
  const auto r = run({"--json", "treealg", "product", "()", "()"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["terms"].size() == 2);
  CHECK(j["terms"][0]["key"] == "(())");
  CHECK(j["terms"][0]["coefficient"] == "1/1");
  CHECK(j["terms"][1]["coefficient"] == "2/1");
}

TEST_CASE("Grothendieck class of the three-loop example") {
  const auto r = run({"graph", "class", "Gamma_eg", "--all"});
  CHECK(r.code == 0);
  CHECK(r.out.find("2 × " + canonical_form(fixture_graph("BUB"))) != std::string::npos);
  CHECK(r.out.find("1 × " + canonical_form(fixture_graph("TRI"))) != std::string::npos);
}
