#include <doctest.h>

#include <random>
#include <sstream>

#include "support/oracles.hpp"
#include "symprod/cli/app.hpp"
#include "symprod/cli/expression.hpp"
#include "symprod/cli/fixtures.hpp"
#include "symprod/errors.hpp"

using namespace symprod;
using namespace symprod::cli;
using oracle::q;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("map expressions") {
  const MapExpression affine = parse_map("x^2 - 29/16");
  CHECK(affine.affine);
  CHECK(affine.map == parse_map("[16*z^2-29*t^2, 16*t^2]").map);
  CHECK(affine.map == parse_map("[16*z^2-29*t^2 : 16*t^2]").map);
  CHECK(affine.canonical() == "[16*z^2 - 29*t^2 : 16*t^2]");

  // parenthesized products and constant division
  CHECK(parse_map("(x + 1)^2 - 3/2").map == oracle::poly_map({q(-1, 2), 2, 1}));
  CHECK(parse_map("[z^2 + 4*z*t, t^2 + 4*z*t]").map ==
        RationalMap1(BinaryForm(2, {0, 4, 1}), BinaryForm(2, {1, 4, 0})));

  CHECK_THROWS_AS(parse_map("x"), Error);
  CHECK_THROWS_AS(parse_map("3*x + 1"), Error);
  CHECK_THROWS_AS(parse_map("[z^2, z^2]"), Error);
  try {
    parse_map("[z^2, z^2]");
  } catch (const ParseError&) {
    FAIL("degenerate input is not a syntax error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::degenerate_map);
  }

  CHECK_THROWS_AS(parse_map("x^2 +"), ParseError);
  CHECK_THROWS_AS(parse_map("x^2 / x"), ParseError);
  CHECK_THROWS_AS(parse_map("[z^2, t^2"), ParseError);
  CHECK_THROWS_AS(parse_map("y^2"), ParseError);
  try {
    parse_map("x^2 + $");
    FAIL("accepted");
  } catch (const ParseError& e) {
    CHECK(e.position() == 6);
  }
}

TEST_CASE("printed maps parse back to themselves") {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 200; ++i) {
    const RationalMap1 f = oracle::random_map(rng, 2 + i % 3, 6);
    const std::string text = f.to_string();
    INFO(text);
    const MapExpression m = parse_map(text);
    CHECK(m.map == f);
    CHECK(m.canonical() == text);
  }
}

TEST_CASE("point expressions") {
  CHECK(parse_point("-5/4").point == AlgebraicPoint::rational(q(-5, 4)));
  CHECK(parse_point("inf").point.infinity);
  CHECK(parse_point("oo").point.infinity);
  const PointExpression r = parse_point("root(x^4 + x^3 + x^2 + x + 1)");
  CHECK_FALSE(r.is_tuple);
  CHECK(r.point.minpoly() == UniPoly{1, 1, 1, 1, 1});
  CHECK(parse_point("root(2*x - 3)").point == AlgebraicPoint::rational(q(3, 2)));
  CHECK_THROWS(parse_point("root(x^2 - 1)"));
  const PointExpression t = parse_point("(15, 28, -112, 64)");
  CHECK(t.is_tuple);
  CHECK(t.tuple == oracle::pt({15, 28, -112, 64}));
  CHECK(parse_point("(1/2 : 1)").tuple == oracle::pt({1, 2}));
  CHECK_THROWS(parse_point("(0, 0)"));
}

TEST_CASE("exit codes") {
  CHECK(invoke({"symmetrize", "--map", "x^2-2", "--k", "2"}).code == exit_ok);
  CHECK(invoke({"symmetrize", "--map", "x", "--k", "2"}).code == exit_domain_error);
  CHECK(invoke({"symmetrize", "--map", "x^2 +", "--k", "2"}).code == exit_usage_error);
  CHECK(invoke({}).code == exit_usage_error);
  CHECK(invoke({"frobnicate"}).code == exit_usage_error);
  CHECK(invoke({"symmetrize", "--k", "2"}).code == exit_usage_error);
  CHECK(invoke({"multipliers", "--map", "x^2-21/16", "--point", "3"}).code == exit_domain_error);
  CHECK(invoke({"--help"}).code == exit_ok);
  const Outcome bad = invoke({"symmetrize", "--map", "[z^2, z^2]"});
  CHECK(bad.code == exit_domain_error);
  CHECK(bad.err.find("degenerate") != std::string::npos);
}

TEST_CASE("command output") {
  const Outcome s = invoke({"symmetrize", "--map", "x^2 + 1", "--k", "4"});
  REQUIRE(s.code == 0);
  CHECK(s.out.find("F0 = ") != std::string::npos);
  CHECK(s.out.find("F4 = v4^2") != std::string::npos);

  const Outcome b = invoke({"bad-primes", "--map", "x^2 - 29/16", "--k", "3"});
  REQUIRE(b.code == 0);
  CHECK(b.out.find("2") != std::string::npos);

  const Outcome pb = invoke({"period-bound", "--Np", "3", "--p", "3", "--k", "2"});
  REQUIRE(pb.code == 0);
  CHECK(invoke({"period-bound", "--Np", "3", "--p", "5"}).code == exit_domain_error);

  const Outcome m = invoke({"multipliers", "--map", "x^2-21/16", "--point", "(15,28,-112,64)", "--k", "3"});
  REQUIRE(m.code == 0);
  CHECK(m.out.find("(x + 3/2)*(x^2 + 5/4)") != std::string::npos);
}

TEST_CASE("json output is versioned and stable") {
  const std::vector<std::vector<std::string>> commands{
      {"symmetrize", "--map", "x^2-2", "--k", "3", "--json"},
      {"preperiodic", "--map", "x^2-1", "--k", "2", "--json"},
      {"preperiodic", "--map", "x^2-29/16", "--point", "5/4", "--json"},
      {"canonical-height", "--map", "x^2-29/16", "--point", "(1, 3)", "--json"},
      {"bad-primes", "--map", "x^2-29/16", "--json"},
      {"multipliers", "--map", "x^2-21/16", "--json"},
      {"pcf", "--map", "x^2-2", "--json"},
  };
  for (const auto& cmd : commands) {
    INFO(cmd[0]);
    const Outcome a = invoke(cmd);
    const Outcome b = invoke(cmd);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    const Json j = Json::parse(a.out);
    CHECK(j.at("schema_version") == 1);
    CHECK(j.at("command") == cmd[0]);
  }
}

TEST_CASE("preperiodic graph report") {
  const Outcome o = invoke({"preperiodic", "--map", "x^2-1", "--k", "2", "--json"});
  REQUIRE(o.code == 0);
  const Json j = Json::parse(o.out);
  const auto& nodes = j.at("nodes");
  // 10 pairs from {inf, 0, -1, 1} plus the quadratic classes
  // x^2 - x - 1, x^2 + x - 1 and x^2 - 2
  CHECK(nodes.size() == 13);
  for (const auto& e : j.at("edges")) {
    CHECK(e.at("source").get<std::size_t>() < nodes.size());
    CHECK(e.at("target").get<std::size_t>() < nodes.size());
  }
  CHECK(j.at("edges").size() == nodes.size());
  CHECK(j.at("fields").size() == 3);

  const Outcome d = invoke({"preperiodic", "--map", "x^2-1", "--k", "2", "--dot", "-"});
  REQUIRE(d.code == 0);
  CHECK(d.out.rfind("digraph", 0) == 0);
  std::istringstream lines(d.out);
  std::string line;
  std::size_t labelled = 0;
  while (std::getline(lines, line)) {
    const auto at = line.find("label=\"");
    if (at == std::string::npos) continue;
    ++labelled;
    CHECK(line.compare(at + 7, 8, "minpoly=") == 0);
    CHECK(line.find("; coords=(") != std::string::npos);
  }
  CHECK(labelled == nodes.size());
}

TEST_CASE("fixture corpus passes and exercises every operation") {
  const FixtureReport r = run_fixtures(default_fixture_path());
  CHECK(r.results.size() >= 40);
  for (const auto& f : r.results) {
    INFO(f.name, ": ", f.detail);
    CHECK(f.passed);
    CHECK((f.provenance == "published" || f.provenance == "derived" || f.provenance == "trivial"));
  }
  for (std::size_t i = 0; i < op_count; ++i) {
    INFO(op_name(static_cast<Op>(i)));
    CHECK(r.op_calls[i] > 0);
  }
  const Json j = fixture_report_json(r);
  CHECK(j.at("uncovered_operations").empty());
}

TEST_CASE("fixture failures are recorded") {
  const Json corpus = Json::parse(R"js({"schema_version": 1, "fixtures": [
    {"name": "wrong", "kind": "naive_height", "provenance": "trivial", "point": "(1, 2)", "expected": 5.0, "tolerance": 1e-9},
    {"name": "broken", "kind": "no_such_kind", "provenance": "trivial"}
  ]})js");
  const FixtureReport r = run_fixtures(corpus);
  REQUIRE(r.results.size() == 2);
  CHECK_FALSE(r.results[0].passed);
  CHECK_FALSE(r.results[1].passed);
  CHECK_FALSE(r.all_passed());
}
