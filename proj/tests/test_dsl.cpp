#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fourgeo/dsl/evaluator.hpp"
#include "fourgeo/dsl/parser.hpp"
#include "fourgeo/dsl/report.hpp"
#include "support.hpp"

using namespace fourgeo;
using namespace fourgeo::dsl;
using testing::poly;

namespace {

std::string fixture(const std::string& name) {
  std::ifstream in(std::string(FOURGEO_SOURCE_DIR) + "/scripts/" + name);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

SourceLoc error_at(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.loc();
  }
  FAIL("expected a parse error");
  return {};
}

std::string error_text(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

const ManifoldRecord& manifold(const ScriptResult& r) { return std::get<ManifoldRecord>(r.value); }

}  // namespace

TEST_SUITE("parser") {
  TEST_CASE("one binding with a positional argument") {
    const Script s = parse("let Y = blowup(T4, k=n^4)\nreport Y\n");
    CHECK(s.binding_count() == 1);
    const auto& call = std::get<CallExpr>(s.statements[0].value->node);
    CHECK(call.function == "blowup");
    CHECK(call.args[0].name == "m");
    CHECK(call.args[1].name == "k");
  }

  TEST_CASE("unbalanced parenthesis") {
    const SourceLoc loc = error_at("let Z = blowup(");
    CHECK(loc.line == 1);
    CHECK(loc.column == 15);
    CHECK(error_text("let Z = blowup(").find("'('") != std::string::npos);
  }

  TEST_CASE("shipped script") {
    const Script s = parse(fixture("kn.geo"));
    CHECK(s.binding_count() == 6);
    const auto& last = s.statements[s.statements.size() - 2];
    CHECK(last.name == "K");
    CHECK(std::get<CallExpr>(last.value->node).function == "fiber_sum");
  }

  TEST_CASE("diagnostics carry locations") {
    CHECK(error_text("report Q\n").find("unknown identifier 'Q'") != std::string::npos);
    CHECK(error_text("let A = blowup(m=A, k=1)\nreport A\n").find("cycle") != std::string::npos);
    CHECK(error_text("let A = B\nlet B = T4\nreport A\n").find("before it is bound") != std::string::npos);
    CHECK(error_text("let A = frobnicate(x=1)\nreport A\n").find("unknown function") != std::string::npos);
    CHECK(error_text("let A = blowup(m=T4)\nreport A\n").find("do not match") != std::string::npos);
    CHECK(error_text("let A = blowup(m=T4, k=1, z=2)\nreport A\n").find("do not match") != std::string::npos);
    CHECK(error_text("let A = blowup(m=T4, m=T4, k=1)\nreport A\n").find("twice") != std::string::npos);
    CHECK(error_text("let A = T4\nlet A = E2\nreport A\n").find("already bound") != std::string::npos);
    CHECK(error_text("let A = T4\n").find("no report") != std::string::npos);
    CHECK(error_text("report T4\nreport E2\n").find("only one report") != std::string::npos);
    CHECK(error_text("let A = blowup(k=1, T4)\nreport A\n").find("positional") != std::string::npos);
    CHECK(error_text("let n = T4\nreport n\n").find("reserved") != std::string::npos);
    const SourceLoc loc = error_at("let A = T4\nreport A +\n");
    CHECK(loc.line == 2);
  }

  TEST_CASE("columns count code points") {
    const SourceLoc loc = error_at("# σ is fine in comments\nlet A = \"σσ\" $\nreport A\n");
    CHECK(loc.line == 2);
    CHECK(loc.column == 14);
  }

  TEST_CASE("print then parse gives the same tree") {
    const Script s = parse(fixture("kn.geo"));
    const Script again = parse(print(s));
    CHECK(equivalent(s, again));
    CHECK(print(again) == print(s));
  }

  TEST_CASE("operator precedence survives printing") {
    const Script s = parse("report manifold(e=-(n - 1)^2 - 2*(3 - n) / 4, sigma=(n^2)^3)\n");
    CHECK(equivalent(s, parse(print(s))));
    CHECK(print(s).find("-(n - 1)^2 - 2*(3 - n)/4") != std::string::npos);
  }
}

TEST_SUITE("evaluator") {
  TEST_CASE("shipped script at n = 3") {
    const auto r = evaluate(parse(fixture("kn.geo")), Mode::numeric(3));
    CHECK(manifold(r).chi_h() == Scalar(1163));
    CHECK(manifold(r).sigma == Scalar(337));
  }

  TEST_CASE("shipped script symbolically") {
    const auto r = evaluate(parse(fixture("kn.geo")), Mode::symbolic());
    const auto& k = manifold(r);
    CHECK(k.c2().as_poly() == poly({{"1", 7}, {"12", 5}, {"-12", 4}, {"6", 3}, {"22", 0}}));
    CHECK(k.c1sq().as_poly() == poly({{"3", 7}, {"20", 5}, {"-24", 4}, {"6", 3}, {"2", 0}}));
    CHECK(k.chi_h().as_poly() == poly({{"1/3", 7}, {"8/3", 5}, {"-3", 4}, {"1", 3}, {"2", 0}}));
    CHECK(k.sigma.as_poly() == poly({{"1/3", 7}, {"-4/3", 5}, {"-2", 3}, {"-14", 0}}));
    CHECK(k.simply_connected.status == Connectivity::declared_true);
    CHECK(r.bindings.size() == 6);
  }

  TEST_CASE("script agrees with the direct builder") {
    for (long n = 2; n <= 6; ++n) {
      const auto r = evaluate(parse(fixture("kn.geo")), Mode::numeric(n));
      const auto direct = build_fiber_sum(Mode::numeric(n), {.expand_ledger = n <= 7}).manifold;
      CHECK(manifold(r).e == direct.e);
      CHECK(manifold(r).sigma == direct.sigma);
      CHECK(manifold(r).sw->value == direct.sw->value);
    }
  }

  TEST_CASE("report of a block") {
    const auto r = evaluate(parse("report T4\n"), Mode::symbolic());
    CHECK(manifold(r).e == Scalar(0));
    CHECK(manifold(r).sigma == Scalar(0));
  }

  TEST_CASE("scalar helpers and presets") {
    const auto r = evaluate(parse("let X = branched_cover(m=blowup(m=T4, k=n^4), preset=\"hirzebruch\")\n"
                                  "report c1sq(m=X)\n"),
                            Mode::symbolic());
    CHECK(std::get<Scalar>(r.value) == Scalar(poly({{"3", 7}, {"-4", 5}})));
    const auto k = evaluate(parse("report torus_knot(p=2, q=7)\n"), Mode::symbolic());
    CHECK(std::get<Knot>(k.value).genus == Scalar(3));
  }

  TEST_CASE("operation errors point at the statement") {
    const Script s = parse("let A = T4\nlet B = blowup(m=A, k=0 - 3)\nreport B\n");
    try {
      evaluate(s, Mode::symbolic());
      FAIL("expected an evaluation error");
    } catch (const EvalError& e) {
      CHECK(e.loc().line == 2);
      CHECK(std::string(e.what()).find("blowup") != std::string::npos);
    }
    CHECK_THROWS_AS(evaluate(parse("report blowup(m=T4, k=T4)\n"), Mode::symbolic()), EvalError);
    CHECK_THROWS_AS(evaluate(parse("report T4 + 1\n"), Mode::symbolic()), EvalError);
    CHECK_THROWS_AS(evaluate(parse("report 1 / 0\n"), Mode::symbolic()), EvalError);
    CHECK_THROWS_AS(
        evaluate(parse("report branched_cover(m=T4, preset=\"other\")\n"), Mode::symbolic()), EvalError);
  }
}

TEST_SUITE("rendering") {
  TEST_CASE("symbolic report prints the closed forms") {
    const auto r = evaluate(parse(fixture("kn.geo")), Mode::symbolic());
    const std::string text = render(r, Mode::symbolic());
    CHECK(text.find("c2    = n^7 + 12*n^5 - 12*n^4 + 6*n^3 + 22\n") != std::string::npos);
    CHECK(text.find("c1^2  = 3*n^7 + 20*n^5 - 24*n^4 + 6*n^3 + 2\n") != std::string::npos);
    CHECK(text.find("chi_h = 1/3*n^7 + 8/3*n^5 - 3*n^4 + n^3 + 2\n") != std::string::npos);
    CHECK(text.find("sigma = 1/3*n^7 - 4/3*n^5 - 2*n^3 - 14\n") != std::string::npos);
  }

  TEST_CASE("csv") {
    const auto rows = kernels::geography_scan(2, 6);
    const std::string csv = geography_csv(rows);
    CHECK(csv.rfind("n,e,sigma,c1sq,chi_h,ratio,bmy_gap,side\n", 0) == 0);
    CHECK(csv.find("4,26006,3954,63874,7490,8.527904,3536,below\n") != std::string::npos);
    CHECK(csv.find('\r') == std::string::npos);
    CHECK(csv.find(",\n") == std::string::npos);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 6);
  }

  TEST_CASE("svg") {
    const auto rows = kernels::geography_scan(2, 6);
    const std::string svg = geography_svg(rows);
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("c1^2 = 8 chi_h") != std::string::npos);
    CHECK(svg.find("c1^2 = 9 chi_h") != std::string::npos);
    CHECK(std::count(svg.begin(), svg.end(), 'n') > 0);
    for (long n = 2; n <= 6; ++n) CHECK(svg.find(">n=" + std::to_string(n) + "<") != std::string::npos);
    CHECK(svg == geography_svg(rows));
  }

  TEST_CASE("json") {
    std::vector<Check> checks = {Check::boolean("a", true), Check::compare("b", Scalar(1), Scalar(2))};
    const auto parsed = nlohmann::json::parse(checks_json(checks));
    REQUIRE(parsed.is_array());
    CHECK(parsed.size() == 2);
    CHECK(parsed[1]["name"] == "b");
    CHECK(parsed[1]["expected"] == "1");
    CHECK(parsed[1]["got"] == "2");
    CHECK(parsed[1]["pass"] == false);
    CHECK(parsed[0].contains("note"));
  }

  TEST_CASE("check text has a warning block") {
    Check w = Check::compare("table n=3 sigma", Scalar(227), Scalar(337));
    w.severity = Severity::warning;
    w.note = "printed value inconsistent";
    const std::vector<Check> checks = {Check::boolean("ok", true), w};
    const std::string text = checks_text(checks);
    CHECK(text.find("WARN table n=3 sigma") != std::string::npos);
    CHECK(text.find("warnings:") != std::string::npos);
    CHECK(text.find("2 checks, 0 failed, 1 warnings") != std::string::npos);
  }
}
