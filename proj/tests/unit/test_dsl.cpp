#include <doctest.h>

#include "../support/fixtures.hpp"

#include <gsm/dsl.hpp>
#include <gsm/json_report.hpp>
#include <gsm/runner.hpp>

#include <fstream>
#include <sstream>

using namespace gsm;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(GSM_SAMPLES_DIR) + "/" + name);
  REQUIRE(in);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

const std::vector<std::string> kSamples = {"m2_pair.gsm", "cosets.gsm", "z2.gsm", "controls.gsm"};

const Json& task(const Json& report, const std::string& name) {
  for (const Json& t : report["tasks"])
    if (t["task"] == name) return t;
  FAIL("no task " << name);
  return report;
}

std::optional<ErrorCode> parse_code(const std::string& text) {
  try {
    dsl::parse_spec(text);
  } catch (const dsl::ParseError& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("empty input") {
  const dsl::Document d = dsl::parse_spec("");
  CHECK(d.decls.empty());
  CHECK(d.tasks.empty());
  CHECK(dsl::parse_spec("  # only a comment\n// and another\n") == d);
}

TEST_CASE("m2 sample") {
  const dsl::Document d = dsl::parse_spec(slurp("m2_pair.gsm"));
  CHECK(d.decls.size() == 5);
  CHECK(d.tasks.size() == 3);
  REQUIRE(d.find("M2") != nullptr);
  CHECK(dsl::kind_name(d.find("M2")->body) == "algebra");
  CHECK(d.tasks[2].arg("point") == "x");
}

TEST_CASE("print then parse is a fixpoint") {
  for (const std::string& name : kSamples) {
    CAPTURE(name);
    const dsl::Document d = dsl::parse_spec(slurp(name));
    const std::string printed = dsl::print_spec(d);
    const dsl::Document again = dsl::parse_spec(printed);
    CHECK(again == d);
    CHECK(dsl::print_spec(again) == printed);
  }
}

TEST_CASE("parse errors") {
  CHECK(parse_code("task bogus;") == ErrorCode::Syntax);
  CHECK(parse_code("groupoid G = pair(e, f);\ngroupoid G = cyclic(2);") == ErrorCode::DuplicateName);
  CHECK(parse_code("algebra A = groupoid_algebra(H);") == ErrorCode::UnresolvedName);
  CHECK(parse_code("groupoid G = pair(e f);") == ErrorCode::Syntax);
  CHECK(parse_code("task duality colour=red;") == ErrorCode::Syntax);

  try {
    dsl::parse_spec("groupoid G = pair(e, f);\n  task nope;");
    FAIL("expected a parse error");
  } catch (const dsl::ParseError& e) {
    CHECK(e.pos().line == 2);
    CHECK(e.witness().rfind("2:", 0) == 0);
  }
}

TEST_CASE("runner on the m2 sample") {
  const RunResult r = run_text(slurp("m2_pair.gsm"));
  CHECK(r.exit_code == kExitPass);
  CHECK(r.report["ok"] == true);

  const Json& d = task(r.report, "duality");
  CHECK(d["dims"] == Json::array({16, 16}));
  CHECK(d["mapOK"] == true);

  const Json& m = task(r.report, "morita");
  CHECK(m["squareSurjective"] == true);
  CHECK(m["roundSurjective"] == true);

  CHECK(emit_json(run_text(slurp("m2_pair.gsm")).report) == emit_json(r.report));
}

TEST_CASE("runner exit codes") {
  const RunResult trivial = run_text("groupoid T = pair(o);\ntask check;\n");
  CHECK(trivial.exit_code == kExitPass);
  CHECK(task(trivial.report, "check")["ok"] == true);

  const RunResult parse = run_text("task bogus;");
  CHECK(parse.exit_code == kExitUsage);
  CHECK(parse.report["error"]["code"] == "E_SYNTAX");

  std::string text = slurp("m2_pair.gsm");
  const std::string good = "mult E21*E12 = E22;";
  const auto at = text.find(good);
  REQUIRE(at != std::string::npos);
  text.replace(at, good.size(), "mult E21*E12 = E11;");
  const RunResult corrupt = run_text(text);
  CHECK(corrupt.exit_code == kExitAssertion);
  CHECK(corrupt.report["ok"] == false);
  CHECK(corrupt.report.dump().find("E_ASSOC") != std::string::npos);

  RunOptions only;
  only.task_filter = "check";
  CHECK(run_text(slurp("m2_pair.gsm"), only).report["tasks"].size() == 1);

  RunOptions tight;
  tight.max_dim = 4;
  CHECK(run_text(slurp("m2_pair.gsm"), tight).exit_code != kExitPass);
}

TEST_CASE("every sample passes") {
  for (const std::string& name : kSamples) {
    CAPTURE(name);
    CHECK(run_text(slurp(name)).exit_code == kExitPass);
  }
}

TEST_CASE("json emission") {
  CHECK(scalar_json(Scalar(1, 2)) == "1/2");
  CHECK(emit_json(scalar_json(Scalar(-3))) == "\"-3\"\n");

  const StructureAlgebra empty = StructureAlgebra::validate(0, {}, Vector(0));
  const Json e = algebra_json(empty);
  CHECK(e["dim"] == 0);
  CHECK(e["basis"].empty());

  const SmashAlgebra s = smash_product(fx::m2(), fx::xef());
  CHECK(vector_json(s.algebra.unit()).size() == 4);

  Json j;
  j["b"] = 1;
  j["a"] = 2;
  CHECK(emit_json(j) == "{\n  \"a\": 2,\n  \"b\": 1\n}\n");
}
