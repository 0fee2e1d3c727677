#include <gtest/gtest.h>

#include "aluffi/errors.hpp"
#include "cli.hpp"
#include "test_util.hpp"

namespace aluffi::cli {
namespace {

constexpr const char* kFourPoints =
    "# four points in the plane\n"
    "ring: x,y,z\n"
    "I: x^2-x*z, y^2-y*z, x*(2*y-z), y*(2*x-z), (2*x-z)*(2*y-z)\n"
    "J: x^2-x*z, y^2-y*z\n";

Outcome run_job(std::vector<std::string> command, std::string input, Options o = {}) {
  return run(Job{std::move(command), std::move(input), std::move(o)});
}

TEST(InputFile, ParsesAllKeys) {
  auto in = parse_input(
      "ring: x,y,z | params: u\n"
      "ideal: x+y, x-y\n"
      "ideal: z\n"
      "curve: x^2*y^2 + x^2*z^2 + y^2*z^2\n"
      "family: y^4*z + x^5 + u*x^3*y^2\n"
      "matrix: [x, y; 0, z]\n"
      "candidate: x, T1\n");
  EXPECT_EQ(in.ring->size(), 4u);
  EXPECT_EQ(in.ideals.size(), 2u);
  EXPECT_TRUE(in.curve.has_value());
  EXPECT_TRUE(in.family.has_value());
  ASSERT_TRUE(in.matrix.has_value());
  EXPECT_EQ(in.matrix->rows(), 2u);
  EXPECT_EQ(in.matrix->cols(), 2u);
  ASSERT_EQ(in.candidates.size(), 1u);
  EXPECT_EQ(in.candidates[0].line, 7u);
}

TEST(InputFile, OrderOverride) {
  auto in = parse_input("ring: x,y\nideal: x\n", "lex");
  EXPECT_EQ(in.ring->order().name(), "lex");
}

TEST(InputFile, PairWithCertificate) {
  auto in = parse_input("ring: x,y\nI: x, y\nJ: x*y\ncertificate: y, 0\n");
  ASSERT_TRUE(in.I && in.J);
  ASSERT_EQ(in.certificates.size(), 1u);
  EXPECT_EQ(in.certificates[0].size(), 2u);
}

void expect_parse_error(std::string_view text, std::size_t line) {
  try {
    parse_input(text);
    FAIL() << "expected ParseError for: " << text;
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), line) << text;
    EXPECT_GE(e.column(), 1u);
  }
}

TEST(InputFile, ErrorsCarryLineAndColumn) {
  expect_parse_error("ring: x,y\nbogus: x\n", 2);
  expect_parse_error("ideal: x\n", 1);
  expect_parse_error("ring: x,y\nring: x\n", 2);
  expect_parse_error("ring: x,y\nideal: x + w\n", 2);
  expect_parse_error("ring: x,y\n\nideal: x^^2\n", 3);
  expect_parse_error("", 1);
}

TEST(Run, GroebnerBasisOfConjugateForms) {
  auto out = run_job({"gb"}, "ring: x,y,z\nideal: x+y, x-y\n");
  EXPECT_EQ(out.exit_code, kSuccess);
  EXPECT_EQ(out.report["status"], "ok");
  auto basis = out.report["results"]["basis"].get<std::vector<std::string>>();
  std::sort(basis.begin(), basis.end());
  EXPECT_EQ(basis, (std::vector<std::string>{"x", "y"}));
}

TEST(Run, TorsionOfFourPoints) {
  Options o;
  o.bound = 3;
  auto out = run_job({"aluffi", "torsion"}, kFourPoints, o);
  EXPECT_EQ(out.exit_code, kSuccess);
  const auto& t = out.report["results"]["torsion"];
  EXPECT_EQ(t["all_zero"], false);
  EXPECT_EQ(t["pieces"][0]["t"], 2);
  EXPECT_EQ(t["pieces"][0]["zero"], false);
  EXPECT_EQ(t["pieces"][1]["zero"], true);
}

TEST(Run, MachineOutputIsDeterministic) {
  Options o;
  o.bound = 3;
  auto a = render_machine(run_job({"aluffi", "torsion"}, kFourPoints, o).report);
  auto b = render_machine(run_job({"aluffi", "torsion"}, kFourPoints, o).report);
  EXPECT_EQ(a, b);
  EXPECT_NE(render_human(run_job({"gb"}, "ring: x\nideal: x^2\n").report, 0.5).find("elapsed"), std::string::npos);
}

TEST(Run, IdealOperations) {
  auto q = run_job({"ideal", "quotient"}, "ring: x,y\nideal: x^2, x*y\nideal: x\n");
  EXPECT_EQ(q.exit_code, kSuccess);
  auto s = run_job({"ideal", "saturate"}, "ring: x,y\nideal: x^2*y\nideal: x\n");
  EXPECT_EQ(s.exit_code, kSuccess);
  Options o;
  o.vars = {"x"};
  auto e = run_job({"ideal", "eliminate"}, "ring: x,u,v\nideal: x-u, x^2-v\n", o);
  EXPECT_EQ(e.exit_code, kSuccess);
  EXPECT_NE(e.report["results"].dump().find("u^2 - v"), std::string::npos) << e.report.dump();
}

TEST(Run, CurveCertificate) {
  auto lt = run_job({"curve-cert"}, "ring: x,y,z\ncurve: x^2*y^2 + x^2*z^2 + y^2*z^2\n");
  EXPECT_EQ(lt.exit_code, kSuccess);
  EXPECT_NE(lt.report["results"].dump().find("LinearType"), std::string::npos);
}

TEST(Run, FixtureReportsVerdictAndProvenance) {
  Options o;
  o.names = {"three-nodes"};
  auto out = run_job({"fixtures", "run"}, "", o);
  EXPECT_EQ(out.exit_code, kSuccess);
  const auto& f = out.report["results"]["fixtures"][0];
  EXPECT_EQ(f["name"], "three-nodes");
  EXPECT_EQ(f["verdict"], "LinearType");
  EXPECT_FALSE(f["provenance"].get<std::string>().empty());
  EXPECT_EQ(f["passed"], true);
}

TEST(Run, FixtureListIsStable) {
  auto a = fixture_list();
  EXPECT_EQ(a.size(), fixture_list().size());
  ASSERT_GE(a.size(), 13u);
  EXPECT_EQ(a[0].name, "three-nodes");
}

TEST(ExitCodes, InputErrors) {
  auto bad = run_job({"gb"}, "ring: x,y\nbogus: 1\n");
  EXPECT_EQ(bad.exit_code, kInputError);
  EXPECT_EQ(bad.report["status"], "input-error");
  EXPECT_EQ(bad.report["line"], 2);
  EXPECT_EQ(run_job({"gb"}, "ring: x,y\n").exit_code, kInputError);
  EXPECT_EQ(run_job({"aluffi", "torsion"}, "ring: x,y\nI: x\nJ: y\n").exit_code, kInputError);
  Options o;
  o.names = {"no-such-fixture"};
  EXPECT_EQ(run_job({"fixtures", "run"}, "", o).exit_code, kInputError);
}

TEST(ExitCodes, WorkLimitGivesPartialReport) {
  Options o;
  o.bound = 3;
  o.work_limit = 50;
  auto out = run_job({"aluffi", "torsion"}, kFourPoints, o);
  EXPECT_EQ(out.exit_code, kResourceLimit);
  EXPECT_EQ(out.report["status"], "resource-limit");
  EXPECT_TRUE(out.report.contains("inputs"));
  EXPECT_TRUE(out.report.contains("limit"));
}

TEST(ExitCodes, VerdictFailure) {
  Options o;
  o.only = "1";
  o.inject = {1};
  EXPECT_EQ(run_job({"acceptance"}, "", o).exit_code, kVerdictFailure);
}

}  // namespace
}  // namespace aluffi::cli
