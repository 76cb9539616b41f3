#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "hq/report.hpp"
#include "support.hpp"

using namespace hq;

namespace {

std::vector<std::string> all_jobs() {
  auto v = example_names();
  for (const auto& c : control_names()) v.push_back(c);
  return v;
}

struct CliRun {
  int code = 0;
  std::string out;
};

CliRun run_cli(const std::string& args) {
  CliRun r;
  std::string cmd = std::string(HQ_BINARY) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {-1, ""};
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string write_temp(const std::string& name, const std::string& text) {
  std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << text;
  return path;
}

std::string replace_line(std::string text, const std::string& from, const std::string& to) {
  auto at = text.find(from);
  EXPECT_NE(at, std::string::npos) << from;
  if (at != std::string::npos) text.replace(at, from.size(), to);
  return text;
}

}  // namespace

TEST(JobFormat, PrintParseRoundTrip) {
  for (const auto& name : all_jobs()) {
    std::string once = print_job(parse_job(example_job(name)));
    EXPECT_EQ(print_job(parse_job(once)), once) << name;
  }
}

TEST(JobFormat, CommentsAndBlankLinesAreIgnored) {
  std::string text = example_job("trivial_polyring");
  std::string noisy = "# a comment\n\n" + replace_line(text, "ell 2", "ell 2   # degree of w");
  EXPECT_EQ(print_job(parse_job(noisy)), print_job(parse_job(text)));
}

TEST(JobFormat, BundledJobFilesMatchTheRegistry) {
  for (const auto& name : all_jobs()) {
    std::ifstream in(std::string(HQ_SOURCE_DIR) + "/jobs/" + name + ".job");
    ASSERT_TRUE(in) << name;
    std::ostringstream s;
    s << in.rdbuf();
    EXPECT_EQ(s.str(), example_job(name)) << name;
  }
}

TEST(JobErrors, ActionMatrixShapeReportsPosition) {
  std::string text =
      "name bad\nhopf group_algebra\norder 1\ngenerator g perm [1, 0]\nirreps characters\nvariables u v\n"
      "action g=[[1,0],[0,1],[0,0]]\nsuperpotential u*v - v*u\nell 2\nm 2\ngkdim 2\n";
  try {
    build_session(parse_job(text));
    FAIL() << "expected JobError";
  } catch (const JobError& e) {
    EXPECT_EQ(e.pos().line, 7u);
    EXPECT_EQ(e.pos().column, 10u);
    EXPECT_NE(std::string(e.what()).find("matrix is 3x2, expected 2x2"), std::string::npos) << e.what();
  }
}

TEST(JobErrors, UnknownStatement) {
  try {
    parse_job("name x\nfrobnicate 3\n");
    FAIL() << "expected JobError";
  } catch (const JobError& e) {
    EXPECT_EQ(e.pos().line, 2u);
    EXPECT_NE(std::string(e.what()).find("unknown statement 'frobnicate'"), std::string::npos);
  }
}

TEST(JobErrors, KacPalyutkinSuggestsAScalarOrder) {
  std::string text = replace_line(example_job("kac_palyutkin_A"), "order 4", "order 2");
  try {
    build_session(parse_job(text));
    FAIL() << "expected JobError";
  } catch (const JobError& e) {
    EXPECT_NE(std::string(e.what()).find("order 4"), std::string::npos) << e.what();
  }
}

TEST(JobErrors, UnknownExampleAndStage) {
  EXPECT_THROW(example_job("no_such_example"), JobError);
  EXPECT_THROW(run_stage(parse_job(example_job("trivial_polyring")), "nonsense", 10), JobError);
}

TEST(JobErrors, ErrorRecordIsJson) {
  auto j = nlohmann::json::parse(error_record("input", "line 7, column 10: oops", 7, 10));
  EXPECT_EQ(j["version"], kRecordsVersion);
  EXPECT_EQ(j["error"]["kind"], "input");
  EXPECT_EQ(j["error"]["line"], 7);
  EXPECT_EQ(j["error"]["column"], 10);
  EXPECT_EQ(j["error"]["message"], "line 7, column 10: oops");
}

TEST(Stages, RecordsAreDeterministic) {
  for (const auto& name : {"kac_palyutkin_A", "dual_D4", "cyclic_q", "jordan_case_h"}) {
    JobSpec job = parse_job(example_job(name));
    for (const auto& stage : {"validate", "hdet", "mckay", "lambda", "hilbert", "auslander", "mcm"}) {
      StageOutput a = run_stage(job, stage, 20), b = run_stage(job, stage, 20);
      EXPECT_EQ(a.records, b.records) << name << " " << stage;
      EXPECT_EQ(a.text, b.text) << name << " " << stage;
      EXPECT_EQ(a.dot, b.dot) << name << " " << stage;
      EXPECT_NO_THROW((void)nlohmann::json::parse(a.records));
    }
  }
}

TEST(Stages, LambdaRecordFields) {
  StageOutput r = run_stage(parse_job(example_job("dual_D3")), "lambda", 20);
  auto j = nlohmann::json::parse(r.records);
  EXPECT_EQ(j["stage"], "lambda");
  EXPECT_EQ(j["route"], "dual_group");
  EXPECT_EQ(j["hdet_trivial"], true);
  EXPECT_EQ(j["recognition"], "preprojective(Atilde5)");
  EXPECT_EQ(j["relation_text"].size(), 6u);
  EXPECT_EQ(j["quiver"]["vertices"].size(), 6u);
  EXPECT_EQ(j["quiver"]["arrows"].size(), 12u);
}

TEST(Cli, ExampleList) {
  CliRun r = run_cli("example --list");
  EXPECT_EQ(r.code, 0);
  for (const auto& name : all_jobs()) EXPECT_NE(r.out.find(name + "\n"), std::string::npos) << name;
}

TEST(Cli, KacPalyutkinLambda) {
  CliRun r = run_cli("example kac_palyutkin_A --stage lambda");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("Phi = "), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("recognition: preprojective"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("route: general"), std::string::npos) << r.out;
}

TEST(Cli, DualD3Auslander) {
  CliRun r = run_cli("example dual_D3 --stage auslander");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("auslander: isomorphism (certified)"), std::string::npos) << r.out;
}

TEST(Cli, PolynomialRingMckay) {
  CliRun r = run_cli("example trivial_polyring --stage mckay");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("loops: 2"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("inner_faithful: yes"), std::string::npos) << r.out;
  CliRun dot = run_cli("example trivial_polyring --stage mckay --format dot");
  EXPECT_EQ(dot.code, 0);
  EXPECT_EQ(dot.out.rfind("digraph", 0), 0u) << dot.out;
}

TEST(Cli, JobFileMatchesExample) {
  std::string path = std::string(HQ_SOURCE_DIR) + "/jobs/cyclic_q.job";
  CliRun a = run_cli("hilbert " + path + " --dmax 12 --format records");
  CliRun b = run_cli("example cyclic_q --stage hilbert --dmax 12 --format records");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, ControlsExitWithHypothesisViolation) {
  for (const auto& name : control_names()) {
    CliRun r = run_cli("example " + name + " --stage validate");
    EXPECT_EQ(r.code, 2) << name;
    EXPECT_NE(r.out.find("FAIL"), std::string::npos) << name;
  }
  for (const auto& name : example_names()) EXPECT_EQ(run_cli("example " + name + " --stage validate").code, 0) << name;
}

TEST(Cli, InputErrorsExitWithOne) {
  std::string path = write_temp("unknown.job", "name x\nfrobnicate 3\n");
  CliRun r = run_cli("lambda " + path + " --format records");
  EXPECT_EQ(r.code, 1);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["error"]["kind"], "input");
  EXPECT_EQ(j["error"]["line"], 2);
  EXPECT_EQ(run_cli("lambda /nonexistent/file.job").code, 1);
  EXPECT_EQ(run_cli("example no_such_example").code, 1);
}

TEST(Cli, IntertwinerFileOverridesArrows) {
  std::string text = example_job("trivial_polyring");
  text = text.substr(0, text.find("arrow "));
  std::string job = write_temp("plain.job", text);
  std::string names = write_temp("names.txt", "arrow p 0 -> 0 0\narrow q 0 -> 0 1\n");
  CliRun r = run_cli("lambda " + job + " --intertwiners " + names);
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("Phi = pq - qp"), std::string::npos) << r.out;
  // names already fixed by the job cannot be overridden
  EXPECT_EQ(run_cli("example trivial_polyring --stage lambda --intertwiners " + names).code, 1);
}
