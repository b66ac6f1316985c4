#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "sevenfold/report.hpp"

using namespace sevenfold;
using namespace sevenfold::report;

namespace {

const CheckResult* find(const Report& r, const std::string& id) {
  for (const auto& s : r.suites)
    for (const auto& c : s.checks)
      if (c.id == id) return &c;
  return nullptr;
}

Report single_pass() {
  Report r;
  SuiteReport s;
  s.name = "demo";
  s.checks.push_back({"one", "demo", "a claim", Status::pass, "1", "1", 3.0});
  r.suites.push_back(s);
  return r;
}

}  // namespace

TEST(Report, RejectsBadInput) {
  EXPECT_THROW(run("nope"), std::invalid_argument);
  Options o;
  o.lambdas.clear();
  EXPECT_THROW(run("pencil", o), std::invalid_argument);
  Options p;
  p.primes = {3};
  EXPECT_THROW(run("pencil", p), std::invalid_argument);
  EXPECT_THROW(parse_format("xml"), std::invalid_argument);
  EXPECT_EQ(parse_format("json"), Format::json);
}

TEST(Report, SuiteNames) {
  EXPECT_EQ(suite_names(), (std::vector<std::string>{"arithmetic", "group", "characters", "jacobian", "lattice", "pencil"}));
}

TEST(Report, LatticeSuiteHasPrincipalCheck) {
  const Report r = run("lattice");
  ASSERT_EQ(r.suites.size(), 1u);
  const auto* c = find(r, "pfaffian-lambda4");
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->status, Status::pass);
  EXPECT_EQ(c->actual, "1");
  // the printed νv₀ identity is reported, not hidden
  const auto* literal = find(r, "nu-v0-consecutive");
  ASSERT_NE(literal, nullptr);
  EXPECT_EQ(literal->status, Status::fail);
  EXPECT_EQ(find(r, "nu-v0-squares")->status, Status::pass);
}

TEST(Report, CharactersSuite) {
  const Report r = run("characters");
  const auto* c = find(r, "sym3-w9-decomposition");
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->status, Status::pass);
  EXPECT_EQ(find(r, "projector-w20^3-trace")->status, Status::skipped);
  EXPECT_TRUE(r.ok());
}

TEST(Report, PencilRowsLight) {
  Options o;
  o.lambdas = {Rational(0), Rational(-2), Rational(1)};
  const Report r = run("pencil", o);
  std::size_t rows = 0;
  for (const auto& c : r.suites[0].checks) {
    if (c.id.rfind("pencil-r3-", 0) == 0) {
      ++rows;
      EXPECT_EQ(c.actual, "84");
      EXPECT_EQ(c.status, Status::pass);
    }
    if (c.id.rfind("pencil-smooth-", 0) == 0) EXPECT_EQ(c.status, Status::skipped);
  }
  EXPECT_EQ(rows, 3u);
}

TEST(Report, StatusMatchesStringEquality) {
  const Report r = run("arithmetic");
  for (const auto& s : r.suites)
    for (const auto& c : s.checks) {
      EXPECT_EQ(c.suite, s.name);
      EXPECT_FALSE(c.paper_ref.empty());
      if (c.status != Status::skipped) EXPECT_EQ(c.status == Status::pass, c.expected == c.actual) << c.id;
    }
  EXPECT_EQ(r.passed() + r.failed() + r.skipped(), r.suites[0].checks.size());
}

TEST(Emit, EmptyReportIsValidJson) {
  const auto doc = nlohmann::ordered_json::parse(render(Report{}, Format::json));
  EXPECT_EQ(doc["version"], std::string(kSchemaVersion));
  EXPECT_TRUE(doc["suites"].empty());
  EXPECT_EQ(doc["summary"]["passed"], 0);
  EXPECT_EQ(doc["summary"]["failed"], 0);
  EXPECT_EQ(doc["summary"]["skipped"], 0);
  EXPECT_NE(render(Report{}, Format::human).find("passed 0, failed 0, skipped 0"), std::string::npos);
}

TEST(Emit, SinglePassRecord) {
  const auto doc = nlohmann::ordered_json::parse(render(single_pass(), Format::json));
  std::vector<std::string> top;
  for (const auto& [k, v] : doc.items()) top.push_back(k);
  EXPECT_EQ(top, (std::vector<std::string>{"version", "suites", "summary"}));
  const auto& c = doc["suites"][0]["checks"][0];
  std::vector<std::string> keys;
  for (const auto& [k, v] : c.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"id", "suite", "paper_ref", "status", "expected", "actual", "duration_ms"}));
  EXPECT_EQ(c["status"], "pass");
  EXPECT_EQ(c["duration_ms"], 3);
  EXPECT_TRUE(nlohmann::ordered_json::parse(render(single_pass(), Format::json, false))["suites"][0]["checks"][0]
                  ["duration_ms"]
                      .is_null());
}

TEST(Emit, DeterministicWithoutDurations) {
  Options o;
  o.lambdas = {Rational(0), make_rational(1, 3)};
  const Report a = run("arithmetic", o), b = run("arithmetic", o);
  EXPECT_EQ(render(a, Format::json, false), render(b, Format::json, false));
  EXPECT_EQ(render(a, Format::human, false), render(b, Format::human, false));
  const Report c = run("pencil", o), d = run("pencil", o);
  EXPECT_EQ(render(c, Format::json, false), render(d, Format::json, false));
}

TEST(Emit, FileAndErrors) {
  const std::string path = ::testing::TempDir() + "report_test.json";
  emit(single_pass(), Format::json, path);
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  EXPECT_EQ(ss.str(), render(single_pass(), Format::json));
  std::remove(path.c_str());
  EXPECT_THROW(emit(single_pass(), Format::json, "/nonexistent-dir/x.json"), std::runtime_error);
}
