#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "fixtures.hpp"
#include "qdiag/cli/cli.hpp"
#include "qdiag/emit/json.hpp"
#include "qdiag/logic/compare.hpp"
#include "qdiag/logic/json.hpp"
#include "qdiag/pipeline.hpp"

namespace qdiag::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return testing::query_fixture(name); }

int count(const std::string& text, const std::string& needle) {
  int n = 0;
  for (std::size_t at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1)) ++n;
  return n;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("qdiag_cli_test_" + std::to_string(::getpid()) + "_" + name);
}

TEST(Cli, VizDot) {
  const Result r = run_cli({"viz"}, fixture("only_bars"));
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out.rfind("digraph qdiag {", 0), 0u);
  EXPECT_EQ(count(r.out, "dashed"), 0);
  EXPECT_EQ(count(r.out, "_inner\""), 1);
}

TEST(Cli, VizNoSimplifyKeepsDashedClusters) {
  const Result r = run_cli({"viz", "--no-simplify"}, fixture("only_bars"));
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(count(r.out, "style=\"dashed,rounded\""), 2);
}

TEST(Cli, VizJsonLoads) {
  const Result r = run_cli({"viz", "--format", "json"}, fixture("unique_set"));
  ASSERT_EQ(r.code, kOk);
  EXPECT_EQ(emit::load_diagram(r.out).groups.size(), 6u);
}

TEST(Cli, InputAndOutputFiles) {
  const auto in = temp_file("in.sql"), out = temp_file("out.dot");
  {
    std::FILE* f = std::fopen(in.c_str(), "w");
    std::fputs(fixture("some_bar").c_str(), f);
    std::fclose(f);
  }
  const Result r = run_cli({"viz", "-i", in.string(), "-o", out.string()});
  EXPECT_EQ(r.code, kOk);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(testing::read_file(out.string()), run_cli({"viz"}, fixture("some_bar")).out);
  std::filesystem::remove(in);
  std::filesystem::remove(out);
}

TEST(Cli, MissingInputFile) {
  const Result r = run_cli({"viz", "-i", "/nonexistent/q.sql"});
  EXPECT_EQ(r.code, kUsageError);
  EXPECT_NE(r.err.find("cannot read"), std::string::npos);
}

TEST(Cli, RenderWithoutRendererWarns) {
  ::unsetenv("QDIAG_DOT");
  const Result r = run_cli({"viz", "--render", "svg"}, fixture("some_bar"));
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.err.find("warning:"), std::string::npos);
  EXPECT_FALSE(r.out.empty());
}

TEST(Cli, LtMatchesLibrary) {
  const Result r = run_cli({"lt", "--no-simplify"}, fixture("sailors_all"));
  ASSERT_EQ(r.code, kOk);
  const auto lt = logic::logic_tree_from_json(nlohmann::ordered_json::parse(r.out));
  EXPECT_TRUE(logic::lt_equal(lt, compile(fixture("sailors_all")), false));
}

TEST(Cli, TrcSingleTable) {
  const Result r = run_cli({"trc"}, "SELECT T.a FROM Tab T");
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "{Q | ∃T ∈ Tab [T.a = Q.a]}\n");
}

TEST(Cli, CheckOk) {
  const Result r = run_cli({"check"}, fixture("unique_set"));
  EXPECT_EQ(r.code, kOk);
}

TEST(Cli, CheckDegenerate) {
  const std::string owl = testing::read_file(testing::fixture_path("degenerate/owl.sql"));
  const Result text = run_cli({"check"}, owl);
  EXPECT_EQ(text.code, kValidationFailure);
  EXPECT_NE(text.out.find("local-attributes"), std::string::npos);
  const Result json = run_cli({"check", "--format", "json"}, owl);
  EXPECT_EQ(json.code, kValidationFailure);
  const auto j = nlohmann::ordered_json::parse(json.out);
  EXPECT_EQ(j["ok"], false);
  EXPECT_EQ(j["violations"].size(), 1u);
}

TEST(Cli, CheckDepthLimit) {
  EXPECT_EQ(run_cli({"check", "--max-depth", "2"}, fixture("unique_set")).code, kValidationFailure);
}

TEST(Cli, CheckReportsRenames) {
  const Result r = run_cli(
      {"check"}, "SELECT L.a FROM L WHERE EXISTS (SELECT * FROM L WHERE L.a = L.a)");
  EXPECT_NE(r.out.find("note: alias"), std::string::npos) << r.out;
}

TEST(Cli, VizDegenerate) {
  const std::string owl = testing::read_file(testing::fixture_path("degenerate/owl.sql"));
  EXPECT_EQ(run_cli({"viz"}, owl).code, kValidationFailure);
  EXPECT_EQ(run_cli({"viz", "--allow-degenerate"}, owl).code, kOk);
}

TEST(Cli, RecoverFormats) {
  const std::string diagram_json = run_cli({"viz", "--format", "json"}, fixture("unique_set")).out;
  const Result json = run_cli({"recover"}, diagram_json);
  ASSERT_EQ(json.code, kOk) << json.err;
  EXPECT_EQ(nlohmann::ordered_json::parse(json.out)["depths"]["L6"], 3);
  const Result text = run_cli({"recover", "--format", "text"}, diagram_json);
  EXPECT_NE(text.out.find("L4: depth 3, parent L3"), std::string::npos) << text.out;
  const Result lt = run_cli({"recover", "--format", "lt"}, diagram_json);
  ASSERT_EQ(lt.code, kOk);
  EXPECT_EQ(nlohmann::ordered_json::parse(lt.out), nlohmann::ordered_json::parse(run_cli({"lt"}, fixture("unique_set")).out));
}

TEST(Cli, RecoverInvalid) {
  const Result bad = run_cli({"recover"}, "{\"groups\": 3}");
  EXPECT_EQ(bad.code, kValidationFailure);
  EXPECT_NE(bad.err.find("invalid diagram"), std::string::npos) << bad.err;
}

TEST(Cli, RoundtripAllFixtures) {
  for (const std::string& name : testing::query_fixture_names()) {
    for (bool plain : {false, true}) {
      std::vector<std::string> args{"roundtrip"};
      if (plain) args.push_back("--no-simplify");
      const Result r = run_cli(args, fixture(name));
      EXPECT_EQ(r.code, kOk) << name << r.err;
      EXPECT_EQ(r.out.rfind("ok:", 0), 0u) << name;
    }
  }
}

TEST(Cli, MetricsText) {
  const Result r = run_cli({"metrics"}, fixture("unique_set"));
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("elements: 30"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("reading order: SELECT -> L1 -> L2 -> L3 -> L4 | restart L5 -> L6"), std::string::npos);
}

TEST(Cli, MetricsJson) {
  const Result r = run_cli({"metrics", "--format", "json"}, fixture("some_bar"));
  const auto j = nlohmann::ordered_json::parse(r.out);
  EXPECT_EQ(j["elements"]["total"], 15);
  EXPECT_EQ(j["words"], 21);
}

TEST(Cli, ParseErrorsExitTwo) {
  const Result r = run_cli({"viz"}, "SELECT FROM");
  EXPECT_EQ(r.code, kUsageError);
  EXPECT_NE(r.err.find("error:"), std::string::npos);
  EXPECT_EQ(run_cli({"viz"}, "SELECT R.a FROM R WHERE R.a = 1 OR R.b = 2").code, kUsageError);
  EXPECT_EQ(run_cli({"viz"}, "SELECT X.a FROM R").code, kUsageError);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run_cli({}).code, kUsageError);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kUsageError);
  EXPECT_EQ(run_cli({"viz", "--format", "png"}, fixture("some_bar")).code, kUsageError);
  EXPECT_EQ(run_cli({"viz", "--bogus"}, fixture("some_bar")).code, kUsageError);
  EXPECT_EQ(run_cli({"check", "--max-depth", "abc"}, fixture("some_bar")).code, kUsageError);
}

TEST(Cli, HelpExitsZero) {
  const Result r = run_cli({"--help"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("viz"), std::string::npos);
}

TEST(Cli, BinaryRuns) {
  const std::string cmd = std::string("\"") + QDIAG_CLI_PATH + "\" trc -i \"" +
                          testing::fixture_path("queries/some_bar.sql") + "\" > /dev/null 2>&1";
  EXPECT_EQ(std::system(cmd.c_str()), 0);
}

}  // namespace
}  // namespace qdiag::cli
