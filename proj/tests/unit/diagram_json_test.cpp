#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "qdiag/diagram/builder.hpp"
#include "qdiag/emit/json.hpp"
#include "qdiag/error.hpp"
#include "qdiag/pipeline.hpp"

namespace qdiag::emit {
namespace {

using diagram::Diagram;
using nlohmann::ordered_json;

Diagram fixture_diagram(const std::string& name, bool simplify = true) {
  diagram::BuildOptions opts;
  opts.simplify = simplify;
  return diagram::build_diagram(compile(testing::query_fixture(name)), opts);
}

void expect_load_error(const ordered_json& j) {
  try {
    diagram_from_json(j);
    FAIL() << j.dump();
  } catch (const InvalidDiagram& e) {
    EXPECT_EQ(e.stage(), "load");
  }
}

TEST(DiagramJson, RoundTripFixtures) {
  for (const std::string& name : testing::query_fixture_names()) {
    for (bool simplify : {false, true}) {
      const Diagram d = fixture_diagram(name, simplify);
      const std::string text = emit_json(d);
      EXPECT_EQ(load_diagram(text), d) << name;
      EXPECT_EQ(emit_json(load_diagram(text)), text) << name;
    }
  }
}

TEST(DiagramJson, OnlyBarsGroups) {
  const ordered_json j = diagram_to_json(fixture_diagram("only_bars", false));
  ASSERT_EQ(j["groups"].size(), 3u);
  EXPECT_EQ(j["groups"][0]["quantifier"], "ROOT");
  EXPECT_TRUE(j["groups"][0]["parent"].is_null());
  EXPECT_EQ(j["groups"][1]["quantifier"], "NOT_EXISTS");
  EXPECT_EQ(j["groups"][2]["quantifier"], "NOT_EXISTS");
  EXPECT_EQ(j["groups"][2]["parent"], 1);
  EXPECT_EQ(j["groups"][2]["depth"], 2);
}

TEST(DiagramJson, UniqueSetCounts) {
  const ordered_json j = diagram_to_json(fixture_diagram("unique_set"));
  EXPECT_EQ(j["groups"].size(), 6u);
  EXPECT_EQ(j["edges"].size(), 8u);
  EXPECT_EQ(j["select_box"]["rows"], ordered_json::parse(R"(["drinker"])"));
}

TEST(DiagramJson, EdgeAndRowShape) {
  const ordered_json j = diagram_to_json(fixture_diagram("sailors_not"));
  const ordered_json& b = j["groups"][2]["tables"][0];
  EXPECT_EQ(b["alias"], "B");
  EXPECT_EQ(b["table"], "Boat");
  bool saw_selection = false;
  for (const auto& r : b["rows"])
    if (r.contains("op")) {
      saw_selection = true;
      EXPECT_EQ(r["attribute"], "color");
      EXPECT_EQ(r["op"], "=");
      EXPECT_EQ(r["constant"], ordered_json::parse(R"({"kind":"string","literal":"red"})"));
    }
  EXPECT_TRUE(saw_selection);
  const ordered_json& link = j["edges"].back();
  EXPECT_EQ(link["select_link"], true);
  EXPECT_EQ(link["from"], ordered_json::parse(R"({"alias":"SELECT","attribute":"sname"})"));
}

TEST(DiagramJson, LoadErrors) {
  EXPECT_THROW(load_diagram("{not json"), InvalidDiagram);
  EXPECT_THROW(load_diagram("[]"), InvalidDiagram);
  const ordered_json good = diagram_to_json(fixture_diagram("only_bars"));

  ordered_json bad_quant = good;
  bad_quant["groups"][1]["quantifier"] = "MAYBE";
  expect_load_error(bad_quant);

  ordered_json two_roots = good;
  two_roots["groups"][1]["quantifier"] = "ROOT";
  expect_load_error(two_roots);

  ordered_json bad_row = good;
  bad_row["edges"][0]["to"]["attribute"] = "nope";
  expect_load_error(bad_row);

  ordered_json bad_id = good;
  bad_id["groups"][1]["id"] = 7;
  expect_load_error(bad_id);

  ordered_json dup_alias = good;
  dup_alias["groups"][2]["tables"][0]["alias"] = "F";
  expect_load_error(dup_alias);

  ordered_json no_link = good;
  no_link["edges"].erase(no_link["edges"].size() - 1);
  expect_load_error(no_link);

  ordered_json eq_label = good;
  eq_label["edges"][0]["label"] = "=";
  expect_load_error(eq_label);
}

}  // namespace
}  // namespace qdiag::emit
