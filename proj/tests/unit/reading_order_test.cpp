#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "qdiag/diagram/builder.hpp"
#include "qdiag/diagram/reading_order.hpp"
#include "qdiag/pipeline.hpp"

namespace qdiag::diagram {
namespace {

Diagram fixture_diagram(const std::string& name) { return build_diagram(compile(testing::query_fixture(name))); }

TEST(ReadingOrder, UniqueSetRestartsAtUnreachedBranch) {
  const Diagram d = fixture_diagram("unique_set");
  const ReadingOrder order = reading_order(d);
  EXPECT_EQ(visit_sequence(d, order), (std::vector<std::string>{"L1", "L2", "L3", "L4", "L5", "L6"}));
  EXPECT_EQ(to_text(d, order), "SELECT -> L1 -> L2 -> L3 -> L4 | restart L5 -> L6");
  ASSERT_EQ(order.size(), 6u);
  EXPECT_EQ(order[0].kind, ReadingStep::Kind::Start);
  EXPECT_EQ(order[4].kind, ReadingStep::Kind::Restart);
  EXPECT_EQ(order[5], (ReadingStep{ReadingStep::Kind::Follow, 5, 3}));
}

TEST(ReadingOrder, FlatQueryIsOneStep) {
  const Diagram d = fixture_diagram("some_bar");
  EXPECT_EQ(to_text(d, reading_order(d)), "SELECT -> F+L+S");
}

TEST(ReadingOrder, OnlyBarsFollowsTheArrows) {
  const Diagram d = fixture_diagram("only_bars");
  EXPECT_EQ(to_text(d, reading_order(d)), "SELECT -> F -> S -> L");
}

TEST(ReadingOrder, VisitsEveryGroupOnce) {
  for (const std::string& name : testing::query_fixture_names()) {
    const Diagram d = fixture_diagram(name);
    auto seq = visit_sequence(d, reading_order(d));
    EXPECT_EQ(seq.size(), d.groups.size()) << name;
    std::sort(seq.begin(), seq.end());
    EXPECT_EQ(std::adjacent_find(seq.begin(), seq.end()), seq.end()) << name;
  }
}

}  // namespace
}  // namespace qdiag::diagram
