#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "qdiag/logic/validate.hpp"
#include "qdiag/pipeline.hpp"

namespace qdiag::logic {
namespace {

using testing::query_fixture;

std::vector<ViolationKind> kinds(const ValidationReport& r) {
  std::vector<ViolationKind> out;
  for (const Violation& v : r.violations) out.push_back(v.kind);
  return out;
}

TEST(Validate, OwlSelectionBelongsToTheRoot) {
  const std::string sql = testing::read_file(testing::fixture_path("degenerate/owl.sql"));
  const ValidationReport r = check_nondegenerate(compile(sql));
  ASSERT_EQ(r.violations.size(), 1u) << to_text(r);
  const Violation& v = r.violations[0];
  EXPECT_EQ(v.kind, ViolationKind::LocalAttributes);
  ASSERT_TRUE(v.predicate);
  EXPECT_EQ(to_string(*v.predicate), "F.bar = 'Owl'");
  EXPECT_EQ(v.node_path, (NodePath{0}));
  EXPECT_TRUE(r.depth_ok);
}

TEST(Validate, UniqueSetQueryIsClean) {
  const LogicTree lt = compile(query_fixture("unique_set"));
  const ValidationReport r = check_nondegenerate(lt);
  EXPECT_TRUE(r.ok()) << to_text(r);
  EXPECT_TRUE(r.depth_ok);
  EXPECT_EQ(max_depth(lt), 3);
  EXPECT_EQ(to_text(r), "ok: query is non-degenerate\n");
}

TEST(Validate, AllFixturesAreClean) {
  for (const std::string& name : testing::query_fixture_names()) {
    const ValidationReport r = check_nondegenerate(compile(query_fixture(name)));
    EXPECT_TRUE(r.ok()) << name << "\n" << to_text(r);
  }
}

TEST(Validate, DepthFourChain) {
  const LogicTree lt = compile(
      "SELECT A.x FROM A WHERE NOT EXISTS (SELECT * FROM B WHERE B.x = A.x AND NOT EXISTS (SELECT * FROM C WHERE "
      "C.x = B.x AND NOT EXISTS (SELECT * FROM D WHERE D.x = C.x AND NOT EXISTS (SELECT * FROM E WHERE E.x = D.x))))");
  const ValidationReport r = check_nondegenerate(lt);
  EXPECT_FALSE(r.depth_ok);
  EXPECT_EQ(kinds(r), (std::vector<ViolationKind>{ViolationKind::DepthExceeded}));
  EXPECT_EQ(r.violations[0].node_path, (NodePath{0, 0, 0, 0}));
  EXPECT_TRUE(check_nondegenerate(lt, 4).ok());
}

// S references nothing of R; its only child T references R but not S.
// Neither alternative of the connectivity rule holds for S, and the leaf T
// does not reference its parent.
TEST(Validate, DisconnectedNestedBlock) {
  const LogicTree lt = compile(
      "SELECT R.a FROM R WHERE EXISTS (SELECT * FROM S WHERE S.a = 1 AND EXISTS (SELECT * FROM T WHERE T.a = R.a))");
  const ValidationReport r = check_nondegenerate(lt);
  ASSERT_EQ(kinds(r), (std::vector<ViolationKind>{ViolationKind::ConnectedSubqueries,
                                                  ViolationKind::ConnectedSubqueries}));
  EXPECT_EQ(r.violations[0].node_path, (NodePath{0}));
  EXPECT_EQ(r.violations[1].node_path, (NodePath{0, 0}));
}

TEST(Validate, BlockTiedThroughItsChildren) {
  const LogicTree lt = compile(
      "SELECT R.a FROM R WHERE EXISTS (SELECT * FROM S WHERE S.a = 1 AND EXISTS (SELECT * FROM T WHERE T.a = R.a "
      "AND T.b = S.b))");
  EXPECT_TRUE(check_nondegenerate(lt).ok()) << to_text(check_nondegenerate(lt));
}

TEST(Validate, OneChildMissingTheGrandparentBreaksTheTie) {
  const LogicTree lt = compile(
      "SELECT R.a FROM R WHERE EXISTS (SELECT * FROM S WHERE S.a = 1 AND "
      "EXISTS (SELECT * FROM T WHERE T.a = R.a AND T.b = S.b) AND EXISTS (SELECT * FROM U WHERE U.b = S.b))");
  EXPECT_EQ(kinds(check_nondegenerate(lt)), (std::vector<ViolationKind>{ViolationKind::ConnectedSubqueries}));
}

TEST(Validate, ReportText) {
  const std::string sql = testing::read_file(testing::fixture_path("degenerate/owl.sql"));
  const std::string text = to_text(check_nondegenerate(compile(sql)));
  EXPECT_NE(text.find("[local-attributes]"), std::string::npos) << text;
  EXPECT_NE(text.find("F.bar = 'Owl'"), std::string::npos) << text;
}

}  // namespace
}  // namespace qdiag::logic
