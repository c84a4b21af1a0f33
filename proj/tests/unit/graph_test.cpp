#include <gtest/gtest.h>

#include "causax/error.hpp"
#include "causax/graph.hpp"
#include "causax/reference_oracles.hpp"
#include "test_support.hpp"

namespace causax {
namespace {

using testing::dag;
using testing::names;

TEST(NodeName, AcceptsAlphanumericUpToTenChars) {
  EXPECT_NO_THROW(NodeName("a"));
  EXPECT_NO_THROW(NodeName("0kspcX95Im"));
  EXPECT_THROW(NodeName(""), ValidationError);
  EXPECT_THROW(NodeName("abcdefghijk"), ValidationError);
  EXPECT_THROW(NodeName("a b"), ValidationError);
  EXPECT_THROW(NodeName("a-b"), ValidationError);
  EXPECT_THROW(NodeName("\xC3\xA9"), ValidationError);
}

TEST(CausalDag, RejectsMalformedGraphs) {
  EXPECT_THROW(CausalDag(names({"A", "A"}), {}), ValidationError);
  EXPECT_THROW(CausalDag(names({"A", "B"}), {{0, 2}}), ValidationError);
  EXPECT_THROW(CausalDag(names({"A", "B"}), {{1, 1}}), ValidationError);
  EXPECT_THROW(CausalDag(names({"A", "B"}), {{0, 1}, {0, 1}}), ValidationError);
  EXPECT_THROW(CausalDag(names({"A", "B", "C"}), {{0, 1}, {1, 2}, {2, 0}}), ValidationError);
  EXPECT_NO_THROW(CausalDag(names({"A"}), {}));
}

TEST(CausalDag, ChainDescendants) {
  auto g = dag("X causes Y. Y causes Z.");
  auto d = g.descendants("X");
  EXPECT_EQ(d, (std::vector<NodeIndex>{g.index_of("Y"), g.index_of("Z")}));
  EXPECT_TRUE(g.descendants("Z").empty());
}

TEST(CausalDag, ColliderParentsAndChildren) {
  auto g = dag("X causes Z. Y causes Z.");
  EXPECT_EQ(g.parents("Z"), (std::vector<NodeIndex>{g.index_of("X"), g.index_of("Y")}));
  EXPECT_EQ(g.children("X"), std::vector<NodeIndex>{g.index_of("Z")});
  EXPECT_TRUE(g.parents("X").empty());
}

TEST(CausalDag, ReachabilityConventions) {
  auto g = dag("X causes Y. Y causes Z.");
  EXPECT_TRUE(g.reachable("X", "Z"));
  EXPECT_FALSE(g.reachable("Z", "X"));
  EXPECT_FALSE(g.reachable("X", "X"));
}

TEST(CausalDag, UnknownNodesThrowLookupError) {
  auto g = dag("X causes Y.");
  EXPECT_THROW(g.index_of("Q"), LookupError);
  EXPECT_THROW(g.parents("Q"), LookupError);
  EXPECT_THROW(g.descendants("Q"), LookupError);
  EXPECT_THROW(g.reachable("X", "Q"), LookupError);
  EXPECT_THROW(g.name(5), LookupError);
}

TEST(CausalDag, TopologicalOrderRespectsEdges) {
  std::mt19937 gen(11);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = testing::random_dag(2 + trial % 10, 0.4, gen);
    auto order = g.topological_order();
    ASSERT_EQ(order.size(), g.node_count());
    std::vector<std::size_t> pos(g.node_count());
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
    for (const auto& e : g.edges()) EXPECT_LT(pos[e.source], pos[e.target]);
  }
}

// Closure by repeated squaring of the adjacency relation, independent of both
// the library's traversal and its fixpoint reference.
std::vector<std::vector<bool>> closure_by_squaring(const CausalDag& g) {
  const std::size_t n = g.node_count();
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (const auto& e : g.edges()) r[e.source][e.target] = true;
  for (std::size_t len = 1; len < n; len *= 2) {
    auto next = r;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        if (r[i][k])
          for (std::size_t j = 0; j < n; ++j)
            if (r[k][j]) next[i][j] = true;
    r = std::move(next);
  }
  return r;
}

TEST(CausalDag, ReachableMatchesClosureOnRandomGraphs) {
  std::mt19937 gen(2024);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = testing::random_dag(8, 0.3, gen);
    auto squared = closure_by_squaring(g);
    auto fixpoint = reference::transitive_closure(g);
    for (NodeIndex u = 0; u < 8; ++u) {
      for (NodeIndex v = 0; v < 8; ++v) {
        ASSERT_EQ(g.reachable(u, v), squared[u][v]) << g.debug_dump();
        ASSERT_EQ(fixpoint[u][v], squared[u][v]);
      }
    }
  }
}

TEST(CausalDag, StructureIgnoresPresentationOrder) {
  auto a = dag("A causes B. B causes C.");
  CausalDag b(a.nodes(), {{1, 2}, {0, 1}});
  EXPECT_TRUE(a.same_structure(b));
  EXPECT_FALSE(a == b);
  EXPECT_EQ(b.debug_dump(), "B -> C\nA -> B\n");
}

TEST(CausalDag, BranchingFactorAndNameLength) {
  auto g = dag("Mhb causes iqB. iqB causes G.");
  EXPECT_DOUBLE_EQ(g.branching_factor(), 2.0 / 3.0);
  EXPECT_EQ(g.max_name_length(), 3u);
}

}  // namespace
}  // namespace causax
