#include <gtest/gtest.h>

#include "eccaudit/graph.hpp"

using namespace eccaudit;

namespace {

std::vector<std::uint32_t> finite(const std::vector<Ecc>& ecc) {
  std::vector<std::uint32_t> out;
  for (const auto& e : ecc) out.push_back(e.value());
  return out;
}

Graph cycle(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    Vertex a = static_cast<Vertex>(i), b = static_cast<Vertex>((i + 1) % n);
    edges.push_back({std::min(a, b), std::max(a, b)});
  }
  return build_graph(n, edges);
}

}  // namespace

TEST(Graph, BuildPath) {
  const Graph p3 = build_graph(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(p3.order(), 3u);
  EXPECT_EQ(p3.size(), 2u);
  EXPECT_EQ(p3.degrees(), (std::vector<std::uint32_t>{1, 2, 1}));
  EXPECT_TRUE(p3.adjacent(0, 1));
  EXPECT_TRUE(p3.adjacent(2, 1));
  EXPECT_FALSE(p3.adjacent(0, 2));
}

TEST(Graph, BuildK2) {
  const Graph k2 = build_graph(2, {{0, 1}});
  EXPECT_EQ(k2.size(), 1u);
  EXPECT_EQ(k2.degrees(), (std::vector<std::uint32_t>{1, 1}));
}

TEST(Graph, RejectsBadEdges) {
  EXPECT_THROW(build_graph(3, {{0, 1}, {0, 1}}), GraphError);
  EXPECT_THROW(build_graph(3, {{0, 1}, {1, 0}}), GraphError);
  EXPECT_THROW(build_graph(3, {{1, 1}}), GraphError);
  EXPECT_THROW(build_graph(3, {{0, 3}}), GraphError);
}

TEST(Graph, EdgesAreNormalizedAndSorted) {
  const Graph g = build_graph(4, {{2, 3}, {1, 0}, {3, 0}});
  const std::vector<Edge> want{{0, 1}, {0, 3}, {2, 3}};
  EXPECT_EQ(g.edges(), want);
}

TEST(Graph, EmptyAndSingleton) {
  const Graph g0 = build_graph(0, {});
  EXPECT_EQ(g0.order(), 0u);
  EXPECT_TRUE(is_connected(g0));
  const Graph g1 = build_graph(1, {});
  EXPECT_TRUE(is_connected(g1));
  EXPECT_EQ(finite(eccentricities(g1)), (std::vector<std::uint32_t>{0}));
}

TEST(Graph, Eccentricities) {
  EXPECT_EQ(finite(eccentricities(build_graph(3, {{0, 1}, {1, 2}}))),
            (std::vector<std::uint32_t>{2, 1, 2}));
  EXPECT_EQ(finite(eccentricities(build_graph(2, {{0, 1}}))), (std::vector<std::uint32_t>{1, 1}));
  EXPECT_EQ(finite(eccentricities(cycle(7))), std::vector<std::uint32_t>(7, 3));
}

TEST(Graph, DisconnectedEccentricitiesAreInfinite) {
  const Graph g = build_graph(3, {{0, 1}});
  EXPECT_FALSE(is_connected(g));
  for (const auto& e : eccentricities(g)) EXPECT_FALSE(e.is_finite());
  EXPECT_FALSE(diameter(g).is_finite());
}

TEST(Graph, BfsDistances) {
  const Graph g = build_graph(4, {{0, 1}, {1, 2}});
  const auto d = bfs_distances(g, 0);
  EXPECT_EQ(d[0], 0u);
  EXPECT_EQ(d[2], 2u);
  EXPECT_FALSE(d[3].has_value());
}

TEST(Graph, Diameter) {
  EXPECT_EQ(diameter(cycle(6)).value(), 3u);
  EXPECT_EQ(diameter(build_graph(3, {{0, 1}, {1, 2}, {0, 2}})).value(), 1u);
}

TEST(Graph, Complement) {
  const Graph k3 = build_graph(3, {{0, 1}, {0, 2}, {1, 2}});
  EXPECT_EQ(complement(k3), build_graph(3, {}));
  EXPECT_EQ(complement(build_graph(3, {{0, 1}, {1, 2}})), build_graph(3, {{0, 2}}));
  EXPECT_EQ(complement(cycle(5)), build_graph(5, {{0, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}}));
}

TEST(Graph, ComplementIsInvolution) {
  const Graph c = cycle(9);
  EXPECT_EQ(complement(complement(c)), c);
}

TEST(Graph, LargeOrderCrossesWordBoundary) {
  const Graph c = cycle(130);
  EXPECT_EQ(c.words(), 3u);
  EXPECT_EQ(diameter(c).value(), 65u);
  const Graph cc = complement(c);
  EXPECT_EQ(cc.size(), 130u * 129 / 2 - 130);
  EXPECT_EQ(diameter(cc).value(), 2u);
}

TEST(Graph, FromRowsValidates) {
  EXPECT_EQ(Graph::from_rows(2, {0b10, 0b01}), build_graph(2, {{0, 1}}));
  EXPECT_THROW(Graph::from_rows(2, {0b10, 0b00}), GraphError);
  EXPECT_THROW(Graph::from_rows(2, {0b01, 0b00}), GraphError);
  EXPECT_THROW(Graph::from_rows(2, {0b100, 0b00}), GraphError);
}
