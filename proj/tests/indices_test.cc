#include <gtest/gtest.h>

#include "eccaudit/corpus.hpp"
#include "eccaudit/graph6.hpp"
#include "eccaudit/indices.hpp"
#include "oracle.hpp"

using namespace eccaudit;

namespace {

const Graph kP3 = build_graph(3, {{0, 1}, {1, 2}});
const Graph kK2 = build_graph(2, {{0, 1}});
const Graph kK3 = build_graph(3, {{0, 1}, {0, 2}, {1, 2}});
const Graph kC4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});

Rational q(long a, long b = 1) { return Rational(a, b); }

}  // namespace

TEST(DegreeInvariants, P3) {
  const auto d = degree_invariants(kP3);
  EXPECT_EQ(d.n, 3u);
  EXPECT_EQ(d.m, 2u);
  EXPECT_EQ(d.m1, 6);
  EXPECT_EQ(d.m2, 4);
  EXPECT_EQ(d.forgotten, 10);
  EXPECT_EQ(d.inverse_degree, q(5, 2));
  EXPECT_EQ(d.m1_inverse, q(2, 3));
}

TEST(DegreeInvariants, C4) {
  const auto d = degree_invariants(kC4);
  EXPECT_EQ(d.m1, 16);
  EXPECT_EQ(d.m2, 16);
  EXPECT_EQ(d.forgotten, 32);
  EXPECT_EQ(d.inverse_degree, q(2));
  EXPECT_EQ(d.m1_inverse, q(1));
}

TEST(DegreeInvariants, K2) {
  const auto d = degree_invariants(kK2);
  EXPECT_EQ(d.m1, 2);
  EXPECT_EQ(d.m2, 1);
  EXPECT_EQ(d.forgotten, 2);
  EXPECT_EQ(d.inverse_degree, q(2));
  EXPECT_EQ(d.m1_inverse, q(1, 2));
}

TEST(DegreeInvariants, IsolatedVertexLeavesInverseDegreeUndefined) {
  const auto d = degree_invariants(build_graph(3, {{0, 1}}));
  EXPECT_FALSE(d.inverse_degree.has_value());
  EXPECT_EQ(d.m1_inverse, q(1, 2));
}

TEST(ZagrebForms, Agree) {
  for (std::size_t n = 1; n <= 5; ++n)
    for (const Graph& g : enumerate_labeled(n, false, false))
      EXPECT_EQ(first_zagreb_vertex_form(g), first_zagreb_edge_form(g));
}

TEST(EccInvariants, P3) {
  const auto e = ecc_invariants(kP3);
  ASSERT_TRUE(e);
  EXPECT_EQ(e->eci, 6);
  EXPECT_EQ(e->i_eci, q(3, 2));
  EXPECT_EQ(e->m1_eci, 8);
  EXPECT_EQ(e->eci1, 10);
  EXPECT_EQ(e->m1_eci1, 12);
}

TEST(EccInvariants, K3) {
  const auto e = ecc_invariants(kK3);
  ASSERT_TRUE(e);
  EXPECT_EQ(e->eci, 6);
  EXPECT_EQ(e->i_eci, q(3, 2));
  EXPECT_EQ(e->m1_eci, 12);
  EXPECT_EQ(e->eci1, 6);
  EXPECT_EQ(e->m1_eci1, 12);
}

TEST(EccInvariants, DisconnectedIsUndefined) {
  EXPECT_FALSE(ecc_invariants(build_graph(4, {{0, 1}, {2, 3}})));
  EXPECT_FALSE(edge_ecc_invariants(build_graph(4, {{0, 1}, {2, 3}})));
}

TEST(EccInvariants, SingleVertex) {
  const auto e = ecc_invariants(build_graph(1, {}));
  ASSERT_TRUE(e);
  EXPECT_EQ(e->eci, 0);
  EXPECT_FALSE(e->i_eci.has_value());
}

TEST(EdgeEccInvariants, P3) {
  const auto ee = edge_ecc_invariants(kP3);
  ASSERT_TRUE(ee);
  EXPECT_EQ(ee->xi_inverse, q(2, 3));
  EXPECT_EQ(ee->f_eci, 10);
  EXPECT_EQ(ee->m2_eci, 4);
  EXPECT_EQ(ee->f_eci1, 10);
  EXPECT_EQ(ee->m2_eci1, 4);
  EXPECT_EQ(ee->edge_sum, 6);
  EXPECT_EQ(ee->edge_sum_sq, 6);
}

TEST(EdgeEccInvariants, C4) {
  const auto ee = edge_ecc_invariants(kC4);
  ASSERT_TRUE(ee);
  EXPECT_EQ(ee->xi_inverse, q(1, 2));
  EXPECT_EQ(ee->f_eci, 64);
  EXPECT_EQ(ee->m2_eci, 32);
  EXPECT_EQ(ee->f_eci1, 128);
  EXPECT_EQ(ee->m2_eci1, 64);
  EXPECT_EQ(ee->edge_sum, 32);
  EXPECT_EQ(ee->edge_sum_sq, 64);
}

TEST(EdgeEccInvariants, K2) {
  const auto ee = edge_ecc_invariants(kK2);
  ASSERT_TRUE(ee);
  EXPECT_EQ(ee->xi_inverse, q(1, 2));
  EXPECT_EQ(ee->f_eci, 2);
  EXPECT_EQ(ee->m2_eci, 1);
  EXPECT_EQ(ee->f_eci1, 2);
  EXPECT_EQ(ee->m2_eci1, 1);
  EXPECT_EQ(ee->edge_sum, 2);
  EXPECT_EQ(ee->edge_sum_sq, 2);
}

TEST(EdgeEccInvariants, EdgelessIsZero) {
  const auto ee = edge_ecc_invariants(build_graph(1, {}));
  ASSERT_TRUE(ee);
  EXPECT_EQ(ee->xi_inverse, 0);
  EXPECT_EQ(ee->edge_sum, 0);
}

TEST(Invariants, MatchOracleOnRandomGraphs) {
  for (std::uint64_t s = 0; s < 30; ++s) {
    const Graph g = gnp(9 + s % 5, Rational(2, 5), s);
    const auto a = oracle::adjacency(g);
    const auto d = degree_invariants(g), od = oracle::degree_invariants(a);
    EXPECT_EQ(d.m1, od.m1);
    EXPECT_EQ(d.m2, od.m2);
    EXPECT_EQ(d.forgotten, od.forgotten);
    EXPECT_EQ(d.inverse_degree, od.inverse_degree);
    EXPECT_EQ(d.m1_inverse, od.m1_inverse);
    const auto e = ecc_invariants(g), oe = oracle::ecc_invariants(a);
    ASSERT_EQ(e.has_value(), oe.has_value()) << encode_graph6(g);
    if (e) {
      EXPECT_EQ(e->eci, oe->eci);
      EXPECT_EQ(e->i_eci, oe->i_eci);
      EXPECT_EQ(e->m1_eci1, oe->m1_eci1);
    }
    const auto ee = edge_ecc_invariants(g), oee = oracle::edge_ecc_invariants(a);
    ASSERT_EQ(ee.has_value(), oee.has_value());
    if (ee) {
      EXPECT_EQ(ee->xi_inverse, oee->xi_inverse);
      EXPECT_EQ(ee->f_eci1, oee->f_eci1);
      EXPECT_EQ(ee->edge_sum_sq, oee->edge_sum_sq);
    }
  }
}

TEST(Invariants, ExactOnLargeValues) {
  // K_200: every term e*deg^2 = 199^2; sums must not wrap.
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 200; ++i)
    for (Vertex j = i + 1; j < 200; ++j) edges.push_back({i, j});
  const Graph k = build_graph(200, edges);
  const auto e = ecc_invariants(k);
  ASSERT_TRUE(e);
  EXPECT_EQ(e->m1_eci1, Integer(200) * 199 * 199);
  EXPECT_EQ(e->i_eci, Rational(200, 199));
}
