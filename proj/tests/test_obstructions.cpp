#include "dcsr/obstructions.hpp"
#include "dcsr/oracle.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace dcsr;
using namespace dcsr::testing;

TEST(FixedSubgraph, EmptySeed) {
    auto c4 = cycle_graph(4);
    EXPECT_TRUE(m_fixed_subgraph(uniform_bounds(4, 0, 1), sub(c4, {0, 2})).empty());
}

TEST(FixedSubgraph, SingleFixedEdge) {
    auto g = make_graph(2, {{0, 1}});
    EXPECT_EQ(m_fixed_subgraph(uniform_bounds(2, 1, 1), sub(g, {0})), sub(g, {0}));
}

TEST(FixedSubgraph, PropagatesAlongPath) {
    // p - q - r - s with q ab-fixed; r is then b-tight with its only M-edge fixed
    auto g = make_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    DegreeBounds b = uniform_bounds(4, 0, 1);
    b.a[1] = 1;
    const Subgraph f = m_fixed_subgraph(b, sub(g, {1}));
    EXPECT_EQ(f, sub(g, {0, 1, 2}));
    EXPECT_EQ(m_fixed_subgraph(b, sub(g, {1})), f);
}

TEST(FixedSubgraph, ATightRule) {
    // a-tight vertex whose only non-M edge is fixed gets all its edges fixed
    auto g = make_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    const DegreeBounds b{{1, 1, 1, 0}, {1, 2, 1, 1}};
    const Subgraph f = m_fixed_subgraph(b, sub(g, {0, 2}));
    EXPECT_TRUE(f.contains(0));
    EXPECT_TRUE(f.contains(1));
    EXPECT_TRUE(f.contains(2));
}

TEST(FixedEdgeWitness, Examples) {
    auto g = make_graph(3, {{0, 1}, {1, 2}});
    DegreeBounds b = uniform_bounds(3, 0, 1);
    b.a[1] = 1;
    const Subgraph m = sub(g, {0}), n = sub(g, {1});
    const Subgraph f = m_fixed_subgraph(b, m);
    EXPECT_FALSE(fixed_edge_witness(m, m, f).has_value());
    EXPECT_EQ(fixed_edge_witness(m, n, f), std::optional<EdgeId>(0));
}

TEST(FixedEdgeWitness, SharedFixedPendant) {
    // pendant edge 0-1 fixed in both; the C4 part differs
    auto g = make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 1}});
    const DegreeBounds b{{1, 1, 0, 0, 0}, {1, 2, 1, 1, 1}};
    const Subgraph m = sub(g, {0, 2}), n = sub(g, {0, 3});
    ASSERT_TRUE(is_ab_constrained(m, b));
    ASSERT_TRUE(is_ab_constrained(n, b));
    const Subgraph f = m_fixed_subgraph(b, m);
    EXPECT_TRUE(f.contains(0));
    EXPECT_FALSE(fixed_edge_witness(m, n, f).has_value());
}

TEST(Restrict, IdentityForEmptyF) {
    auto c4 = cycle_graph(4);
    const Instance inst{c4, uniform_bounds(4, 0, 1), sub(c4, {0, 2}), sub(c4, {1, 3}), 1};
    const auto r = restrict_instance(inst, Subgraph(c4));
    EXPECT_EQ(r.instance.graph->edges(), c4->edges());
    EXPECT_EQ(r.instance.bounds.a, inst.bounds.a);
    EXPECT_EQ(r.instance.bounds.b, inst.bounds.b);
    EXPECT_EQ(r.instance.source.edge_list(), inst.source.edge_list());
}

TEST(Restrict, BoundFormulas) {
    // star centre 0 with leaves 1..4; edges to 1 and 2 are fixed M-edges
    auto g = make_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    const DegreeBounds b{{2, 1, 1, 0, 0}, {3, 1, 1, 1, 1}};
    const Subgraph m = sub(g, {0, 1});
    const Subgraph f = m_fixed_subgraph(b, m);
    ASSERT_EQ(f, sub(g, {0, 1}));
    const auto r = restrict_instance(Instance{g, b, m, m, 1}, f);
    EXPECT_EQ(r.instance.bounds.a[0], 0);
    EXPECT_EQ(r.instance.bounds.b[0], 1);
    EXPECT_EQ(r.to_parent, (std::vector<EdgeId>{2, 3}));
}

TEST(Restrict, ClampAtZero) {
    auto g = make_graph(3, {{0, 1}, {1, 2}});
    const DegreeBounds b{{1, 0, 0}, {1, 1, 1}};
    const Subgraph m = sub(g, {0});
    const auto r = restrict_instance(Instance{g, b, m, m, 1}, m_fixed_subgraph(b, m));
    EXPECT_EQ(r.instance.bounds.a[1], 0);
    EXPECT_EQ(r.instance.bounds.b[1], 0);
}

TEST(Restrict, RejectsDifferingFixedEdges) {
    auto g = make_graph(3, {{0, 1}, {1, 2}});
    DegreeBounds b = uniform_bounds(3, 0, 1);
    b.a[1] = 1;
    const Instance inst{g, b, sub(g, {0}), sub(g, {1}), 1};
    EXPECT_THROW(restrict_instance(inst, m_fixed_subgraph(b, inst.source)), ContractError);
}

TEST(FixedSubgraph, RandomProperties) {
    std::mt19937_64 rng(17);
    for (int r = 0; r < 300; ++r) {
        const Instance inst = random_small_instance(rng, 10, 1, r % 2 == 0);
        const Subgraph f = m_fixed_subgraph(inst.bounds, inst.source);
        // stable under re-running, and fixed edges never flip
        EXPECT_EQ(m_fixed_subgraph(inst.bounds, inst.source), f);
        const EdgeMask fm = to_mask(f), mm = to_mask(inst.source) & fm;
        for (EdgeMask s : reachable_states(inst.graph, inst.bounds, inst.source, 0)) EXPECT_EQ(s & fm, mm);
        if (fixed_edge_witness(inst.source, inst.target, f)) continue;
        const auto h = restrict_instance(inst, f).instance;
        EXPECT_NO_THROW(h.validate());
        EXPECT_TRUE(m_fixed_subgraph(h.bounds, h.source).empty());
    }
}
