#include "dcsr/trail.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace dcsr;
using namespace dcsr::testing;

TEST(MaximalTrail, SingleEdge) {
    auto g = make_graph(2, {{0, 1}});
    const Trail t = find_maximal_alternating_trail(sub(g, {0}), sub(g, {0}), 0);
    EXPECT_EQ(t.edges, (std::vector<EdgeId>{0}));
    EXPECT_FALSE(t.closed());
}

TEST(MaximalTrail, AlternatingSquareIsClosed) {
    auto c4 = cycle_graph(4);
    const Trail t = find_maximal_alternating_trail(sub(c4, {0, 1, 2, 3}), sub(c4, {0, 2}), 0);
    EXPECT_EQ(t.length(), 4u);
    EXPECT_TRUE(t.closed());
    EXPECT_NO_THROW(require_alternating(t, sub(c4, {0, 2})));
}

TEST(MaximalTrail, PathExtendsBothWays) {
    auto g = make_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    const Trail t = find_maximal_alternating_trail(sub(g, {0, 1, 2}), sub(g, {0, 2}), 1);
    EXPECT_EQ(t.length(), 3u);
}

TEST(RequireAlternating, RejectsRepeatsAndBadParity) {
    auto g = make_graph(3, {{0, 1}, {1, 2}});
    EXPECT_THROW(require_alternating(make_trail(*g, 0, {0, 1}), sub(g, {0, 1})), ContractError);
    EXPECT_NO_THROW(require_alternating(make_trail(*g, 0, {0, 1}), sub(g, {0})));
    EXPECT_THROW(make_trail(*g, 2, {0}), ContractError);
}

TEST(AugmentingTrail, Examples) {
    auto e = make_graph(2, {{0, 1}});
    const auto t1 = find_augmenting_trail(uniform_bounds(2, 0, 1), Subgraph(e), sub(e, {0}));
    ASSERT_TRUE(t1.has_value());
    EXPECT_EQ(t1->edges, (std::vector<EdgeId>{0}));

    auto c4 = cycle_graph(4);
    EXPECT_FALSE(find_augmenting_trail(uniform_bounds(4, 0, 1), sub(c4, {0, 2}), sub(c4, {1, 3})));

    auto star = make_graph(3, {{0, 1}, {0, 2}});
    const DegreeBounds b{{0, 0, 0}, {2, 1, 1}};
    const auto t2 = find_augmenting_trail(b, sub(star, {0}), sub(star, {1}));
    ASSERT_TRUE(t2.has_value());
    EXPECT_EQ(t2->edges, (std::vector<EdgeId>{1}));
}

TEST(Decomposition, SquareIsOneClosedTrail) {
    auto c4 = cycle_graph(4);
    const auto d = alternating_trail_decomposition(uniform_bounds(4, 0, 1), sub(c4, {0, 2}), sub(c4, {1, 3}));
    ASSERT_EQ(d.trails.size(), 1u);
    EXPECT_EQ(d.trails[0].length(), 4u);
    EXPECT_TRUE(d.trails[0].closed());
}

TEST(Decomposition, FigureTrailStaysWhole) {
    const FigureTrail f = figure_trail();
    const auto d = alternating_trail_decomposition(f.bounds, f.m, f.n);
    ASSERT_EQ(d.trails.size(), 1u);
    EXPECT_EQ(d.trails[0].length(), 10u);
    EXPECT_EQ(classify_trail(d.trails[0], f.m, f.bounds), TrailClass::OpenEvenOrUnlockedCycle);
}

TEST(Classify, Cycles) {
    auto c4 = cycle_graph(4);
    const Subgraph m = sub(c4, {0, 2});
    const Trail t = make_trail(*c4, 0, {0, 1, 2, 3});
    EXPECT_EQ(classify_trail(t, m, uniform_bounds(4, 0, 1)), TrailClass::BTightCycle);

    DegreeBounds alt{{1, 0, 1, 0}, {2, 1, 2, 1}};
    EXPECT_TRUE(is_alternatingly_ab_tight(t, m, alt));
    EXPECT_EQ(classify_trail(t, m, alt), TrailClass::AltAbTightCycle);
    alt.b[1] = 2;
    EXPECT_FALSE(is_alternatingly_ab_tight(t, m, alt));
    EXPECT_EQ(classify_trail(t, m, alt), TrailClass::OpenEvenOrUnlockedCycle);
}

TEST(Classify, OddTrails) {
    auto g = make_graph(2, {{0, 1}});
    const Trail t = make_trail(*g, 0, {0});
    EXPECT_EQ(classify_trail(t, Subgraph(g), uniform_bounds(2, 0, 1)), TrailClass::MAugmenting);
    EXPECT_EQ(classify_trail(t, sub(g, {0}), uniform_bounds(2, 0, 1)), TrailClass::NAugmenting);
}

TEST(Decomposition, RandomInvariants) {
    std::mt19937_64 rng(29);
    int checked = 0;
    for (int r = 0; r < 400; ++r) {
        const Instance inst = random_small_instance(rng, 12, 1, r % 2 == 1);
        if (inst.source == inst.target) continue;
        const auto d = alternating_trail_decomposition(inst.bounds, inst.source, inst.target);
        ASSERT_EQ(d.states.size(), d.trails.size());
        ASSERT_EQ(d.states.front(), inst.source);
        Subgraph seen(inst.graph);
        for (std::size_t i = 0; i < d.trails.size(); ++i) {
            const Trail& t = d.trails[i];
            EXPECT_NO_THROW(require_alternating(t, d.states[i]));
            for (EdgeId e : t.edges) {
                EXPECT_FALSE(seen.contains(e));
                seen.insert(e);
            }
            Subgraph next = d.states[i];
            for (EdgeId e : t.edges) {
                if (next.contains(e)) next.erase(e);
                else next.insert(e);
            }
            EXPECT_TRUE(is_ab_constrained(next, inst.bounds));
            if (i + 1 < d.states.size()) EXPECT_EQ(next, d.states[i + 1]);
            else EXPECT_EQ(next, inst.target);
        }
        EXPECT_EQ(seen, symmetric_difference(inst.source, inst.target));
        ++checked;
    }
    EXPECT_GT(checked, 100);
}
