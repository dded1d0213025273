#include "dcsr/internal_reconfig.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace dcsr;
using namespace dcsr::testing;

namespace {

bool verified(const GraphPtr& g, const DegreeBounds& b, const Subgraph& m, const Subgraph& n, int k,
              const MoveSequence& seq) {
    return verify_move_sequence(Instance{g, b, m, n, k}, seq).ok;
}

// square with a pendant at every corner; corners have a = 1, b = 2
struct PendantSquare {
    GraphPtr g = make_graph(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {1, 5}, {2, 6}, {3, 7}});
    DegreeBounds b{{1, 1, 1, 1, 0, 0, 0, 0}, {2, 2, 2, 2, 1, 1, 1, 1}};
    Subgraph m = sub(g, {0, 2});
    Subgraph n = sub(g, {1, 3});
    Trail c = make_trail(*g, 0, {0, 1, 2, 3});
};

}  // namespace

TEST(Elementary, LengthTwoOrderDependsOnMiddle) {
    auto g = make_graph(3, {{0, 1}, {1, 2}});
    const Subgraph m = sub(g, {0}), n = sub(g, {1});
    const Trail t = make_trail(*g, 0, {0, 1});
    DegreeBounds b = uniform_bounds(3, 0, 1);
    EXPECT_EQ(reconfigure_elementary(t, m, b), (MoveSequence{Move::remove(0), Move::add(1)}));
    b.b[1] = 2;
    EXPECT_EQ(reconfigure_elementary(t, m, b), (MoveSequence{Move::add(1), Move::remove(0)}));
}

TEST(Elementary, FigureTrail) {
    const FigureTrail f = figure_trail();
    ASSERT_TRUE(check_internal_conditions(f.trail, f.m, f.bounds).ok());
    const MoveSequence seq = reconfigure_elementary(f.trail, f.m, f.bounds);
    EXPECT_EQ(seq.size(), 10u);
    EXPECT_TRUE(verified(f.g, f.bounds, f.m, f.n, 1, seq));
}

TEST(Elementary, ReversedTrailIsReoriented) {
    const FigureTrail f = figure_trail();
    const MoveSequence seq = reconfigure_elementary(f.trail.reversed(), f.m, f.bounds);
    EXPECT_TRUE(verified(f.g, f.bounds, f.m, f.n, 1, seq));
}

TEST(Conditions, Failures) {
    auto g = make_graph(3, {{0, 1}, {1, 2}});
    const Trail t = make_trail(*g, 0, {0, 1});
    DegreeBounds fixed = uniform_bounds(3, 0, 1);
    fixed.a[1] = 1;
    EXPECT_EQ(check_internal_conditions(t, sub(g, {0}), fixed).condition, InternalCondition::AbFixedVertex);
    EXPECT_EQ(check_internal_conditions(t, sub(g, {0}), fixed).witness, 1);

    auto tri = make_graph(3, {{0, 1}, {1, 2}, {2, 0}});
    const Trail tt = make_trail(*tri, 0, {0, 1});
    const DegreeBounds start_tight{{1, 0, 0}, {2, 1, 1}};
    EXPECT_EQ(check_internal_conditions(tt, sub(tri, {0}), start_tight).condition, InternalCondition::OpenStartATight);
    EXPECT_THROW(reconfigure_elementary(tt, sub(tri, {0}), start_tight), NotInternallyReconfigurable);

    auto c4 = cycle_graph(4);
    EXPECT_EQ(check_internal_conditions(make_trail(*c4, 0, {0, 1, 2, 3}), sub(c4, {0, 2}), uniform_bounds(4, 0, 1))
                  .condition,
              InternalCondition::ClosedBTight);
    const PendantSquare p;
    EXPECT_EQ(check_internal_conditions(p.c, p.m, p.b).condition, InternalCondition::ClosedATight);
}

TEST(OpenEvenMaximal, RejectsExtendableTrail) {
    const FigureTrail f = figure_trail();
    const Trail part = make_trail(*f.g, 0, {0, 1});
    EXPECT_FALSE(is_maximal_trail(part, f.m, f.n));
    EXPECT_TRUE(is_maximal_trail(f.trail, f.m, f.n));
    EXPECT_THROW(reconfigure_open_even_maximal(part, f.m, f.n, f.bounds), ContractError);
    EXPECT_TRUE(verified(f.g, f.bounds, f.m, f.n, 1, reconfigure_open_even_maximal(f.trail, f.m, f.n, f.bounds)));
}

TEST(Odd, SingleEdge) {
    auto g = make_graph(2, {{0, 1}});
    const Trail t = make_trail(*g, 0, {0});
    const DegreeBounds b = uniform_bounds(2, 0, 1);
    EXPECT_EQ(reconfigure_odd_maximal(t, Subgraph(g), sub(g, {0}), b, Direction::MtoN), MoveSequence{Move::add(0)});
    EXPECT_EQ(reconfigure_odd_maximal(t, sub(g, {0}), Subgraph(g), b, Direction::NtoM),
              MoveSequence{Move::remove(0)});
}

TEST(Odd, PathOfThree) {
    // 0 -1- 1 -0- 2 -1- 3 with matching bounds: gain one edge
    auto g = make_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    const DegreeBounds b = uniform_bounds(4, 0, 1);
    const Subgraph m = sub(g, {1}), n = sub(g, {0, 2});
    const Trail t = make_trail(*g, 0, {0, 1, 2});
    const MoveSequence up = reconfigure_odd_maximal(t, m, n, b, Direction::MtoN);
    EXPECT_TRUE(verified(g, b, m, n, 1, up));
    const MoveSequence down = reconfigure_odd_maximal(t, n, m, b, Direction::NtoM);
    EXPECT_TRUE(verified(g, b, n, m, 2, down));
}

TEST(ClosedEven, BTightSquareNeedsTwo) {
    auto c4 = cycle_graph(4);
    const DegreeBounds b = uniform_bounds(4, 0, 1);
    const Subgraph m = sub(c4, {0, 2}), n = sub(c4, {1, 3});
    const Trail t = make_trail(*c4, 0, {0, 1, 2, 3});
    EXPECT_THROW(reconfigure_closed_even(t, m, b, false), NeedsK2Error);
    const MoveSequence seq = reconfigure_closed_even(t, m, b, true);
    EXPECT_EQ(seq.size(), 4u);
    EXPECT_TRUE(verified(c4, b, m, n, 2, seq));
    EXPECT_FALSE(verified(c4, b, m, n, 1, seq));
}

TEST(ClosedEven, ATightSquareStartsWithAddition) {
    const PendantSquare p;
    const MoveSequence seq = reconfigure_closed_even(p.c, p.m, p.b, false);
    ASSERT_FALSE(seq.empty());
    EXPECT_EQ(seq.front().kind, Move::Kind::Add);
    EXPECT_TRUE(verified(p.g, p.b, p.m, p.n, 1, seq));
}
