#include <gtest/gtest.h>

#include "ped/graph.hpp"
#include "support.hpp"

using namespace ped;
using ped::testing::from_segments;
using ped::testing::two_edge;

TEST(GeometricGraph, RejectsMalformedInput) {
    EXPECT_THROW(GeometricGraph({{0, 0}, {0, 0}}, {}), std::invalid_argument);
    EXPECT_THROW(GeometricGraph({{0, 0}, {1, 0}}, {{0, 0}}), std::invalid_argument);
    EXPECT_THROW(GeometricGraph({{0, 0}, {1, 0}}, {{0, 2}}), std::invalid_argument);
    EXPECT_THROW(GeometricGraph({{0, 0}, {1, 0}}, {{0, 1}, {1, 0}}), std::invalid_argument);
}

TEST(GeometricGraph, Lengths) {
    GeometricGraph g({{0, 0}, {3, 4}, {3, 0}}, {{0, 1}, {1, 2}});
    EXPECT_EQ(g.squared_length(0), 25);
    EXPECT_DOUBLE_EQ(g.length(0), 5.0);
    EXPECT_DOUBLE_EQ(g.total_length(), 9.0);
    EXPECT_TRUE(g.share_vertex(0, 1));
}

TEST(StubAssignment, RangeAndErased) {
    EXPECT_THROW(StubAssignment({Rational(0)}), std::invalid_argument);
    EXPECT_THROW(StubAssignment({Rational(3, 5)}), std::invalid_argument);
    EXPECT_THROW(StubAssignment({Rational(-1, 5)}, true), std::invalid_argument);
    StubAssignment s({Rational(0), Rational(1, 2)}, true);
    EXPECT_TRUE(s.erased(0));
    EXPECT_FALSE(s.erased(1));
}

TEST(Validate, TwoEdgeThreshold) {
    GeometricGraph g = two_edge();
    EXPECT_TRUE(validate_ped(g, StubAssignment::uniform(g, Rational(1, 4))).valid());
    EXPECT_TRUE(validate_ped(g, StubAssignment::uniform(g, Rational(1, 5))).valid());
    auto report = validate_ped(g, StubAssignment::uniform(g, Rational(1, 4) + Rational(1, 1000)));
    ASSERT_EQ(report.violations.size(), 1u);
    const Violation& v = report.violations[0];
    EXPECT_EQ(v.edge_e, 0u);
    EXPECT_EQ(v.edge_f, 1u);
    EXPECT_EQ(v.witness, (Point{1, 0}));
    EXPECT_FALSE(report.position_warning);
}

TEST(Validate, FloatModeAgreesOnThreshold) {
    GeometricGraph g = two_edge();
    EXPECT_TRUE(validate_ped(g, StubAssignment::uniform(g, Rational(1, 4)), ArithmeticMode::Float).valid());
    EXPECT_FALSE(
        validate_ped(g, StubAssignment::uniform(g, Rational(251, 1000)), ArithmeticMode::Float).valid());
}

TEST(Validate, MidpointCrossingIsNoConflict) {
    // the vertical edge is crossed at its midpoint; its full stubs end there
    GeometricGraph g = ped::testing::two_edge_midpoint();
    EXPECT_TRUE(validate_ped(g, StubAssignment::uniform(g, Rational(1, 2))).valid());
}

TEST(Validate, ErasedEdgesAreSkipped) {
    GeometricGraph g = two_edge();
    StubAssignment s({Rational(1, 2), Rational(0)}, true);
    EXPECT_TRUE(validate_ped(g, s).valid());
    EXPECT_THROW(validate_ped(g, StubAssignment({Rational(1, 2)})), std::invalid_argument);
}

TEST(Validate, SameVertexCollinearStubsConflict) {
    GeometricGraph g({{0, 0}, {1, 0}, {2, 0}}, {{0, 1}, {0, 2}});
    auto report = validate_ped(g, StubAssignment::uniform(g, Rational(1, 4)));
    EXPECT_FALSE(report.valid());
    EXPECT_TRUE(report.position_warning);
}

TEST(GeneralPosition, DetectsEachDefect) {
    GeometricGraph overlap({{0, 0}, {2, 0}, {1, 0}, {3, 0}}, {{0, 1}, {2, 3}});
    auto d1 = check_general_position(overlap);
    ASSERT_FALSE(d1.empty());
    EXPECT_EQ(d1[0].kind, DefectKind::CollinearOverlap);

    GeometricGraph on_edge({{0, 0}, {4, 0}, {2, 0}, {2, 3}}, {{0, 1}, {2, 3}});
    auto d2 = check_general_position(on_edge);
    ASSERT_EQ(d2.size(), 1u);
    EXPECT_EQ(d2[0].kind, DefectKind::VertexOnEdge);
    EXPECT_EQ(*d2[0].vertex, 2u);

    GeometricGraph star = from_segments({{-1, 0, 1, 0}, {0, -1, 0, 1}, {-1, -1, 1, 1}});
    auto d3 = check_general_position(star);
    ASSERT_EQ(d3.size(), 1u);
    EXPECT_EQ(d3[0].kind, DefectKind::ConcurrentCrossing);
    EXPECT_EQ(d3[0].edges, (std::vector<std::size_t>{0, 1, 2}));
    EXPECT_NE(describe(d3[0]).find("concurrent"), std::string::npos);

    EXPECT_TRUE(check_general_position(two_edge()).empty());
}

TEST(Ink, SingleEdge) {
    GeometricGraph g({{0, 0}, {4, 0}}, {{0, 1}});
    InkReport full = ink(g, StubAssignment({Rational(1, 2)}));
    EXPECT_DOUBLE_EQ(full.absolute, 4.0);
    EXPECT_DOUBLE_EQ(full.relative, 1.0);
    InkReport half = ink(g, StubAssignment({Rational(1, 4)}));
    EXPECT_DOUBLE_EQ(half.absolute, 2.0);
    EXPECT_DOUBLE_EQ(half.relative, 0.5);
    EXPECT_EQ(*half.relative_exact, Rational(1, 2));
}

TEST(Ink, UniformRelativeIsTwiceDelta) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        GeometricGraph g = ped::testing::small_random(seed, 8, false);
        Rational delta(1 + seed % 7, 16);
        InkReport r = ink(g, StubAssignment::uniform(g, delta));
        EXPECT_EQ(*r.relative_exact, 2 * delta);
        EXPECT_NEAR(r.relative, Rational(2 * delta).get_d(), 1e-12);
        EXPECT_NEAR(exact_ink(g, StubAssignment::uniform(g, delta)).to_double(), r.absolute, 1e-9);
    }
}

TEST(MaxUniformDelta, TwoEdgeIsExactlyQuarter) {
    EXPECT_EQ(max_uniform_delta(two_edge()), Rational(1, 4));
    EXPECT_EQ(max_uniform_delta(ped::testing::two_edge_midpoint()), Rational(1, 2));
    GeometricGraph free({{0, 0}, {1, 0}, {5, 5}}, {{0, 1}, {1, 2}});
    EXPECT_EQ(max_uniform_delta(free), Rational(1, 2));
    GeometricGraph overlap({{0, 0}, {2, 0}, {1, 0}, {3, 0}}, {{0, 1}, {2, 3}});
    EXPECT_THROW(max_uniform_delta(overlap), std::invalid_argument);
}

TEST(MaxUniformDelta, IsTheValidityThreshold) {
    const Rational nudge(1, 1000000);
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        GeometricGraph g = ped::testing::small_random(seed, 10, false);
        Rational d = max_uniform_delta(g);
        EXPECT_TRUE(validate_ped(g, StubAssignment::uniform(g, d)).valid()) << seed;
        if (d < Rational(1, 2)) {
            EXPECT_FALSE(validate_ped(g, StubAssignment::uniform(g, d + nudge)).valid()) << seed;
        }
    }
}
