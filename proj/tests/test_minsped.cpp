#include <gtest/gtest.h>

#include "ped/minsped.hpp"
#include "support.hpp"

using namespace ped;
using ped::testing::from_segments;

namespace {

// edge 2 is crossed by edge 0 at 1/6 and by edge 1 at 1/3 of its length
GeometricGraph two_crossings() {
    return from_segments({{0, 0, 10, 0}, {0, 3, 10, 3}, {2, -1, 3, 5}});
}

bool can_drop_one(const TwoSatInstance& inst, std::vector<bool> values) {
    for (std::size_t v = 0; v < values.size(); ++v) {
        if (!values[v]) continue;
        values[v] = false;
        bool ok = satisfies(inst, values);
        values[v] = true;
        if (ok) return true;
    }
    return false;
}

}  // namespace

TEST(Instance, CrossingFreeHasNoVariables) {
    GeometricGraph g({{0, 0}, {1, 0}, {5, 5}}, {{0, 1}, {1, 2}});
    TwoSatInstance inst = build_instance(g);
    EXPECT_TRUE(inst.variables.empty());
    EXPECT_TRUE(inst.crossing_clauses.empty());
    Assignment a = approx_minw2sat(inst);
    EXPECT_EQ(a.weight, 0.0);
    EXPECT_EQ(assignment_to_stubs(g, inst, a).fractions(), StubAssignment::uniform(g, Rational(1, 2)).fractions());
}

TEST(Instance, TwoEdge) {
    TwoSatInstance inst = build_instance(ped::testing::two_edge());
    ASSERT_EQ(inst.variables.size(), 2u);
    ASSERT_EQ(inst.crossing_clauses.size(), 1u);
    EXPECT_TRUE(inst.prefix_clauses.empty());
    for (const SegmentPair& p : inst.variables) {
        EXPECT_EQ(p.index, 1u);
        EXPECT_EQ(p.inner, Rational(1, 4));
        EXPECT_EQ(p.outer, Rational(1, 2));
        EXPECT_DOUBLE_EQ(p.weight, 2.0);
    }
    Assignment exact = exact_minw2sat(inst);
    EXPECT_DOUBLE_EQ(exact.weight, 2.0);
    EXPECT_DOUBLE_EQ(approx_minw2sat(inst).weight, 2.0);
}

TEST(Instance, RelativeWeightsAreSpans) {
    TwoSatInstance inst = build_instance(ped::testing::two_edge(), WeightMode::Relative);
    ASSERT_EQ(inst.variables.size(), 2u);
    for (const SegmentPair& p : inst.variables) EXPECT_EQ(*p.exact_weight, Rational(1, 4));
    EXPECT_EQ(*exact_minw2sat(inst).exact_weight, Rational(1, 4));
}

TEST(Instance, ErasesTheCheaperSide) {
    // the short edge loses 2 units, the long one would lose 4
    GeometricGraph g = from_segments({{0, 0, 4, 0}, {1, -1, 1, 5}});
    TwoSatInstance inst = build_instance(g);
    Assignment a = approx_minw2sat(inst);
    EXPECT_DOUBLE_EQ(a.weight, 2.0);
    StubAssignment s = assignment_to_stubs(g, inst, a);
    EXPECT_EQ(s.fraction(0), Rational(1, 4));
    EXPECT_EQ(s.fraction(1), Rational(1, 2));
}

TEST(Instance, PairsFollowCrossingOrder) {
    GeometricGraph g = two_crossings();
    TwoSatInstance inst = build_instance(g);
    ASSERT_EQ(inst.variables.size(), 4u);
    ASSERT_EQ(inst.edge_variables[2].size(), 2u);
    const SegmentPair& first = inst.variables[inst.edge_variables[2][0]];
    const SegmentPair& second = inst.variables[inst.edge_variables[2][1]];
    EXPECT_EQ(first.induced_by, 0u);
    EXPECT_EQ(first.inner, Rational(1, 6));
    EXPECT_EQ(first.outer, Rational(1, 3));
    EXPECT_EQ(second.induced_by, 1u);
    EXPECT_EQ(second.index, 2u);
    EXPECT_EQ(second.outer, Rational(1, 2));
    ASSERT_EQ(inst.prefix_clauses.size(), 1u);
    EXPECT_EQ(inst.prefix_clauses[0], std::make_pair(inst.edge_variables[2][0], inst.edge_variables[2][1]));
    EXPECT_EQ(inst.crossing_clauses.size(), 2u);

    // erasing the inner pair without the outer one is illegal
    std::vector<bool> v(4, true);
    EXPECT_TRUE(satisfies(inst, v));
    v[inst.edge_variables[2][1]] = false;
    EXPECT_FALSE(satisfies(inst, v));
    EXPECT_FALSE(satisfies(inst, std::vector<bool>(4, false)));
}

TEST(Instance, CrossingClausesPairPartners) {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        TwoSatInstance inst = build_instance(ped::testing::small_random(seed, 12));
        for (auto [x, y] : inst.crossing_clauses) {
            EXPECT_EQ(inst.variables[x].induced_by, inst.variables[y].edge);
            EXPECT_EQ(inst.variables[y].induced_by, inst.variables[x].edge);
        }
        for (auto [a, b] : inst.prefix_clauses) {
            EXPECT_EQ(inst.variables[a].edge, inst.variables[b].edge);
            EXPECT_EQ(inst.variables[a].index + 1, inst.variables[b].index);
        }
    }
}

TEST(Solvers, ApproximationWithinFactorTwoAndMinimal) {
    int nontrivial = 0;
    for (std::uint64_t seed = 1; seed <= 150; ++seed) {
        GeometricGraph g = ped::testing::small_random(seed, 12);
        TwoSatInstance inst = build_instance(g);
        if (inst.variables.size() > kExactVariableLimit) continue;
        Assignment approx = approx_minw2sat(inst);
        Assignment exact = exact_minw2sat(inst);
        EXPECT_TRUE(satisfies(inst, approx.values)) << seed;
        EXPECT_TRUE(satisfies(inst, exact.values)) << seed;
        EXPECT_LE(exact.weight, approx.weight + 1e-9) << seed;
        EXPECT_LE(approx.weight, 2 * exact.weight + 1e-9) << seed;
        EXPECT_FALSE(can_drop_one(inst, approx.values)) << seed;
        nontrivial += !inst.variables.empty();
    }
    EXPECT_GT(nontrivial, 75);
}

TEST(Solvers, RelativeModeExactWeights) {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        TwoSatInstance inst = build_instance(ped::testing::small_random(seed, 10), WeightMode::Relative);
        Assignment approx = approx_minw2sat(inst);
        Assignment exact = exact_minw2sat(inst);
        ASSERT_TRUE(approx.exact_weight && exact.exact_weight);
        EXPECT_LE(*exact.exact_weight, *approx.exact_weight) << seed;
        EXPECT_LE(*approx.exact_weight, 2 * *exact.exact_weight) << seed;
        EXPECT_NEAR(approx.weight, approx.exact_weight->get_d(), 1e-12);
    }
}

TEST(Solvers, DecodedStubsAreValidAndAccountForErasedInk) {
    for (std::uint64_t seed = 1; seed <= 80; ++seed) {
        GeometricGraph g = ped::testing::small_random(seed, 14);
        TwoSatInstance inst = build_instance(g);
        Assignment a = approx_minw2sat(inst);
        StubAssignment s = assignment_to_stubs(g, inst, a);
        EXPECT_TRUE(validate_ped(g, s).valid()) << seed;
        EXPECT_NEAR(ink(g, s).absolute + a.weight, g.total_length(), 1e-9) << seed;
    }
}

TEST(Solvers, ExactOptimumIsDualToMaxSped) {
    for (std::uint64_t seed = 200; seed < 280; ++seed) {
        GeometricGraph g = ped::testing::small_random(seed, 12);
        TwoSatInstance inst = build_instance(g);
        if (inst.variables.size() > kExactVariableLimit) continue;
        double erased = exact_minw2sat(inst).weight;
        EXPECT_NEAR(g.total_length() - erased, solve_maxsped(g).k_opt, 1e-9) << seed;
    }
}

TEST(Solvers, ExactRefusesLargeInstances) {
    TwoSatInstance inst = build_instance(two_crossings());
    EXPECT_THROW(exact_minw2sat(inst, 3), InstanceTooLarge);
}
