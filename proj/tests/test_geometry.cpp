#include <random>

#include <gtest/gtest.h>

#include "ped/geometry.hpp"
#include "ped/radical.hpp"
#include "ped/rational.hpp"

using namespace ped;

TEST(Rational, ParsesFractionsIntegersAndDecimals) {
    EXPECT_EQ(parse_rational("3/4"), Rational(3, 4));
    EXPECT_EQ(parse_rational("-2"), Rational(-2));
    EXPECT_EQ(parse_rational("6/8"), Rational(3, 4));
    EXPECT_EQ(parse_rational("0.125"), Rational(1, 8));
    EXPECT_EQ(parse_rational("-1.5e2"), Rational(-150));
    EXPECT_EQ(parse_rational("25e-3"), Rational(1, 40));
}

TEST(Rational, RejectsMalformedInput) {
    for (const char* bad : {"", "abc", "1/0", "1/", "/2", "1.2.3", "1e", "--1", "0x10"}) {
        EXPECT_THROW(parse_rational(bad), std::invalid_argument) << bad;
    }
}

TEST(Rational, Formatting) {
    EXPECT_EQ(format_rational(Rational(3, 4)), "3/4");
    EXPECT_EQ(format_rational(Rational(8, 2)), "4");
    EXPECT_EQ(format_rational(Rational(-1, 3)), "-1/3");
    EXPECT_EQ(format_float(1.0 / 3.0), "0.333333333333");
    EXPECT_EQ(format_float(8.0), "8");
}

TEST(Rational, BestRationalBelowIrrational) {
    // target 1/(2 sqrt 8)
    auto at_most = [](const mpz_class& p, const mpz_class& q) { return 32 * p * p <= q * q; };
    Rational r = best_rational_at_most(at_most, 1000000);
    EXPECT_TRUE(at_most(r.get_num(), r.get_den()));
    EXPECT_LE(r.get_den(), 1000000);
    EXPECT_NEAR(r.get_d(), 1.0 / (2.0 * std::sqrt(8.0)), 1e-11);
    // exactly representable targets are hit
    Rational quarter = best_rational_at_most([](const mpz_class& p, const mpz_class& q) { return 4 * p <= q; }, 100);
    EXPECT_EQ(quarter, Rational(1, 4));
}

TEST(Segment, RejectsDegenerate) {
    EXPECT_THROW(Segment({1, 1}, {1, 1}), std::invalid_argument);
    Segment s({0, 0}, {4, 2});
    EXPECT_EQ(s.at(Rational(1, 4)), (Point{1, Rational(1, 2)}));
    EXPECT_EQ(s.squared_length(), 20);
}

TEST(Stub, FractionRange) {
    EXPECT_THROW(Stub({0, 0}, {4, 0}, 0), std::invalid_argument);
    EXPECT_THROW(Stub({0, 0}, {4, 0}, Rational(3, 4)), std::invalid_argument);
    Stub s({0, 0}, {4, 8}, Rational(1, 4));
    EXPECT_EQ(s.tip(), (Point{1, 2}));
    Stub half({0, 0}, {4, 8}, Rational(1, 2));
    EXPECT_EQ(half.tip(), (Point{2, 4}));
}

TEST(Intersect, ProperCrossing) {
    auto hit = intersect_segments(Segment({0, 0}, {4, 0}), Segment({1, -1}, {1, 3}));
    auto* cp = std::get_if<CrossingPoint>(&hit);
    ASSERT_NE(cp, nullptr);
    EXPECT_EQ(cp->point, (Point{1, 0}));
    EXPECT_EQ(cp->t1, Rational(1, 4));
    EXPECT_EQ(cp->t2, Rational(1, 4));
}

TEST(Intersect, DisjointParallelAndCollinear) {
    EXPECT_TRUE(std::holds_alternative<NoIntersection>(intersect_segments(Segment({0, 0}, {1, 0}), Segment({0, 1}, {1, 1}))));
    EXPECT_TRUE(std::holds_alternative<NoIntersection>(intersect_segments(Segment({0, 0}, {1, 0}), Segment({2, 0}, {3, 0}))));
    EXPECT_TRUE(std::holds_alternative<NoIntersection>(intersect_segments(Segment({0, 0}, {1, 1}), Segment({3, 0}, {2, 1}))));
    EXPECT_TRUE(
        std::holds_alternative<DegenerateOverlap>(intersect_segments(Segment({0, 0}, {2, 0}), Segment({1, 0}, {3, 0}))));
    EXPECT_TRUE(
        std::holds_alternative<DegenerateOverlap>(intersect_segments(Segment({0, 0}, {2, 2}), Segment({2, 2}, {1, 1}))));
}

TEST(Intersect, TouchingGivesSinglePoint) {
    auto hit = intersect_segments(Segment({0, 0}, {2, 0}), Segment({2, 0}, {3, 0}));
    auto* cp = std::get_if<CrossingPoint>(&hit);
    ASSERT_NE(cp, nullptr);
    EXPECT_EQ(cp->point, (Point{2, 0}));
    EXPECT_EQ(cp->t1, 1);
    EXPECT_EQ(cp->t2, 0);

    auto t = intersect_segments(Segment({0, 0}, {4, 0}), Segment({2, 0}, {2, 5}));
    auto* tp = std::get_if<CrossingPoint>(&t);
    ASSERT_NE(tp, nullptr);
    EXPECT_EQ(tp->t1, Rational(1, 2));
    EXPECT_EQ(tp->t2, 0);
}

TEST(StubsConflict, OpenSetSemantics) {
    Stub h({0, 0}, {4, 0}, Rational(1, 4));  // (0,0)-(1,0)
    Stub v_short({1, -1}, {1, 3}, Rational(1, 4));  // (1,-1)-(1,0)
    Stub v_long({1, -1}, {1, 3}, Rational(1, 2));   // (1,-1)-(1,1)
    EXPECT_FALSE(stubs_conflict(h, v_short));  // tips touch
    EXPECT_FALSE(stubs_conflict(h, v_long));   // v_long passes the tip of h
    Stub h_long({0, 0}, {4, 0}, Rational(1, 2));
    EXPECT_TRUE(stubs_conflict(h_long, v_long));
    EXPECT_FALSE(stubs_conflict(h_long, v_short));  // v_short ends on h_long
}

TEST(StubsConflict, SharedOriginAndCollinear) {
    Stub a({0, 0}, {4, 0}, Rational(1, 2));
    Stub b({0, 0}, {0, 4}, Rational(1, 2));
    EXPECT_FALSE(stubs_conflict(a, b));
    Stub c({0, 0}, {8, 0}, Rational(1, 8));  // overlaps a
    EXPECT_TRUE(stubs_conflict(a, c));
    Stub d({4, 0}, {0, 0}, Rational(1, 2));  // meets a at (2,0)
    EXPECT_FALSE(stubs_conflict(a, d));
    Stub e({4, 0}, {0, 0}, Rational(3, 8));
    EXPECT_FALSE(stubs_conflict(a, e));
}

TEST(StubsConflict, FloatAgreesWithExactOnIntegerStubs) {
    std::mt19937_64 rng(7);
    auto coord = [&] { return static_cast<long>(rng() % 9); };
    int checked = 0;
    for (int trial = 0; trial < 4000; ++trial) {
        Point a{coord(), coord()}, b{coord(), coord()}, c{coord(), coord()}, d{coord(), coord()};
        if (a == b || c == d) continue;
        Rational f1(1 + static_cast<long>(rng() % 4), 8), f2(1 + static_cast<long>(rng() % 4), 8);
        Stub p(a, b, f1), q(c, d, f2);
        bool exact = stubs_conflict(p, q);
        bool approx = stubs_conflict_float(to_float(p.origin()), to_float(p.tip()), to_float(q.origin()),
                                           to_float(q.tip()));
        EXPECT_EQ(exact, approx) << trial;
        ++checked;
    }
    EXPECT_GT(checked, 3000);
}

TEST(Boxes, SweepMatchesBruteForce) {
    std::mt19937_64 rng(11);
    std::vector<BoxF> boxes;
    for (int i = 0; i < 200; ++i) {
        Point a{static_cast<long>(rng() % 100), static_cast<long>(rng() % 100)};
        Point b{a.x + static_cast<long>(rng() % 10), a.y + static_cast<long>(rng() % 10)};
        boxes.push_back(bounding_box(a, b));
    }
    std::vector<std::pair<std::size_t, std::size_t>> brute;
    for (std::size_t i = 0; i < boxes.size(); ++i) {
        for (std::size_t j = i + 1; j < boxes.size(); ++j) {
            if (boxes[i].overlaps(boxes[j])) brute.push_back({i, j});
        }
    }
    EXPECT_EQ(overlapping_boxes(boxes), brute);
}

TEST(RadicalSum, MergesDependentRadicands) {
    RadicalSum a = RadicalSum::scaled_root(1, 8);
    RadicalSum b = RadicalSum::scaled_root(2, 2);
    EXPECT_EQ(a, b);
    EXPECT_EQ((a - b).term_count(), 0u);
    EXPECT_EQ(RadicalSum::scaled_root(3, 16).to_string(), "12");
    EXPECT_EQ(RadicalSum::scaled_root(1, Rational(1, 4)), RadicalSum::scaled_root(Rational(1, 2), 1));
    RadicalSum s = RadicalSum::scaled_root(1, 2) + RadicalSum::scaled_root(1, 3);
    EXPECT_EQ(s.term_count(), 2u);
    EXPECT_EQ(s.to_string(), "sqrt(2) + sqrt(3)");
}

TEST(RadicalSum, SignOfNearTie) {
    // sqrt(10001) - 100.005 is about -1.25e-7
    RadicalSum d = RadicalSum::scaled_root(1, 10001) - RadicalSum::scaled_root(Rational(20001, 200), 1);
    EXPECT_EQ(d.sign(), -1);
    // (sqrt 2 + sqrt 3)^2 = 5 + 2 sqrt 6 < 10
    RadicalSum e = RadicalSum::scaled_root(1, 2) + RadicalSum::scaled_root(1, 3) - RadicalSum::scaled_root(1, 10);
    EXPECT_EQ(e.sign(), -1);
    EXPECT_EQ(RadicalSum{}.sign(), 0);
    EXPECT_LT(RadicalSum::scaled_root(1, 2), RadicalSum::scaled_root(1, 3));
}
