#pragma once

#include <array>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "ped/rational.hpp"

namespace ped {

struct Point {
    Rational x;
    Rational y;

    friend bool operator==(const Point&, const Point&) = default;
};

/// Lexicographic order, used for duplicate detection and deterministic output.
bool lex_less(const Point& a, const Point& b);

/// A closed straight-line segment with distinct endpoints.
class Segment {
public:
    Segment(Point a, Point b);

    const Point& a() const { return a_; }
    const Point& b() const { return b_; }

    /// Point at parameter t, a + t (b - a).
    Point at(const Rational& t) const;
    Rational squared_length() const;

private:
    Point a_;
    Point b_;
};

/// Stub of an edge: the relatively open segment strictly between `origin`
/// and `tip`, where tip = origin + fraction * (toward - origin).
class Stub {
public:
    /// fraction is the stub length as a fraction of the edge length,
    /// 0 < fraction <= 1/2.
    Stub(Point origin, const Point& toward, Rational fraction);

    const Point& origin() const { return origin_; }
    const Point& tip() const { return tip_; }
    const Rational& fraction() const { return fraction_; }

private:
    Point origin_;
    Point tip_;
    Rational fraction_;
};

/// Sign of the cross product (b - a) x (c - a).
int orientation(const Point& a, const Point& b, const Point& c);

struct CrossingPoint {
    Point point;
    Rational t1;  ///< parameter along the first segment
    Rational t2;  ///< parameter along the second segment
};
struct NoIntersection {};
struct DegenerateOverlap {};

using SegmentIntersection = std::variant<NoIntersection, CrossingPoint, DegenerateOverlap>;

/// Exact intersection of two closed segments. Returns the unique common
/// point when there is exactly one, DegenerateOverlap for collinear segments
/// sharing more than one point.
SegmentIntersection intersect_segments(const Segment& s1, const Segment& s2);

/// True iff the two open stubs share a point.
bool stubs_conflict(const Stub& p, const Stub& q);

// Float mode ---------------------------------------------------------------

struct PointF {
    double x;
    double y;
};

PointF to_float(const Point& p);

/// Conflict test on float stubs. Points within `tolerance` (relative to the
/// coordinate scale) of an endpoint or of the other line count as touching,
/// which is not a conflict.
bool stubs_conflict_float(PointF origin_p, PointF tip_p, PointF origin_q, PointF tip_q,
                          double tolerance = kFloatTolerance);

/// Conservative axis-aligned box of a rational segment in doubles.
struct BoxF {
    double xmin, ymin, xmax, ymax;
    bool overlaps(const BoxF& other) const {
        return xmin <= other.xmax && other.xmin <= xmax && ymin <= other.ymax && other.ymin <= ymax;
    }
};
BoxF bounding_box(const Point& a, const Point& b);

/// Index pairs (i < j) whose boxes overlap, found by sweeping over x.
std::vector<std::pair<std::size_t, std::size_t>> overlapping_boxes(const std::vector<BoxF>& boxes);

/// Pairs (i into `left`, j into `right`) whose boxes overlap.
std::vector<std::pair<std::size_t, std::size_t>> overlapping_boxes(const std::vector<BoxF>& left,
                                                                   const std::vector<BoxF>& right);

}  // namespace ped
