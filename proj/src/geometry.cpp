#include "ped/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ped {

bool lex_less(const Point& a, const Point& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
}

Segment::Segment(Point a, Point b) : a_(std::move(a)), b_(std::move(b)) {
    if (a_ == b_) throw std::invalid_argument("degenerate segment");
}

Point Segment::at(const Rational& t) const {
    return {a_.x + t * (b_.x - a_.x), a_.y + t * (b_.y - a_.y)};
}

Rational Segment::squared_length() const {
    Rational dx = b_.x - a_.x;
    Rational dy = b_.y - a_.y;
    return dx * dx + dy * dy;
}

Stub::Stub(Point origin, const Point& toward, Rational fraction)
    : origin_(std::move(origin)), fraction_(std::move(fraction)) {
    if (origin_ == toward) throw std::invalid_argument("stub on degenerate edge");
    if (fraction_ <= 0 || fraction_ > Rational(1, 2)) {
        throw std::invalid_argument("stub fraction outside (0, 1/2]");
    }
    tip_ = {origin_.x + fraction_ * (toward.x - origin_.x), origin_.y + fraction_ * (toward.y - origin_.y)};
}

int orientation(const Point& a, const Point& b, const Point& c) {
    Rational v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return sgn(v);
}

namespace {

// Parameter of p along a->b, for p known to be on the supporting line.
Rational param_on_line(const Point& a, const Point& b, const Point& p) {
    if (a.x != b.x) return (p.x - a.x) / (b.x - a.x);
    return (p.y - a.y) / (b.y - a.y);
}

}  // namespace

SegmentIntersection intersect_segments(const Segment& s1, const Segment& s2) {
    const Point& p = s1.a();
    const Point& p2 = s1.b();
    const Point& q = s2.a();
    const Point& q2 = s2.b();

    int o1 = orientation(p, p2, q);
    int o2 = orientation(p, p2, q2);
    int o3 = orientation(q, q2, p);
    int o4 = orientation(q, q2, p2);

    if (o1 == 0 && o2 == 0) {
        // Collinear: compare parameter intervals along s1.
        Rational u = param_on_line(p, p2, q);
        Rational v = param_on_line(p, p2, q2);
        if (u > v) std::swap(u, v);
        Rational lo = std::max(u, Rational(0));
        Rational hi = std::min(v, Rational(1));
        if (lo > hi) return NoIntersection{};
        if (lo < hi) return DegenerateOverlap{};
        Point at = s1.at(lo);
        return CrossingPoint{at, lo, param_on_line(q, q2, at)};
    }
    if (o1 * o2 > 0 || o3 * o4 > 0) return NoIntersection{};

    // Proper or touching intersection: solve p + t r = q + u s.
    Rational rx = p2.x - p.x, ry = p2.y - p.y;
    Rational sx = q2.x - q.x, sy = q2.y - q.y;
    Rational denom = rx * sy - ry * sx;
    Rational qpx = q.x - p.x, qpy = q.y - p.y;
    Rational t = (qpx * sy - qpy * sx) / denom;
    Rational u = (qpx * ry - qpy * rx) / denom;
    return CrossingPoint{s1.at(t), t, u};
}

bool stubs_conflict(const Stub& p, const Stub& q) {
    Segment sp(p.origin(), p.tip());
    Segment sq(q.origin(), q.tip());
    auto hit = intersect_segments(sp, sq);
    if (std::holds_alternative<NoIntersection>(hit)) return false;
    if (std::holds_alternative<DegenerateOverlap>(hit)) return true;
    const auto& cp = std::get<CrossingPoint>(hit);
    // Open stubs: the shared point must be strictly inside both.
    return cp.t1 > 0 && cp.t1 < 1 && cp.t2 > 0 && cp.t2 < 1;
}

PointF to_float(const Point& p) {
    return {p.x.get_d(), p.y.get_d()};
}

namespace {

double cross(PointF a, PointF b, PointF c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

}  // namespace

bool stubs_conflict_float(PointF a, PointF b, PointF c, PointF d, double tolerance) {
    double scale = std::max({std::abs(a.x), std::abs(a.y), std::abs(b.x), std::abs(b.y), std::abs(c.x),
                             std::abs(c.y), std::abs(d.x), std::abs(d.y), 1.0});
    double len1 = std::hypot(b.x - a.x, b.y - a.y);
    double len2 = std::hypot(d.x - c.x, d.y - c.y);
    // Signed distances of each endpoint to the other supporting line.
    double tol = tolerance * scale;
    double o1 = cross(a, b, c) / len1;
    double o2 = cross(a, b, d) / len1;
    double o3 = cross(c, d, a) / len2;
    double o4 = cross(c, d, b) / len2;
    auto sign = [tol](double v) { return v > tol ? 1 : (v < -tol ? -1 : 0); };
    int s1 = sign(o1), s2 = sign(o2), s3 = sign(o3), s4 = sign(o4);
    if (s1 == 0 && s2 == 0) {
        // Collinear within tolerance: conflict iff the open intervals overlap
        // by more than the tolerance.
        double dx = b.x - a.x, dy = b.y - a.y;
        auto proj = [&](PointF p) { return ((p.x - a.x) * dx + (p.y - a.y) * dy) / len1; };
        double u = proj(c), v = proj(d);
        if (u > v) std::swap(u, v);
        double lo = std::max(u, 0.0), hi = std::min(v, len1);
        return hi - lo > tol;
    }
    // Proper crossing needs strict separation on both lines; anything
    // within tolerance of an endpoint is a touch.
    return s1 * s2 < 0 && s3 * s4 < 0;
}

BoxF bounding_box(const Point& a, const Point& b) {
    double ax = a.x.get_d(), ay = a.y.get_d(), bx = b.x.get_d(), by = b.y.get_d();
    BoxF box{std::min(ax, bx), std::min(ay, by), std::max(ax, bx), std::max(ay, by)};
    // get_d truncates; widen so the box stays conservative.
    auto widen = [](double lo, double hi, double& out_lo, double& out_hi) {
        double pad = 1e-12 * std::max({std::abs(lo), std::abs(hi), 1e-300}) + 1e-300;
        out_lo = lo - pad;
        out_hi = hi + pad;
    };
    widen(box.xmin, box.xmax, box.xmin, box.xmax);
    widen(box.ymin, box.ymax, box.ymin, box.ymax);
    return box;
}

std::vector<std::pair<std::size_t, std::size_t>> overlapping_boxes(const std::vector<BoxF>& boxes) {
    std::vector<std::size_t> order(boxes.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (boxes[a].xmin != boxes[b].xmin) return boxes[a].xmin < boxes[b].xmin;
        return a < b;
    });
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t k = 0; k < order.size(); ++k) {
        const BoxF& bk = boxes[order[k]];
        for (std::size_t m = k + 1; m < order.size(); ++m) {
            const BoxF& bm = boxes[order[m]];
            if (bm.xmin > bk.xmax) break;
            if (bm.ymin <= bk.ymax && bk.ymin <= bm.ymax) {
                out.emplace_back(std::min(order[k], order[m]), std::max(order[k], order[m]));
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> overlapping_boxes(const std::vector<BoxF>& left,
                                                                   const std::vector<BoxF>& right) {
    std::vector<BoxF> all(left);
    all.insert(all.end(), right.begin(), right.end());
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (auto [i, j] : overlapping_boxes(all)) {
        if (i < left.size() && j >= left.size()) out.emplace_back(i, j - left.size());
    }
    return out;
}

}  // namespace ped
