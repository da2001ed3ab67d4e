#include "ped/random_drawing.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ped {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("uniform_below: empty range");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

namespace {

class DrawingBuilder {
public:
    DrawingBuilder(const DrawingSpec& spec, std::uint64_t seed) : spec_(spec), rng_(seed) {}

    GeometricGraph run() {
        std::size_t attempts = 0;
        while (edges_.size() < spec_.edges) {
            if (++attempts > spec_.max_attempts) {
                throw std::runtime_error("random drawing: attempt budget exhausted after " +
                                         std::to_string(edges_.size()) + " edges");
            }
            try_add();
        }
        return GeometricGraph(vertices_, edges_);
    }

private:
    long coordinate() { return static_cast<long>(uniform_below(rng_, static_cast<std::uint64_t>(spec_.extent) + 1)); }

    long near(long c) {
        long lo = std::max(0L, c - spec_.max_span);
        long hi = std::min(spec_.extent, c + spec_.max_span);
        return lo + static_cast<long>(uniform_below(rng_, static_cast<std::uint64_t>(hi - lo + 1)));
    }

    Point fresh_point() { return {Rational(coordinate()), Rational(coordinate())}; }

    // Picks an existing vertex a third of the time.
    Point endpoint(const Point* anchor) {
        if (!vertices_.empty() && uniform_below(rng_, 3) == 0) {
            return vertices_[uniform_below(rng_, vertices_.size())];
        }
        if (anchor && spec_.max_span > 0) {
            return {Rational(near(anchor->x.get_num().get_si())), Rational(near(anchor->y.get_num().get_si()))};
        }
        return fresh_point();
    }

    std::size_t index_of(const Point& p, std::vector<Point>& extra) const {
        for (std::size_t i = 0; i < vertices_.size(); ++i) {
            if (vertices_[i] == p) return i;
        }
        for (std::size_t i = 0; i < extra.size(); ++i) {
            if (extra[i] == p) return vertices_.size() + i;
        }
        extra.push_back(p);
        return vertices_.size() + extra.size() - 1;
    }

    void try_add() {
        Point a = endpoint(nullptr);
        Point b = endpoint(&a);
        if (a == b) return;
        if (spec_.max_span > 0) {
            Rational dx = abs(a.x - b.x), dy = abs(a.y - b.y);
            if (dx > spec_.max_span || dy > spec_.max_span) return;
        }
        std::vector<Point> extra;
        std::size_t u = index_of(a, extra);
        std::size_t v = index_of(b, extra);
        for (const Edge& e : edges_) {
            if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) return;
        }

        Segment seg(a, b);
        BoxF box = bounding_box(a, b);
        std::vector<std::pair<std::size_t, Point>> hits;
        for (std::size_t e = 0; e < edges_.size(); ++e) {
            if (!box.overlaps(boxes_[e])) continue;
            auto hit = intersect_segments(seg, Segment(vertices_[edges_[e].u], vertices_[edges_[e].v]));
            if (std::holds_alternative<NoIntersection>(hit)) continue;
            if (std::holds_alternative<DegenerateOverlap>(hit)) return;
            const auto& cp = std::get<CrossingPoint>(hit);
            bool interior = cp.t1 > 0 && cp.t1 < 1 && cp.t2 > 0 && cp.t2 < 1;
            if (!interior) {
                // Touching is only allowed at a common endpoint.
                bool shared = (cp.t1 == 0 || cp.t1 == 1) && (cp.t2 == 0 || cp.t2 == 1);
                if (!shared) return;
                continue;
            }
            if (crossing_points_.contains(cp.point)) return;  // concurrent crossing
            hits.push_back({e, cp.point});
        }
        // A brand-new vertex must not sit on an existing edge; the check
        // above covers it because that edge would touch the new segment there.
        if (spec_.two_planar) {
            if (hits.size() > 2) return;
            for (const auto& [e, p] : hits) {
                if (crossing_count_[e] >= 2) return;
            }
        }
        for (auto [e, p] : hits) {
            ++crossing_count_[e];
            crossing_points_.insert(p);
        }
        vertices_.insert(vertices_.end(), extra.begin(), extra.end());
        edges_.push_back({u, v});
        boxes_.push_back(box);
        crossing_count_.push_back(hits.size());
    }

    struct PointLess {
        bool operator()(const Point& a, const Point& b) const { return lex_less(a, b); }
    };

    const DrawingSpec& spec_;
    std::mt19937_64 rng_;
    std::vector<Point> vertices_;
    std::vector<Edge> edges_;
    std::vector<BoxF> boxes_;
    std::vector<std::size_t> crossing_count_;
    std::set<Point, PointLess> crossing_points_;
};

}  // namespace

GeometricGraph random_drawing(const DrawingSpec& spec, std::uint64_t seed) {
    if (spec.extent < 1) throw std::invalid_argument("random drawing: extent must be positive");
    return DrawingBuilder(spec, seed).run();
}

}  // namespace ped
