#include "ped/graph.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ped {

GeometricGraph::GeometricGraph(std::vector<Point> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    std::vector<std::size_t> order(vertices_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return lex_less(vertices_[a], vertices_[b]); });
    for (std::size_t i = 1; i < order.size(); ++i) {
        if (vertices_[order[i - 1]] == vertices_[order[i]]) {
            throw std::invalid_argument("duplicate vertex coordinates at vertices " +
                                        std::to_string(order[i - 1]) + " and " + std::to_string(order[i]));
        }
    }
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        const Edge& ed = edges_[e];
        if (ed.u >= vertices_.size() || ed.v >= vertices_.size()) {
            throw std::invalid_argument("edge " + std::to_string(e) + " references a missing vertex");
        }
        if (ed.u == ed.v) throw std::invalid_argument("self-loop at edge " + std::to_string(e));
        auto key = std::minmax(ed.u, ed.v);
        if (!seen.insert({key.first, key.second}).second) {
            throw std::invalid_argument("duplicate edge " + std::to_string(e));
        }
    }
}

Segment GeometricGraph::segment(std::size_t e) const {
    return Segment(vertices_[edges_[e].u], vertices_[edges_[e].v]);
}

Rational GeometricGraph::squared_length(std::size_t e) const {
    const Point& a = vertices_[edges_[e].u];
    const Point& b = vertices_[edges_[e].v];
    Rational dx = b.x - a.x, dy = b.y - a.y;
    return dx * dx + dy * dy;
}

double GeometricGraph::length(std::size_t e) const {
    return std::sqrt(squared_length(e).get_d());
}

double GeometricGraph::total_length() const {
    double total = 0.0;
    for (std::size_t e = 0; e < edges_.size(); ++e) total += length(e);
    return total;
}

bool GeometricGraph::share_vertex(std::size_t e, std::size_t f) const {
    const Edge& a = edges_[e];
    const Edge& b = edges_[f];
    return a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
}

BoxF GeometricGraph::box(std::size_t e) const {
    return bounding_box(vertices_[edges_[e].u], vertices_[edges_[e].v]);
}

StubAssignment::StubAssignment(std::vector<Rational> fractions, bool allow_erased)
    : fractions_(std::move(fractions)), allow_erased_(allow_erased) {
    for (std::size_t e = 0; e < fractions_.size(); ++e) {
        const Rational& f = fractions_[e];
        bool ok = f > 0 && f <= Rational(1, 2);
        if (allow_erased && f == 0) ok = true;
        if (!ok) {
            throw std::invalid_argument("invalid assignment: stub fraction " + format_rational(f) + " on edge " +
                                        std::to_string(e) + " outside (0, 1/2]");
        }
    }
}

StubAssignment StubAssignment::uniform(const GeometricGraph& g, const Rational& delta) {
    return StubAssignment(std::vector<Rational>(g.edge_count(), delta));
}

std::pair<Stub, Stub> edge_stubs(const GeometricGraph& g, const StubAssignment& s, std::size_t e) {
    const Point& a = g.vertex(g.edge(e).u);
    const Point& b = g.vertex(g.edge(e).v);
    return {Stub(a, b, s.fraction(e)), Stub(b, a, s.fraction(e))};
}

std::vector<EdgeIntersection> pairwise_intersections(const GeometricGraph& g) {
    std::vector<BoxF> boxes(g.edge_count());
    for (std::size_t e = 0; e < g.edge_count(); ++e) boxes[e] = g.box(e);
    std::vector<EdgeIntersection> out;
    for (auto [e, f] : overlapping_boxes(boxes)) {
        auto hit = intersect_segments(g.segment(e), g.segment(f));
        if (std::holds_alternative<NoIntersection>(hit)) continue;
        out.push_back({e, f, std::move(hit)});
    }
    return out;
}

// General position -----------------------------------------------------------

namespace {

bool is_endpoint_param(const Rational& t) {
    return t == 0 || t == 1;
}

}  // namespace

std::vector<PositionDefect> check_general_position(const GeometricGraph& g) {
    std::vector<PositionDefect> defects;

    // Crossing points per edge, to detect concurrency.
    std::vector<std::vector<std::pair<Point, std::size_t>>> crossings_of(g.edge_count());
    for (const auto& ix : pairwise_intersections(g)) {
        if (std::holds_alternative<DegenerateOverlap>(ix.hit)) {
            defects.push_back({DefectKind::CollinearOverlap, {ix.e, ix.f}, std::nullopt, std::nullopt});
            continue;
        }
        const auto& cp = std::get<CrossingPoint>(ix.hit);
        if (is_endpoint_param(cp.t1) || is_endpoint_param(cp.t2)) continue;
        crossings_of[ix.e].push_back({cp.point, ix.f});
        crossings_of[ix.f].push_back({cp.point, ix.e});
    }

    // Concurrent crossings: an edge crossed twice at the same point.
    std::set<std::vector<std::size_t>> reported;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        auto& list = crossings_of[e];
        std::sort(list.begin(), list.end(), [](const auto& a, const auto& b) {
            if (a.first == b.first) return a.second < b.second;
            return lex_less(a.first, b.first);
        });
        for (std::size_t i = 0; i < list.size();) {
            std::size_t j = i;
            while (j < list.size() && list[j].first == list[i].first) ++j;
            if (j - i >= 2) {
                std::vector<std::size_t> group{e};
                for (std::size_t k = i; k < j; ++k) group.push_back(list[k].second);
                std::sort(group.begin(), group.end());
                if (reported.insert(group).second) {
                    defects.push_back({DefectKind::ConcurrentCrossing, group, std::nullopt, list[i].first});
                }
            }
            i = j;
        }
    }

    // Vertices lying in the interior of non-incident edges.
    std::vector<BoxF> vboxes(g.vertex_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v) vboxes[v] = bounding_box(g.vertex(v), g.vertex(v));
    std::vector<BoxF> eboxes(g.edge_count());
    for (std::size_t e = 0; e < g.edge_count(); ++e) eboxes[e] = g.box(e);
    for (auto [v, e] : overlapping_boxes(vboxes, eboxes)) {
        const Edge& ed = g.edge(e);
        if (ed.u == v || ed.v == v) continue;
        const Point& a = g.vertex(ed.u);
        const Point& b = g.vertex(ed.v);
        const Point& p = g.vertex(v);
        if (orientation(a, b, p) != 0) continue;
        bool inside = (std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x)) &&
                      (std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y));
        if (inside) defects.push_back({DefectKind::VertexOnEdge, {e}, v, p});
    }
    return defects;
}

std::string describe(const PositionDefect& d) {
    std::ostringstream out;
    switch (d.kind) {
        case DefectKind::CollinearOverlap: out << "collinear overlap"; break;
        case DefectKind::VertexOnEdge: out << "vertex on edge"; break;
        case DefectKind::ConcurrentCrossing: out << "concurrent crossing"; break;
    }
    out << " edges";
    for (std::size_t e : d.edges) out << ' ' << e;
    if (d.vertex) out << " vertex " << *d.vertex;
    if (d.point) out << " at (" << format_rational(d.point->x) << ", " << format_rational(d.point->y) << ")";
    return out.str();
}

// Validation -------------------------------------------------------------------

namespace {

Point witness_of(const Stub& p, const Stub& q) {
    auto hit = intersect_segments(Segment(p.origin(), p.tip()), Segment(q.origin(), q.tip()));
    if (const auto* cp = std::get_if<CrossingPoint>(&hit)) return cp->point;
    // Collinear overlap: midpoint of the shared interval along p.
    const Point& a = p.origin();
    const Point& b = p.tip();
    auto param = [&](const Point& x) {
        return a.x != b.x ? Rational((x.x - a.x) / (b.x - a.x)) : Rational((x.y - a.y) / (b.y - a.y));
    };
    Rational u = param(q.origin()), v = param(q.tip());
    if (u > v) std::swap(u, v);
    Rational lo = std::max(u, Rational(0)), hi = std::min(v, Rational(1));
    Rational mid = (lo + hi) / 2;
    return {a.x + mid * (b.x - a.x), a.y + mid * (b.y - a.y)};
}

}  // namespace

ValidationReport validate_ped(const GeometricGraph& g, const StubAssignment& s, ArithmeticMode mode) {
    if (s.size() != g.edge_count()) {
        throw std::invalid_argument("assignment has " + std::to_string(s.size()) + " entries for " +
                                    std::to_string(g.edge_count()) + " edges");
    }
    ValidationReport report;
    report.position_warning = !check_general_position(g).empty();

    // Stub k belongs to edge k / 2; even k starts at u, odd k at v.
    struct StubRef {
        std::size_t edge;
        std::size_t origin;
        Stub stub;
    };
    std::vector<StubRef> stubs;
    std::vector<BoxF> boxes;
    stubs.reserve(2 * g.edge_count());
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        if (s.erased(e)) continue;
        auto [su, sv] = edge_stubs(g, s, e);
        boxes.push_back(bounding_box(su.origin(), su.tip()));
        stubs.push_back({e, g.edge(e).u, std::move(su)});
        boxes.push_back(bounding_box(sv.origin(), sv.tip()));
        stubs.push_back({e, g.edge(e).v, std::move(sv)});
    }

    for (auto [i, j] : overlapping_boxes(boxes)) {
        const StubRef& a = stubs[i];
        const StubRef& b = stubs[j];
        if (a.edge == b.edge) continue;
        bool conflict = false;
        if (mode == ArithmeticMode::Exact) {
            conflict = stubs_conflict(a.stub, b.stub);
        } else {
            conflict = stubs_conflict_float(to_float(a.stub.origin()), to_float(a.stub.tip()),
                                            to_float(b.stub.origin()), to_float(b.stub.tip()));
        }
        if (!conflict) continue;
        Violation v{a.edge, b.edge, a.origin, b.origin, {}};
        if (mode == ArithmeticMode::Exact || stubs_conflict(a.stub, b.stub)) {
            v.witness = witness_of(a.stub, b.stub);
        } else {
            v.witness = a.stub.tip();
        }
        if (v.edge_e > v.edge_f) {
            std::swap(v.edge_e, v.edge_f);
            std::swap(v.origin_e, v.origin_f);
        }
        report.violations.push_back(std::move(v));
    }
    std::sort(report.violations.begin(), report.violations.end(), [](const Violation& x, const Violation& y) {
        return std::tie(x.edge_e, x.edge_f, x.origin_e, x.origin_f) <
               std::tie(y.edge_e, y.edge_f, y.origin_e, y.origin_f);
    });
    return report;
}

// Ink -----------------------------------------------------------------------------

InkReport ink(const GeometricGraph& g, const StubAssignment& s) {
    InkReport report;
    double total = 0.0;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        double l = g.length(e);
        total += l;
        report.absolute += 2.0 * s.fraction(e).get_d() * l;
    }
    report.relative = total > 0 ? report.absolute / total : 0.0;
    if (g.edge_count() > 0 &&
        std::all_of(s.fractions().begin(), s.fractions().end(), [&](const Rational& f) { return f == s.fraction(0); })) {
        report.relative_exact = Rational(2 * s.fraction(0));
    }
    return report;
}

RadicalSum exact_ink(const GeometricGraph& g, const StubAssignment& s) {
    RadicalSum total;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        total += RadicalSum::scaled_root(2 * s.fraction(e), g.squared_length(e));
    }
    return total;
}

Rational max_uniform_delta(const GeometricGraph& g) {
    Rational best(1, 2);
    for (const auto& ix : pairwise_intersections(g)) {
        if (std::holds_alternative<DegenerateOverlap>(ix.hit)) {
            throw std::invalid_argument("collinear overlap between edges " + std::to_string(ix.e) + " and " +
                                        std::to_string(ix.f));
        }
        const auto& cp = std::get<CrossingPoint>(ix.hit);
        if (is_endpoint_param(cp.t1) || is_endpoint_param(cp.t2)) continue;
        Rational de = std::min(cp.t1, Rational(1 - cp.t1));
        Rational df = std::min(cp.t2, Rational(1 - cp.t2));
        best = std::min(best, std::max(de, df));
    }
    return best;
}

}  // namespace ped
