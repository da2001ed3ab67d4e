#include "ped/crossings.hpp"

#include <algorithm>

namespace ped {

namespace {

// Returns true and fills `out` when e and f cross at an interior point.
bool crossing_of(const GeometricGraph& g, std::size_t e, std::size_t f, Crossing& out) {
    auto hit = intersect_segments(g.segment(e), g.segment(f));
    if (std::holds_alternative<NoIntersection>(hit)) return false;
    if (std::holds_alternative<DegenerateOverlap>(hit)) throw CollinearOverlapError(e, f);
    auto& cp = std::get<CrossingPoint>(hit);
    if (cp.t1 <= 0 || cp.t1 >= 1 || cp.t2 <= 0 || cp.t2 >= 1) return false;
    out.e = e;
    out.f = f;
    out.near_e = std::min(cp.t1, Rational(1 - cp.t1));
    out.near_f = std::min(cp.t2, Rational(1 - cp.t2));
    out.point = std::move(cp.point);
    return true;
}

}  // namespace

std::vector<Crossing> enumerate_crossings(const GeometricGraph& g, CrossingMethod method) {
    const std::size_t m = g.edge_count();
    std::vector<BoxF> boxes(m);
    for (std::size_t e = 0; e < m; ++e) boxes[e] = g.box(e);

    std::vector<Crossing> out;
    Crossing c;
    if (method == CrossingMethod::AllPairs) {
        for (std::size_t e = 0; e < m; ++e) {
            for (std::size_t f = e + 1; f < m; ++f) {
                if (!boxes[e].overlaps(boxes[f])) continue;
                if (crossing_of(g, e, f, c)) out.push_back(c);
            }
        }
    } else {
        for (auto [e, f] : overlapping_boxes(boxes)) {
            if (crossing_of(g, e, f, c)) out.push_back(c);
        }
    }
    return out;
}

std::vector<ConflictComponent> build_conflict_components(const GeometricGraph& g,
                                                         const std::vector<Crossing>& crossings) {
    const std::size_t m = g.edge_count();
    // Incident crossings per edge.
    std::vector<std::vector<std::size_t>> incident(m);
    for (std::size_t i = 0; i < crossings.size(); ++i) {
        incident[crossings[i].e].push_back(i);
        incident[crossings[i].f].push_back(i);
    }
    for (std::size_t e = 0; e < m; ++e) {
        if (incident[e].size() >= 3) throw NotTwoPlanarError(e);
    }
    auto neighbour = [&](std::size_t e, std::size_t k) { return crossings[incident[e][k]].other(e); };

    std::vector<bool> placed(m, false);
    std::vector<bool> explored(m, false);
    std::vector<ConflictComponent> components;

    // Walks the chain from `start`, leaving through `first_crossing`.
    auto walk = [&](std::size_t start, std::size_t first_crossing, ComponentKind kind) {
        ConflictComponent comp;
        comp.kind = kind;
        std::vector<std::size_t> order{start};
        std::vector<std::size_t> links;  // crossing between order[j] and order[j+1]
        std::size_t current = start;
        std::size_t via = first_crossing;
        placed[start] = true;
        while (true) {
            std::size_t next = crossings[via].other(current);
            if (placed[next]) break;  // closed the cycle
            placed[next] = true;
            links.push_back(via);
            order.push_back(next);
            current = next;
            std::size_t k = 0;
            while (k < incident[current].size() && incident[current][k] == via) ++k;
            if (k == incident[current].size()) break;  // path end
            via = incident[current][k];
        }
        const std::size_t n = order.size();
        comp.chain.resize(n);
        for (std::size_t j = 0; j < n; ++j) {
            comp.chain[j].edge = order[j];
            comp.chain[j].backward = Rational(1, 2);
            comp.chain[j].forward = Rational(1, 2);
        }
        for (std::size_t j = 0; j + 1 < n; ++j) {
            const Crossing& c = crossings[links[j]];
            comp.chain[j].forward = c.near_on(order[j]);
            comp.chain[j + 1].backward = c.near_on(order[j + 1]);
        }
        if (kind == ComponentKind::Cycle) {
            // The remaining crossing of the first edge closes the cycle.
            for (std::size_t ci : incident[start]) {
                if (ci == first_crossing) continue;
                comp.chain[n - 1].forward = crossings[ci].near_on(order[n - 1]);
                comp.chain[0].backward = crossings[ci].near_on(start);
            }
        }
        components.push_back(std::move(comp));
    };

    for (std::size_t e = 0; e < m; ++e) {
        if (placed[e]) continue;
        if (incident[e].empty()) {
            placed[e] = true;
            components.push_back({ComponentKind::Path, {{e, Rational(1, 2), Rational(1, 2)}}});
            continue;
        }
        // Explore the component to classify it and find its root.
        std::vector<std::size_t> members;
        std::vector<std::size_t> stack{e};
        explored[e] = true;
        while (!stack.empty()) {
            std::size_t x = stack.back();
            stack.pop_back();
            members.push_back(x);
            for (std::size_t k = 0; k < incident[x].size(); ++k) {
                std::size_t y = neighbour(x, k);
                if (!explored[y]) {
                    explored[y] = true;
                    stack.push_back(y);
                }
            }
        }
        std::size_t lowest_end = m;
        for (std::size_t x : members) {
            if (incident[x].size() == 1) lowest_end = std::min(lowest_end, x);
        }
        if (lowest_end < m) {
            walk(lowest_end, incident[lowest_end][0], ComponentKind::Path);
        } else {
            std::size_t root = *std::min_element(members.begin(), members.end());
            std::size_t k = neighbour(root, 0) < neighbour(root, 1) ? 0 : 1;
            walk(root, incident[root][k], ComponentKind::Cycle);
        }
    }
    return components;
}

}  // namespace ped
