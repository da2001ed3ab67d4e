#pragma once

#include <array>
#include <vector>

#include "ped/graph.hpp"
#include "ped/random_drawing.hpp"

namespace ped::testing {

/// Graph from a list of segments (x1, y1, x2, y2); equal endpoints are merged.
inline GeometricGraph from_segments(const std::vector<std::array<Rational, 4>>& segs) {
    std::vector<Point> vertices;
    std::vector<Edge> edges;
    auto index = [&](const Point& p) {
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            if (vertices[i] == p) return i;
        }
        vertices.push_back(p);
        return vertices.size() - 1;
    };
    for (const auto& s : segs) {
        std::size_t u = index({s[0], s[1]});
        std::size_t v = index({s[2], s[3]});
        edges.push_back({u, v});
    }
    return GeometricGraph(std::move(vertices), std::move(edges));
}

/// (0,0)-(4,0) crossed by (1,-1)-(1,3); both crossings a quarter in.
inline GeometricGraph two_edge() {
    return from_segments({{0, 0, 4, 0}, {1, -1, 1, 3}});
}

/// Same horizontal edge, crossed at the midpoint of (1,-2)-(1,2).
inline GeometricGraph two_edge_midpoint() {
    return from_segments({{0, 0, 4, 0}, {1, -2, 1, 2}});
}

/// Three extended triangle sides, pairwise crossing near the corners.
inline GeometricGraph crossing_triangle() {
    return from_segments({{-1, 0, 11, 0},
                          {Rational(85, 8), -1, Rational(35, 8), 9},
                          {Rational(-5, 8), -1, Rational(45, 8), 9}});
}

inline GeometricGraph small_random(std::uint64_t seed, std::size_t max_edges, bool two_planar = true,
                                   long extent = 12) {
    DrawingSpec spec;
    spec.edges = 1 + seed % max_edges;
    spec.extent = extent;
    spec.two_planar = two_planar;
    return random_drawing(spec, seed);
}

}  // namespace ped::testing
