#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ped/geometry.hpp"
#include "ped/radical.hpp"

namespace ped {

struct Edge {
    std::size_t u;
    std::size_t v;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Straight-line drawing of a simple graph with exact vertex coordinates.
class GeometricGraph {
public:
    GeometricGraph() = default;
    /// Throws std::invalid_argument on duplicate vertices, self-loops,
    /// duplicate edges, or out-of-range indices.
    GeometricGraph(std::vector<Point> vertices, std::vector<Edge> edges);

    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Point>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const Point& vertex(std::size_t i) const { return vertices_[i]; }
    const Edge& edge(std::size_t e) const { return edges_[e]; }

    Segment segment(std::size_t e) const;
    Rational squared_length(std::size_t e) const;
    double length(std::size_t e) const;
    double total_length() const;
    bool share_vertex(std::size_t e, std::size_t f) const;

    /// Conservative float bounding box of edge e.
    BoxF box(std::size_t e) const;

private:
    std::vector<Point> vertices_;
    std::vector<Edge> edges_;
};

/// Symmetric stub lengths, one per edge, stored as fractions of the edge
/// length. A fraction of 0 marks an erased edge and is only accepted when
/// the assignment is built with `allow_erased`.
class StubAssignment {
public:
    StubAssignment() = default;
    StubAssignment(std::vector<Rational> fractions, bool allow_erased = false);

    static StubAssignment uniform(const GeometricGraph& g, const Rational& delta);

    std::size_t size() const { return fractions_.size(); }
    const Rational& fraction(std::size_t e) const { return fractions_[e]; }
    const std::vector<Rational>& fractions() const { return fractions_; }
    bool erased(std::size_t e) const { return fractions_[e] == 0; }
    bool allows_erased() const { return allow_erased_; }

    friend bool operator==(const StubAssignment&, const StubAssignment&) = default;

private:
    std::vector<Rational> fractions_;
    bool allow_erased_ = false;
};

/// The two stubs of edge e under assignment s (origin at u, then at v).
std::pair<Stub, Stub> edge_stubs(const GeometricGraph& g, const StubAssignment& s, std::size_t e);

/// Intersection of two edges whose bounding boxes overlap (e < f).
struct EdgeIntersection {
    std::size_t e;
    std::size_t f;
    SegmentIntersection hit;
};

/// Every edge pair that meets, with the exact intersection. Pairs whose
/// boxes are disjoint are skipped without exact arithmetic.
std::vector<EdgeIntersection> pairwise_intersections(const GeometricGraph& g);

// General position -----------------------------------------------------------

enum class DefectKind { CollinearOverlap, VertexOnEdge, ConcurrentCrossing };

struct PositionDefect {
    DefectKind kind;
    std::vector<std::size_t> edges;    ///< edges involved
    std::optional<std::size_t> vertex; ///< for VertexOnEdge
    std::optional<Point> point;        ///< shared point, when unique
};

std::vector<PositionDefect> check_general_position(const GeometricGraph& g);
std::string describe(const PositionDefect& d);

// Validation -------------------------------------------------------------------

enum class ArithmeticMode { Exact, Float };

struct Violation {
    std::size_t edge_e;
    std::size_t edge_f;
    std::size_t origin_e;  ///< vertex the conflicting stub of e starts at
    std::size_t origin_f;
    Point witness;         ///< lies in both open stubs
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool position_warning = false;  ///< input was not in general position

    bool valid() const { return violations.empty(); }
};

/// Checks every pair of stubs for conflicts. Throws std::invalid_argument
/// when the assignment does not match the graph.
ValidationReport validate_ped(const GeometricGraph& g, const StubAssignment& s,
                              ArithmeticMode mode = ArithmeticMode::Exact);

// Ink -----------------------------------------------------------------------------

struct InkReport {
    double absolute = 0.0;
    double relative = 0.0;
    /// Set when every edge carries the same fraction f; then relative = 2f.
    std::optional<Rational> relative_exact;
};

InkReport ink(const GeometricGraph& g, const StubAssignment& s);

/// Exact absolute ink as a sum of square roots.
RadicalSum exact_ink(const GeometricGraph& g, const StubAssignment& s);

/// Largest uniform fraction delta for which the uniform assignment is a
/// valid PED; 1/2 for crossing-free drawings. Throws on collinear overlaps.
Rational max_uniform_delta(const GeometricGraph& g);

}  // namespace ped
