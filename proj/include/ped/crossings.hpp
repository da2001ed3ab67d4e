#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "ped/graph.hpp"

namespace ped {

/// Two edges that overlap along a collinear piece; no PED question about
/// them is well posed.
class CollinearOverlapError : public std::invalid_argument {
public:
    CollinearOverlapError(std::size_t e, std::size_t f)
        : std::invalid_argument("collinear overlap between edges " + std::to_string(e) + " and " +
                                std::to_string(f)),
          e_(e), f_(f) {}
    std::size_t first() const { return e_; }
    std::size_t second() const { return f_; }

private:
    std::size_t e_, f_;
};

/// Some edge is crossed three or more times.
class NotTwoPlanarError : public std::runtime_error {
public:
    explicit NotTwoPlanarError(std::size_t edge)
        : std::runtime_error("drawing is not 2-planar: edge " + std::to_string(edge) +
                             " has three or more crossings"),
          edge_(edge) {}
    std::size_t edge() const { return edge_; }

private:
    std::size_t edge_;
};

/// Interior crossing of edges e < f. The distances to the nearer endpoints
/// are stored as fractions of the respective edge lengths, in (0, 1/2].
struct Crossing {
    std::size_t e;
    std::size_t f;
    Point point;
    Rational near_e;
    Rational near_f;

    /// Nearer-endpoint fraction on `edge`, which must be e or f.
    const Rational& near_on(std::size_t edge) const { return edge == e ? near_e : near_f; }
    std::size_t other(std::size_t edge) const { return edge == e ? f : e; }
};

enum class CrossingMethod {
    AllPairs,  ///< every edge pair, float box rejection then exact test
    Sweep,     ///< x-sorted sweep over bounding boxes
};

/// All interior crossings, sorted by (e, f). Edges sharing a vertex never
/// cross. Throws CollinearOverlapError.
std::vector<Crossing> enumerate_crossings(const GeometricGraph& g,
                                          CrossingMethod method = CrossingMethod::AllPairs);

enum class ComponentKind { Path, Cycle };

/// Per-edge data of a conflict component, as fractions of the edge length.
struct ChainEdge {
    std::size_t edge;
    Rational backward;  ///< nearer-endpoint fraction of the crossing with the predecessor
    Rational forward;   ///< same for the successor
};

/// A connected component of the conflict graph (one node per edge, one arc
/// per crossing) laid out as an ordered chain. Consecutive edges cross; in a
/// cycle the last edge also crosses the first.
struct ConflictComponent {
    ComponentKind kind = ComponentKind::Path;
    std::vector<ChainEdge> chain;
};

/// Decomposes the conflict graph into paths and cycles. Every edge of g
/// appears in exactly one component; crossing-free edges become singleton
/// paths. Paths start at their lowest-indexed end, cycles at their lowest
/// edge heading toward its lower-indexed neighbour. Throws NotTwoPlanarError
/// naming the lowest edge with three or more crossings.
std::vector<ConflictComponent> build_conflict_components(const GeometricGraph& g,
                                                         const std::vector<Crossing>& crossings);

}  // namespace ped
