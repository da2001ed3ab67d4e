#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "ped/graph.hpp"

namespace ped {

/// Requested size exceeds what the construction supports for the given δ.
class CapacityError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A drawing together with the uniform fraction it is certified for.
struct Layout {
    GeometricGraph graph;
    Rational delta;

    StubAssignment stubs() const { return StubAssignment::uniform(graph, delta); }
};

// Complete bipartite K_{n,n} ----------------------------------------------------------

/// Largest integer strictly below log(1/2)/log(1-δ), i.e. the largest l
/// with (1-δ)^l > 1/2. Exact.
long knn_columns(const Rational& delta);

/// floor(1/δ) * columns. Requires 0 < δ < 1/2.
long knn_capacity(const Rational& delta);

/// Same from a float δ; the strict floor treats values within 1e-9 of an
/// integer as that integer.
long knn_capacity(double delta);

/// Two mirrored perturbed grids around x = 1/2. Left vertices come first.
Layout layout_knn(std::size_t n_left, std::size_t n_right, const Rational& delta);
inline Layout layout_knn(std::size_t n, const Rational& delta) { return layout_knn(n, n, delta); }

// K_{2k,n} ------------------------------------------------------------------------------

/// Largest k with k < log δ / log(1-δ), i.e. (1-δ)^k > δ. Exact.
long kkn_capacity(const Rational& delta);

/// 2k vertices at (0, ±y_i) followed by n vertices at (x_i, 0), with
/// x_i = y_i = (1/(1-δ))^(i-1).
Layout layout_k2kn(std::size_t k, std::size_t n, const Rational& delta);

// Bandwidth and circulant graphs ---------------------------------------------------------

/// Largest rational <= 1/(2 sqrt(2k)) with denominator <= 10^6.
Rational bandwidth_delta(std::size_t k);

/// Largest rational <= 1/(6 sqrt(k)) with denominator <= 10^6.
Rational circulant_delta(std::size_t k);

/// Grid layout of a graph on vertices 0..n-1 whose edges satisfy
/// |i - j| <= k; k must be a perfect square. Throws std::invalid_argument.
Layout layout_bandwidth(std::size_t n, const std::vector<Edge>& edges, std::size_t k);

/// Edges of C_n^k: all pairs at cyclic distance 1..k.
std::vector<Edge> circulant_edges(std::size_t n, std::size_t k);

/// Annulus layout of C_n^k. Requires sqrt(k) and n/sqrt(k) integral,
/// n/sqrt(k) even and at least 3. Throws std::invalid_argument. The
/// coordinates come from floating point; the result is certified by the
/// float validator.
Layout layout_circulant(std::size_t n, std::size_t k);

// K_n ------------------------------------------------------------------------------------

/// 1/sqrt(4n/pi).
double kn_delta_bound(std::size_t n);

/// floor(pi / (4 δ^2)).
long kn_capacity(double delta);

}  // namespace ped
