#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "ped/graph.hpp"

namespace ped {

/// Uniform integer in [0, bound) by rejection; identical on every platform
/// for a given engine state (std distributions are not).
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

struct DrawingSpec {
    std::size_t edges = 8;
    long extent = 16;      ///< coordinates in [0, extent]
    long max_span = 0;     ///< max |dx| and |dy| per edge; 0 = unlimited
    bool two_planar = true;
    std::size_t max_attempts = 200000;
};

/// Seeded random drawing in general position with integer coordinates:
/// no collinear overlaps, no vertex in the interior of an edge, no three
/// edges through one crossing. With `two_planar`, no edge is crossed more
/// than twice. Throws std::runtime_error when the attempt budget runs out.
GeometricGraph random_drawing(const DrawingSpec& spec, std::uint64_t seed);

}  // namespace ped
