#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "ped/crossings.hpp"
#include "ped/graph.hpp"
#include "ped/maxsped.hpp"

namespace ped {

enum class WeightMode { Absolute, Relative };

/// Pair e_i of edge e: the two symmetric pieces between stub fractions
/// `inner` and `outer`. Only pairs with i >= 1 become variables; pair i is
/// induced by the i-th crossing of e ordered by nearer-endpoint distance.
struct SegmentPair {
    std::size_t edge;
    std::size_t index;       ///< i >= 1
    std::size_t induced_by;  ///< the crossing edge f^i
    Rational inner;          ///< r_i
    Rational outer;          ///< r_{i+1}, 1/2 for the last pair
    double weight = 0.0;
    std::optional<Rational> exact_weight;  ///< relative mode only
};

/// Weighted 2-SAT instance. A true variable means its pair is erased.
struct TwoSatInstance {
    WeightMode mode = WeightMode::Absolute;
    std::size_t edge_count = 0;
    std::vector<SegmentPair> variables;
    std::vector<std::vector<std::size_t>> edge_variables;  ///< per edge, in pair order
    /// (a, b) encodes (b or not a): erasing a forces erasing b.
    std::vector<std::pair<std::size_t, std::size_t>> prefix_clauses;
    /// (x, y) encodes (x or y); one per crossing, in enumeration order.
    std::vector<std::pair<std::size_t, std::size_t>> crossing_clauses;
};

struct Assignment {
    std::vector<bool> values;
    double weight = 0.0;
    std::optional<Rational> exact_weight;  ///< relative mode only
};

TwoSatInstance build_instance(const GeometricGraph& g, WeightMode mode = WeightMode::Absolute,
                              CrossingMethod method = CrossingMethod::AllPairs);

bool satisfies(const TwoSatInstance& inst, const std::vector<bool>& values);

/// Fills in the weight fields of an assignment from its values.
Assignment make_assignment(const TwoSatInstance& inst, std::vector<bool> values);

/// Local-ratio 2-approximation followed by reverse deletion.
Assignment approx_minw2sat(const TwoSatInstance& inst);

inline constexpr std::size_t kExactVariableLimit = 24;

/// Optimum by enumerating one cut level per edge. Throws InstanceTooLarge.
Assignment exact_minw2sat(const TwoSatInstance& inst, std::size_t variable_limit = kExactVariableLimit);

/// Per edge the stub ends where the first erased pair begins; edges
/// without erased pairs are drawn in full.
StubAssignment assignment_to_stubs(const GeometricGraph& g, const TwoSatInstance& inst, const Assignment& a);

}  // namespace ped
