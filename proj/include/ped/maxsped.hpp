#pragma once

#include <array>
#include <optional>
#include <vector>

#include "ped/crossings.hpp"
#include "ped/graph.hpp"
#include "ped/radical.hpp"

namespace ped {

/// What is drawn of one edge.
///  Full     - the whole edge (stubs of half the length)
///  Backward - stubs ending at the crossing with the predecessor
///  Forward  - stubs ending at the crossing with the successor
///  Erased   - nothing (0/1 variant only)
enum class EdgeChoice { Full, Forward, Backward, Erased };

const char* to_string(EdgeChoice c);

/// Stub fraction that `choice` gives an edge of the chain.
Rational choice_fraction(const ChainEdge& edge, EdgeChoice choice);

/// One row of the DP table: best ink of e_j..e_n under each choice for e_j,
/// empty when the choice is not admissible.
struct DpRow {
    std::optional<double> full;
    std::optional<double> backward;
    std::optional<double> forward;
};

struct ComponentSolution {
    double ink = 0.0;
    std::optional<RadicalSum> exact_ink;  ///< set in exact mode
    std::vector<EdgeChoice> choices;      ///< parallel to the chain
    std::vector<DpRow> table;             ///< winning run, parallel to the chain
};

/// Optimal choices for one conflict component. `squared_lengths` is indexed
/// by graph edge. Float mode compares ink with tolerance 1e-9 (relative);
/// exact mode compares sums of square roots exactly. Ties prefer
/// Full, then Forward, then Backward.
ComponentSolution solve_component(const ConflictComponent& component, const std::vector<Rational>& squared_lengths,
                                  ArithmeticMode mode = ArithmeticMode::Float);

/// Same, restricted to Full/Erased per edge.
ComponentSolution solve_component_01(const ConflictComponent& component,
                                     const std::vector<Rational>& squared_lengths,
                                     ArithmeticMode mode = ArithmeticMode::Float);

struct SpedSolution {
    std::vector<EdgeChoice> choices;  ///< per graph edge
    StubAssignment assignment;
    double k_opt = 0.0;               ///< total ink (absolute)
    std::optional<RadicalSum> k_opt_exact;
    InkReport ink;
};

/// Maximum-ink SPED of a 2-planar drawing. Throws NotTwoPlanarError and
/// CollinearOverlapError.
SpedSolution solve_maxsped(const GeometricGraph& g, ArithmeticMode mode = ArithmeticMode::Float,
                           CrossingMethod method = CrossingMethod::AllPairs);

/// Maximum total length of fully drawn edges such that no two drawn edges
/// have conflicting stubs; every other edge is erased.
SpedSolution solve_01_maxsped(const GeometricGraph& g, ArithmeticMode mode = ArithmeticMode::Float,
                              CrossingMethod method = CrossingMethod::AllPairs);

// Oracles ---------------------------------------------------------------------

class InstanceTooLarge : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct OracleResult {
    double ink = 0.0;
    std::optional<RadicalSum> exact_ink;
    StubAssignment assignment;
};

inline constexpr std::size_t kOracleEdgeLimit = 14;

/// Exhaustive MaxSPED: per edge tries 1/2 and the nearer-endpoint fraction
/// of each of its crossings, keeps the best combination accepted by the
/// pairwise stub-conflict test.
OracleResult oracle_maxsped(const GeometricGraph& g, ArithmeticMode mode = ArithmeticMode::Float,
                            std::size_t edge_limit = kOracleEdgeLimit);

/// Exhaustive 0/1-MaxSPED over all 2^m subsets of drawn edges.
OracleResult oracle_01_maxsped(const GeometricGraph& g, ArithmeticMode mode = ArithmeticMode::Float,
                               std::size_t edge_limit = 20);

}  // namespace ped
