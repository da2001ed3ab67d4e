#pragma once

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "ped/graph.hpp"

namespace ped {

/// Malformed graph or stub file. Carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Graph file:
//   ped-graph 1
//   <nv> <ne>
//   nv lines "x y"   (decimal or p/q)
//   ne lines "u v"   (0-based)
// Lines starting with '#' are comments.
GeometricGraph read_graph(std::istream& in);
void write_graph(std::ostream& out, const GeometricGraph& g);

// Stub file:
//   ped-stubs 1
//   ne lines "edge_index fraction"
// A fraction of 0 (erased edge) is accepted only when `allow_erased`.
StubAssignment read_stubs(std::istream& in, std::size_t edge_count, bool allow_erased = false);
void write_stubs(std::ostream& out, const StubAssignment& s);

GeometricGraph load_graph(const std::string& path);
StubAssignment load_stubs(const std::string& path, std::size_t edge_count, bool allow_erased = false);

}  // namespace ped
