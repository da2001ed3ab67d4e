#pragma once

#include <string>

#include "ped/graph.hpp"

namespace ped {

struct RenderStyle {
    double scale = 60.0;  ///< pixels per unit
    double padding = 16.0;
    double stub_width = 1.5;
    std::string stub_color = "#1f3a93";
    bool ghost_edges = false;  ///< draw the erased middle parts faintly
    std::string ghost_color = "#c8c8c8";
    double vertex_radius = 2.5;
};

/// SVG 1.1 document. With `stubs`, every drawn edge contributes two
/// `<line class="stub">` elements; without, edges are drawn whole as
/// `<line class="edge">`. Output depends only on the arguments.
std::string render_svg(const GeometricGraph& g, const StubAssignment* stubs, const RenderStyle& style = {});

}  // namespace ped
