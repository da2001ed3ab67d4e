#include "ped/render.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace ped {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    std::string s = buf;
    if (s == "-0.000") s = "0.000";
    return s;
}

}  // namespace

std::string render_svg(const GeometricGraph& g, const StubAssignment* stubs, const RenderStyle& style) {
    if (!(style.scale > 0)) throw std::invalid_argument("render scale must be positive");
    if (stubs && stubs->size() != g.edge_count()) throw std::invalid_argument("stub assignment does not match graph");

    double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        PointF p = to_float(g.vertex(i));
        if (i == 0) {
            xmin = xmax = p.x;
            ymin = ymax = p.y;
        }
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    const double width = (xmax - xmin) * style.scale + 2 * style.padding;
    const double height = (ymax - ymin) * style.scale + 2 * style.padding;
    // y grows upward in the drawing, downward in SVG.
    auto sx = [&](double x) { return num((x - xmin) * style.scale + style.padding); };
    auto sy = [&](double y) { return num((ymax - y) * style.scale + style.padding); };
    auto line = [&](std::ostringstream& out, const char* cls, PointF a, PointF b) {
        out << "    <line class=\"" << cls << "\" x1=\"" << sx(a.x) << "\" y1=\"" << sy(a.y) << "\" x2=\"" << sx(b.x)
            << "\" y2=\"" << sy(b.y) << "\"/>\n";
    };

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(width) << "\" height=\""
        << num(height) << "\" viewBox=\"0 0 " << num(width) << ' ' << num(height) << "\">\n";
    out << "  <style>\n";
    out << "    .stub, .edge { stroke: " << style.stub_color << "; stroke-width: " << num(style.stub_width)
        << "; stroke-linecap: butt; }\n";
    out << "    .ghost { stroke: " << style.ghost_color << "; stroke-width: " << num(style.stub_width / 2) << "; }\n";
    out << "    .vertex { fill: #000000; }\n";
    out << "  </style>\n";
    out << "  <g id=\"canvas\">\n";

    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        PointF u = to_float(g.vertex(g.edge(e).u));
        PointF v = to_float(g.vertex(g.edge(e).v));
        if (!stubs) {
            line(out, "edge", u, v);
            continue;
        }
        if (style.ghost_edges) line(out, "ghost", u, v);
        if (stubs->erased(e)) continue;
        auto [from_u, from_v] = edge_stubs(g, *stubs, e);
        line(out, "stub", to_float(from_u.origin()), to_float(from_u.tip()));
        line(out, "stub", to_float(from_v.origin()), to_float(from_v.tip()));
    }
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        PointF p = to_float(g.vertex(i));
        out << "    <circle class=\"vertex\" cx=\"" << sx(p.x) << "\" cy=\"" << sy(p.y) << "\" r=\""
            << num(style.vertex_radius) << "\"/>\n";
    }
    out << "  </g>\n</svg>\n";
    return out.str();
}

}  // namespace ped
