// pedtool: command-line front end for partial edge drawings.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ped/bounds.hpp"
#include "ped/constructions.hpp"
#include "ped/crossings.hpp"
#include "ped/io.hpp"
#include "ped/maxsped.hpp"
#include "ped/minsped.hpp"
#include "ped/random_drawing.hpp"
#include "ped/render.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kInputError = 2;

// Thrown when a produced assignment fails its final validation.
struct RefusedOutput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

std::string graph_text(const ped::GeometricGraph& g) {
    std::ostringstream s;
    ped::write_graph(s, g);
    return s.str();
}

std::string stubs_text(const ped::StubAssignment& a) {
    std::ostringstream s;
    ped::write_stubs(s, a);
    return s.str();
}

void print_violations(const ped::ValidationReport& report) {
    for (const auto& v : report.violations) {
        std::cout << "conflict edge " << v.edge_e << " (at vertex " << v.origin_e << ") edge " << v.edge_f
                  << " (at vertex " << v.origin_f << ") near " << ped::format_rational(v.witness.x) << ' '
                  << ped::format_rational(v.witness.y) << '\n';
    }
}

// Writes stubs only after they pass validation in `mode`.
void emit_checked_stubs(const std::string& path, const ped::GeometricGraph& g, const ped::StubAssignment& s,
                        ped::ArithmeticMode mode) {
    auto report = ped::validate_ped(g, s, mode);
    if (!report.valid()) {
        print_violations(report);
        throw RefusedOutput("refusing to write an invalid stub assignment");
    }
    emit(path, stubs_text(s));
}

ped::CrossingMethod method_of(bool sweep) {
    return sweep ? ped::CrossingMethod::Sweep : ped::CrossingMethod::AllPairs;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Partial edge drawings: validation, MaxSPED/MinSPED, constructions, bound certificate"};
    app.require_subcommand(1);

    // generate ------------------------------------------------------------------------
    auto* gen = app.add_subcommand("generate", "Write a drawing of a graph family");
    std::string family;
    std::size_t gen_n = 8, gen_n_right = 0, gen_k = 4, gen_edges = 10;
    std::string gen_delta = "1/4", gen_out, gen_stubs, band_shape = "full";
    long gen_extent = 16, gen_span = 0;
    std::uint64_t seed = 1;
    bool gen_any = false;
    gen->add_option("family", family, "knn | k2kn | bandwidth | circulant | random")
        ->required()
        ->check(CLI::IsMember({"knn", "k2kn", "bandwidth", "circulant", "random"}));
    gen->add_option("-n,--n", gen_n, "vertices (per side for knn, x-axis side for k2kn)");
    gen->add_option("--n-right", gen_n_right, "right side size for knn (default: n)");
    gen->add_option("-k,--k", gen_k, "k for k2kn, bandwidth and circulant");
    gen->add_option("--delta", gen_delta, "stub fraction for knn and k2kn");
    gen->add_option("--shape", band_shape, "bandwidth graph: full band or path")
        ->check(CLI::IsMember({"full", "path"}));
    gen->add_option("--edges", gen_edges, "edge count for random");
    gen->add_option("--extent", gen_extent, "coordinate range for random");
    gen->add_option("--span", gen_span, "max edge extent per axis for random (0 = unlimited)");
    gen->add_flag("--any", gen_any, "random: do not require 2-planarity");
    gen->add_option("--seed", seed, "random seed");
    gen->add_option("-o,--output", gen_out, "graph file (default stdout)");
    gen->add_option("--stubs", gen_stubs, "also write the certified uniform stubs here");

    // crossings -------------------------------------------------------------------------
    auto* cross = app.add_subcommand("crossings", "List interior crossings");
    std::string graph_path;
    bool sweep = false;
    cross->add_option("graph", graph_path)->required();
    cross->add_flag("--sweep", sweep, "sweep enumeration instead of all pairs");

    // validate --------------------------------------------------------------------------
    auto* val = app.add_subcommand("validate", "Check a stub assignment for conflicts");
    std::string stubs_path;
    bool use_float = false, allow_erased = false;
    val->add_option("graph", graph_path)->required();
    val->add_option("stubs", stubs_path)->required();
    val->add_flag("--float", use_float, "float predicates (tolerance 1e-9)");
    val->add_flag("--allow-erased", allow_erased, "accept fraction 0 for erased edges");

    // maxsped ---------------------------------------------------------------------------
    auto* maxs = app.add_subcommand("maxsped", "Maximum-ink SPED of a 2-planar drawing");
    bool exact = false, zero_one = false;
    std::string out_path;
    maxs->add_option("graph", graph_path)->required();
    maxs->add_flag("--exact", exact, "compare ink sums exactly");
    maxs->add_flag("--zero-one", zero_one, "edges are drawn fully or erased");
    maxs->add_flag("--sweep", sweep, "sweep crossing enumeration");
    maxs->add_option("-o,--output", out_path, "stub file");

    // minsped ---------------------------------------------------------------------------
    auto* mins = app.add_subcommand("minsped", "2-approximate minimum erased ink");
    bool relative = false, oracle = false;
    mins->add_option("graph", graph_path)->required();
    mins->add_flag("--relative", relative, "weights relative to edge length");
    mins->add_flag("--exact-oracle", oracle, "also solve exactly and check the factor 2");
    mins->add_option("-o,--output", out_path, "stub file");

    // maxdelta --------------------------------------------------------------------------
    auto* maxd = app.add_subcommand("maxdelta", "Largest valid uniform stub fraction");
    maxd->add_option("graph", graph_path)->required();

    // bounds ----------------------------------------------------------------------------
    auto* bnd = app.add_subcommand("bounds", "Recompute the upper-bound certificate");
    std::string t_text = "1/2";
    bool json = false;
    bnd->add_option("--t", t_text, "top point abscissa in (0, 1/2]");
    bnd->add_flag("--json", json, "structured output");

    // render ----------------------------------------------------------------------------
    auto* ren = app.add_subcommand("render", "SVG of a drawing");
    bool ghost = false;
    double scale = 60.0;
    ren->add_option("graph", graph_path)->required();
    ren->add_option("--stubs", stubs_path, "stub file; edges are drawn whole without it");
    ren->add_flag("--ghost", ghost, "show erased parts faintly");
    ren->add_option("--scale", scale, "pixels per unit");
    ren->add_flag("--allow-erased", allow_erased, "accept fraction 0 for erased edges");
    ren->add_option("-o,--output", out_path, "SVG file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*gen) {
            ped::GeometricGraph g;
            std::optional<ped::StubAssignment> stubs;
            ped::ArithmeticMode mode = ped::ArithmeticMode::Exact;
            if (family == "knn") {
                auto layout = ped::layout_knn(gen_n, gen_n_right ? gen_n_right : gen_n, ped::parse_rational(gen_delta));
                g = layout.graph;
                stubs = layout.stubs();
            } else if (family == "k2kn") {
                auto layout = ped::layout_k2kn(gen_k, gen_n, ped::parse_rational(gen_delta));
                g = layout.graph;
                stubs = layout.stubs();
            } else if (family == "bandwidth") {
                std::vector<ped::Edge> edges;
                for (std::size_t u = 0; u < gen_n; ++u) {
                    std::size_t reach = band_shape == "path" ? 1 : gen_k;
                    for (std::size_t v = u + 1; v < gen_n && v <= u + reach; ++v) edges.push_back({u, v});
                }
                auto layout = ped::layout_bandwidth(gen_n, edges, gen_k);
                g = layout.graph;
                stubs = layout.stubs();
            } else if (family == "circulant") {
                auto layout = ped::layout_circulant(gen_n, gen_k);
                g = layout.graph;
                stubs = layout.stubs();
                mode = ped::ArithmeticMode::Float;
            } else {
                ped::DrawingSpec spec;
                spec.edges = gen_edges;
                spec.extent = gen_extent;
                spec.max_span = gen_span;
                spec.two_planar = !gen_any;
                g = ped::random_drawing(spec, seed);
            }
            emit(gen_out, graph_text(g));
            if (!gen_stubs.empty()) {
                if (!stubs) throw std::invalid_argument("random drawings come without stubs");
                emit_checked_stubs(gen_stubs, g, *stubs, mode);
            }
            return kOk;
        }

        if (*bnd) {
            auto cert = ped::certificate(ped::parse_rational(t_text));
            std::cout << (json ? ped::certificate_json(cert) : ped::certificate_table(cert));
            return kOk;
        }

        const ped::GeometricGraph g = ped::load_graph(graph_path);

        if (*cross) {
            auto list = ped::enumerate_crossings(g, method_of(sweep));
            std::cout << "crossings " << list.size() << '\n';
            for (const auto& c : list) {
                std::cout << c.e << ' ' << c.f << ' ' << ped::format_rational(c.point.x) << ' '
                          << ped::format_rational(c.point.y) << ' ' << ped::format_rational(c.near_e) << ' '
                          << ped::format_rational(c.near_f) << '\n';
            }
            return kOk;
        }

        if (*val) {
            auto s = ped::load_stubs(stubs_path, g.edge_count(), allow_erased);
            auto report =
                ped::validate_ped(g, s, use_float ? ped::ArithmeticMode::Float : ped::ArithmeticMode::Exact);
            if (report.position_warning) std::cerr << "warning: drawing is not in general position\n";
            if (report.valid()) {
                std::cout << "valid\n";
                return kOk;
            }
            print_violations(report);
            std::cout << "invalid " << report.violations.size() << '\n';
            return kInvalid;
        }

        if (*maxs) {
            auto mode = exact ? ped::ArithmeticMode::Exact : ped::ArithmeticMode::Float;
            auto sol = zero_one ? ped::solve_01_maxsped(g, mode, method_of(sweep))
                                : ped::solve_maxsped(g, mode, method_of(sweep));
            std::cout << "ink " << ped::format_float(sol.ink.absolute) << '\n';
            std::cout << "relative " << ped::format_float(sol.ink.relative) << '\n';
            std::cout << "total_length " << ped::format_float(g.total_length()) << '\n';
            if (sol.k_opt_exact) std::cout << "ink_exact " << sol.k_opt_exact->to_string() << '\n';
            if (!out_path.empty()) emit_checked_stubs(out_path, g, sol.assignment, ped::ArithmeticMode::Exact);
            return kOk;
        }

        if (*mins) {
            auto inst = ped::build_instance(g, relative ? ped::WeightMode::Relative : ped::WeightMode::Absolute);
            auto a = ped::approx_minw2sat(inst);
            std::string weight = a.exact_weight ? ped::format_rational(*a.exact_weight) : ped::format_float(a.weight);
            std::string check = "n/a";
            if (oracle) {
                auto best = ped::exact_minw2sat(inst);
                bool ok = a.exact_weight ? *a.exact_weight <= 2 * *best.exact_weight
                                         : a.weight <= 2 * best.weight + ped::kFloatTolerance * std::max(1.0, best.weight);
                check = ok ? "ok" : "failed";
            }
            std::cout << "variables " << inst.variables.size() << '\n';
            std::cout << "erased_weight " << weight << " bound_check " << check << '\n';
            auto stubs = ped::assignment_to_stubs(g, inst, a);
            if (!out_path.empty()) emit_checked_stubs(out_path, g, stubs, ped::ArithmeticMode::Exact);
            return check == "failed" ? kInvalid : kOk;
        }

        if (*maxd) {
            std::cout << ped::format_rational(ped::max_uniform_delta(g)) << '\n';
            return kOk;
        }

        if (*ren) {
            ped::RenderStyle style;
            style.scale = scale;
            style.ghost_edges = ghost;
            std::optional<ped::StubAssignment> s;
            if (!stubs_path.empty()) s = ped::load_stubs(stubs_path, g.edge_count(), allow_erased);
            emit(out_path, ped::render_svg(g, s ? &*s : nullptr, style));
            return kOk;
        }
    } catch (const RefusedOutput& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}
