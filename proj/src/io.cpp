#include "ped/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace ped {

namespace {

class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    // Next non-blank, non-comment line split on whitespace; '#' ends a line.
    std::vector<std::string> next(const char* expecting) {
        std::string line;
        while (std::getline(in_, line)) {
            ++line_no_;
            std::size_t first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos || line[first] == '#') continue;
            std::istringstream ss(line.substr(0, line.find('#')));
            std::vector<std::string> fields;
            for (std::string tok; ss >> tok;) fields.push_back(tok);
            return fields;
        }
        throw ParseError(line_no_ + 1, std::string("unexpected end of file, expecting ") + expecting);
    }

    bool at_end() {
        std::string line;
        while (std::getline(in_, line)) {
            ++line_no_;
            std::size_t first = line.find_first_not_of(" \t\r");
            if (first != std::string::npos && line[first] != '#') return false;
        }
        return true;
    }

    std::size_t line() const { return line_no_; }

private:
    std::istream& in_;
    std::size_t line_no_ = 0;
};

std::size_t parse_index(const std::string& text, std::size_t line) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
        throw ParseError(line, "expected a nonnegative integer, got '" + text + "'");
    }
    try {
        return static_cast<std::size_t>(std::stoull(text));
    } catch (const std::exception&) {
        throw ParseError(line, "integer out of range: " + text);
    }
}

Rational parse_number(const std::string& text, std::size_t line) {
    try {
        return parse_rational(text);
    } catch (const std::invalid_argument& e) {
        throw ParseError(line, e.what());
    }
}

void expect_header(LineReader& reader, const std::string& magic) {
    auto fields = reader.next("header");
    if (fields.size() != 2 || fields[0] != magic || fields[1] != "1") {
        throw ParseError(reader.line(), "expected header '" + magic + " 1'");
    }
}

}  // namespace

GeometricGraph read_graph(std::istream& in) {
    LineReader reader(in);
    expect_header(reader, "ped-graph");
    auto counts = reader.next("vertex and edge counts");
    if (counts.size() != 2) throw ParseError(reader.line(), "expected '<nv> <ne>'");
    std::size_t nv = parse_index(counts[0], reader.line());
    std::size_t ne = parse_index(counts[1], reader.line());

    std::vector<Point> vertices;
    vertices.reserve(nv);
    for (std::size_t i = 0; i < nv; ++i) {
        auto f = reader.next("vertex coordinates");
        if (f.size() != 2) throw ParseError(reader.line(), "expected 'x y'");
        vertices.push_back({parse_number(f[0], reader.line()), parse_number(f[1], reader.line())});
    }
    std::vector<Edge> edges;
    edges.reserve(ne);
    for (std::size_t i = 0; i < ne; ++i) {
        auto f = reader.next("edge");
        if (f.size() != 2) throw ParseError(reader.line(), "expected 'u v'");
        edges.push_back({parse_index(f[0], reader.line()), parse_index(f[1], reader.line())});
    }
    if (!reader.at_end()) throw ParseError(reader.line(), "trailing content after edge list");
    try {
        return GeometricGraph(std::move(vertices), std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw ParseError(reader.line(), e.what());
    }
}

void write_graph(std::ostream& out, const GeometricGraph& g) {
    out << "ped-graph 1\n" << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Point& p : g.vertices()) out << format_rational(p.x) << ' ' << format_rational(p.y) << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

StubAssignment read_stubs(std::istream& in, std::size_t edge_count, bool allow_erased) {
    LineReader reader(in);
    expect_header(reader, "ped-stubs");
    std::vector<Rational> fractions(edge_count);
    std::vector<bool> seen(edge_count, false);
    for (std::size_t i = 0; i < edge_count; ++i) {
        auto f = reader.next("stub line");
        if (f.size() != 2) throw ParseError(reader.line(), "expected 'edge_index fraction'");
        std::size_t e = parse_index(f[0], reader.line());
        if (e >= edge_count) throw ParseError(reader.line(), "edge index out of range");
        if (seen[e]) throw ParseError(reader.line(), "edge " + std::to_string(e) + " listed twice");
        seen[e] = true;
        fractions[e] = parse_number(f[1], reader.line());
    }
    if (!reader.at_end()) throw ParseError(reader.line(), "trailing content after stub list");
    try {
        return StubAssignment(std::move(fractions), allow_erased);
    } catch (const std::invalid_argument& e) {
        throw ParseError(reader.line(), e.what());
    }
}

void write_stubs(std::ostream& out, const StubAssignment& s) {
    out << "ped-stubs 1\n";
    for (std::size_t e = 0; e < s.size(); ++e) out << e << ' ' << format_rational(s.fraction(e)) << '\n';
}

GeometricGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_graph(in);
}

StubAssignment load_stubs(const std::string& path, std::size_t edge_count, bool allow_erased) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_stubs(in, edge_count, allow_erased);
}

}  // namespace ped
