#include "antimagic/graph_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace antimagic {

namespace {

[[noreturn]] void parse_error(std::size_t line_no, const std::string& what) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + what);
}

// Yields the next non-blank, non-comment line; false at end of input.
bool next_line(std::istream& is, std::string& line, std::size_t& line_no) {
    while (std::getline(is, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        return true;
    }
    return false;
}

// Reads exactly the listed fields from the line and rejects trailing junk.
template <typename... Ts>
bool scan(const std::string& line, Ts&... fields) {
    std::istringstream ls(line);
    (ls >> ... >> fields);
    if (!ls) return false;
    std::string rest;
    return !(ls >> rest);
}

}  // namespace

void write_edge_list(std::ostream& os, const Graph& g) {
    os << "p " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& e : g.edges()) os << "e " << e.u << ' ' << e.v << '\n';
}

Graph read_edge_list(std::istream& is) {
    std::string line;
    std::size_t line_no = 0;
    if (!next_line(is, line, line_no)) parse_error(line_no, "missing `p <n> <m>` header");

    std::string tag;
    long long n = -1;
    long long m = -1;
    if (!scan(line, tag, n, m) || tag != "p" || n < 0 || m < 0) parse_error(line_no, "expected `p <n> <m>`");

    std::vector<std::pair<VertexId, VertexId>> pairs;
    pairs.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!next_line(is, line, line_no)) parse_error(line_no, "expected " + std::to_string(m) + " edges");
        long long u = -1;
        long long v = -1;
        if (!scan(line, tag, u, v) || tag != "e" || u < 0 || v < 0) parse_error(line_no, "expected `e <u> <v>`");
        pairs.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
    }
    if (next_line(is, line, line_no)) parse_error(line_no, "unexpected content after the last edge");
    return make_graph(static_cast<std::size_t>(n), pairs);
}

void write_labeling(std::ostream& os, const Graph& g, const Labeling& lab) {
    if (lab.size() != g.edge_count()) throw Error(ErrorCode::SizeMismatch, "labeling not sized for graph");
    for (EdgeId e = 0; e < g.edge_count(); ++e) os << g.edge(e).u << ' ' << g.edge(e).v << ' ' << lab[e] << '\n';
}

Labeling read_labeling(std::istream& is, const Graph& g) {
    Labeling lab;
    lab.label_of.reserve(g.edge_count());
    std::string line;
    std::size_t line_no = 0;
    while (next_line(is, line, line_no)) {
        long long u = -1;
        long long v = -1;
        long long x = 0;
        if (!scan(line, u, v, x)) parse_error(line_no, "expected `<u> <v> <label>`");
        const EdgeId e = lab.size();
        if (e >= g.edge_count()) parse_error(line_no, "more labels than edges");
        const auto& edge = g.edge(e);
        const auto uu = static_cast<VertexId>(u);
        const auto vv = static_cast<VertexId>(v);
        if (u < 0 || v < 0 || !((edge.u == uu && edge.v == vv) || (edge.u == vv && edge.v == uu))) {
            parse_error(line_no, "endpoints do not match edge " + std::to_string(e));
        }
        lab.label_of.push_back(x);
    }
    if (lab.size() != g.edge_count()) {
        throw Error(ErrorCode::ParseError, "labeling has " + std::to_string(lab.size()) + " lines, graph has " +
                                               std::to_string(g.edge_count()) + " edges");
    }
    return lab;
}

void write_provenance(std::ostream& os, const ProductLayout& layout) {
    os << "s " << layout.n1 << ' ' << layout.n2 << '\n';
    for (const auto& o : layout.provenance) {
        os << (o.kind == CopyKind::G1 ? "g1 " : "g2 ") << o.copy << ' ' << o.source << '\n';
    }
}

ProductLayout read_provenance(std::istream& is) {
    std::string line;
    std::size_t line_no = 0;
    if (!next_line(is, line, line_no)) parse_error(line_no, "missing `s <n1> <n2>` header");
    std::string tag;
    long long n1 = -1;
    long long n2 = -1;
    if (!scan(line, tag, n1, n2) || tag != "s" || n1 < 0 || n2 < 0) parse_error(line_no, "expected `s <n1> <n2>`");

    ProductLayout layout{static_cast<std::size_t>(n1), static_cast<std::size_t>(n2), {}};
    while (next_line(is, line, line_no)) {
        long long copy = -1;
        long long source = -1;
        if (!scan(line, tag, copy, source) || (tag != "g1" && tag != "g2") || copy < 0 || source < 0) {
            parse_error(line_no, "expected `g1|g2 <copy> <source>`");
        }
        const bool g1 = tag == "g1";
        if (static_cast<std::size_t>(copy) >= (g1 ? layout.n2 : layout.n1)) parse_error(line_no, "copy index out of range");
        layout.provenance.push_back(
            {g1 ? CopyKind::G1 : CopyKind::G2, static_cast<std::size_t>(copy), static_cast<EdgeId>(source)});
    }
    return layout;
}

void write_dot(std::ostream& os, const Graph& g, const std::optional<Labeling>& lab) {
    std::vector<Label> sums;
    if (lab) sums = vertex_sums(g, *lab);
    os << "graph G {\n";
    os << "  node [shape=circle];\n";
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        os << "  " << v;
        if (lab) os << " [label=\"" << v << "\", xlabel=\"w=" << sums[v] << "\"]";
        os << ";\n";
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        os << "  " << g.edge(e).u << " -- " << g.edge(e).v;
        if (lab) os << " [label=\"" << (*lab)[e] << "\"]";
        os << ";\n";
    }
    os << "}\n";
}

}  // namespace antimagic
