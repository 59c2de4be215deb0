#include "ramsey/io.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace ramsey {

namespace {

[[noreturn]] void fail(const std::string& context, std::size_t line, const std::string& what) {
    throw ParseError(context + ": " + what + ", line " + std::to_string(line));
}

// Parses a whole line of whitespace-separated tokens; no trailing junk.
std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> toks;
    std::string t;
    while (ss >> t) toks.push_back(t);
    return toks;
}

std::size_t parse_count(const std::string& tok, const std::string& context, std::size_t line) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(tok, &pos);
    } catch (const std::exception&) {
        fail(context, line, "expected a non-negative integer, got '" + tok + "'");
    }
    if (pos != tok.size() || tok[0] == '-')
        fail(context, line, "expected a non-negative integer, got '" + tok + "'");
    return static_cast<std::size_t>(v);
}

} // namespace

Graph read_graph(std::istream& in, const std::string& context) {
    std::string line;
    std::size_t lineno = 0;

    if (!std::getline(in, line)) fail(context, 1, "missing header");
    ++lineno;
    auto head = tokens_of(line);
    if (head.size() != 2) fail(context, lineno, "header must be 'N M'");
    std::size_t n = parse_count(head[0], context, lineno);
    std::size_t m = parse_count(head[1], context, lineno);

    Graph g(n);
    std::size_t seen = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokens_of(line);
        if (toks.empty()) continue;
        if (toks.size() != 2) fail(context, lineno, "edge line must be 'u v'");
        std::size_t u = parse_count(toks[0], context, lineno);
        std::size_t v = parse_count(toks[1], context, lineno);
        if (u >= n || v >= n) fail(context, lineno, "vertex index out of range");
        if (u == v) fail(context, lineno, "self-loop");
        if (g.has_edge(u, v)) fail(context, lineno, "duplicate edge");
        g.add_edge(u, v);
        ++seen;
    }
    if (seen != m)
        throw ParseError(context + ": header announces " + std::to_string(m) +
                         " edges but file has " + std::to_string(seen));
    return g;
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open");
    return read_graph(in, path);
}

void write_graph(const Graph& g, std::ostream& out) {
    out << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_graph_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError(path + ": cannot open for writing");
    write_graph(g, out);
    if (!out) throw ParseError(path + ": write failed");
}

TwoColouring read_colouring(std::istream& in, const Graph& graph, const std::string& context) {
    TwoColouring col(graph);
    Bitset coloured(graph.num_vertices() < 2
                        ? 1
                        : pair_index(0, graph.num_vertices() - 1) + graph.num_vertices());

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokens_of(line);
        if (toks.empty()) continue;
        if (toks.size() != 3) fail(context, lineno, "colour line must be 'u v C'");
        std::size_t u = parse_count(toks[0], context, lineno);
        std::size_t v = parse_count(toks[1], context, lineno);
        if (u >= graph.num_vertices() || v >= graph.num_vertices())
            fail(context, lineno, "vertex index out of range");
        if (!graph.has_edge(u, v))
            fail(context, lineno, "edge " + std::to_string(u) + " " + std::to_string(v) +
                                      " absent from graph");
        if (u > v) std::swap(u, v);
        if (coloured.test(pair_index(u, v)))
            fail(context, lineno, "edge " + std::to_string(u) + " " + std::to_string(v) +
                                      " coloured twice");
        coloured.set(pair_index(u, v));
        if (toks[2] == "R") col.set_colour(u, v, Colour::Red);
        else if (toks[2] == "B") col.set_colour(u, v, Colour::Blue);
        else fail(context, lineno, "colour must be R or B, got '" + toks[2] + "'");
    }

    for (auto [u, v] : graph.edges())
        if (!coloured.test(pair_index(u, v)))
            throw ParseError(context + ": edge " + std::to_string(u) + " " +
                             std::to_string(v) + " uncoloured");
    return col;
}

TwoColouring read_colouring_file(const std::string& path, const Graph& graph) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open");
    return read_colouring(in, graph, path);
}

void write_colouring(const TwoColouring& colouring, std::ostream& out) {
    for (auto [u, v] : colouring.base().edges())
        out << u << ' ' << v << ' ' << colour_letter(colouring.colour(u, v)) << '\n';
}

void write_colouring_file(const TwoColouring& colouring, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError(path + ": cannot open for writing");
    write_colouring(colouring, out);
    if (!out) throw ParseError(path + ": write failed");
}

} // namespace ramsey
