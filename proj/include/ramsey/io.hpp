#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "ramsey/colouring.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Edge-list format: first line "N M", then M lines "u v" with 0 <= u < v < N.
// Output is canonical: lexicographically sorted, newline-terminated.
Graph read_graph(std::istream& in, const std::string& context = "<stream>");
Graph read_graph_file(const std::string& path);
void write_graph(const Graph& g, std::ostream& out);
void write_graph_file(const Graph& g, const std::string& path);

// Colouring format: one line "u v C" per edge, C in {R, B}. Every edge of
// the graph must appear exactly once.
TwoColouring read_colouring(std::istream& in, const Graph& graph,
                            const std::string& context = "<stream>");
TwoColouring read_colouring_file(const std::string& path, const Graph& graph);
void write_colouring(const TwoColouring& colouring, std::ostream& out);
void write_colouring_file(const TwoColouring& colouring, const std::string& path);

} // namespace ramsey
