#include "ramsey/witness.hpp"

#include <sstream>

namespace ramsey {

bool verify_path(const Graph& g, const std::vector<Vertex>& path) {
    if (path.empty()) return false;
    Bitset seen(g.num_vertices());
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (path[i] >= g.num_vertices()) return false;
        if (seen.test(path[i])) return false;
        seen.set(path[i]);
        if (i > 0 && !g.has_edge(path[i - 1], path[i])) return false;
    }
    return true;
}

bool verify_path_of_length(const Graph& g, const std::vector<Vertex>& path, std::size_t edges) {
    return path.size() == edges + 1 && verify_path(g, path);
}

bool verify_clique(const Graph& g, const std::vector<Vertex>& vertices) {
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i] >= g.num_vertices()) return false;
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (!g.has_edge(vertices[i], vertices[j])) return false;
    }
    return true;
}

bool verify_separated(const Graph& g, const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    Bitset in_a(g.num_vertices());
    for (auto v : a) {
        if (v >= g.num_vertices()) return false;
        in_a.set(v);
    }
    for (auto v : b) {
        if (v >= g.num_vertices()) return false;
        if (in_a.test(v)) return false;              // not disjoint
        if (g.neighbours(v).intersects(in_a)) return false; // crossing edge
    }
    return true;
}

namespace {

void append_vertices(std::ostringstream& out, const std::vector<Vertex>& vs) {
    for (auto v : vs) out << ' ' << v;
}

} // namespace

std::string witness_to_text(const Witness& w) {
    std::ostringstream out;
    if (const auto* p = std::get_if<PathWitness>(&w)) {
        out << "PATH";
        append_vertices(out, p->vertices);
    } else if (const auto* c = std::get_if<CliqueWitness>(&w)) {
        out << "CLIQUE";
        append_vertices(out, c->vertices);
    } else if (const auto* s = std::get_if<SeparatedSetsWitness>(&w)) {
        out << "SETS A:";
        append_vertices(out, s->a);
        out << " B:";
        append_vertices(out, s->b);
    } else if (const auto* q = std::get_if<PartitionWitness>(&w)) {
        out << "SETS";
        for (std::size_t i = 0; i < q->parts.size(); ++i) {
            out << " A" << i << ':';
            append_vertices(out, q->parts[i]);
        }
    }
    return out.str();
}

} // namespace ramsey
