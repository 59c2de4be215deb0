#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ramsey/bitset.hpp"
#include "ramsey/rng.hpp"

namespace ramsey {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>; // normalised u < v

inline Edge make_edge(Vertex u, Vertex v) {
    return u < v ? Edge{u, v} : Edge{v, u};
}

// Simple undirected graph on labelled vertices 0..N-1. Immutable once built
// (construction goes through add_edge); adjacency rows are bitsets so that
// neighbourhood intersection counts cost N/64 word operations.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n) : n_(n), adj_(n, Bitset(n)) {}

    std::size_t num_vertices() const { return n_; }
    std::size_t num_edges() const { return m_; }

    void add_edge(Vertex u, Vertex v) {
        if (u >= n_ || v >= n_) throw std::invalid_argument("add_edge: vertex out of range");
        if (u == v) throw std::invalid_argument("add_edge: self-loop");
        if (adj_[u].test(v)) throw std::invalid_argument("add_edge: parallel edge");
        adj_[u].set(v);
        adj_[v].set(u);
        ++m_;
    }

    bool has_edge(Vertex u, Vertex v) const {
        return u < n_ && v < n_ && u != v && adj_[u].test(v);
    }

    const Bitset& neighbours(Vertex v) const { return adj_[v]; }
    std::size_t degree(Vertex v) const { return adj_[v].count(); }

    // |N(v) ∩ S|
    std::size_t neighbour_count_in(Vertex v, const Bitset& s) const {
        return adj_[v].and_count(s);
    }

    // Edges in canonical order: u < v, lexicographic.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(m_);
        for (Vertex u = 0; u < n_; ++u)
            adj_[u].for_each_set([&](std::size_t v) {
                if (v > u) out.emplace_back(u, v);
            });
        return out;
    }

    Bitset full_vertex_set() const {
        Bitset s(n_);
        for (Vertex v = 0; v < n_; ++v) s.set(v);
        return s;
    }

    // Induced subgraph on `vertices` (ascending order defines the local
    // labels); second result maps local label -> original vertex.
    std::pair<Graph, std::vector<Vertex>> induced_subgraph(const Bitset& vertices) const;

    // Connected components as vertex sets.
    std::vector<Bitset> components() const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && m_ == other.m_ && adj_ == other.adj_;
    }

private:
    std::size_t n_ = 0;
    std::size_t m_ = 0;
    std::vector<Bitset> adj_;
};

// G(n, p): each of the C(n,2) unordered pairs is an edge independently with
// probability p. Deterministic given the seed; pair draws are counter-style
// from (seed, pair index), so p1 <= p2 gives edgewise-nested graphs.
Graph sample_gnp(std::size_t n_vertices, double p, Seed seed);

// Same graph, from caller-held uniforms (the coupling-aware entry point).
Graph sample_gnp(std::size_t n_vertices, double p, const PairUniforms& uniforms);

} // namespace ramsey
