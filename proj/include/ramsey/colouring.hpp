#pragma once

#include <cstdint>
#include <stdexcept>

#include "ramsey/graph.hpp"

namespace ramsey {

enum class Colour : std::uint8_t { Red, Blue };

inline char colour_letter(Colour c) { return c == Colour::Red ? 'R' : 'B'; }

// Total red/blue map over the edges of a base graph. Stores one bit per
// unordered pair; only positions that are edges of the base are meaningful.
// Owns a copy of the base, so colourings can be passed around freely; the
// graphs in play are desk-scale.
class TwoColouring {
public:
    explicit TwoColouring(Graph base, Colour fill = Colour::Blue)
        : base_(std::move(base)),
          red_(base_.num_vertices() < 2
                   ? 1
                   : pair_index(0, base_.num_vertices() - 1) + base_.num_vertices()) {
        if (fill == Colour::Red)
            for (auto [u, v] : base_.edges()) red_.set(pair_index(u, v));
    }

    const Graph& base() const { return base_; }

    Colour colour(Vertex u, Vertex v) const {
        check_edge(u, v);
        if (u > v) std::swap(u, v);
        return red_.test(pair_index(u, v)) ? Colour::Red : Colour::Blue;
    }

    void set_colour(Vertex u, Vertex v, Colour c) {
        check_edge(u, v);
        if (u > v) std::swap(u, v);
        if (c == Colour::Red) red_.set(pair_index(u, v));
        else red_.reset(pair_index(u, v));
    }

    bool is_red(Vertex u, Vertex v) const { return colour(u, v) == Colour::Red; }
    bool is_blue(Vertex u, Vertex v) const { return colour(u, v) == Colour::Blue; }

    std::size_t red_edge_count() const {
        std::size_t c = 0;
        for (auto [u, v] : base_.edges())
            if (red_.test(pair_index(u, v))) ++c;
        return c;
    }

    Graph red_subgraph() const { return subgraph(Colour::Red); }
    Graph blue_subgraph() const { return subgraph(Colour::Blue); }

    bool operator==(const TwoColouring& other) const {
        if (!(base_ == other.base_)) return false;
        for (auto [u, v] : base_.edges())
            if (red_.test(pair_index(u, v)) != other.red_.test(pair_index(u, v)))
                return false;
        return true;
    }

private:
    Graph subgraph(Colour c) const {
        Graph g(base_.num_vertices());
        for (auto [u, v] : base_.edges())
            if ((red_.test(pair_index(u, v)) ? Colour::Red : Colour::Blue) == c)
                g.add_edge(u, v);
        return g;
    }

    void check_edge(Vertex u, Vertex v) const {
        if (!base_.has_edge(u, v))
            throw std::invalid_argument("TwoColouring: not an edge of the base graph");
    }

    const Graph* base_;
    Bitset red_;
};

} // namespace ramsey
