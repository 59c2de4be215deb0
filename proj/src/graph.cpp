#include "ramsey/graph.hpp"

#include <stdexcept>

namespace ramsey {

std::pair<Graph, std::vector<Vertex>> Graph::induced_subgraph(const Bitset& vertices) const {
    std::vector<Vertex> label;
    label.reserve(vertices.count());
    vertices.for_each_set([&](std::size_t v) { label.push_back(v); });

    std::vector<std::size_t> local(n_, 0);
    for (std::size_t i = 0; i < label.size(); ++i) local[label[i]] = i;

    Graph sub(label.size());
    for (std::size_t i = 0; i < label.size(); ++i) {
        adj_[label[i]].for_each_set([&](std::size_t w) {
            if (vertices.test(w) && w > label[i]) sub.add_edge(i, local[w]);
        });
    }
    return {std::move(sub), std::move(label)};
}

std::vector<Bitset> Graph::components() const {
    std::vector<Bitset> out;
    Bitset seen(n_);
    std::vector<Vertex> stack;
    for (Vertex root = 0; root < n_; ++root) {
        if (seen.test(root)) continue;
        Bitset comp(n_);
        stack.push_back(root);
        seen.set(root);
        comp.set(root);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            adj_[v].for_each_set([&](std::size_t w) {
                if (!seen.test(w)) {
                    seen.set(w);
                    comp.set(w);
                    stack.push_back(w);
                }
            });
        }
        out.push_back(std::move(comp));
    }
    return out;
}

Graph sample_gnp(std::size_t n_vertices, double p, const PairUniforms& uniforms) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("sample_gnp: p must be in [0,1]");
    Graph g(n_vertices);
    for (Vertex v = 1; v < n_vertices; ++v)
        for (Vertex u = 0; u < v; ++u)
            if (uniforms(u, v) < p) g.add_edge(u, v);
    return g;
}

Graph sample_gnp(std::size_t n_vertices, double p, Seed seed) {
    return sample_gnp(n_vertices, p, PairUniforms(seed));
}

} // namespace ramsey
