#include "ramsey/separation.hpp"

#include <cassert>

namespace ramsey {

SeparationOutcome dfs_separate(const Graph& graph, std::size_t a, std::size_t b,
                               std::size_t path_bound) {
    if (a < 1 || b < 1) throw std::invalid_argument("dfs_separate: a and b must be >= 1");
    if (path_bound < 1) throw std::invalid_argument("dfs_separate: path_bound must be >= 1");
    std::size_t n = graph.num_vertices();
    if (a + b > n)
        throw InfeasibleSizes("dfs_separate: a + b = " + std::to_string(a + b) +
                              " exceeds " + std::to_string(n) + " vertices");

    Bitset unexplored(n);
    for (Vertex v = 0; v < n; ++v) unexplored.set(v);
    std::size_t u_count = n;

    std::vector<Vertex> stack;    // parent-chain: consecutive entries adjacent
    std::vector<Vertex> finished; // finishing order

    auto make_split = [&]() -> SeparationOutcome {
        if (finished.size() < a) throw HypothesisViolated(a - finished.size());
        SplitOutcome split;
        split.a.assign(finished.begin(), finished.begin() + static_cast<std::ptrdiff_t>(a));
        split.b = unexplored.to_vector();
        assert(verify_separated(graph, split.a, split.b));
        return split;
    };

    for (Vertex root = 0; root < n; ++root) {
        if (!unexplored.test(root)) continue;
        unexplored.reset(root);
        --u_count;
        stack.push_back(root);
        if (u_count == b) return make_split();

        while (!stack.empty()) {
            Vertex top = stack.back();
            Bitset cands = graph.neighbours(top);
            cands &= unexplored;
            std::size_t w = cands.next_set(0);
            if (w == cands.size()) {
                // top has no unexplored neighbours; retiring it keeps the
                // F/U frontier edge-free
                assert(graph.neighbours(top).and_count(unexplored) == 0);
                finished.push_back(top);
                stack.pop_back();
                continue;
            }
            unexplored.reset(w);
            --u_count;
            stack.push_back(w);
            if (stack.size() == path_bound + 1) {
                PathWitness path{stack};
                assert(verify_path_of_length(graph, path.vertices, path_bound));
                return path;
            }
            if (u_count == b) return make_split();
        }
    }

    // |U| hits every value from n down to 0, and b < n was checked, so the
    // split moment must have been reached.
    throw HypothesisViolated(a);
}

DecomposeOutcome decompose_blue_partite(const TwoColouring& colouring, std::size_t r,
                                        std::size_t n, std::size_t t) {
    if (r < 1 || n < 1 || t < 1)
        throw std::invalid_argument("decompose_blue_partite: r, n, t must be >= 1");
    const Graph& base = colouring.base();
    std::size_t want = r * n + (r + 1) * t;
    if (base.num_vertices() != want)
        throw std::invalid_argument("decompose_blue_partite: graph has " +
                                    std::to_string(base.num_vertices()) +
                                    " vertices, needs rn + (r+1)t = " + std::to_string(want));

    Graph red = colouring.red_subgraph();

    Bitset working = base.full_vertex_set();
    std::vector<std::vector<Vertex>> sets;

    for (std::size_t s = 1; s <= r; ++s) {
        std::size_t b = (r - s) * n + (r - s + 1) * t;
        auto [sub, label] = red.induced_subgraph(working);
        assert(sub.num_vertices() == (r - s + 1) * n + (r - s + 2) * t);

        SeparationOutcome outcome = dfs_separate(sub, t, b, n);
        if (auto* path = std::get_if<PathWitness>(&outcome)) {
            PathWitness global;
            global.vertices.reserve(path->vertices.size());
            for (auto v : path->vertices) global.vertices.push_back(label[v]);
            assert(verify_path_of_length(red, global.vertices, n));
            return global;
        }

        auto& split = std::get<SplitOutcome>(outcome);
        std::vector<Vertex> a_global;
        a_global.reserve(split.a.size());
        for (auto v : split.a) a_global.push_back(label[v]);
        sets.push_back(std::move(a_global));

        Bitset next(base.num_vertices());
        for (auto v : split.b) next.set(label[v]);
        working = next;
        assert(working.count() == b);
    }

    sets.push_back(working.to_vector());
    WeakPartiteWitness witness{std::move(sets)};
    assert(verify_weak_partite(colouring, witness.sets, t));
    return witness;
}

bool verify_weak_partite(const TwoColouring& colouring,
                         const std::vector<std::vector<Vertex>>& sets, std::size_t t) {
    const Graph& base = colouring.base();
    Bitset seen(base.num_vertices());
    for (const auto& s : sets) {
        if (s.size() != t) return false;
        for (auto v : s) {
            if (v >= base.num_vertices() || seen.test(v)) return false;
            seen.set(v);
        }
    }
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = i + 1; j < sets.size(); ++j)
            for (auto u : sets[i])
                for (auto v : sets[j])
                    if (base.has_edge(u, v) && colouring.is_red(u, v)) return false;
    return true;
}

} // namespace ramsey
