#include "ramsey/arrow.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <map>

#include "ramsey/adversary.hpp"
#include "ramsey/detectors.hpp"
#include "ramsey/rng.hpp"

namespace ramsey {

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::size_t kTraceCap = 1 << 16;

enum : std::int8_t { kUndecided = 0, kRed = 1, kBlue = 2 };

struct Solver {
    const Graph& g;
    std::size_t r, n;
    std::uint64_t budget;

    std::vector<Edge> edges;          // branch order: hottest clique edges first
    std::vector<std::int8_t> colour;  // per edge id
    std::vector<std::vector<std::size_t>> copy_edges;  // copy -> edge ids
    std::vector<std::vector<std::size_t>> edge_copies; // edge id -> copy ids
    std::vector<std::size_t> blue_count;
    std::vector<std::size_t> undecided_count;
    std::vector<Bitset> red_adj;

    std::uint64_t nodes = 0;
    bool budget_hit = false;
    std::vector<ArrowVerdict::ForcedRed> trace;
    bool trace_truncated = false;
    std::vector<std::size_t> trail; // assigned edge ids, in order

    std::map<Edge, std::size_t> edge_id;

    Solver(const Graph& graph, std::size_t r_, std::size_t n_, std::uint64_t budget_,
           const std::vector<std::vector<Vertex>>& copies)
        : g(graph), r(r_), n(n_), budget(budget_) {
        edges = g.edges();
        for (std::size_t i = 0; i < edges.size(); ++i) edge_id[edges[i]] = i;

        copy_edges.resize(copies.size());
        edge_copies.resize(edges.size());
        for (std::size_t c = 0; c < copies.size(); ++c) {
            for (std::size_t i = 0; i < copies[c].size(); ++i)
                for (std::size_t j = i + 1; j < copies[c].size(); ++j) {
                    std::size_t e = edge_id.at(make_edge(copies[c][i], copies[c][j]));
                    copy_edges[c].push_back(e);
                    edge_copies[e].push_back(c);
                }
        }

        // Edges in many copies first: propagation bites early.
        std::vector<std::size_t> order(edges.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return edge_copies[a].size() > edge_copies[b].size();
        });
        // Re-index everything along the new order.
        std::vector<Edge> new_edges(edges.size());
        std::vector<std::size_t> old_to_new(edges.size());
        for (std::size_t i = 0; i < order.size(); ++i) {
            new_edges[i] = edges[order[i]];
            old_to_new[order[i]] = i;
        }
        edges = std::move(new_edges);
        edge_id.clear();
        for (std::size_t i = 0; i < edges.size(); ++i) edge_id[edges[i]] = i;
        std::vector<std::vector<std::size_t>> new_edge_copies(edges.size());
        for (std::size_t old = 0; old < old_to_new.size(); ++old)
            new_edge_copies[old_to_new[old]] = std::move(edge_copies[old]);
        edge_copies = std::move(new_edge_copies);
        for (auto& ce : copy_edges)
            for (auto& e : ce) e = old_to_new[e];

        colour.assign(edges.size(), kUndecided);
        blue_count.assign(copies.size(), 0);
        undecided_count.assign(copies.size(), 0);
        for (std::size_t c = 0; c < copies.size(); ++c) undecided_count[c] = copy_edges[c].size();
        red_adj.assign(g.num_vertices(), Bitset(g.num_vertices()));
    }

    // Longest red path in the component touched by (u, v); exact for
    // components that fit the subset DP, otherwise declines to prune.
    bool red_path_reached(Vertex u) {
        Bitset comp(g.num_vertices());
        std::vector<Vertex> stack{u};
        comp.set(u);
        std::size_t size = 1;
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            red_adj[x].for_each_set([&](std::size_t w) {
                if (!comp.test(w)) {
                    comp.set(w);
                    ++size;
                    stack.push_back(w);
                }
            });
        }
        if (size < n + 1) return false;
        if (size > kSubsetDpMaxVertices) return false; // pessimistic fallback
        Graph sub(size);
        auto verts = comp.to_vector();
        std::vector<std::size_t> local(g.num_vertices());
        for (std::size_t i = 0; i < verts.size(); ++i) local[verts[i]] = i;
        for (std::size_t i = 0; i < verts.size(); ++i)
            red_adj[verts[i]].for_each_set([&](std::size_t w) {
                if (w > verts[i]) sub.add_edge(i, local[w]);
            });
        return subset_dp_longest_path(sub) >= n;
    }

    // Assign one edge; returns false on an immediate conflict. Appends to
    // the trail either way so the caller can unwind.
    bool assign(std::size_t e, std::int8_t c) {
        assert(colour[e] == kUndecided);
        colour[e] = c;
        trail.push_back(e);
        auto [u, v] = edges[e];
        if (c == kRed) {
            red_adj[u].set(v);
            red_adj[v].set(u);
            for (auto cp : edge_copies[e]) --undecided_count[cp];
            if (red_path_reached(u)) return false;
        } else {
            for (auto cp : edge_copies[e]) {
                --undecided_count[cp];
                ++blue_count[cp];
                if (undecided_count[cp] == 0 && blue_count[cp] == copy_edges[cp].size())
                    return false; // fully blue clique copy
            }
        }
        return true;
    }

    void unwind(std::size_t trail_mark) {
        while (trail.size() > trail_mark) {
            std::size_t e = trail.back();
            trail.pop_back();
            auto [u, v] = edges[e];
            if (colour[e] == kRed) {
                red_adj[u].reset(v);
                red_adj[v].reset(u);
                for (auto cp : edge_copies[e]) ++undecided_count[cp];
            } else {
                for (auto cp : edge_copies[e]) {
                    ++undecided_count[cp];
                    --blue_count[cp];
                }
            }
            colour[e] = kUndecided;
        }
    }

    // Forced reds from copies that are one edge short of all blue.
    // Returns false on conflict.
    bool propagate(std::size_t seed_edge) {
        std::vector<std::size_t> pending{seed_edge};
        while (!pending.empty()) {
            std::size_t e = pending.back();
            pending.pop_back();
            for (auto cp : edge_copies[e]) {
                if (!(undecided_count[cp] == 1 && blue_count[cp] + 1 == copy_edges[cp].size()))
                    continue;
                std::size_t forced = copy_edges[cp].size(); // sentinel
                for (auto fe : copy_edges[cp])
                    if (colour[fe] == kUndecided) forced = fe;
                assert(forced != copy_edges[cp].size());
                if (trace.size() < kTraceCap) trace.push_back({edges[forced], cp});
                else trace_truncated = true;
                if (!assign(forced, kRed)) return false;
                pending.push_back(forced);
            }
        }
        return true;
    }

    // Leaf check is exact regardless of what pruning skipped.
    bool leaf_is_avoiding() {
        Graph red(g.num_vertices());
        for (std::size_t e = 0; e < edges.size(); ++e)
            if (colour[e] == kRed) red.add_edge(edges[e].first, edges[e].second);
        for (std::size_t c = 0; c < copy_edges.size(); ++c)
            if (blue_count[c] == copy_edges[c].size()) return false;
        if (edges.empty()) return true;
        return !find_path_exact(red, n).found();
    }

    enum class Outcome { FoundLeaf, Exhausted, OutOfBudget };

    Outcome search() {
        if (++nodes > budget) {
            budget_hit = true;
            return Outcome::OutOfBudget;
        }
        std::size_t e = edges.size();
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (colour[i] == kUndecided) {
                e = i;
                break;
            }
        if (e == edges.size())
            return leaf_is_avoiding() ? Outcome::FoundLeaf : Outcome::Exhausted;

        for (std::int8_t choice : {kBlue, kRed}) {
            std::size_t mark = trail.size();
            if (assign(e, choice) && propagate(e)) {
                Outcome sub = search();
                if (sub != Outcome::Exhausted) return sub;
            }
            unwind(mark);
        }
        return Outcome::Exhausted;
    }

    TwoColouring extract_colouring() const {
        TwoColouring col(g, Colour::Blue);
        for (std::size_t e = 0; e < edges.size(); ++e)
            if (colour[e] == kRed) col.set_colour(edges[e].first, edges[e].second, Colour::Red);
        return col;
    }
};

bool is_avoiding(const Graph&, const TwoColouring& col, std::size_t r, std::size_t n) {
    return find_path_exact(col.red_subgraph(), n).refuted() &&
           find_clique(col.blue_subgraph(), r + 1).refuted();
}

} // namespace

std::vector<std::vector<Vertex>> arrow_copies(const Graph& graph, std::size_t r) {
    return enumerate_cliques(graph, r + 1);
}

ArrowVerdict arrow_exact(const Graph& graph, std::size_t r, std::size_t n,
                         std::uint64_t budget) {
    auto t0 = Clock::now();
    ArrowVerdict verdict;

    auto copies = enumerate_cliques(graph, r + 1);
    Solver solver(graph, r, n, budget, copies);
    auto outcome = solver.search();

    verdict.nodes_explored = solver.nodes;
    verdict.trace = std::move(solver.trace);
    verdict.trace_truncated = solver.trace_truncated;
    switch (outcome) {
        case Solver::Outcome::FoundLeaf: {
            verdict.kind = ArrowKind::Fails;
            verdict.certificate = solver.extract_colouring();
            assert(is_avoiding(graph, *verdict.certificate, r, n));
            break;
        }
        case Solver::Outcome::Exhausted:
            verdict.kind = ArrowKind::Holds;
            break;
        case Solver::Outcome::OutOfBudget:
            verdict.kind = ArrowKind::Unknown;
            verdict.reason = "node budget exhausted";
            break;
    }
    verdict.elapsed =
        std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - t0);
    return verdict;
}

namespace {

// Local search: flip edges to shrink (#all-blue copies) + (red path excess).
std::optional<TwoColouring> local_search(const Graph& g, std::size_t r, std::size_t n,
                                         std::uint64_t seed) {
    auto copies = enumerate_cliques(g, r + 1);
    auto edges = g.edges();
    if (edges.empty()) {
        TwoColouring col(g);
        if (is_avoiding(g, col, r, n)) return col;
        return std::nullopt;
    }

    SmallRng rng(seed);

    auto red_excess = [&](const TwoColouring& col) -> std::size_t {
        Graph red = col.red_subgraph();
        std::size_t longest = 0;
        for (const auto& comp : red.components()) {
            if (comp.count() < 2) continue;
            auto [sub, label] = red.induced_subgraph(comp);
            (void)label;
            if (sub.num_vertices() <= kSubsetDpMaxVertices) {
                longest = std::max(longest, subset_dp_longest_path(sub));
            } else {
                auto v = find_path_posa(sub, std::min(n, sub.num_vertices() - 1), rng.next());
                if (v.found()) longest = std::max(longest, n);
            }
        }
        return longest >= n ? longest - (n - 1) : 0;
    };

    auto blue_violations = [&](const TwoColouring& col) -> std::size_t {
        std::size_t bad = 0;
        for (const auto& copy : copies) {
            bool all_blue = true;
            for (std::size_t i = 0; i < copy.size() && all_blue; ++i)
                for (std::size_t j = i + 1; j < copy.size(); ++j)
                    if (col.is_red(copy[i], copy[j])) {
                        all_blue = false;
                        break;
                    }
            if (all_blue) ++bad;
        }
        return bad;
    };

    constexpr std::size_t kRestarts = 8;
    const std::size_t steps = 64 * edges.size() + 256;

    for (std::size_t restart = 0; restart < kRestarts; ++restart) {
        TwoColouring col(g, Colour::Blue);
        for (auto [u, v] : edges)
            if (rng.next_unit() < 0.2) col.set_colour(u, v, Colour::Red);

        std::size_t cost = blue_violations(col) + red_excess(col);
        for (std::size_t step = 0; step < steps && cost > 0; ++step) {
            auto [u, v] = edges[rng.next_below(edges.size())];
            Colour old = col.colour(u, v);
            col.set_colour(u, v, old == Colour::Red ? Colour::Blue : Colour::Red);
            std::size_t next = blue_violations(col) + red_excess(col);
            bool accept = next < cost || (next == cost && rng.next_unit() < 0.35);
            if (accept) cost = next;
            else col.set_colour(u, v, old);
        }
        if (cost == 0 && is_avoiding(g, col, r, n)) return col;
    }
    return std::nullopt;
}

} // namespace

ArrowVerdict arrow_portfolio(const Graph& graph, std::size_t r, std::size_t n,
                             std::size_t t_hint, std::uint64_t seed) {
    auto t0 = Clock::now();
    ArrowVerdict verdict;

    auto finish = [&](ArrowKind kind, std::optional<TwoColouring> cert, std::string reason) {
        verdict.kind = kind;
        verdict.certificate = std::move(cert);
        verdict.reason = std::move(reason);
        verdict.elapsed =
            std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - t0);
        return verdict;
    };

    auto hitting = strategy_hitting_set(graph, r, n, VerificationMode::Exact);
    if (hitting.success) return finish(ArrowKind::Fails, std::move(hitting.colouring), "");

    // Partition strategies need exactly rn + t vertices.
    std::size_t nv = graph.num_vertices();
    if (nv >= r * n) {
        std::size_t t = nv - r * n;
        if (t_hint > 0 && r * n + t_hint == nv) t = t_hint;
        auto boundary = strategy_boundary(graph, r, n, t, VerificationMode::Exact);
        if (boundary.success) return finish(ArrowKind::Fails, std::move(boundary.colouring), "");
        auto pinned = strategy_pinned_cliques(graph, r, n, t, VerificationMode::Exact);
        if (pinned.success) return finish(ArrowKind::Fails, std::move(pinned.colouring), "");
    }

    if (auto found = local_search(graph, r, n, seed))
        return finish(ArrowKind::Fails, std::move(found), "");

    return finish(ArrowKind::Unknown, std::nullopt, "no avoiding colouring found");
}

} // namespace ramsey
