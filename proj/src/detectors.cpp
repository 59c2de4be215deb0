#include "ramsey/detectors.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <numeric>
#include <stdexcept>

#include "ramsey/rng.hpp"

namespace ramsey {

namespace {

using Clock = std::chrono::steady_clock;

std::chrono::microseconds since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - t0);
}

// ---------------------------------------------------------------- cliques

struct CliqueSearch {
    const Graph& g;
    std::size_t k;
    std::uint64_t nodes = 0;
    std::vector<Vertex> current;
    std::vector<Vertex> found;

    explicit CliqueSearch(const Graph& graph, std::size_t target) : g(graph), k(target) {}

    // Pivoted backtracking: every maximal clique in current ∪ candidates
    // contains a vertex outside N(pivot), so branching on those suffices.
    bool expand(Bitset candidates) {
        ++nodes;
        if (current.size() == k) {
            found = current;
            return true;
        }
        std::size_t avail = candidates.count();
        if (current.size() + avail < k) return false;

        // Greedy pivot: most candidate neighbours, ties to lowest index.
        Vertex pivot = 0;
        std::size_t best = 0;
        bool have = false;
        candidates.for_each_set([&](std::size_t u) {
            std::size_t d = g.neighbour_count_in(u, candidates);
            if (!have || d > best) {
                have = true;
                best = d;
                pivot = u;
            }
        });

        Bitset branch = candidates;
        branch.subtract(g.neighbours(pivot));

        std::vector<Vertex> order = branch.to_vector();
        for (Vertex v : order) {
            current.push_back(v);
            Bitset next = candidates;
            next &= g.neighbours(v);
            if (expand(next)) return true;
            current.pop_back();
            candidates.reset(v);
        }
        return false;
    }
};

// ------------------------------------------------------------- exact paths

// dp[mask] = set of endpoints v such that some simple path spans exactly
// `mask` and ends at v. Requires <= kSubsetDpMaxVertices vertices.
struct SubsetDp {
    std::size_t n;
    std::vector<std::uint32_t> adj_mask;
    std::vector<std::uint32_t> dp;
    std::uint64_t nodes = 0;

    explicit SubsetDp(const Graph& g) : n(g.num_vertices()) {
        assert(n <= kSubsetDpMaxVertices);
        adj_mask.assign(n, 0);
        for (std::size_t v = 0; v < n; ++v)
            g.neighbours(v).for_each_set([&](std::size_t w) {
                adj_mask[v] |= (std::uint32_t{1} << w);
            });
        dp.assign(std::size_t{1} << n, 0);
        for (std::size_t v = 0; v < n; ++v) dp[std::size_t{1} << v] = std::uint32_t{1} << v;
        for (std::uint32_t mask = 1; mask < dp.size(); ++mask) {
            if (std::popcount(mask) < 2) continue;
            ++nodes;
            std::uint32_t ends = 0;
            std::uint32_t rest = mask;
            while (rest) {
                std::uint32_t vbit = rest & (~rest + 1);
                rest ^= vbit;
                std::size_t v = static_cast<std::size_t>(std::countr_zero(vbit));
                if (dp[mask ^ vbit] & adj_mask[v]) ends |= vbit;
            }
            dp[mask] = ends;
        }
    }

    std::size_t longest_path_edges() const {
        std::size_t best = 0;
        for (std::uint32_t mask = 1; mask < dp.size(); ++mask)
            if (dp[mask]) best = std::max<std::size_t>(best, std::popcount(mask) - 1);
        return best;
    }

    // A path with exactly `edges` edges, or empty if none.
    std::vector<Vertex> extract_path(std::size_t edges) const {
        std::size_t want = edges + 1;
        for (std::uint32_t mask = 1; mask < dp.size(); ++mask) {
            if (static_cast<std::size_t>(std::popcount(mask)) != want || !dp[mask]) continue;
            std::vector<Vertex> path;
            std::uint32_t cur = mask;
            std::uint32_t vbit = dp[mask] & (~dp[mask] + 1);
            while (true) {
                std::size_t v = static_cast<std::size_t>(std::countr_zero(vbit));
                path.push_back(v);
                cur ^= vbit;
                if (!cur) break;
                std::uint32_t prevs = dp[cur] & adj_mask[v];
                assert(prevs);
                vbit = prevs & (~prevs + 1);
            }
            std::reverse(path.begin(), path.end());
            return path;
        }
        return {};
    }
};

struct BudgetExhausted {};

// Complete DFS over simple paths with reachability pruning; throws
// BudgetExhausted when the node budget runs out.
struct PathDfs {
    const Graph& g;
    std::size_t target_vertices; // length + 1
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    Bitset used;
    std::vector<Vertex> path;

    PathDfs(const Graph& graph, std::size_t length, std::uint64_t budget_limit)
        : g(graph), target_vertices(length + 1), budget(budget_limit), used(graph.num_vertices()) {}

    std::size_t reachable_from(Vertex v) const {
        Bitset seen = used;
        seen.set(v);
        std::vector<Vertex> stack{v};
        std::size_t cnt = 1;
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            g.neighbours(x).for_each_set([&](std::size_t w) {
                if (!seen.test(w)) {
                    seen.set(w);
                    ++cnt;
                    stack.push_back(w);
                }
            });
        }
        return cnt;
    }

    bool extend() {
        if (++nodes > budget) throw BudgetExhausted{};
        if (path.size() == target_vertices) return true;
        Vertex tip = path.back();
        if (path.size() - 1 + reachable_from(tip) < target_vertices) return false;
        bool ok = false;
        g.neighbours(tip).for_each_set([&](std::size_t w) {
            if (ok || used.test(w)) return;
            used.set(w);
            path.push_back(w);
            if (extend()) ok = true;
            else {
                path.pop_back();
                used.reset(w);
            }
        });
        return ok;
    }

    bool run() {
        for (Vertex s = 0; s < g.num_vertices(); ++s) {
            used.clear();
            used.set(s);
            path.assign(1, s);
            if (extend()) return true;
        }
        return false;
    }
};

// ----------------------------------------------------------- posa rotation

// One rotation-extension run on a connected graph; returns a path of at
// least target_vertices vertices if it gets there.
struct RotationRun {
    const Graph& g;
    SmallRng& rng;
    std::uint64_t& steps;

    std::vector<Vertex> path;
    Bitset on_path;

    RotationRun(const Graph& graph, SmallRng& r, std::uint64_t& step_counter)
        : g(graph), rng(r), steps(step_counter), on_path(graph.num_vertices()) {}

    bool try_extend_back() {
        Vertex tip = path.back();
        std::vector<Vertex> cands;
        g.neighbours(tip).for_each_set([&](std::size_t w) {
            if (!on_path.test(w)) cands.push_back(w);
        });
        if (cands.empty()) return false;
        Vertex w = cands[rng.next_below(cands.size())];
        path.push_back(w);
        on_path.set(w);
        return true;
    }

    // Rotate at the back endpoint using a random chord; returns false when
    // every chord leads to an endpoint seen before (stall signal).
    bool rotate(Bitset& seen_endpoints) {
        Vertex tip = path.back();
        std::vector<std::size_t> pivots;
        for (std::size_t i = 0; i + 2 < path.size(); ++i)
            if (g.has_edge(tip, path[i])) pivots.push_back(i);
        std::vector<std::size_t> fresh;
        for (auto i : pivots)
            if (!seen_endpoints.test(path[i + 1])) fresh.push_back(i);
        if (fresh.empty()) return false;
        std::size_t i = fresh[rng.next_below(fresh.size())];
        std::reverse(path.begin() + static_cast<std::ptrdiff_t>(i) + 1, path.end());
        seen_endpoints.set(path.back());
        return true;
    }

    // Grow from `start` until target reached or stalled.
    bool grow(Vertex start, std::size_t target_vertices, std::size_t max_rotations) {
        path.assign(1, start);
        on_path.clear();
        on_path.set(start);
        std::size_t rotations = 0;
        Bitset seen_endpoints(g.num_vertices());
        seen_endpoints.set(start);
        while (path.size() < target_vertices) {
            ++steps;
            if (try_extend_back()) {
                seen_endpoints.clear();
                seen_endpoints.set(path.back());
                continue;
            }
            // flip and try the other endpoint
            std::reverse(path.begin(), path.end());
            if (try_extend_back()) {
                seen_endpoints.clear();
                seen_endpoints.set(path.back());
                continue;
            }
            if (rotations >= max_rotations) return false;
            if (!rotate(seen_endpoints)) return false;
            ++rotations;
        }
        return true;
    }
};

} // namespace

SearchVerdict find_clique(const Graph& graph, std::size_t k) {
    if (k < 1) throw std::invalid_argument("find_clique: k must be >= 1");
    auto t0 = Clock::now();
    SearchVerdict verdict;
    CliqueSearch search(graph, k);
    if (k <= graph.num_vertices() && search.expand(graph.full_vertex_set())) {
        assert(verify_clique(graph, search.found));
        verdict.kind = VerdictKind::FoundWithCertificate;
        verdict.witness = CliqueWitness{std::move(search.found)};
    } else {
        verdict.kind = VerdictKind::ExhaustivelyRefuted;
    }
    verdict.nodes_explored = search.nodes;
    verdict.elapsed = since(t0);
    return verdict;
}

SearchVerdict find_transversal_clique(const Graph& graph, const std::vector<Bitset>& sets) {
    auto t0 = Clock::now();
    Bitset seen(graph.num_vertices());
    for (const auto& s : sets) {
        if (s.intersects(seen)) throw std::invalid_argument("find_transversal_clique: sets overlap");
        seen |= s;
    }

    // Smallest candidate sets first; backtracking intersects as it goes.
    std::vector<std::size_t> order(sets.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return sets[a].count() < sets[b].count();
    });

    std::uint64_t nodes = 0;
    std::vector<Vertex> chosen;
    // recurse over order[depth]
    auto descend = [&](auto&& self, std::size_t depth, const Bitset& allowed) -> bool {
        ++nodes;
        if (depth == sets.size()) return true;
        Bitset cands = sets[order[depth]];
        cands &= allowed;
        bool ok = false;
        cands.for_each_set([&](std::size_t v) {
            if (ok) return;
            chosen.push_back(v);
            Bitset next = allowed;
            next &= graph.neighbours(v);
            if (self(self, depth + 1, next)) ok = true;
            else chosen.pop_back();
        });
        return ok;
    };

    SearchVerdict verdict;
    Bitset all = graph.full_vertex_set();
    if (descend(descend, 0, all)) {
        assert(verify_clique(graph, chosen));
        verdict.kind = VerdictKind::FoundWithCertificate;
        verdict.witness = CliqueWitness{std::move(chosen)};
    } else {
        verdict.kind = VerdictKind::ExhaustivelyRefuted;
    }
    verdict.nodes_explored = nodes;
    verdict.elapsed = since(t0);
    return verdict;
}

std::size_t subset_dp_longest_path(const Graph& graph) {
    if (graph.num_vertices() == 0) return 0;
    if (graph.num_vertices() > kSubsetDpMaxVertices)
        throw std::invalid_argument("subset_dp_longest_path: graph too large for subset DP");
    return SubsetDp(graph).longest_path_edges();
}

SearchVerdict find_path_exact(const Graph& graph, std::size_t length, std::uint64_t budget) {
    if (length < 1) throw std::invalid_argument("find_path_exact: length must be >= 1");
    auto t0 = Clock::now();
    SearchVerdict verdict;
    std::uint64_t nodes = 0;
    bool budget_hit = false;

    for (const auto& comp : graph.components()) {
        if (comp.count() < length + 1) continue; // too few vertices to host the path
        auto [sub, label] = graph.induced_subgraph(comp);
        if (sub.num_vertices() <= kSubsetDpMaxVertices) {
            SubsetDp dp(sub);
            nodes += dp.nodes;
            auto local = dp.extract_path(length);
            if (!local.empty()) {
                std::vector<Vertex> path;
                path.reserve(local.size());
                for (auto v : local) path.push_back(label[v]);
                assert(verify_path_of_length(graph, path, length));
                verdict.kind = VerdictKind::FoundWithCertificate;
                verdict.witness = PathWitness{std::move(path)};
                verdict.nodes_explored = nodes;
                verdict.elapsed = since(t0);
                return verdict;
            }
        } else {
            PathDfs dfs(sub, length, budget == kNoBudget ? kNoBudget : budget - std::min(budget, nodes));
            try {
                bool ok = dfs.run();
                nodes += dfs.nodes;
                if (ok) {
                    std::vector<Vertex> path;
                    path.reserve(dfs.path.size());
                    for (auto v : dfs.path) path.push_back(label[v]);
                    assert(verify_path_of_length(graph, path, length));
                    verdict.kind = VerdictKind::FoundWithCertificate;
                    verdict.witness = PathWitness{std::move(path)};
                    verdict.nodes_explored = nodes;
                    verdict.elapsed = since(t0);
                    return verdict;
                }
            } catch (const BudgetExhausted&) {
                nodes += dfs.nodes;
                budget_hit = true;
            }
        }
    }

    verdict.kind = budget_hit ? VerdictKind::HeuristicallyNotFound : VerdictKind::ExhaustivelyRefuted;
    verdict.nodes_explored = nodes;
    verdict.elapsed = since(t0);
    return verdict;
}

SearchVerdict find_path_posa(const Graph& graph, std::size_t length, std::uint64_t seed) {
    if (length < 1) throw std::invalid_argument("find_path_posa: length must be >= 1");
    auto t0 = Clock::now();
    SearchVerdict verdict;
    std::uint64_t steps = 0;
    constexpr std::size_t kRestarts = 32;

    SmallRng rng(seed);
    for (const auto& comp : graph.components()) {
        if (comp.count() < length + 1) continue;
        auto [sub, label] = graph.induced_subgraph(comp);
        for (std::size_t attempt = 0; attempt < kRestarts; ++attempt) {
            RotationRun run(sub, rng, steps);
            Vertex start = rng.next_below(sub.num_vertices());
            if (run.grow(start, length + 1, sub.num_vertices())) {
                std::vector<Vertex> path;
                path.reserve(length + 1);
                for (std::size_t i = 0; i <= length; ++i) path.push_back(label[run.path[i]]);
                if (verify_path_of_length(graph, path, length)) {
                    verdict.kind = VerdictKind::FoundWithCertificate;
                    verdict.witness = PathWitness{std::move(path)};
                    verdict.nodes_explored = steps;
                    verdict.elapsed = since(t0);
                    return verdict;
                }
            }
        }
    }

    verdict.kind = VerdictKind::HeuristicallyNotFound;
    verdict.nodes_explored = steps;
    verdict.elapsed = since(t0);
    return verdict;
}

Bitset external_neighbourhood(const Graph& graph, const Bitset& x_set) {
    Bitset nb(graph.num_vertices());
    x_set.for_each_set([&](std::size_t v) { nb |= graph.neighbours(v); });
    nb.subtract(x_set);
    return nb;
}

namespace {

// Lexicographic enumeration of all size-s subsets of 0..n-1.
template <typename F>
bool for_each_combination(std::size_t n, std::size_t s, F&& f) {
    std::vector<std::size_t> idx(s);
    std::iota(idx.begin(), idx.end(), 0);
    if (s > n) return true;
    while (true) {
        if (!f(idx)) return false;
        std::size_t i = s;
        while (i > 0 && idx[i - 1] == n - s + i - 1) --i;
        if (i == 0) return true;
        ++idx[i - 1];
        for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
}

} // namespace

ExpansionReport check_expansion(const Graph& graph, std::size_t k, ExpansionMode mode) {
    ExpansionReport report;
    report.parameter_k = k;
    report.mode = mode;

    if (mode == ExpansionMode::Exhaustive) {
        if (graph.num_vertices() > kExhaustiveExpansionMaxVertices)
            throw std::invalid_argument(
                "check_expansion: exhaustive mode refused, graph has more than " +
                std::to_string(kExhaustiveExpansionMaxVertices) + " vertices");
        std::size_t n = graph.num_vertices();
        for (std::size_t s = 1; s <= std::min(k, n); ++s) {
            bool ok = for_each_combination(n, s, [&](const std::vector<std::size_t>& idx) {
                ++report.sets_checked;
                Bitset x(n);
                for (auto v : idx) x.set(v);
                if (external_neighbourhood(graph, x).count() < 2 * s) {
                    report.holds = false;
                    report.violating_set = std::vector<Vertex>(idx.begin(), idx.end());
                    return false;
                }
                return true;
            });
            if (!ok) break;
        }
        return report;
    }

    // Rotation mode: stall a Hamilton-path attempt and test the endpoint set.
    SmallRng rng(0x726f74ULL ^ graph.num_vertices());
    for (const auto& comp : graph.components()) {
        auto [sub, label] = graph.induced_subgraph(comp);
        std::uint64_t steps = 0;
        RotationRun run(sub, rng, steps);
        if (run.grow(0, sub.num_vertices(), 4 * sub.num_vertices())) continue;
        report.sets_checked += 1;

        // Endpoint set of the stalled path: tip plus every fresh endpoint a
        // single rotation could produce.
        Bitset r_set(graph.num_vertices());
        r_set.set(label[run.path.back()]);
        Vertex tip = run.path.back();
        for (std::size_t i = 0; i + 2 < run.path.size(); ++i)
            if (sub.has_edge(tip, run.path[i])) r_set.set(label[run.path[i + 1]]);

        std::size_t rs = r_set.count();
        if (rs <= k && external_neighbourhood(graph, r_set).count() < 2 * rs) {
            report.holds = false;
            report.violating_set = r_set.to_vector();
            return report;
        }
    }
    return report;
}

PosaGuaranteeReport posa_guarantee_check(const Graph& graph, std::size_t k) {
    PosaGuaranteeReport out;
    out.expansion = check_expansion(graph, k, ExpansionMode::Exhaustive);
    std::size_t n = graph.num_vertices();
    out.guaranteed_length = n == 0 ? 0 : std::min(3 * k - 1, n - 1);
    if (!out.expansion.holds) {
        out.consistent = true; // hypothesis fails, no guarantee claimed
        return out;
    }
    if (out.guaranteed_length == 0) {
        out.consistent = n >= 1;
        return out;
    }
    out.path = find_path_exact(graph, out.guaranteed_length);
    out.consistent = out.path->found();
    return out;
}

LowDegreeReport low_degree_count(const Graph& graph, const Bitset& u_set, std::size_t threshold) {
    LowDegreeReport report;
    for (Vertex v = 0; v < graph.num_vertices(); ++v)
        if (graph.neighbour_count_in(v, u_set) <= threshold) report.vertices.push_back(v);
    report.count = report.vertices.size();
    return report;
}

std::size_t neighbourhood_cover(const Graph& graph, const Bitset& x_set) {
    if (x_set.none()) throw std::invalid_argument("neighbourhood_cover: X must be nonempty");
    Bitset nb(graph.num_vertices());
    x_set.for_each_set([&](std::size_t v) { nb |= graph.neighbours(v); });
    return nb.count();
}

} // namespace ramsey
