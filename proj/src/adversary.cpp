#include "ramsey/adversary.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

#include "ramsey/detectors.hpp"
#include "ramsey/rng.hpp"

namespace ramsey {

const char* strategy_name(StrategyKind k) {
    switch (k) {
        case StrategyKind::HittingSet: return "hitting";
        case StrategyKind::BoundaryPartition: return "boundary";
        case StrategyKind::PinnedCliquePartition: return "pinned";
    }
    return "?";
}

namespace {

std::vector<std::vector<Vertex>> enumerate_cliques_impl(const Graph& g, std::size_t size) {
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> cur;
    auto extend = [&](auto&& self, Bitset cands, Vertex from) -> void {
        if (cur.size() == size) {
            out.push_back(cur);
            return;
        }
        for (std::size_t v = cands.next_set(from); v < cands.size(); v = cands.next_set(v + 1)) {
            cur.push_back(v);
            Bitset next = cands;
            next &= g.neighbours(v);
            self(self, next, v + 1);
            cur.pop_back();
        }
    };
    extend(extend, g.full_vertex_set(), 0);
    return out;
}

// Runs the red-path and blue-clique detectors and appends the two checks.
// Exact mode uses complete searches; heuristic mode replaces the path search
// by rotation-extension (flagged non-exact when it merely fails to find).
bool verify_avoiding(const TwoColouring& col, std::size_t r, std::size_t n,
                     VerificationMode mode, std::vector<DetectorCheck>& checks,
                     std::string& reason) {
    Graph red = col.red_subgraph();
    Graph blue = col.blue_subgraph();

    DetectorCheck path_check;
    path_check.name = "no_red_path_n";
    if (mode == VerificationMode::Exact) {
        auto v = find_path_exact(red, n);
        path_check.exact = true;
        path_check.pass = v.refuted();
        path_check.nodes = v.nodes_explored;
        if (v.found()) path_check.witness_text = witness_to_text(*v.witness);
    } else {
        auto v = find_path_posa(red, n);
        path_check.exact = false; // not-found by rotation is no refutation
        path_check.pass = !v.found();
        path_check.nodes = v.nodes_explored;
        if (v.found()) {
            path_check.exact = true; // a found path is decisive
            path_check.witness_text = witness_to_text(*v.witness);
        }
    }
    checks.push_back(path_check);

    DetectorCheck clique_check;
    clique_check.name = "no_blue_clique_r1";
    auto cv = find_clique(blue, r + 1);
    clique_check.exact = true;
    clique_check.pass = cv.refuted();
    clique_check.nodes = cv.nodes_explored;
    if (cv.found()) clique_check.witness_text = witness_to_text(*cv.witness);
    checks.push_back(clique_check);

    if (!path_check.pass) reason = "red path of length n present";
    else if (!clique_check.pass) reason = "blue clique present";
    return path_check.pass && clique_check.pass;
}

// Within-part red, cross blue.
TwoColouring partition_colouring(const Graph& g, const std::vector<std::vector<Vertex>>& parts) {
    std::vector<std::size_t> part_of(g.num_vertices(), 0);
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (auto v : parts[i]) part_of[v] = i;
    TwoColouring col(g, Colour::Blue);
    for (auto [u, v] : g.edges())
        if (part_of[u] == part_of[v]) col.set_colour(u, v, Colour::Red);
    return col;
}

// A_0 = first t vertices; A_1 starts from `forced` (must avoid A_0) and is
// filled to n lexicographically; A_2..A_r take the rest in order.
std::vector<std::vector<Vertex>> build_parts(const Graph& g, std::size_t r, std::size_t n,
                                             std::size_t t, const Bitset& forced) {
    std::size_t nv = g.num_vertices();
    std::vector<std::vector<Vertex>> parts(r + 1);
    Bitset taken(nv);
    for (Vertex v = 0; v < t; ++v) {
        parts[0].push_back(v);
        taken.set(v);
    }
    forced.for_each_set([&](std::size_t v) {
        assert(!taken.test(v));
        parts[1].push_back(v);
        taken.set(v);
    });
    std::size_t part = 1;
    for (Vertex v = 0; v < nv; ++v) {
        if (taken.test(v)) continue;
        while (parts[part].size() >= n) ++part;
        parts[part].push_back(v);
    }
    for (std::size_t i = 1; i <= r; ++i) {
        std::sort(parts[i].begin(), parts[i].end());
        assert(parts[i].size() == n);
    }
    return parts;
}

AdversaryResult run_partition_strategy(const Graph& graph, StrategyKind kind, std::size_t r,
                                       std::size_t n, std::size_t t, const Bitset& forced,
                                       std::size_t forced_size_limit, std::size_t forced_size,
                                       VerificationMode mode, const std::string& too_big_what) {
    AdversaryResult res;
    res.strategy = kind;
    if (forced_size > forced_size_limit) {
        res.failure_reason =
            too_big_what + " (" + std::to_string(forced_size) + " > " + std::to_string(n) + ")";
        return res;
    }
    auto parts = build_parts(graph, r, n, t, forced);
    res.colouring = partition_colouring(graph, parts);
    res.partition = PartitionWitness{parts};
    res.success = verify_avoiding(*res.colouring, r, n, mode, res.verification, res.failure_reason);
    return res;
}

} // namespace

std::vector<std::vector<Vertex>> enumerate_cliques(const Graph& graph, std::size_t size) {
    if (size < 1) throw std::invalid_argument("enumerate_cliques: size must be >= 1");
    return enumerate_cliques_impl(graph, size);
}

AdversaryResult strategy_hitting_set(const Graph& graph, std::size_t r, std::size_t n,
                                     VerificationMode mode) {
    AdversaryResult res;
    res.strategy = StrategyKind::HittingSet;

    auto copies = enumerate_cliques(graph, r + 1);

    // edge -> copies through it
    std::map<Edge, std::vector<std::size_t>> through;
    for (std::size_t c = 0; c < copies.size(); ++c)
        for (std::size_t i = 0; i < copies[c].size(); ++i)
            for (std::size_t j = i + 1; j < copies[c].size(); ++j)
                through[make_edge(copies[c][i], copies[c][j])].push_back(c);

    std::vector<bool> covered(copies.size(), false);
    std::size_t uncovered = copies.size();
    TwoColouring col(graph, Colour::Blue);

    while (uncovered > 0) {
        Edge best{0, 0};
        std::size_t best_gain = 0;
        for (const auto& [e, ids] : through) {
            std::size_t gain = 0;
            for (auto c : ids)
                if (!covered[c]) ++gain;
            if (gain > best_gain) { // map order makes ties lexicographic
                best_gain = gain;
                best = e;
            }
        }
        assert(best_gain > 0);
        col.set_colour(best.first, best.second, Colour::Red);
        for (auto c : through[best])
            if (!covered[c]) {
                covered[c] = true;
                --uncovered;
            }
    }

    res.colouring = col;
    res.success = verify_avoiding(col, r, n, mode, res.verification, res.failure_reason);
    return res;
}

std::size_t boundary_size(const Graph& graph, std::size_t t) {
    Bitset a0(graph.num_vertices());
    for (Vertex v = 0; v < t && v < graph.num_vertices(); ++v) a0.set(v);
    return external_neighbourhood(graph, a0).count();
}

AdversaryResult strategy_boundary(const Graph& graph, std::size_t r, std::size_t n,
                                  std::size_t t, VerificationMode mode) {
    if (graph.num_vertices() != r * n + t)
        throw std::invalid_argument("strategy_boundary: graph must have rn + t vertices");
    Bitset a0(graph.num_vertices());
    for (Vertex v = 0; v < t; ++v) a0.set(v);
    Bitset x = external_neighbourhood(graph, a0);
    return run_partition_strategy(graph, StrategyKind::BoundaryPartition, r, n, t, x, n,
                                  x.count(), mode, "boundary too large");
}

PinnedCliques pinned_cliques(const Graph& graph, std::size_t r, std::size_t t) {
    PinnedCliques out;
    Bitset outside(graph.num_vertices());
    for (const auto& copy : enumerate_cliques(graph, r + 1)) {
        std::size_t inside = 0;
        for (auto v : copy)
            if (v < t) ++inside;
        if (inside != 1) continue;
        ++out.copy_count;
        for (auto v : copy)
            if (v >= t) outside.set(v);
    }
    out.outside_union = outside.to_vector();
    return out;
}

AdversaryResult strategy_pinned_cliques(const Graph& graph, std::size_t r, std::size_t n,
                                        std::size_t t, VerificationMode mode) {
    if (graph.num_vertices() != r * n + t)
        throw std::invalid_argument("strategy_pinned_cliques: graph must have rn + t vertices");
    auto pinned = pinned_cliques(graph, r, t);
    Bitset w(graph.num_vertices());
    for (auto v : pinned.outside_union) w.set(v);
    return run_partition_strategy(graph, StrategyKind::PinnedCliquePartition, r, n, t, w, n,
                                  w.count(), mode, "pinned-copy union too large");
}

StructuralPartition classify_by_cycles(const TwoColouring& colouring,
                                       const std::vector<Bitset>& cycles, double alpha,
                                       double gamma, double p, std::size_t n) {
    const Graph& g = colouring.base();
    Bitset seen(g.num_vertices());
    for (const auto& b : cycles) {
        if (b.intersects(seen)) throw std::invalid_argument("classify_by_cycles: B_i overlap");
        seen |= b;
    }

    Graph blue = colouring.blue_subgraph();
    StructuralPartition out;
    out.alpha = alpha;
    out.gamma = gamma;
    out.p = p;
    out.n = n;
    out.parts.assign(cycles.size() + 1, {});

    double deg_min = alpha * p * static_cast<double>(n);
    double blue_max = gamma * p * static_cast<double>(n);

    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        std::vector<std::size_t> qualifying;
        for (std::size_t i = 0; i < cycles.size(); ++i) {
            double deg = static_cast<double>(g.neighbour_count_in(v, cycles[i]));
            double bdeg = static_cast<double>(blue.neighbour_count_in(v, cycles[i]));
            if (deg >= deg_min && bdeg <= blue_max) qualifying.push_back(i + 1);
        }
        if (qualifying.empty()) {
            out.parts[0].push_back(v);
        } else {
            out.parts[qualifying.front()].push_back(v);
            if (qualifying.size() >= 2) out.conflicts.push_back({v, qualifying});
        }
    }
    return out;
}

PartitionCheckReport verify_structural_partition(const TwoColouring& colouring,
                                                 const std::vector<std::vector<Vertex>>& parts,
                                                 double c_const, double p, std::size_t n) {
    PartitionCheckReport report;
    const Graph& g = colouring.base();

    Bitset seen(g.num_vertices());
    std::size_t total = 0;
    for (const auto& part : parts) {
        total += part.size();
        for (auto v : part) {
            if (v >= g.num_vertices() || seen.test(v)) {
                report.pass = false;
                report.violations.push_back({"not_a_partition", "vertex " + std::to_string(v)});
                return report;
            }
            seen.set(v);
        }
    }
    if (total != g.num_vertices()) {
        report.pass = false;
        report.violations.push_back(
            {"not_a_partition", "covers " + std::to_string(total) + " of " +
                                    std::to_string(g.num_vertices()) + " vertices"});
        return report;
    }

    if (!parts.empty() && p > 0.0 &&
        static_cast<double>(parts[0].size()) > c_const / p) {
        report.pass = false;
        report.violations.push_back(
            {"trash_too_large", "|A_0| = " + std::to_string(parts[0].size())});
    }
    for (std::size_t i = 1; i < parts.size(); ++i)
        if (parts[i].size() > n) {
            report.pass = false;
            report.violations.push_back({"part_too_large", "|A_" + std::to_string(i) +
                                                               "| = " + std::to_string(parts[i].size())});
        }
    for (std::size_t i = 1; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j)
            for (auto u : parts[i])
                for (auto v : parts[j])
                    if (g.has_edge(u, v) && colouring.is_red(u, v)) {
                        report.pass = false;
                        report.violations.push_back(
                            {"red_cross_edge", std::to_string(u) + " " + std::to_string(v)});
                    }
    return report;
}

bool verify_red_cycle(const TwoColouring& colouring, const std::vector<Vertex>& cycle) {
    const Graph& g = colouring.base();
    if (cycle.size() < 3) return false;
    Bitset seen(g.num_vertices());
    for (auto v : cycle) {
        if (v >= g.num_vertices() || seen.test(v)) return false;
        seen.set(v);
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        Vertex u = cycle[i];
        Vertex v = cycle[(i + 1) % cycle.size()];
        if (!g.has_edge(u, v) || !colouring.is_red(u, v)) return false;
    }
    return true;
}

RedCyclesResult find_long_red_cycles(const TwoColouring& colouring, std::size_t r,
                                     std::size_t min_length, std::uint64_t seed) {
    RedCyclesResult result;
    Graph red = colouring.red_subgraph();
    Bitset remaining = red.full_vertex_set();
    SmallRng rng(seed);

    for (std::size_t round = 0; round < r; ++round) {
        auto [sub, label] = red.induced_subgraph(remaining);
        std::vector<Vertex> found;

        // Rotation-extension with back-chord closure: a chord from the tip
        // to path position i closes a cycle of path.size()-i edges.
        constexpr std::size_t kTries = 24;
        for (std::size_t attempt = 0; attempt < kTries && found.empty(); ++attempt) {
            if (sub.num_vertices() == 0) break;
            std::vector<Vertex> path{static_cast<Vertex>(rng.next_below(sub.num_vertices()))};
            Bitset on_path(sub.num_vertices());
            on_path.set(path[0]);
            std::size_t rotations = 0;
            std::size_t max_rot = 4 * sub.num_vertices() + 16;

            while (found.empty()) {
                Vertex tip = path.back();
                // close if a long-enough back-chord exists
                for (std::size_t i = 0; i + 2 < path.size(); ++i) {
                    std::size_t cyc_len = path.size() - i;
                    if (cyc_len > min_length && sub.has_edge(tip, path[i])) {
                        found.assign(path.begin() + static_cast<std::ptrdiff_t>(i), path.end());
                        break;
                    }
                }
                if (!found.empty()) break;

                std::vector<Vertex> ext;
                sub.neighbours(tip).for_each_set([&](std::size_t w) {
                    if (!on_path.test(w)) ext.push_back(w);
                });
                if (!ext.empty()) {
                    Vertex w = ext[rng.next_below(ext.size())];
                    path.push_back(w);
                    on_path.set(w);
                    continue;
                }
                std::reverse(path.begin(), path.end());
                Vertex tip2 = path.back();
                ext.clear();
                sub.neighbours(tip2).for_each_set([&](std::size_t w) {
                    if (!on_path.test(w)) ext.push_back(w);
                });
                if (!ext.empty()) {
                    Vertex w = ext[rng.next_below(ext.size())];
                    path.push_back(w);
                    on_path.set(w);
                    continue;
                }
                if (rotations++ >= max_rot) break;
                // rotate at the tip
                Vertex t3 = path.back();
                std::vector<std::size_t> pivots;
                for (std::size_t i = 0; i + 2 < path.size(); ++i)
                    if (sub.has_edge(t3, path[i])) pivots.push_back(i);
                if (pivots.empty()) break;
                std::size_t i = pivots[rng.next_below(pivots.size())];
                std::reverse(path.begin() + static_cast<std::ptrdiff_t>(i) + 1, path.end());
            }
        }

        if (found.empty()) return result; // failure, cycles so far in result
        std::vector<Vertex> global;
        global.reserve(found.size());
        for (auto v : found) global.push_back(label[v]);
        assert(verify_red_cycle(colouring, global));
        for (auto v : global) remaining.reset(v);
        result.cycles.push_back(std::move(global));
    }
    result.success = result.cycles.size() == r;
    return result;
}

} // namespace ramsey
