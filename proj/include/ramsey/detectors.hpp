#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "ramsey/graph.hpp"
#include "ramsey/witness.hpp"

namespace ramsey {

inline constexpr std::uint64_t kNoBudget = std::numeric_limits<std::uint64_t>::max();

// Components up to this many vertices are decided by the exact
// subset-DP; larger ones fall back to pruned DFS under the node budget.
inline constexpr std::size_t kSubsetDpMaxVertices = 20;

// Complete search for a clique on k vertices. Pivoted backtracking
// (max-degree pivot, ties to the lowest index); either a verified
// CliqueWitness or ExhaustivelyRefuted.
SearchVerdict find_clique(const Graph& graph, std::size_t k);

// Complete search for a clique with one vertex in each of the given pairwise
// disjoint sets (candidate-set intersection backtracking).
SearchVerdict find_transversal_clique(const Graph& graph, const std::vector<Bitset>& sets);

// Simple path with exactly `length` edges. Components of at most
// kSubsetDpMaxVertices vertices are decided exactly by subset DP; larger
// components use complete DFS with reachability pruning, stopping at
// `budget` search nodes. Verdicts record which mode answered: budget
// exhaustion yields HeuristicallyNotFound, never a refutation.
SearchVerdict find_path_exact(const Graph& graph, std::size_t length,
                              std::uint64_t budget = kNoBudget);

// Longest path the subset DP can certify for one component-sized graph
// (test helper and arrow-search primitive; requires <= kSubsetDpMaxVertices
// vertices). Returns the number of edges of a longest path.
std::size_t subset_dp_longest_path(const Graph& graph);

// Rotation-extension heuristic: Found certificates are sound; a stall is
// reported as HeuristicallyNotFound and never refutes.
SearchVerdict find_path_posa(const Graph& graph, std::size_t length,
                             std::uint64_t seed = 0x706f7361ULL);

enum class ExpansionMode { Exhaustive, Rotation };

// Report for the expansion hypothesis |N(X)| >= 2|X| over all nonempty X
// with |X| <= k, N(X) taken outside X. A ViolatingSet re-verifies from the
// adjacency; ExpanderUpTo is a certificate only in exhaustive mode.
struct ExpansionReport {
    std::size_t parameter_k = 0;
    ExpansionMode mode = ExpansionMode::Exhaustive;
    bool holds = true;                       // no violation found
    std::optional<std::vector<Vertex>> violating_set;
    std::uint64_t sets_checked = 0;
};

inline constexpr std::size_t kExhaustiveExpansionMaxVertices = 20;

ExpansionReport check_expansion(const Graph& graph, std::size_t k, ExpansionMode mode);

// Exhaustive expansion check + exact path search for min(3k-1, n-1) edges:
// if the hypothesis holds the path must exist.
struct PosaGuaranteeReport {
    ExpansionReport expansion;
    std::size_t guaranteed_length = 0; // min(3k-1, n-1)
    std::optional<SearchVerdict> path; // set only when the hypothesis holds
    bool consistent = true;            // hypothesis holds => path found
};

PosaGuaranteeReport posa_guarantee_check(const Graph& graph, std::size_t k);

// All v in V(G) with |N(v) ∩ U| <= threshold.
struct LowDegreeReport {
    std::size_t count = 0;
    std::vector<Vertex> vertices;
};

LowDegreeReport low_degree_count(const Graph& graph, const Bitset& u_set, std::size_t threshold);

// |∪_{v in X} N(v)|
std::size_t neighbourhood_cover(const Graph& graph, const Bitset& x_set);

// External neighbourhood (∪ N(v)) \ X, the form the expansion check uses.
Bitset external_neighbourhood(const Graph& graph, const Bitset& x_set);

} // namespace ramsey
