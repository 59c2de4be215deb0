#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ramsey/colouring.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

enum class ArrowKind { Holds, Fails, Unknown };

struct ArrowVerdict {
    ArrowKind kind = ArrowKind::Unknown;
    std::optional<TwoColouring> certificate; // Fails: verified avoiding colouring
    std::string reason;                      // Unknown: why
    std::uint64_t nodes_explored = 0;
    std::chrono::microseconds elapsed{0};

    // Forced-red deductions, each justified by a K_{r+1} copy that was
    // all-blue except for this one edge (capped; see trace_truncated).
    struct ForcedRed {
        Edge edge;
        std::size_t copy_id;
    };
    std::vector<ForcedRed> trace;
    bool trace_truncated = false;
};

// Complete backtracking over edge two-colourings, deciding whether every
// colouring has a red path of n edges or a blue K_{r+1}. Propagates forced
// reds from one-undecided-edge blue cliques and prunes branches whose red
// subgraph already carries an n-edge path. ArrowHolds only on exhaustion;
// ArrowFails always carries a detector-verified certificate; running out of
// node budget gives Unknown.
ArrowVerdict arrow_exact(const Graph& graph, std::size_t r, std::size_t n,
                         std::uint64_t budget = std::uint64_t(-1));

// Upper-bound search: the three adversary constructions plus random-restart
// local search over colourings. Can return Fails (verified) or Unknown,
// never Holds.
ArrowVerdict arrow_portfolio(const Graph& graph, std::size_t r, std::size_t n,
                             std::size_t t_hint = 0, std::uint64_t seed = 0x706f7274ULL);

// The copies used for propagation, in the solver's enumeration order
// (exposed so tests can audit the trace).
std::vector<std::vector<Vertex>> arrow_copies(const Graph& graph, std::size_t r);

} // namespace ramsey
