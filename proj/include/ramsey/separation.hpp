#pragma once

#include <stdexcept>
#include <variant>
#include <vector>

#include "ramsey/colouring.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/witness.hpp"

namespace ramsey {

struct InfeasibleSizes : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Raised when the split cannot be assembled and no long path was met; under
// the lemma's hypothesis (a + b = k, no path of n - k edges) this cannot
// happen, so seeing it means the caller's sizes were off.
struct HypothesisViolated : std::runtime_error {
    explicit HypothesisViolated(std::size_t d)
        : std::runtime_error("dfs_separate: cannot assemble split, short by " +
                             std::to_string(d) + " finished vertices"),
          deficit(d) {}
    std::size_t deficit;
};

struct SplitOutcome {
    std::vector<Vertex> a, b; // |a| = requested a, |b| = requested b, e(a,b) = 0
};

using SeparationOutcome = std::variant<PathWitness, SplitOutcome>;

// Parent-chain DFS separation. Moves one vertex at a time among unexplored
// U, the active stack S (which always spells a path), and finished F; no
// edge ever joins F and U. Returns LongPath the moment the stack carries
// path_bound edges, otherwise a split taken at the first moment |U| = b,
// with A drawn from finished vertices in finishing order.
SeparationOutcome dfs_separate(const Graph& graph, std::size_t a, std::size_t b,
                               std::size_t path_bound);

struct WeakPartiteWitness {
    std::vector<std::vector<Vertex>> sets; // r+1 sets of size t, cross edges all blue
};

using DecomposeOutcome = std::variant<PathWitness, WeakPartiteWitness>;

// Either a red path with n edges, or r+1 disjoint t-sets with every base
// edge between distinct sets blue. Peels sets off one at a time by running
// dfs_separate on the red subgraph of a shrinking working set; the size
// arithmetic guarantees each round can deliver its split.
DecomposeOutcome decompose_blue_partite(const TwoColouring& colouring, std::size_t r,
                                        std::size_t n, std::size_t t);

// Edge-by-edge re-check of the witness against a colouring.
bool verify_weak_partite(const TwoColouring& colouring,
                         const std::vector<std::vector<Vertex>>& sets, std::size_t t);

} // namespace ramsey
