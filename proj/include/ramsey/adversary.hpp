#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ramsey/colouring.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/witness.hpp"

namespace ramsey {

enum class StrategyKind { HittingSet, BoundaryPartition, PinnedCliquePartition };
enum class VerificationMode { Exact, Heuristic };

const char* strategy_name(StrategyKind k);

// Paper-fixed classifier constants; callers may override.
inline constexpr double kDefaultAlpha = 0.0625;        // 2^-4
inline constexpr double kDefaultGamma = 0.0009765625;  // 2^-10
inline constexpr double kDefaultCConst = 1024.0;       // 2^8 r^2 at r = 2

// One detector run inside a strategy's verification bundle.
struct DetectorCheck {
    std::string name;
    bool pass = false;
    bool exact = false; // complete search backed this check
    std::string witness_text;
    std::uint64_t nodes = 0;
};

struct AdversaryResult {
    StrategyKind strategy;
    bool success = false; // avoiding colouring, confirmed per the mode
    std::optional<TwoColouring> colouring;
    std::optional<PartitionWitness> partition; // boundary / pinned metadata
    std::string failure_reason;
    std::vector<DetectorCheck> verification;
};

// Colour one edge of every K_{r+1} copy red (greedy cover, prefer edges
// hitting most uncovered copies, ties lexicographic), rest blue. Red P_n
// absence is guaranteed when the red count stays below n, and is verified
// by detectors either way.
AdversaryResult strategy_hitting_set(const Graph& graph, std::size_t r, std::size_t n,
                                     VerificationMode mode = VerificationMode::Exact);

// Partition construction: A_0 = first t vertices, its outside boundary X
// hidden inside A_1, within-part edges red, cross edges blue. Fails when
// |X| > n. Requires rn + t vertices.
AdversaryResult strategy_boundary(const Graph& graph, std::size_t r, std::size_t n,
                                  std::size_t t,
                                  VerificationMode mode = VerificationMode::Exact);

// Same partition shape, but hides the K_{r+1} copies that touch A_0 in
// exactly one vertex: their outside vertices all go to A_1. Fails when that
// union exceeds n. Requires rn + t vertices.
AdversaryResult strategy_pinned_cliques(const Graph& graph, std::size_t r, std::size_t n,
                                        std::size_t t,
                                        VerificationMode mode = VerificationMode::Exact);

// Boundary size |X| for the first-t-vertices choice of A_0 (the quantity the
// boundary strategy thresholds on; exposed for expectation experiments).
std::size_t boundary_size(const Graph& graph, std::size_t t);

// Number of K_{r+1} copies with exactly one vertex among the first t, and
// the union of their outside vertices.
struct PinnedCliques {
    std::size_t copy_count = 0;
    std::vector<Vertex> outside_union;
};
PinnedCliques pinned_cliques(const Graph& graph, std::size_t r, std::size_t t);

// All K_{r+1} copies, ascending vertex tuples.
std::vector<std::vector<Vertex>> enumerate_cliques(const Graph& graph, std::size_t size);

// Structural classifier from the partition proof: vertex v joins A_i when
// |N(v) ∩ B_i| >= alpha*p*n and |N_B(v) ∩ B_i| <= gamma*p*n. Ambiguous
// vertices go to the lowest qualifying index and are reported as conflicts;
// unqualified vertices land in A_0.
struct StructuralPartition {
    std::vector<std::vector<Vertex>> parts; // parts[0] = A_0, parts[i] = A_i
    struct Conflict {
        Vertex vertex;
        std::vector<std::size_t> qualifying; // 1-based part indices
    };
    std::vector<Conflict> conflicts;
    double alpha = kDefaultAlpha, gamma = kDefaultGamma, p = 0.0;
    std::size_t n = 0;
};

StructuralPartition classify_by_cycles(const TwoColouring& colouring,
                                       const std::vector<Bitset>& cycles, double alpha,
                                       double gamma, double p, std::size_t n);

// Checks |A_0| <= C/p, |A_i| <= n, and blue-ness of every cross edge between
// distinct A_i, A_j (i, j >= 1).
struct PartitionCheckReport {
    bool pass = true;
    struct Violation {
        std::string what;   // "part_too_large" | "red_cross_edge" | ...
        std::string detail; // witness edge or size
    };
    std::vector<Violation> violations;
};

PartitionCheckReport verify_structural_partition(const TwoColouring& colouring,
                                                 const std::vector<std::vector<Vertex>>& parts,
                                                 double c_const, double p, std::size_t n);

// Heuristic search for r vertex-disjoint red cycles, each longer than
// min_length edges. Certificates are sound; absence means nothing.
struct RedCyclesResult {
    bool success = false;
    std::vector<std::vector<Vertex>> cycles; // each a cyclic vertex order
};

RedCyclesResult find_long_red_cycles(const TwoColouring& colouring, std::size_t r,
                                     std::size_t min_length,
                                     std::uint64_t seed = 0x6379636cULL);

bool verify_red_cycle(const TwoColouring& colouring, const std::vector<Vertex>& cycle);

} // namespace ramsey
