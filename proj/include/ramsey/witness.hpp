#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ramsey/colouring.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

// Tagged evidence. Every witness re-verifies against the graph (and
// colouring, where relevant) it was produced from; detectors never emit one
// without checking it first.
struct PathWitness {
    std::vector<Vertex> vertices; // consecutive entries adjacent, all distinct
};

struct CliqueWitness {
    std::vector<Vertex> vertices; // pairwise adjacent
};

struct SeparatedSetsWitness {
    std::vector<Vertex> a, b; // disjoint, no edges between
};

struct PartitionWitness {
    std::vector<std::vector<Vertex>> parts; // parts[0] = A_0, parts[i] = A_i
};

using Witness = std::variant<PathWitness, CliqueWitness, SeparatedSetsWitness, PartitionWitness>;

// Three-valued search result. ExhaustivelyRefuted may only come from a
// complete search mode; heuristic modes that stall report
// HeuristicallyNotFound, which is never evidence of absence.
enum class VerdictKind { FoundWithCertificate, ExhaustivelyRefuted, HeuristicallyNotFound };

struct SearchVerdict {
    VerdictKind kind = VerdictKind::HeuristicallyNotFound;
    std::optional<Witness> witness;
    std::uint64_t nodes_explored = 0;
    std::chrono::microseconds elapsed{0};

    bool found() const { return kind == VerdictKind::FoundWithCertificate; }
    bool refuted() const { return kind == VerdictKind::ExhaustivelyRefuted; }
};

// Certificate checks.
bool verify_path(const Graph& g, const std::vector<Vertex>& path);
bool verify_path_of_length(const Graph& g, const std::vector<Vertex>& path, std::size_t edges);
bool verify_clique(const Graph& g, const std::vector<Vertex>& vertices);
bool verify_separated(const Graph& g, const std::vector<Vertex>& a, const std::vector<Vertex>& b);

// Text forms: "PATH v0 v1 ...", "CLIQUE v0 ...", "SETS A: ... B: ...".
std::string witness_to_text(const Witness& w);

} // namespace ramsey
