#include <doctest.h>

#include "ramsey/detectors.hpp"
#include "ramsey/separation.hpp"
#include "oracles.hpp"

using namespace ramsey;

namespace {

TwoColouring random_colouring(const Graph& g, std::uint64_t seed, double red_fraction) {
    TwoColouring col(g);
    SmallRng rng(seed);
    for (auto [u, v] : g.edges())
        if (rng.next_unit() < red_fraction) col.set_colour(u, v, Colour::Red);
    return col;
}

} // namespace

TEST_CASE("dfs_separate splits across disconnected components") {
    Graph g(10); // two disjoint K_5s
    for (Vertex u = 0; u < 5; ++u)
        for (Vertex v = u + 1; v < 5; ++v) {
            g.add_edge(u, v);
            g.add_edge(u + 5, v + 5);
        }
    auto outcome = dfs_separate(g, 2, 3, 5);
    auto& split = std::get<SplitOutcome>(outcome);
    CHECK(split.a.size() == 2);
    CHECK(split.b.size() == 3);
    CHECK(verify_separated(g, split.a, split.b));
    for (auto v : split.a) CHECK(v < 5);
    for (auto v : split.b) CHECK(v >= 5);
}

TEST_CASE("dfs_separate on the edgeless graph") {
    Graph g(6);
    auto outcome = dfs_separate(g, 2, 3, 1);
    auto& split = std::get<SplitOutcome>(outcome);
    CHECK(split.a.size() == 2);
    CHECK(split.b.size() == 3);
    CHECK(verify_separated(g, split.a, split.b));
}

TEST_CASE("dfs_separate finds the long path in a path graph") {
    auto outcome = dfs_separate(oracle::path_graph(10), 3, 3, 6);
    auto& path = std::get<PathWitness>(outcome);
    CHECK(path.vertices.size() == 7); // exactly path_bound edges
    CHECK(verify_path_of_length(oracle::path_graph(10), path.vertices, 6));
}

TEST_CASE("dfs_separate rejects infeasible sizes") {
    CHECK_THROWS_AS(dfs_separate(oracle::path_graph(4), 3, 3, 2), InfeasibleSizes);
}

TEST_CASE("dfs_separate outcomes re-verify on sparse random graphs") {
    std::size_t paths = 0, splits = 0;
    for (std::uint64_t s = 0; s < 40; ++s) {
        Graph g = sample_gnp(60, 0.05, Seed{60, s});
        auto outcome = dfs_separate(g, 10, 20, 30);
        if (auto* path = std::get_if<PathWitness>(&outcome)) {
            ++paths;
            CHECK(verify_path_of_length(g, path->vertices, 30));
        } else {
            ++splits;
            auto& split = std::get<SplitOutcome>(outcome);
            CHECK(split.a.size() == 10);
            CHECK(split.b.size() == 20);
            CHECK(verify_separated(g, split.a, split.b));
        }
    }
    CHECK(paths + splits == 40);
}

TEST_CASE("dfs_separate honours the lemma counting: a + b + path_bound = n never violates") {
    // With |A| = a, |B| = b and bound L such that a + b + L = n, a stalled
    // stack cannot eat into A's quota; the operation must always answer.
    for (std::uint64_t s = 0; s < 60; ++s) {
        std::size_t n = 12 + s % 7;
        for (double p : {0.1, 0.35, 0.8}) {
            Graph g = sample_gnp(n, p, Seed{1200 + s, s});
            std::size_t a = 2 + s % 3;
            std::size_t b = 3 + s % 4;
            if (a + b + 4 > n) continue;
            std::size_t bound = n - a - b;
            CHECK_NOTHROW((void)dfs_separate(g, a, b, bound));
        }
    }
}

TEST_CASE("decompose_blue_partite trivial colourings") {
    SUBCASE("all-blue: the red graph is empty, any split works") {
        Graph g = sample_gnp(11, 0.6, Seed{11, 0}); // rn+(r+1)t = 2*4+3*1
        TwoColouring col(g, Colour::Blue);
        auto outcome = decompose_blue_partite(col, 2, 4, 1);
        auto& w = std::get<WeakPartiteWitness>(outcome);
        CHECK(w.sets.size() == 3);
        CHECK(verify_weak_partite(col, w.sets, 1));
    }
    SUBCASE("all-red K_11: a red Hamiltonian path fragment appears") {
        Graph g = oracle::complete_graph(11);
        TwoColouring col(g, Colour::Red);
        auto outcome = decompose_blue_partite(col, 2, 4, 1);
        auto& path = std::get<PathWitness>(outcome);
        CHECK(verify_path_of_length(g, path.vertices, 4));
        for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i)
            CHECK(col.is_red(path.vertices[i], path.vertices[i + 1]));
    }
}

TEST_CASE("decompose_blue_partite rejects the wrong vertex count") {
    Graph g = oracle::complete_graph(10);
    TwoColouring col(g);
    CHECK_THROWS_AS(decompose_blue_partite(col, 2, 4, 1), std::invalid_argument);
}

TEST_CASE("decompose_blue_partite cross-checked against exact path search") {
    for (std::uint64_t s = 0; s < 60; ++s) {
        Graph g = sample_gnp(11, 0.6, Seed{777, s});
        TwoColouring col = random_colouring(g, s, 0.5);
        auto outcome = decompose_blue_partite(col, 2, 4, 1);
        Graph red = col.red_subgraph();
        if (auto* path = std::get_if<PathWitness>(&outcome)) {
            CHECK(verify_path_of_length(red, path->vertices, 4));
            CHECK(find_path_exact(red, 4).found()); // exact search must agree
        } else {
            CHECK(verify_weak_partite(col, std::get<WeakPartiteWitness>(outcome).sets, 1));
        }
    }
}

TEST_CASE("decompose totality and size accounting across r, n, t") {
    for (std::size_t r : {2, 3}) {
        for (std::size_t n : {4, 6}) {
            for (std::size_t t : {1, 2}) {
                std::size_t nv = r * n + (r + 1) * t;
                for (std::uint64_t s = 0; s < 12; ++s) {
                    for (double density : {0.2, 0.5, 0.8}) {
                        Graph g = sample_gnp(nv, density, Seed{9000 + nv, s});
                        TwoColouring col = random_colouring(g, s * 31 + nv, 0.5);
                        auto outcome = decompose_blue_partite(col, r, n, t);
                        if (auto* path = std::get_if<PathWitness>(&outcome)) {
                            CHECK(verify_path_of_length(col.red_subgraph(), path->vertices, n));
                        } else {
                            auto& w = std::get<WeakPartiteWitness>(outcome);
                            REQUIRE(w.sets.size() == r + 1);
                            for (auto& part : w.sets) CHECK(part.size() == t);
                            CHECK(verify_weak_partite(col, w.sets, t));
                        }
                    }
                }
            }
        }
    }
}
