#include <doctest.h>

#include "ramsey/adversary.hpp"
#include "ramsey/detectors.hpp"
#include "ramsey/theory.hpp"
#include "oracles.hpp"

using namespace ramsey;

namespace {

bool exact_avoiding(const TwoColouring& col, std::size_t r, std::size_t n) {
    return find_path_exact(col.red_subgraph(), n).refuted() &&
           find_clique(col.blue_subgraph(), r + 1).refuted();
}

} // namespace

TEST_CASE("hitting set on a triangle-free graph is the all-blue colouring") {
    auto res = strategy_hitting_set(oracle::cycle_graph(8), 2, 5);
    REQUIRE(res.success);
    CHECK(res.colouring->red_edge_count() == 0);
    CHECK(exact_avoiding(*res.colouring, 2, 5));
}

TEST_CASE("hitting set on a single triangle") {
    auto res = strategy_hitting_set(oracle::complete_graph(3), 2, 2);
    REQUIRE(res.success);
    CHECK(res.colouring->red_edge_count() == 1);
    CHECK(exact_avoiding(*res.colouring, 2, 2));
}

TEST_CASE("hitting set certifies whenever the triangle count stays below n") {
    std::size_t qualifying = 0;
    for (std::uint64_t s = 0; s < 60; ++s) {
        Graph g = sample_gnp(40, 0.08, Seed{4008, s});
        std::size_t triangles = oracle::count_cliques_bruteforce(g, 3);
        auto res = strategy_hitting_set(g, 2, 20);
        if (triangles < 20) {
            ++qualifying;
            REQUIRE(res.success);
            CHECK(res.colouring->red_edge_count() <= triangles);
            CHECK(exact_avoiding(*res.colouring, 2, 20));
        }
        // either way the two detector checks are recorded
        CHECK(res.verification.size() == 2);
    }
    CHECK(qualifying > 0);
}

TEST_CASE("boundary strategy on the edgeless graph has an empty boundary") {
    Graph g(2 * 4 + 2);
    auto res = strategy_boundary(g, 2, 4, 2);
    REQUIRE(res.success);
    CHECK(boundary_size(g, 2) == 0);
    CHECK(exact_avoiding(*res.colouring, 2, 4));
}

TEST_CASE("boundary strategy fails on the complete graph") {
    auto res = strategy_boundary(oracle::complete_graph(5), 2, 2, 1);
    CHECK_FALSE(res.success);
    CHECK(res.failure_reason.find("boundary too large") != std::string::npos);
    CHECK(boundary_size(oracle::complete_graph(5), 1) == 4); // rn = 4 > n = 2
}

TEST_CASE("boundary strategy wants exactly rn + t vertices") {
    CHECK_THROWS_AS(strategy_boundary(oracle::complete_graph(6), 2, 2, 1),
                    std::invalid_argument);
}

TEST_CASE("boundary success frequency tracks the expectation bound") {
    // E|X| <= rntp = 1.8 at r=2, n=30, t=3, p=0.01
    std::size_t successes = 0, trials = 80;
    double boundary_sum = 0;
    for (std::uint64_t s = 0; s < trials; ++s) {
        Graph g = sample_gnp(63, 0.01, Seed{63, s});
        boundary_sum += static_cast<double>(boundary_size(g, 3));
        auto res = strategy_boundary(g, 2, 30, 3);
        if (res.success) {
            ++successes;
            CHECK(exact_avoiding(*res.colouring, 2, 30));
            // e(A_0, A_j) = 0 for all j >= 2, recounted
            auto& parts = res.partition->parts;
            for (std::size_t j = 2; j < parts.size(); ++j)
                for (auto u : parts[0])
                    for (auto v : parts[j]) CHECK_FALSE(g.has_edge(u, v));
        }
    }
    CHECK(successes > trials / 2); // boundary rarely exceeds 30 when E|X| = 1.8
    CHECK(boundary_sum / static_cast<double>(trials) < 5 * 1.8 + 1);
}

TEST_CASE("pinned strategy: no pinned copies, W empty") {
    Graph g(2 * 4 + 1); // one triangle away from vertex 0, plus isolated vertices
    g.add_edge(3, 4);
    g.add_edge(4, 5);
    g.add_edge(3, 5);
    auto res = strategy_pinned_cliques(g, 2, 4, 1);
    REQUIRE(res.success);
    auto pc = pinned_cliques(g, 2, 1);
    CHECK(pc.copy_count == 0);
    CHECK(pc.outside_union.empty());
}

TEST_CASE("pinned strategy hides a triangle through vertex 0 inside A_1") {
    Graph g(2 * 4 + 1);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 2); // triangle through 0
    auto res = strategy_pinned_cliques(g, 2, 4, 1);
    REQUIRE(res.success);
    auto pc = pinned_cliques(g, 2, 1);
    CHECK(pc.copy_count == 1);
    CHECK(pc.outside_union == std::vector<Vertex>{1, 2});
    // every pinned copy's outside vertices sit inside A_1 (recounted)
    auto& a1 = res.partition->parts[1];
    for (auto v : pc.outside_union)
        CHECK(std::find(a1.begin(), a1.end(), v) != a1.end());
    CHECK(exact_avoiding(*res.colouring, 2, 4));
}

TEST_CASE("pinned copy counts track the closed-form expectation") {
    // E[X] = t C(rn, r) p^C(r+1,2) = 8.625 at r=2, n=12, t=2, p=0.25
    double sum = 0;
    const std::size_t trials = 400;
    for (std::uint64_t s = 0; s < trials; ++s) {
        Graph g = sample_gnp(26, 0.25, Seed{26, s});
        sum += static_cast<double>(pinned_cliques(g, 2, 2).copy_count);
    }
    double mean = sum / trials;
    CHECK(mean > 8.625 * 0.6);
    CHECK(mean < 8.625 * 1.4);
}

TEST_CASE("classifier: all-blue colouring sends everything to A_0") {
    Graph g = sample_gnp(30, 0.5, Seed{30, 1});
    TwoColouring col(g, Colour::Blue);
    std::vector<Bitset> cycles;
    Bitset b1(30), b2(30);
    for (Vertex v = 0; v < 10; ++v) b1.set(v);
    for (Vertex v = 10; v < 20; ++v) b2.set(v);
    cycles = {b1, b2};
    // alpha > gamma: a vertex with enough neighbours has too many blue ones
    auto part = classify_by_cycles(col, cycles, 0.0625, 0.0009765625, 0.5, 10);
    CHECK(part.parts[0].size() == 30);
    CHECK(part.conflicts.empty());
}

TEST_CASE("classifier: red cliques classify into their own parts") {
    Graph g(12);
    for (Vertex u = 0; u < 5; ++u)
        for (Vertex v = u + 1; v < 5; ++v) g.add_edge(u, v);
    for (Vertex u = 5; u < 10; ++u)
        for (Vertex v = u + 1; v < 10; ++v) g.add_edge(u, v);
    TwoColouring col(g, Colour::Red);
    Bitset b1(12), b2(12);
    for (Vertex v = 0; v < 5; ++v) b1.set(v);
    for (Vertex v = 5; v < 10; ++v) b2.set(v);
    // thresholds: alpha p n = 2 <= 4 = |B_i| - 1, gamma p n small
    auto part = classify_by_cycles(col, {b1, b2}, 0.1, 0.001, 0.5, 40);
    for (Vertex v = 0; v < 5; ++v)
        CHECK(std::find(part.parts[1].begin(), part.parts[1].end(), v) != part.parts[1].end());
    for (Vertex v = 5; v < 10; ++v)
        CHECK(std::find(part.parts[2].begin(), part.parts[2].end(), v) != part.parts[2].end());
    CHECK(part.parts[0].size() == 2); // the two isolated vertices
    CHECK(part.conflicts.empty());
}

TEST_CASE("classifier output partitions V and re-verifies against thresholds") {
    for (std::uint64_t s = 0; s < 10; ++s) {
        Graph g = sample_gnp(40, 0.4, Seed{4040, s});
        TwoColouring col(g);
        SmallRng rng(s);
        for (auto [u, v] : g.edges())
            if (rng.next_unit() < 0.5) col.set_colour(u, v, Colour::Red);
        Bitset b1(40), b2(40);
        for (Vertex v = 0; v < 12; ++v) b1.set(v);
        for (Vertex v = 12; v < 24; ++v) b2.set(v);
        double alpha = 0.0625, gamma = 0.25, p = 0.4;
        std::size_t n = 12;
        auto part = classify_by_cycles(col, {b1, b2}, alpha, gamma, p, n);

        std::size_t total = 0;
        for (auto& pt : part.parts) total += pt.size();
        CHECK(total == 40);

        Graph blue = col.blue_subgraph();
        const std::vector<Bitset> cyc{b1, b2};
        for (std::size_t i = 1; i < part.parts.size(); ++i)
            for (auto v : part.parts[i]) {
                CHECK(static_cast<double>(g.neighbour_count_in(v, cyc[i - 1])) >=
                      alpha * p * static_cast<double>(n));
                CHECK(static_cast<double>(blue.neighbour_count_in(v, cyc[i - 1])) <=
                      gamma * p * static_cast<double>(n));
            }
    }
}

TEST_CASE("classifier rejects overlapping cycle sets") {
    Graph g = oracle::complete_graph(6);
    TwoColouring col(g);
    Bitset b1(6), b2(6);
    b1.set(0);
    b1.set(1);
    b2.set(1);
    b2.set(2);
    CHECK_THROWS_AS(classify_by_cycles(col, {b1, b2}, 0.1, 0.01, 0.5, 3),
                    std::invalid_argument);
}

TEST_CASE("verify_structural_partition") {
    Graph g = oracle::complete_graph(6);
    TwoColouring col(g, Colour::Blue);
    SUBCASE("everything in A_0 passes vacuously when C/p covers N") {
        std::vector<std::vector<Vertex>> parts{{0, 1, 2, 3, 4, 5}, {}, {}};
        auto rep = verify_structural_partition(col, parts, 1024.0, 0.5, 2);
        CHECK(rep.pass);
    }
    SUBCASE("a red cross edge is named") {
        col.set_colour(1, 2, Colour::Red);
        std::vector<std::vector<Vertex>> parts{{0}, {1, 3}, {2, 4, 5}};
        auto rep = verify_structural_partition(col, parts, 1024.0, 0.5, 3);
        CHECK_FALSE(rep.pass);
        bool named = false;
        for (auto& v : rep.violations)
            if (v.what == "red_cross_edge" && v.detail == "1 2") named = true;
        CHECK(named);
    }
    SUBCASE("oversized parts and trash reported") {
        std::vector<std::vector<Vertex>> parts{{0, 1, 2}, {3, 4}, {5}};
        auto rep = verify_structural_partition(col, parts, 1.0, 1.0, 1);
        CHECK_FALSE(rep.pass); // |A_0| = 3 > C/p = 1 and |A_1| = 2 > n = 1
        CHECK(rep.violations.size() >= 2);
    }
    SUBCASE("boundary output passes the cross-edge check") {
        Graph h = sample_gnp(2 * 6 + 2, 0.05, Seed{62, 7});
        auto res = strategy_boundary(h, 2, 6, 2);
        if (res.success) {
            TwoColouring& c = *res.colouring;
            auto rep = verify_structural_partition(c, res.partition->parts, 1024.0, 0.05, 6);
            CHECK(rep.pass);
        }
    }
}

TEST_CASE("find_long_red_cycles recovers planted cycles") {
    // red = 2 disjoint C_20s, blue = a sprinkling of cross edges
    Graph g(40);
    for (Vertex v = 0; v < 20; ++v) g.add_edge(v, (v + 1) % 20);
    for (Vertex v = 0; v < 20; ++v) g.add_edge(20 + v, 20 + (v + 1) % 20);
    g.add_edge(0, 21);
    g.add_edge(5, 30);
    TwoColouring col(g, Colour::Red);
    col.set_colour(0, 21, Colour::Blue);
    col.set_colour(5, 30, Colour::Blue);

    auto res = find_long_red_cycles(col, 2, 15);
    REQUIRE(res.success);
    REQUIRE(res.cycles.size() == 2);
    Bitset used(40);
    for (auto& cyc : res.cycles) {
        CHECK(cyc.size() == 20);
        CHECK(verify_red_cycle(col, cyc));
        for (auto v : cyc) {
            CHECK_FALSE(used.test(v));
            used.set(v);
        }
    }
}

TEST_CASE("find_long_red_cycles fails honestly on the all-blue colouring") {
    Graph g = sample_gnp(30, 0.3, Seed{33, 3});
    TwoColouring col(g, Colour::Blue);
    auto res = find_long_red_cycles(col, 2, 5);
    CHECK_FALSE(res.success);
    CHECK(res.cycles.empty());
}

TEST_CASE("find_long_red_cycles certificates re-verify on dense random colourings") {
    Graph g = sample_gnp(400, 0.1, Seed{400, 9});
    TwoColouring col(g);
    SmallRng rng(17);
    for (auto [u, v] : g.edges())
        if (rng.next_unit() < 0.5) col.set_colour(u, v, Colour::Red);
    auto res = find_long_red_cycles(col, 2, 50);
    Bitset used(400);
    for (auto& cyc : res.cycles) {
        CHECK(cyc.size() > 50);
        CHECK(verify_red_cycle(col, cyc));
        for (auto v : cyc) {
            CHECK_FALSE(used.test(v));
            used.set(v);
        }
    }
    CHECK(res.cycles.size() <= 2);
}

TEST_CASE("heuristic verification mode flags its path check") {
    Graph g = sample_gnp(30, 0.1, Seed{31, 4});
    auto res = strategy_hitting_set(g, 2, 8, VerificationMode::Heuristic);
    REQUIRE(res.verification.size() == 2);
    CHECK(res.verification[1].exact); // clique check is always complete
    if (res.success) CHECK_FALSE(res.verification[0].exact);
}
