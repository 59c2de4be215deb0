#include <doctest.h>

#include <cmath>
#include <sstream>

#include "ramsey/graph.hpp"
#include "ramsey/io.hpp"
#include "ramsey/rng.hpp"
#include "oracles.hpp"

using namespace ramsey;

TEST_CASE("gnp extremes: p = 0 empty, p = 1 complete") {
    Graph empty = sample_gnp(5, 0.0, Seed{123, 0});
    CHECK(empty.num_vertices() == 5);
    CHECK(empty.num_edges() == 0);

    Graph full = sample_gnp(5, 1.0, Seed{123, 0});
    CHECK(full.num_edges() == 10);
    for (Vertex u = 0; u < 5; ++u)
        for (Vertex v = u + 1; v < 5; ++v) CHECK(full.has_edge(u, v));
}

TEST_CASE("gnp determinism: equal seeds, equal graphs") {
    Graph a = sample_gnp(40, 0.31, Seed{77, 5});
    Graph b = sample_gnp(40, 0.31, Seed{77, 5});
    CHECK(a == b);
    Graph c = sample_gnp(40, 0.31, Seed{77, 6});
    CHECK_FALSE(a == c);
}

TEST_CASE("gnp edge count at N = 10^4 within 4 sigma of the binomial mean") {
    const std::size_t n = 10'000;
    Graph g = sample_gnp(n, 0.5, Seed{2024, 0});
    double pairs = static_cast<double>(n) * (n - 1) / 2.0;
    double mean = pairs * 0.5;
    double sigma = std::sqrt(pairs * 0.25);
    CHECK(std::abs(static_cast<double>(g.num_edges()) - mean) < 4.0 * sigma);
}

TEST_CASE("independent streams overlap like independent samples") {
    const std::size_t n = 2000;
    Graph a = sample_gnp(n, 0.5, Seed{9, 0});
    Graph b = sample_gnp(n, 0.5, Seed{9, 1});
    std::size_t overlap = 0;
    for (auto [u, v] : a.edges())
        if (b.has_edge(u, v)) ++overlap;
    double pairs = static_cast<double>(n) * (n - 1) / 2.0;
    double mean = 0.25 * pairs;
    double sigma = std::sqrt(pairs * 0.25 * 0.75);
    CHECK(std::abs(static_cast<double>(overlap) - mean) < 4.0 * sigma);
}

TEST_CASE("monotone coupling: p1 <= p2 gives nested edge sets") {
    PairUniforms uniforms(Seed{31337, 4});
    double grid[] = {0.05, 0.2, 0.45, 0.8};
    Graph prev = sample_gnp(60, grid[0], uniforms);
    for (int i = 1; i < 4; ++i) {
        Graph next = sample_gnp(60, grid[i], uniforms);
        for (auto [u, v] : prev.edges()) CHECK(next.has_edge(u, v));
        prev = next;
    }
}

TEST_CASE("adjacency invariants on a sampled graph") {
    Graph g = sample_gnp(50, 0.3, Seed{5, 5});
    std::size_t degree_sum = 0;
    for (Vertex v = 0; v < 50; ++v) {
        CHECK_FALSE(g.neighbours(v).test(v)); // no self-loops
        degree_sum += g.degree(v);
        g.neighbours(v).for_each_set([&](std::size_t w) { CHECK(g.neighbours(w).test(v)); });
    }
    CHECK(degree_sum == 2 * g.num_edges());
}

TEST_CASE("graph file round trip and canonical form") {
    SUBCASE("path graph from text") {
        std::istringstream in("3 2\n0 1\n1 2\n");
        Graph g = read_graph(in);
        CHECK(g.num_vertices() == 3);
        CHECK(g.num_edges() == 2);
        CHECK(g.has_edge(0, 1));
        CHECK(g.has_edge(1, 2));
        CHECK_FALSE(g.has_edge(0, 2));
    }
    SUBCASE("K_3 canonical output") {
        std::ostringstream out;
        write_graph(oracle::complete_graph(3), out);
        CHECK(out.str() == "3 3\n0 1\n0 2\n1 2\n");
    }
    SUBCASE("vertex out of range names the line") {
        std::istringstream in("3 1\n0 3\n");
        CHECK_THROWS_WITH_AS(read_graph(in), doctest::Contains("out of range, line 2"),
                             ParseError);
    }
    SUBCASE("duplicate edge rejected") {
        std::istringstream in("3 2\n0 1\n1 0\n");
        CHECK_THROWS_WITH_AS(read_graph(in), doctest::Contains("duplicate edge"), ParseError);
    }
    SUBCASE("malformed line rejected") {
        std::istringstream in("3 1\n0 x\n");
        CHECK_THROWS_AS(read_graph(in), ParseError);
    }
    SUBCASE("sampled graphs survive the round trip") {
        for (std::uint64_t s = 0; s < 20; ++s) {
            Graph g = sample_gnp(24, 0.3, Seed{400, s});
            std::ostringstream out;
            write_graph(g, out);
            std::istringstream in(out.str());
            CHECK(read_graph(in) == g);
        }
    }
}

TEST_CASE("colouring file round trip and errors") {
    Graph k3 = oracle::complete_graph(3);
    SUBCASE("one red edge") {
        std::istringstream in("0 1 R\n0 2 B\n1 2 B\n");
        TwoColouring col = read_colouring(in, k3);
        CHECK(col.is_red(0, 1));
        CHECK(col.is_blue(0, 2));
        CHECK(col.red_edge_count() == 1);
    }
    SUBCASE("uncoloured edge reported") {
        std::istringstream in("0 1 R\n0 2 B\n");
        CHECK_THROWS_WITH_AS(read_colouring(in, k3), doctest::Contains("1 2 uncoloured"),
                             ParseError);
    }
    SUBCASE("edge coloured twice") {
        std::istringstream in("0 1 R\n1 0 B\n0 2 B\n1 2 B\n");
        CHECK_THROWS_WITH_AS(read_colouring(in, k3), doctest::Contains("coloured twice"),
                             ParseError);
    }
    SUBCASE("edge absent from graph") {
        Graph p3 = oracle::path_graph(3);
        std::istringstream in("0 1 R\n0 2 B\n1 2 B\n");
        CHECK_THROWS_WITH_AS(read_colouring(in, p3), doctest::Contains("absent"), ParseError);
    }
    SUBCASE("random colourings round trip on sampled graphs") {
        for (std::uint64_t s = 0; s < 100; ++s) {
            Graph g = sample_gnp(16, 0.4, Seed{900, s});
            TwoColouring col(g);
            SmallRng rng(s);
            for (auto [u, v] : g.edges())
                if (rng.next_unit() < 0.5) col.set_colour(u, v, Colour::Red);
            std::ostringstream out;
            write_colouring(col, out);
            std::istringstream in(out.str());
            TwoColouring back = read_colouring(in, g);
            CHECK(back == col);
        }
    }
}

TEST_CASE("red and blue subgraphs partition the base") {
    Graph g = sample_gnp(20, 0.5, Seed{1, 2});
    TwoColouring col(g);
    SmallRng rng(7);
    for (auto [u, v] : g.edges())
        if (rng.next_unit() < 0.4) col.set_colour(u, v, Colour::Red);
    Graph red = col.red_subgraph();
    Graph blue = col.blue_subgraph();
    CHECK(red.num_edges() + blue.num_edges() == g.num_edges());
    for (auto [u, v] : g.edges()) {
        CHECK(red.has_edge(u, v) != blue.has_edge(u, v));
        CHECK(red.has_edge(u, v) == col.is_red(u, v));
    }
}
