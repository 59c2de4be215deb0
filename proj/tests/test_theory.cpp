#include <doctest.h>

#include <cmath>

#include "ramsey/graph.hpp"
#include "ramsey/theory.hpp"
#include "oracles.hpp"

using namespace ramsey;

TEST_CASE("chvatal_ramsey instances") {
    CHECK(theory::chvatal_ramsey(2, 2) == 5);
    CHECK(theory::chvatal_ramsey(2, 3) == 7);
    CHECK(theory::chvatal_ramsey(3, 10) == 31);
    CHECK_THROWS_AS(theory::chvatal_ramsey(1, 3), std::invalid_argument);
}

TEST_CASE("goodness lower bound") {
    CHECK(theory::goodness_lower_bound(2, 5, 1) == 5);
    CHECK(theory::goodness_lower_bound(4, 10, 2) == 29);
    // chi = 3, |G| = n+1, sigma = 1 reproduces the clique/path formula
    for (std::size_t n = 1; n < 30; ++n)
        CHECK(theory::goodness_lower_bound(3, n + 1, 1) == theory::chvatal_ramsey(2, n));
}

TEST_CASE("binomial is exact where it matters") {
    CHECK(theory::binomial(5, 3) == doctest::Approx(10));
    CHECK(theory::binomial(24, 2) == doctest::Approx(276));
    CHECK(theory::binomial(4, 7) == 0.0);
    CHECK(theory::binomial(300, 4) == doctest::Approx(330791175.0));
    // values past 2^64 still come out right through arbitrary precision
    CHECK(theory::binomial(100, 50) == doctest::Approx(1.0089134454556417e29).epsilon(1e-12));
}

TEST_CASE("expected_clique_count closed forms") {
    CHECK(theory::expected_clique_count(5, 1.0, 2) == doctest::Approx(10));
    CHECK(theory::expected_clique_count(10, 0.5, 2) == doctest::Approx(15));
    CHECK(theory::expected_clique_count(50, 0.0, 3) == doctest::Approx(0));
}

TEST_CASE("expected_clique_count matches empirical means within 3 standard errors") {
    const std::size_t samples = 10'000;
    for (std::size_t r : {2, 3}) {
        for (double p : {0.1, 0.3, 0.5}) {
            const std::size_t n = r == 2 ? 22 : 16;
            double sum = 0, sumsq = 0;
            for (std::uint64_t s = 0; s < samples; ++s) {
                Graph g = sample_gnp(n, p, Seed{42 + r, s});
                auto c = static_cast<double>(oracle::count_cliques_bruteforce(g, r + 1));
                sum += c;
                sumsq += c * c;
            }
            double mean = sum / samples;
            double var = (sumsq - sum * sum / samples) / (samples - 1);
            double se = std::sqrt(var / samples);
            double expect = theory::expected_clique_count(n, p, r);
            INFO("r=", r, " p=", p, " mean=", mean, " expect=", expect, " se=", se);
            CHECK(std::abs(mean - expect) <= 3.0 * se + 1e-9);
        }
    }
}

TEST_CASE("expected_boundary") {
    CHECK(theory::expected_boundary(2, 30, 3, 0.01) == doctest::Approx(1.8));
    CHECK(theory::expected_boundary(2, 30, 0, 0.3) == doctest::Approx(0));
    CHECK(theory::expected_boundary(2, 30, 3, 0.0) == doctest::Approx(0));
}

TEST_CASE("expected_pinned_cliques") {
    CHECK(theory::expected_pinned_cliques(2, 12, 2, 0.25) == doctest::Approx(8.625));
    CHECK(theory::expected_pinned_cliques(3, 9, 0, 0.5) == doctest::Approx(0));
    CHECK(theory::expected_pinned_cliques(2, 2, 1, 1.0) == doctest::Approx(6));
}

TEST_CASE("regime thresholds") {
    auto a = theory::regime_thresholds(2, 64);
    CHECK(a.p_general == doctest::Approx(1.0 / 16.0));
    auto b = theory::regime_thresholds(2, 4096);
    CHECK(b.p_klr == doctest::Approx(1.0 / 64.0));
    auto c = theory::regime_thresholds(3, 81);
    CHECK(c.p_general == doctest::Approx(1.0 / 9.0)); // n^{-1/2}
}

TEST_CASE("t thresholds") {
    SUBCASE("worked instance") {
        auto tt = theory::t_thresholds(2, 64, 0.125);
        REQUIRE(tt.t_general.has_value());
        CHECK(*tt.t_general == doctest::Approx(std::pow(8.0, 1.5) * std::log(2.0)).epsilon(1e-9));
        CHECK(*tt.t_general == doctest::Approx(15.68).epsilon(1e-2));
        CHECK(tt.t_klr_scale == doctest::Approx(8.0));
    }
    SUBCASE("x <= 1 disables t_general") {
        auto tt = theory::t_thresholds(2, 64, 1.0 / 64.0);
        CHECK_FALSE(tt.t_general.has_value()); // x = 0.25
    }
    SUBCASE("substitutions") {
        auto tt = theory::t_thresholds(2, 100, 0.1);
        CHECK(tt.t_klr_scale == doctest::Approx(10.0));
        auto t1 = theory::t_thresholds(2, 50, 1.0);
        CHECK(t1.t_zero_specific == doctest::Approx(1.0 / 50.0)); // p = 1: n^{-1}
    }
    SUBCASE("domain") {
        CHECK_THROWS_AS(theory::t_thresholds(2, 10, 0.0), std::invalid_argument);
    }
}

TEST_CASE("regime params x") {
    theory::RegimeParams params{2, 64, 0.125, 0, 0};
    CHECK(params.x() == doctest::Approx(2.0));
}
