#pragma once

#include <cstddef>
#include <optional>

namespace ramsey::theory {

// Parameter bundle for the clique-vs-path regime: target clique K_{r+1},
// path measured in edges, N vertices, edge probability p, and the scaled
// probability x = p * n^{2/(r+1)}.
struct RegimeParams {
    std::size_t r = 2;
    std::size_t n = 1;
    double p = 0.0;
    std::size_t t = 0;
    std::size_t big_n = 0;

    double x() const;
};

// Exact C(n, k) in arbitrary precision, returned as a double.
double binomial(std::size_t n, std::size_t k);

// R(K_{r+1}, P_n) = r*n + 1 (tree case of the classical clique/tree formula,
// with P_n on n+1 vertices).
std::size_t chvatal_ramsey(std::size_t r, std::size_t n);

// (chi - 1)(g_order - 1) + sigma.
std::size_t goodness_lower_bound(std::size_t chi, std::size_t g_order, std::size_t sigma);

// E[#K_{r+1} in G(N,p)] = C(N, r+1) p^C(r+1,2).
double expected_clique_count(std::size_t big_n, double p, std::size_t r);

// Upper bound r*n*t*p on the expected boundary size of a t-set.
double expected_boundary(std::size_t r, std::size_t n, std::size_t t, double p);

// E[#K_{r+1} with exactly one vertex in a fixed t-set] = t C(rn, r) p^C(r+1,2).
double expected_pinned_cliques(std::size_t r, std::size_t n, std::size_t t, double p);

struct RegimeThresholds {
    double p_general; // n^{-2/(r+1)}
    double p_klr;     // n^{-2/(r+2)}
};

RegimeThresholds regime_thresholds(std::size_t r, std::size_t n);

struct TThresholds {
    std::optional<double> t_general; // p^{-(r+1)/2} log x, needs x > 1
    double t_klr_scale;              // 1/p
    double t_zero_specific;          // p^{-C(r+1,2)} n^{-(r-1)}
};

TThresholds t_thresholds(std::size_t r, std::size_t n, double p);

} // namespace ramsey::theory
