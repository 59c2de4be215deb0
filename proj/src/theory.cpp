#include "ramsey/theory.hpp"

#include <cmath>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace ramsey::theory {

double RegimeParams::x() const {
    return p * std::pow(static_cast<double>(n), 2.0 / (static_cast<double>(r) + 1.0));
}

double binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0.0;
    if (k > n - k) k = n - k;
    boost::multiprecision::cpp_int acc = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        acc *= static_cast<unsigned long long>(n - k + i);
        acc /= static_cast<unsigned long long>(i);
    }
    return acc.convert_to<double>();
}

std::size_t chvatal_ramsey(std::size_t r, std::size_t n) {
    if (r < 2 || n < 1) throw std::invalid_argument("chvatal_ramsey: need r >= 2, n >= 1");
    return r * n + 1;
}

std::size_t goodness_lower_bound(std::size_t chi, std::size_t g_order, std::size_t sigma) {
    if (chi < 2 || sigma < 1 || g_order < sigma)
        throw std::invalid_argument("goodness_lower_bound: need chi >= 2, 1 <= sigma <= g_order");
    return (chi - 1) * (g_order - 1) + sigma;
}

double expected_clique_count(std::size_t big_n, double p, std::size_t r) {
    double copies = binomial(big_n, r + 1);
    double pairs = binomial(r + 1, 2);
    return copies * std::pow(p, pairs);
}

double expected_boundary(std::size_t r, std::size_t n, std::size_t t, double p) {
    return static_cast<double>(r) * static_cast<double>(n) * static_cast<double>(t) * p;
}

double expected_pinned_cliques(std::size_t r, std::size_t n, std::size_t t, double p) {
    return static_cast<double>(t) * binomial(r * n, r) * std::pow(p, binomial(r + 1, 2));
}

RegimeThresholds regime_thresholds(std::size_t r, std::size_t n) {
    double nn = static_cast<double>(n);
    double rr = static_cast<double>(r);
    return {std::pow(nn, -2.0 / (rr + 1.0)), std::pow(nn, -2.0 / (rr + 2.0))};
}

TThresholds t_thresholds(std::size_t r, std::size_t n, double p) {
    if (p <= 0.0 || p > 1.0)
        throw std::invalid_argument("t_thresholds: p must be in (0, 1]");
    TThresholds out{};
    double rr = static_cast<double>(r);
    double x = p * std::pow(static_cast<double>(n), 2.0 / (rr + 1.0));
    if (x > 1.0)
        out.t_general = std::pow(p, -(rr + 1.0) / 2.0) * std::log(x);
    out.t_klr_scale = 1.0 / p;
    out.t_zero_specific =
        std::pow(p, -binomial(r + 1, 2)) * std::pow(static_cast<double>(n), -(rr - 1.0));
    return out;
}

} // namespace ramsey::theory
