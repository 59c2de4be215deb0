#include "ramsey/stats.hpp"

#include <algorithm>
#include <cmath>

namespace ramsey {

WilsonInterval wilson_interval(std::size_t successes, std::size_t trials, double z) {
    if (trials == 0) return {0.0, 1.0};
    double n = static_cast<double>(trials);
    double phat = static_cast<double>(successes) / n;
    double z2 = z * z;
    double denom = 1.0 + z2 / n;
    double centre = (phat + z2 / (2.0 * n)) / denom;
    double half = (z / denom) * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n));
    WilsonInterval w;
    w.low = std::max(0.0, centre - half);
    w.high = std::min(1.0, centre + half);
    // tiny numeric slack must not push the point estimate outside
    w.low = std::min(w.low, phat);
    w.high = std::max(w.high, phat);
    return w;
}

} // namespace ramsey
