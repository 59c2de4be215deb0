#pragma once

#include <cstddef>

namespace ramsey {

struct WilsonInterval {
    double low = 0.0;
    double high = 1.0;
};

// Wilson score interval for a binomial proportion; stable at fractions 0 and
// 1, which is where sweep curves live. z defaults to the 95% quantile.
WilsonInterval wilson_interval(std::size_t successes, std::size_t trials, double z = 1.959964);

} // namespace ramsey
