#pragma once

#include <cmath>
#include <span>

namespace graphidx {

/// Sum by recursive halving over a fixed split shape: the result depends only
/// on the values and their order.
inline double pairwise_sum(std::span<const double> values) {
    if (values.size() <= 8) {
        double s = 0.0;
        for (double v : values) s += v;
        return s;
    }
    const std::size_t half = values.size() / 2;
    return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

inline double round_half_up(double x) { return std::floor(x + 0.5); }

}  // namespace graphidx
