#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "graphidx/graph.hpp"

namespace graphidx {

/// Exponent applied to pairwise gaps. Any positive real; 1 and 2 have
/// closed-form fast paths.
class Alpha {
public:
    explicit Alpha(double value) : value_(value) {
        if (!(value > 0.0) || !std::isfinite(value)) {
            throw InvalidArgument("alpha must be a positive finite real, got " + std::to_string(value));
        }
    }

    double value() const noexcept { return value_; }
    bool is_one() const noexcept { return value_ == 1.0; }
    bool is_two() const noexcept { return value_ == 2.0; }

    friend bool operator==(const Alpha&, const Alpha&) = default;

private:
    double value_;
};

/// Sum over i < j of |v_i - v_j|^alpha by the O(n^2) double loop.
inline double pairwise_power_sum_direct(std::span<const double> values, Alpha alpha) {
    if (values.empty()) throw InvalidArgument("pairwise_power_sum: empty input");
    const double a = alpha.value();
    double total = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        for (std::size_t j = i + 1; j < values.size(); ++j) {
            const double gap = std::fabs(values[i] - values[j]);
            total += alpha.is_one() ? gap : alpha.is_two() ? gap * gap : std::pow(gap, a);
        }
    }
    return total;
}

/// Sum over i < j of |v_i - v_j|^alpha.
///
/// alpha = 1: sorted identity sum_i (2i-1-n) v_(i), folded so that ranks i and
/// n+1-i share one nonnegative term (n+1-2i)(v_(n+1-i) - v_(i)).
/// alpha = 2: n * sum d_i^2 - (sum d_i)^2 with d_i = v_i - v_0.
/// Otherwise the direct double loop.
inline double pairwise_power_sum(std::span<const double> values, Alpha alpha) {
    if (values.empty()) throw InvalidArgument("pairwise_power_sum: empty input");
    const std::size_t n = values.size();
    if (alpha.is_one()) {
        std::vector<double> sorted(values.begin(), values.end());
        std::sort(sorted.begin(), sorted.end());
        double total = 0.0;
        for (std::size_t i = 0; i < n / 2; ++i) {
            const double weight = static_cast<double>(n - 1 - 2 * i);
            total += weight * (sorted[n - 1 - i] - sorted[i]);
        }
        return total;
    }
    if (alpha.is_two()) {
        const double shift = values[0];
        double sum = 0.0, sum_sq = 0.0;
        for (double v : values) {
            const double d = v - shift;
            sum += d;
            sum_sq += d * d;
        }
        return std::max(0.0, static_cast<double>(n) * sum_sq - sum * sum);
    }
    return pairwise_power_sum_direct(values, alpha);
}

inline double pairwise_power_sum(const std::vector<double>& values, Alpha alpha) {
    return pairwise_power_sum(std::span<const double>(values), alpha);
}

/// sum_{k=2}^{n} (k-1)(n+1-k) (v_(k) - v_(k-1)) over the sorted values; equals
/// the alpha = 1 pairwise sum.
inline double telescoped_sum(std::span<const double> values) {
    if (values.empty()) throw InvalidArgument("telescoped_sum: empty input");
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    const std::size_t n = sorted.size();
    double total = 0.0;
    for (std::size_t k = 2; k <= n; ++k) {
        const double pairs = static_cast<double>(k - 1) * static_cast<double>(n + 1 - k);
        total += pairs * (sorted[k - 1] - sorted[k - 2]);
    }
    return total;
}

namespace detail {
inline void require_two_nodes(const Graph& g, const char* what) {
    if (g.node_count() < 2) throw InvalidArgument(std::string(what) + " requires at least 2 nodes");
}
}  // namespace detail

inline double degree_index(const Graph& g, Alpha alpha) {
    detail::require_two_nodes(g, "degree_index");
    auto deg = g.degrees();
    std::vector<double> values(deg.begin(), deg.end());
    return pairwise_power_sum(values, alpha);
}

inline double clustering_index(const Graph& g, Alpha alpha) {
    detail::require_two_nodes(g, "clustering_index");
    return pairwise_power_sum(local_clustering_all(g), alpha);
}

inline double clustering_index_telescoped(const Graph& g) {
    detail::require_two_nodes(g, "clustering_index_telescoped");
    auto c = local_clustering_all(g);
    return telescoped_sum(c);
}

/// Upper bound n^2/4 on the clustering index for alpha >= 1.
inline double ci_upper_bound(std::size_t n) {
    const auto x = static_cast<double>(n);
    return x * x / 4.0;
}

enum class IndexKind { Degree, Clustering };

inline std::string to_string(IndexKind kind) { return kind == IndexKind::Degree ? "DI" : "CI"; }

inline IndexKind parse_index_kind(const std::string& text) {
    if (text == "DI") return IndexKind::Degree;
    if (text == "CI") return IndexKind::Clustering;
    throw InvalidArgument("unknown index kind '" + text + "' (expected DI or CI)");
}

struct IndexSpec {
    IndexKind kind;
    Alpha alpha;

    friend bool operator==(const IndexSpec&, const IndexSpec&) = default;
};

/// Evaluates several indices on one graph, computing the degree and
/// clustering sequences at most once each.
inline std::vector<double> compute_indices(const Graph& g, std::span<const IndexSpec> specs) {
    detail::require_two_nodes(g, "index computation");
    std::vector<double> degrees, clustering;
    std::vector<double> out;
    out.reserve(specs.size());
    for (const auto& s : specs) {
        if (s.kind == IndexKind::Degree) {
            if (degrees.empty()) {
                auto d = g.degrees();
                degrees.assign(d.begin(), d.end());
            }
            out.push_back(pairwise_power_sum(degrees, s.alpha));
        } else {
            if (clustering.empty()) clustering = local_clustering_all(g);
            out.push_back(pairwise_power_sum(clustering, s.alpha));
        }
    }
    return out;
}

inline double compute_index(const Graph& g, const IndexSpec& spec) {
    return compute_indices(g, std::span<const IndexSpec>(&spec, 1)).front();
}

}  // namespace graphidx
