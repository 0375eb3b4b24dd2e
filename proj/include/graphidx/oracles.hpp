#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "graphidx/graph.hpp"
#include "graphidx/numeric.hpp"

namespace graphidx {

/// Binomial(trials, success_prob).
struct BinomialParams {
    std::uint64_t trials = 0;
    double success_prob = 0.5;

    BinomialParams(std::uint64_t m, double p) : trials(m), success_prob(p) {
        if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("binomial success probability must lie in [0, 1]");
    }
};

enum class ExpectationMethod { ClosedForm, DoubleSum, ExhaustiveEnumeration };

struct ExactExpectation {
    double value = 0.0;
    ExpectationMethod method = ExpectationMethod::ClosedForm;
    /// Total probability mass visited; 1 up to rounding for enumerations.
    double weight_sum = 1.0;
};

namespace detail {

inline double binomial_coefficient(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0.0;
    double c = 1.0;
    k = std::min(k, n - k);
    for (std::uint64_t i = 1; i <= k; ++i) c = c * static_cast<double>(n - k + i) / static_cast<double>(i);
    return c;
}

/// pmf(0..m) of Binomial(m, p) from log-gamma terms, 0 < p < 1.
inline std::vector<double> binomial_pmf(std::uint64_t m, double p) {
    std::vector<double> pmf(m + 1);
    const double log_p = std::log(p), log_q = std::log1p(-p);
    const double log_m_fact = std::lgamma(static_cast<double>(m) + 1.0);
    for (std::uint64_t k = 0; k <= m; ++k) {
        const auto kk = static_cast<double>(k);
        const auto rest = static_cast<double>(m - k);
        pmf[k] = std::exp(log_m_fact - std::lgamma(kk + 1.0) - std::lgamma(rest + 1.0) + kk * log_p + rest * log_q);
    }
    return pmf;
}

}  // namespace detail

/// E|X - Y| for independent X, Y ~ Binomial(m, p), by the O(m^2) double sum.
inline double mean_abs_diff_binomial(const BinomialParams& bp) {
    const double p = bp.success_prob;
    if (bp.trials == 0 || p == 0.0 || p == 1.0) return 0.0;
    const auto pmf = detail::binomial_pmf(bp.trials, p);
    // Symmetric in (k, l): sum the strict upper triangle and double it.
    std::vector<double> rows(pmf.size(), 0.0);
    for (std::size_t k = 0; k < pmf.size(); ++k) {
        double row = 0.0;
        for (std::size_t l = k + 1; l < pmf.size(); ++l) row += static_cast<double>(l - k) * pmf[l];
        rows[k] = pmf[k] * row;
    }
    return 2.0 * pairwise_sum(rows);
}

/// m * C(2m, m) / 4^m, exact for p = 1/2. The central binomial is an exact
/// big integer; the only rounding is the final conversion to double.
inline double mean_abs_diff_binomial_half(std::uint64_t m) {
    using boost::multiprecision::cpp_int;
    if (m == 0) return 0.0;
    cpp_int central = 1;
    for (std::uint64_t i = 1; i <= m; ++i) {
        central *= (m + i);
        central /= i;
    }
    cpp_int numerator = central * m;
    // numerator / 2^(2m), rounded once: keep the top 64 bits of the numerator.
    const auto bits = static_cast<long long>(boost::multiprecision::msb(numerator)) + 1;
    const long long drop = std::max(0LL, bits - 64);
    const auto top = static_cast<std::uint64_t>(numerator >> static_cast<unsigned>(drop));
    return std::ldexp(static_cast<double>(top), static_cast<int>(drop - 2 * static_cast<long long>(m)));
}

/// Leading-order growth 2 sqrt(m p (1-p) / pi).
inline double mean_abs_diff_binomial_asymptotic(const BinomialParams& bp) {
    const auto m = static_cast<double>(bp.trials);
    const double p = bp.success_prob;
    return 2.0 * std::sqrt(m * p * (1.0 - p) / std::numbers::pi);
}

/// E[DI_2] = 6 C(n, 3) p (1 - p) for G(n, p).
inline double expected_di2_er(std::size_t n, double p) {
    return 6.0 * detail::binomial_coefficient(n, 3) * p * (1.0 - p);
}

/// E|d_i - d_j| for one pair of G(n, p): the degree gap of two nodes is the
/// gap of two independent Binomial(n-2, p) variables.
inline double expected_di1_pair_er(std::size_t n, double p) {
    if (n < 3) return 0.0;
    return mean_abs_diff_binomial(BinomialParams(n - 2, p));
}

/// E[DI_1] = C(n, 2) E|d_i - d_j| for G(n, p).
inline double expected_di1_er(std::size_t n, double p) {
    return detail::binomial_coefficient(n, 2) * expected_di1_pair_er(n, p);
}

/// C(n, 2) * 2 sqrt((n-2) p (1-p)).
inline double expected_di1_upper_bound(std::size_t n, double p) {
    if (n < 2) return 0.0;
    return detail::binomial_coefficient(n, 2) * 2.0 * std::sqrt(static_cast<double>(n - 2) * p * (1.0 - p));
}

/// E[C(i)] = p (1 - (1-p)^(n-1) - (n-1) p (1-p)^(n-2)) for G(n, p).
inline double expected_local_clustering_er(std::size_t n, double p) {
    if (n < 3) return 0.0;
    const auto k = static_cast<double>(n - 1);
    const double q = 1.0 - p;
    return p * (1.0 - std::pow(q, k) - k * p * std::pow(q, k - 1.0));
}

/// Reference value 2(1-p)(1-p^2)/p that simulated CI_2 of G(n, p) settles
/// near for large n. Not an exact expectation.
inline double ci2_empirical_limit(double p) {
    if (!(p > 0.0 && p <= 1.0)) throw InvalidArgument("ci2_empirical_limit requires 0 < p <= 1");
    return 2.0 * (1.0 - p) * (1.0 - p * p) / p;
}

/// (n^2 - n) p (1 - p), the two-phase model's E[CI_1] when every clique
/// member is counted with C = 1.
inline double expected_ci1_two_phase(std::size_t n, double p) {
    const auto x = static_cast<double>(n);
    return (x * x - x) * p * (1.0 - p);
}

/// Exact two-phase E[CI_1]: E[N (n - N); n - N >= 3] with N ~ Binomial(n, p)
/// isolated nodes, since a clique of size <= 2 has C = 0 everywhere.
inline double expected_ci1_two_phase_exact(std::size_t n, double p) {
    std::vector<double> terms;
    for (std::size_t isolated = 0; isolated + 3 <= n; ++isolated) {
        const auto clique = static_cast<double>(n - isolated);
        const double weight = detail::binomial_coefficient(n, isolated) *
                              std::pow(p, static_cast<double>(isolated)) * std::pow(1.0 - p, clique);
        terms.push_back(weight * static_cast<double>(isolated) * clique);
    }
    return pairwise_sum(terms);
}

inline constexpr std::size_t kBruteForceMaxNodes = 6;

/// Sum over all labeled graphs on n nodes of statistic(G) p^|E| (1-p)^(C(n,2)-|E|).
inline ExactExpectation brute_force_er_expectation(std::size_t n, double p,
                                                   const std::function<double(const Graph&)>& statistic) {
    if (n < 2 || n > kBruteForceMaxNodes) {
        throw InvalidArgument("brute_force_er_expectation supports 2 <= n <= " + std::to_string(kBruteForceMaxNodes));
    }
    std::vector<Edge> pairs;
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    }
    const std::size_t count = std::size_t{1} << pairs.size();
    std::vector<double> weighted(count), weights(count);
    std::vector<Edge> edges;
    for (std::size_t mask = 0; mask < count; ++mask) {
        edges.clear();
        for (std::size_t b = 0; b < pairs.size(); ++b) {
            if (mask >> b & 1) edges.push_back(pairs[b]);
        }
        const double w = std::pow(p, static_cast<double>(edges.size())) *
                         std::pow(1.0 - p, static_cast<double>(pairs.size() - edges.size()));
        weights[mask] = w;
        weighted[mask] = w == 0.0 ? 0.0 : w * statistic(Graph::from_edge_list(n, edges));
    }
    return {pairwise_sum(weighted), ExpectationMethod::ExhaustiveEnumeration, pairwise_sum(weights)};
}

}  // namespace graphidx
