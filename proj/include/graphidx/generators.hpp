#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <variant>
#include <vector>

#include "graphidx/graph.hpp"
#include "graphidx/numeric.hpp"
#include "graphidx/rng.hpp"

namespace graphidx {

namespace detail {

inline void require_probability(double p, const char* name) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw InvalidArgument(std::string(name) + " must lie in [0, 1], got " + std::to_string(p));
    }
}

/// Growable adjacency used while a generator mutates edges.
class SortedAdjacency {
public:
    explicit SortedAdjacency(std::size_t n) : lists_(n) {}

    bool has(NodeId u, NodeId v) const {
        const auto& l = lists_[u];
        return std::binary_search(l.begin(), l.end(), v);
    }
    std::size_t degree(NodeId u) const { return lists_[u].size(); }

    void add(NodeId u, NodeId v) {
        insert(lists_[u], v);
        insert(lists_[v], u);
    }
    void remove(NodeId u, NodeId v) {
        erase(lists_[u], v);
        erase(lists_[v], u);
    }

    Graph freeze() const {
        std::vector<Edge> edges;
        for (NodeId u = 0; u < lists_.size(); ++u) {
            for (NodeId v : lists_[u]) {
                if (u < v) edges.emplace_back(u, v);
            }
        }
        return Graph::from_edge_list(lists_.size(), edges);
    }

private:
    static void insert(std::vector<NodeId>& l, NodeId v) { l.insert(std::lower_bound(l.begin(), l.end(), v), v); }
    static void erase(std::vector<NodeId>& l, NodeId v) { l.erase(std::lower_bound(l.begin(), l.end(), v)); }

    std::vector<std::vector<NodeId>> lists_;
};

inline std::uint64_t pair_key(NodeId u, NodeId v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | v;
}

}  // namespace detail

/// G(n, p): each of the C(n, 2) pairs is an edge independently with probability p.
inline Graph erdos_renyi(std::size_t n, double p, Seed seed) {
    detail::require_probability(p, "p");
    Rng rng(seed);
    std::vector<Edge> edges;
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v = u + 1; v < n; ++v) {
            if (rng.bernoulli(p)) edges.emplace_back(u, v);
        }
    }
    return Graph::from_edge_list(n, edges);
}

/// Ring lattice with floor(k/2) neighbors per side, then each lattice edge
/// (u, v) is rewired to (u, w) with probability beta, w uniform among nodes
/// that are neither u nor already adjacent to u. Rewiring is skipped when u
/// is adjacent to every other node.
inline Graph watts_strogatz(std::size_t n, std::size_t k, double beta, Seed seed) {
    if (n < 3) throw InvalidArgument("watts_strogatz requires n >= 3");
    if (k >= n) throw InvalidArgument("watts_strogatz requires k < n, got k=" + std::to_string(k));
    detail::require_probability(beta, "beta");
    Rng rng(seed);
    const std::size_t half = k / 2;
    detail::SortedAdjacency adj(n);
    for (std::size_t j = 1; j <= half; ++j) {
        for (NodeId u = 0; u < n; ++u) adj.add(u, static_cast<NodeId>((u + j) % n));
    }
    for (std::size_t j = 1; j <= half; ++j) {
        for (NodeId u = 0; u < n; ++u) {
            if (!rng.bernoulli(beta)) continue;
            if (adj.degree(u) >= n - 1) continue;
            NodeId w;
            do {
                w = static_cast<NodeId>(rng.below(n));
            } while (w == u || adj.has(u, w));
            adj.remove(u, static_cast<NodeId>((u + j) % n));
            adj.add(u, w);
        }
    }
    return adj.freeze();
}

/// Preferential attachment grown from a star on m+1 nodes (center 0). Each
/// new node attaches to m distinct targets drawn proportionally to degree.
inline Graph barabasi_albert(std::size_t n, std::size_t m, Seed seed) {
    if (m < 1 || m >= n) {
        throw InvalidArgument("barabasi_albert requires 1 <= m < n, got m=" + std::to_string(m) +
                              ", n=" + std::to_string(n));
    }
    Rng rng(seed);
    std::vector<Edge> edges;
    edges.reserve((n - m - 1) * m + m);
    // One entry per edge endpoint: a uniform draw is a degree-weighted draw.
    std::vector<NodeId> repeated;
    repeated.reserve(2 * ((n - m - 1) * m + m));
    repeated.insert(repeated.end(), m, 0);
    for (NodeId leaf = 1; leaf <= m; ++leaf) {
        edges.emplace_back(0, leaf);
        repeated.push_back(leaf);
    }
    std::vector<NodeId> targets;
    std::vector<char> chosen(n, 0);
    for (auto source = static_cast<NodeId>(m + 1); source < n; ++source) {
        targets.clear();
        while (targets.size() < m) {
            const NodeId t = repeated[rng.below(repeated.size())];
            if (chosen[t]) continue;
            chosen[t] = 1;
            targets.push_back(t);
        }
        for (NodeId t : targets) {
            chosen[t] = 0;
            edges.emplace_back(source, t);
            repeated.push_back(t);
        }
        repeated.insert(repeated.end(), m, source);
    }
    return Graph::from_edge_list(n, edges);
}

namespace detail {

inline constexpr int kPairingRestarts = 200;

/// One uniform pairing of d stubs per node. Returns true when simple.
inline bool pair_stubs(std::size_t n, std::size_t d, Rng& rng, std::vector<Edge>& edges) {
    std::vector<NodeId> stubs;
    stubs.reserve(n * d);
    for (NodeId u = 0; u < n; ++u) stubs.insert(stubs.end(), d, u);
    rng.shuffle(stubs.begin(), stubs.end());
    edges.clear();
    bool simple = true;
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(stubs.size());
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
        const NodeId u = stubs[i], v = stubs[i + 1];
        edges.emplace_back(u, v);
        if (simple && (u == v || !seen.insert(pair_key(u, v)).second)) simple = false;
    }
    return simple;
}

/// Removes loops and multi-edges from a pairing by degree-preserving double
/// swaps with random partner edges. Returns false when the proposal budget
/// runs out.
inline bool repair_pairing(std::size_t n, std::size_t d, Rng& rng, std::vector<Edge>& edges) {
    std::unordered_map<std::uint64_t, int> multiplicity;
    multiplicity.reserve(edges.size() * 2);
    std::vector<std::size_t> bad;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        if (multiplicity[pair_key(u, v)]++ > 0 || u == v) bad.push_back(i);
    }
    auto still_bad = [&](std::size_t i) {
        auto [u, v] = edges[i];
        return u == v || multiplicity[pair_key(u, v)] > 1;
    };
    auto absent = [&](NodeId a, NodeId b) {
        auto it = multiplicity.find(pair_key(a, b));
        return it == multiplicity.end() || it->second == 0;
    };
    std::uint64_t budget = 200ULL * n * d + 1000;
    while (!bad.empty()) {
        const std::size_t b = bad.back();
        if (!still_bad(b)) {
            bad.pop_back();
            continue;
        }
        if (budget-- == 0) return false;
        const std::size_t r = rng.below(edges.size());
        if (r == b) continue;
        auto [u, v] = edges[b];
        auto [x, y] = edges[r];
        if (rng.bernoulli(0.5)) std::swap(x, y);
        if (u == x || v == y || !absent(u, x) || !absent(v, y) || pair_key(u, x) == pair_key(v, y)) continue;
        --multiplicity[pair_key(u, v)];
        --multiplicity[pair_key(edges[r].first, edges[r].second)];
        ++multiplicity[pair_key(u, x)];
        ++multiplicity[pair_key(v, y)];
        edges[b] = {u, x};
        edges[r] = {v, y};
        bad.pop_back();
    }
    return true;
}

inline Graph complement(const Graph& g) {
    const std::size_t n = g.node_count();
    std::vector<Edge> edges;
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v = u + 1; v < n; ++v) {
            if (!g.has_edge(u, v)) edges.emplace_back(u, v);
        }
    }
    return Graph::from_edge_list(n, edges);
}

}  // namespace detail

/// Simple d-regular graph on n nodes from the pairing model.
///
/// Up to 200 full pairings are drawn, rejecting any with a loop or multi-edge;
/// if all fail, the last pairing is repaired by double-edge swaps. When
/// d > (n-1)/2 the complement of an (n-1-d)-regular sample is returned.
inline Graph random_regular(std::size_t n, std::size_t d, Seed seed) {
    if (d >= n && !(n == 0 && d == 0)) {
        throw InvalidArgument("random_regular requires d < n, got d=" + std::to_string(d) + ", n=" + std::to_string(n));
    }
    if ((n * d) % 2 != 0) {
        throw ParityError("random_regular requires n*d even, got n=" + std::to_string(n) + ", d=" + std::to_string(d));
    }
    if (d == 0) return Graph::from_edge_list(n, std::vector<Edge>{});
    if (2 * d > n - 1) return detail::complement(random_regular(n, n - 1 - d, seed));

    Rng rng(seed);
    std::vector<Edge> edges;
    for (int attempt = 0; attempt < detail::kPairingRestarts; ++attempt) {
        if (detail::pair_stubs(n, d, rng, edges)) return Graph::from_edge_list(n, edges);
    }
    if (!detail::repair_pairing(n, d, rng, edges)) {
        throw GenerationFailedError("random_regular: could not produce a simple " + std::to_string(d) +
                                    "-regular graph on " + std::to_string(n) + " nodes");
    }
    return Graph::from_edge_list(n, edges);
}

/// Nodes arrive one at a time; with probability p a node stays isolated,
/// otherwise it joins every earlier clique member.
inline Graph two_phase_clique_null(std::size_t n, double p, Seed seed) {
    detail::require_probability(p, "p");
    Rng rng(seed);
    std::vector<NodeId> clique;
    std::vector<Edge> edges;
    for (NodeId t = 0; t < n; ++t) {
        if (rng.bernoulli(p)) continue;
        for (NodeId c : clique) edges.emplace_back(c, t);
        clique.push_back(t);
    }
    return Graph::from_edge_list(n, edges);
}

/// Disjoint cycles with the given lengths, laid out on consecutive node ids.
inline Graph disjoint_polygons(const std::vector<std::size_t>& sizes) {
    std::vector<Edge> edges;
    NodeId base = 0;
    for (std::size_t s : sizes) {
        if (s < 3) throw InvalidArgument("polygon size must be >= 3, got " + std::to_string(s));
        for (NodeId i = 0; i < s; ++i) {
            edges.emplace_back(base + i, base + static_cast<NodeId>((i + 1) % s));
        }
        base += static_cast<NodeId>(s);
    }
    return Graph::from_edge_list(base, edges);
}

/// K_{n/2} on nodes [0, n/2) followed by n/6 disjoint triangles.
inline Graph clique_plus_triangles(std::size_t n) {
    if (n % 6 != 0 || n < 12) {
        throw InvalidArgument("clique_plus_triangles requires n divisible by 6 and n >= 12, got " + std::to_string(n));
    }
    std::vector<Edge> edges;
    const auto half = static_cast<NodeId>(n / 2);
    for (NodeId u = 0; u < half; ++u) {
        for (NodeId v = u + 1; v < half; ++v) edges.emplace_back(u, v);
    }
    for (NodeId t = half; t < n; t += 3) {
        edges.emplace_back(t, t + 1);
        edges.emplace_back(t + 1, t + 2);
        edges.emplace_back(t, t + 2);
    }
    return Graph::from_edge_list(n, edges);
}

/// m isolated nodes [0, m) plus a clique on [m, 2m).
inline Graph clique_union_null(std::size_t m) {
    if (m < 2) throw InvalidArgument("clique_union_null requires m >= 2, got " + std::to_string(m));
    std::vector<Edge> edges;
    for (auto u = static_cast<NodeId>(m); u < 2 * m; ++u) {
        for (NodeId v = u + 1; v < 2 * m; ++v) edges.emplace_back(u, v);
    }
    return Graph::from_edge_list(2 * m, edges);
}

// Parameter selection for a target edge density.

namespace detail {
inline void require_open_density(double p_star) {
    if (!(p_star > 0.0 && p_star < 1.0)) {
        throw InvalidArgument("p_star must lie in (0, 1), got " + std::to_string(p_star));
    }
}
}  // namespace detail

/// Even k with k/(n-1) close to p_star.
inline std::size_t ws_k_for_density(std::size_t n, double p_star) {
    if (n < 3) throw InvalidArgument("ws_k_for_density requires n >= 3");
    detail::require_open_density(p_star);
    auto k = static_cast<std::size_t>(round_half_up(p_star * static_cast<double>(n - 1)));
    if (k == 0) {
        throw DensityError("p_star " + std::to_string(p_star) + " too low for a Watts-Strogatz ring on " +
                           std::to_string(n) + " nodes");
    }
    k = std::clamp<std::size_t>(k, 2, n - 1);
    return k - k % 2;
}

/// Nearest integer to m1 = (2n - sqrt(4n^2 - 8 p n (n-1))) / 4.
inline std::size_t ba_m_for_density(std::size_t n, double p_star) {
    if (n < 3) throw InvalidArgument("ba_m_for_density requires n >= 3");
    detail::require_open_density(p_star);
    const auto x = static_cast<double>(n);
    const double disc = 4.0 * x * x - 8.0 * p_star * x * (x - 1.0);
    if (disc < 0.0) {
        throw DensityError("density " + std::to_string(p_star) + " unreachable by Barabasi-Albert on " +
                           std::to_string(n) + " nodes (negative discriminant)");
    }
    const double m1 = (2.0 * x - std::sqrt(disc)) / 4.0;
    const auto m = static_cast<std::size_t>(round_half_up(m1));
    if (m < 1 || m >= n) {
        throw DensityError("density " + std::to_string(p_star) + " gives Barabasi-Albert m=" + std::to_string(m) +
                           " outside [1, n) for n=" + std::to_string(n));
    }
    return m;
}

/// d with d/(n-1) close to p_star and n*d even.
inline std::size_t rr_d_for_density(std::size_t n, double p_star) {
    if (n < 2) throw InvalidArgument("rr_d_for_density requires n >= 2");
    detail::require_open_density(p_star);
    const double target = p_star * static_cast<double>(n - 1);
    auto d = static_cast<long long>(round_half_up(target));
    if ((static_cast<long long>(n) * d) % 2 != 0) {
        const double down = std::fabs(static_cast<double>(d - 1) - target);
        const double up = std::fabs(static_cast<double>(d + 1) - target);
        d = up < down ? d + 1 : d - 1;
    }
    if (d < 1 || d > static_cast<long long>(n) - 1) {
        throw DensityError("density " + std::to_string(p_star) + " gives regular degree " + std::to_string(d) +
                           " outside [1, n-1] for n=" + std::to_string(n));
    }
    return static_cast<std::size_t>(d);
}

// Model specifications.

struct ErdosRenyiParams {
    double p;
    friend bool operator==(const ErdosRenyiParams&, const ErdosRenyiParams&) = default;
};
struct WattsStrogatzParams {
    std::size_t k;
    double beta;
    friend bool operator==(const WattsStrogatzParams&, const WattsStrogatzParams&) = default;
};
struct BarabasiAlbertParams {
    std::size_t m;
    friend bool operator==(const BarabasiAlbertParams&, const BarabasiAlbertParams&) = default;
};
struct RandomRegularParams {
    std::size_t d;
    friend bool operator==(const RandomRegularParams&, const RandomRegularParams&) = default;
};
struct TwoPhaseParams {
    double p;
    friend bool operator==(const TwoPhaseParams&, const TwoPhaseParams&) = default;
};

using ModelParams =
    std::variant<ErdosRenyiParams, WattsStrogatzParams, BarabasiAlbertParams, RandomRegularParams, TwoPhaseParams>;

enum class ModelKind { ErdosRenyi, WattsStrogatz, BarabasiAlbert, RandomRegular, TwoPhaseCliqueNull };

/// A random model with fully resolved parameters.
struct ModelSpec {
    std::size_t n = 0;
    ModelParams params;

    ModelKind kind() const { return static_cast<ModelKind>(params.index()); }

    /// Throws InvalidArgument describing the first violated range.
    void validate() const {
        std::visit(
            [&](const auto& p) {
                using P = std::decay_t<decltype(p)>;
                if constexpr (std::is_same_v<P, ErdosRenyiParams> || std::is_same_v<P, TwoPhaseParams>) {
                    detail::require_probability(p.p, "p");
                } else if constexpr (std::is_same_v<P, WattsStrogatzParams>) {
                    if (n < 3 || p.k >= n) throw InvalidArgument("watts_strogatz requires n >= 3 and k < n");
                    detail::require_probability(p.beta, "beta");
                } else if constexpr (std::is_same_v<P, BarabasiAlbertParams>) {
                    if (p.m < 1 || p.m >= n) throw InvalidArgument("barabasi_albert requires 1 <= m < n");
                } else {
                    if (p.d >= n) throw InvalidArgument("random_regular requires d < n");
                    if ((n * p.d) % 2 != 0) throw ParityError("random_regular requires n*d even");
                }
            },
            params);
    }

    /// Canonical text form, e.g. `ws(n=100,k=10,beta=0.29999999999999999)`.
    std::string label() const {
        auto real = [](double v) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.17g", v);
            return std::string(buf);
        };
        const std::string ns = "n=" + std::to_string(n);
        return std::visit(
            [&](const auto& p) -> std::string {
                using P = std::decay_t<decltype(p)>;
                if constexpr (std::is_same_v<P, ErdosRenyiParams>) return "er(" + ns + ",p=" + real(p.p) + ")";
                else if constexpr (std::is_same_v<P, WattsStrogatzParams>)
                    return "ws(" + ns + ",k=" + std::to_string(p.k) + ",beta=" + real(p.beta) + ")";
                else if constexpr (std::is_same_v<P, BarabasiAlbertParams>)
                    return "ba(" + ns + ",m=" + std::to_string(p.m) + ")";
                else if constexpr (std::is_same_v<P, RandomRegularParams>)
                    return "rr(" + ns + ",d=" + std::to_string(p.d) + ")";
                else return "two-phase(" + ns + ",p=" + real(p.p) + ")";
            },
            params);
    }

    friend bool operator==(const ModelSpec&, const ModelSpec&) = default;
};

inline Graph generate(const ModelSpec& spec, Seed seed) {
    return std::visit(
        [&](const auto& p) -> Graph {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, ErdosRenyiParams>) return erdos_renyi(spec.n, p.p, seed);
            else if constexpr (std::is_same_v<P, WattsStrogatzParams>) return watts_strogatz(spec.n, p.k, p.beta, seed);
            else if constexpr (std::is_same_v<P, BarabasiAlbertParams>) return barabasi_albert(spec.n, p.m, seed);
            else if constexpr (std::is_same_v<P, RandomRegularParams>) return random_regular(spec.n, p.d, seed);
            else return two_phase_clique_null(spec.n, p.p, seed);
        },
        spec.params);
}

}  // namespace graphidx
