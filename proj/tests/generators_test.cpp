#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>

#include "graphidx/generators.hpp"
#include "graphidx/indices.hpp"
#include "test_graphs.hpp"

using namespace graphidx;
using namespace graphidx::testing;

namespace {

void expect_simple(const Graph& g) {
    for (NodeId u = 0; u < g.node_count(); ++u) {
        auto nb = g.neighbors(u);
        EXPECT_TRUE(std::adjacent_find(nb.begin(), nb.end()) == nb.end());
        for (NodeId v : nb) {
            EXPECT_NE(u, v);
            EXPECT_TRUE(g.has_edge(v, u));
        }
    }
}

TEST(ErdosRenyiTest, ExtremeProbabilities) {
    EXPECT_EQ(erdos_renyi(12, 1.0, Seed{1}), complete_graph(12));
    EXPECT_EQ(erdos_renyi(12, 0.0, Seed{1}), empty_graph(12));
    EXPECT_THROW(erdos_renyi(5, 1.5, Seed{1}), InvalidArgument);
    EXPECT_THROW(erdos_renyi(5, -0.1, Seed{1}), InvalidArgument);
}

TEST(ErdosRenyiTest, MeanDensity) {
    const int samples = 1000;
    double sum = 0.0;
    for (int s = 0; s < samples; ++s) sum += edge_density(erdos_renyi(100, 0.5, Seed{static_cast<std::uint64_t>(s)}));
    const double stderr_ = std::sqrt(0.25 / 4950.0 / samples);
    EXPECT_LE(std::fabs(sum / samples - 0.5), 4 * stderr_);
}

TEST(ErdosRenyiTest, SmallGraphLawChiSquare) {
    // 64 labelled graphs on 4 nodes; compare counts with p^|E| (1-p)^(6-|E|).
    const double p = 0.3;
    const int samples = 100000;
    std::map<std::vector<Edge>, int> counts;
    for (int s = 0; s < samples; ++s) ++counts[erdos_renyi(4, p, Seed{static_cast<std::uint64_t>(s) * 7919})
                                                    .edges()];
    std::vector<Edge> pairs{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    double chi2 = 0.0;
    for (int mask = 0; mask < 64; ++mask) {
        std::vector<Edge> e;
        for (int b = 0; b < 6; ++b)
            if (mask >> b & 1) e.push_back(pairs[b]);
        const double k = static_cast<double>(e.size());
        const double expected = samples * std::pow(p, k) * std::pow(1 - p, 6 - k);
        const double observed = counts.count(e) ? counts[e] : 0;
        chi2 += (observed - expected) * (observed - expected) / expected;
    }
    EXPECT_LT(chi2, 113.5);  // 99.99% quantile, 63 degrees of freedom
}

TEST(WattsStrogatzTest, NoRewiringIsRing) {
    EXPECT_EQ(watts_strogatz(6, 2, 0.0, Seed{3}), cycle_graph(6));
    EXPECT_EQ(watts_strogatz(6, 3, 0.0, Seed{3}), cycle_graph(6));
}

TEST(WattsStrogatzTest, EdgeCountConstant) {
    for (std::uint64_t s = 0; s < 60; ++s) {
        const std::size_t n = 3 + s % 30;
        const std::size_t k = s % n;
        const double beta = static_cast<double>(s % 11) / 10.0;
        auto g = watts_strogatz(n, k, beta, Seed{s});
        EXPECT_EQ(g.edge_count(), n * (k / 2)) << "n=" << n << " k=" << k;
        expect_simple(g);
    }
    // Dense ring: every node saturated, all rewirings are skipped.
    EXPECT_EQ(watts_strogatz(7, 6, 1.0, Seed{1}), complete_graph(7));
}

TEST(WattsStrogatzTest, FullRewiringStaysSimple) {
    for (std::uint64_t s = 0; s < 100; ++s) {
        auto g = watts_strogatz(20, 4, 1.0, Seed{s});
        expect_simple(g);
        EXPECT_EQ(g.edge_count(), 40u);
        for (NodeId u = 0; u < 20; ++u) EXPECT_GE(g.degree(u), 2u);
    }
}

TEST(WattsStrogatzTest, Errors) {
    EXPECT_THROW(watts_strogatz(10, 10, 0.1, Seed{}), InvalidArgument);
    EXPECT_THROW(watts_strogatz(2, 1, 0.1, Seed{}), InvalidArgument);
    EXPECT_THROW(watts_strogatz(10, 2, 1.1, Seed{}), InvalidArgument);
}

TEST(BarabasiAlbertTest, NoGrowthIsStar) { EXPECT_EQ(barabasi_albert(5, 4, Seed{9}), star_graph(5)); }

TEST(BarabasiAlbertTest, EdgeCount) {
    EXPECT_EQ(barabasi_albert(200, 11, Seed{1}).edge_count(), 2079u);  // (200 - 12) * 11 + 11
    for (std::uint64_t s = 0; s < 30; ++s) {
        const std::size_t n = 10 + s * 3, m = 1 + s % 8;
        EXPECT_EQ(barabasi_albert(n, m, Seed{s}).edge_count(), (n - m - 1) * m + m);
    }
}

TEST(BarabasiAlbertTest, AddedNodesHaveDegreeAtLeastM) {
    for (std::uint64_t s = 0; s < 100; ++s) {
        auto g = barabasi_albert(100, 3, Seed{s});
        expect_simple(g);
        for (NodeId u = 4; u < 100; ++u) EXPECT_GE(g.degree(u), 3u);
    }
}

TEST(BarabasiAlbertTest, Errors) {
    EXPECT_THROW(barabasi_albert(5, 5, Seed{}), InvalidArgument);
    EXPECT_THROW(barabasi_albert(5, 0, Seed{}), InvalidArgument);
}

TEST(RandomRegularTest, SmallCases) {
    EXPECT_EQ(random_regular(9, 0, Seed{1}), empty_graph(9));
    EXPECT_EQ(random_regular(4, 3, Seed{1}), complete_graph(4));
    EXPECT_EQ(random_regular(6, 5, Seed{2}), complete_graph(6));
}

TEST(RandomRegularTest, DegreesExact) {
    auto check = [](std::size_t n, std::size_t d, std::uint64_t s) {
        auto g = random_regular(n, d, Seed{s});
        expect_simple(g);
        for (NodeId u = 0; u < n; ++u) ASSERT_EQ(g.degree(u), d) << "n=" << n << " d=" << d;
    };
    for (std::uint64_t s = 0; s < 100; ++s) check(50, 5, s);
    // Pairings this dense are essentially never simple: exercises the swap repair.
    for (std::uint64_t s = 0; s < 20; ++s) check(30, 14, s);
    for (std::uint64_t s = 0; s < 10; ++s) check(40, 27, s);
    check(380, 190, 1);
}

TEST(RandomRegularTest, Errors) {
    EXPECT_THROW(random_regular(5, 3, Seed{}), ParityError);
    EXPECT_THROW(random_regular(5, 5, Seed{}), InvalidArgument);
}

TEST(TwoPhaseTest, ExtremesAndStructure) {
    EXPECT_EQ(two_phase_clique_null(10, 1.0, Seed{}), empty_graph(10));
    EXPECT_EQ(two_phase_clique_null(10, 0.0, Seed{}), complete_graph(10));
    for (std::uint64_t s = 0; s < 50; ++s) {
        auto g = two_phase_clique_null(30, 0.4, Seed{s});
        std::vector<NodeId> members;
        for (NodeId u = 0; u < 30; ++u)
            if (g.degree(u) > 0) members.push_back(u);
        if (members.size() == 1) continue;
        for (NodeId u : members) EXPECT_EQ(g.degree(u), members.size() - 1);
    }
    EXPECT_THROW(two_phase_clique_null(5, 2.0, Seed{}), InvalidArgument);
}

TEST(TwoPhaseTest, MeanClusteringIndex) {
    const int samples = 2000;
    std::vector<double> v;
    for (int s = 0; s < samples; ++s) {
        v.push_back(clustering_index(two_phase_clique_null(100, 0.5, Seed{static_cast<std::uint64_t>(s)}), Alpha{1}));
    }
    double mean = 0, var = 0;
    for (double x : v) mean += x;
    mean /= samples;
    for (double x : v) var += (x - mean) * (x - mean);
    const double se = std::sqrt(var / (samples - 1) / samples);
    EXPECT_LE(std::fabs(mean - 2475.0), 4 * se);
}

TEST(DeterministicGraphsTest, Polygons) {
    auto g = disjoint_polygons({3, 8, 3, 5});
    for (NodeId u = 0; u < g.node_count(); ++u) EXPECT_EQ(g.degree(u), 2u);
    EXPECT_EQ(degree_index(g, Alpha{1}), 0.0);
    EXPECT_EQ(clustering_index(disjoint_polygons({3, 3}), Alpha{1}), 0.0);
    EXPECT_EQ(clustering_index(disjoint_polygons({3, 3, 6}), Alpha{1}), 36.0);
    EXPECT_THROW(disjoint_polygons({3, 2}), InvalidArgument);
}

TEST(DeterministicGraphsTest, CliquePlusTriangles) {
    for (double a : {1.0, 2.0}) EXPECT_EQ(clustering_index(clique_plus_triangles(12), Alpha{a}), 0.0);
    EXPECT_EQ(degree_index(clique_plus_triangles(12), Alpha{1}), 108.0);
    EXPECT_EQ(degree_index(clique_plus_triangles(18), Alpha{1}), 486.0);
    EXPECT_THROW(clique_plus_triangles(13), InvalidArgument);
    EXPECT_THROW(clique_plus_triangles(6), InvalidArgument);
}

TEST(DeterministicGraphsTest, CliqueUnionNull) {
    EXPECT_EQ(clustering_index(clique_union_null(3), Alpha{1}), 9.0);
    EXPECT_EQ(clustering_index(clique_union_null(2), Alpha{1}), 0.0);
    EXPECT_EQ(degree_index(clique_union_null(10), Alpha{1}), 900.0);
    EXPECT_THROW(clique_union_null(1), InvalidArgument);
}

TEST(GeneratorDeterminismTest, SameSeedSameGraph) {
    std::vector<ModelSpec> specs{{60, ErdosRenyiParams{0.2}},
                                 {60, WattsStrogatzParams{6, 0.3}},
                                 {60, BarabasiAlbertParams{4}},
                                 {60, RandomRegularParams{7}},
                                 {60, TwoPhaseParams{0.5}}};
    for (const auto& spec : specs) {
        EXPECT_EQ(generate(spec, Seed{42}), generate(spec, Seed{42})) << spec.label();
        EXPECT_NE(generate(spec, Seed{42}), generate(spec, Seed{43})) << spec.label();
        expect_simple(generate(spec, Seed{42}));
    }
}

TEST(ModelSpecTest, ValidateAndLabel) {
    EXPECT_THROW((ModelSpec{5, RandomRegularParams{3}}.validate()), ParityError);
    EXPECT_THROW((ModelSpec{5, BarabasiAlbertParams{5}}.validate()), InvalidArgument);
    EXPECT_THROW((ModelSpec{5, WattsStrogatzParams{5, 0.1}}.validate()), InvalidArgument);
    EXPECT_NO_THROW((ModelSpec{5, ErdosRenyiParams{0.5}}.validate()));
    EXPECT_EQ((ModelSpec{100, WattsStrogatzParams{10, 0.5}}.label()), "ws(n=100,k=10,beta=0.5)");
    EXPECT_EQ((ModelSpec{7, TwoPhaseParams{0.5}}.kind()), ModelKind::TwoPhaseCliqueNull);
}

}  // namespace
