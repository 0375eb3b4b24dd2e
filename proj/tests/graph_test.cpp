#include <gtest/gtest.h>

#include "graphidx/graph.hpp"
#include "test_graphs.hpp"

using namespace graphidx;
using namespace graphidx::testing;

namespace {

Graph k4_minus_23() { return Graph::from_edge_list(4, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}); }

TEST(GraphTest, DuplicateAndReversedEdgesCollapse) {
    auto g = Graph::from_edge_list(3, std::vector<Edge>{{0, 1}, {1, 0}, {1, 2}});
    EXPECT_EQ(g.edge_count(), 2u);
    EXPECT_TRUE(g.has_edge(1, 0));
    EXPECT_FALSE(g.has_edge(0, 2));
}

TEST(GraphTest, CompleteGraphFromAllPairs) {
    auto g = complete_graph(4);
    EXPECT_EQ(g.edge_count(), 6u);
    for (NodeId i = 0; i < 4; ++i) EXPECT_EQ(degree(g, i), 3u);
}

TEST(GraphTest, RejectsLoopsAndOutOfRange) {
    EXPECT_THROW(Graph::from_edge_list(2, std::vector<Edge>{{0, 0}}), LoopError);
    EXPECT_THROW(Graph::from_edge_list(2, std::vector<Edge>{{0, 2}}), OutOfRangeError);
    auto g = path_graph(3);
    EXPECT_THROW(g.degree(3), OutOfRangeError);
    EXPECT_THROW(triangles_at(g, 5), OutOfRangeError);
    EXPECT_THROW(local_clustering(g, 3), OutOfRangeError);
}

TEST(GraphTest, Degrees) {
    EXPECT_EQ(degree(empty_graph(5), 2), 0u);
    EXPECT_EQ(degree(path_graph(3), 1), 2u);
}

TEST(GraphTest, TrianglesAt) {
    EXPECT_EQ(triangles_at(complete_graph(3), 1), 1u);
    EXPECT_EQ(triangles_at(star_graph(5), 0), 0u);
    EXPECT_EQ(triangles_at(k4_minus_23(), 0), 2u);
}

TEST(GraphTest, LocalClustering) {
    EXPECT_DOUBLE_EQ(local_clustering(complete_graph(3), 2), 1.0);
    EXPECT_DOUBLE_EQ(local_clustering(path_graph(3), 1), 0.0);
    EXPECT_DOUBLE_EQ(local_clustering(path_graph(3), 0), 0.0);
    EXPECT_DOUBLE_EQ(local_clustering(k4_minus_23(), 0), 2.0 / 3.0);
}

TEST(GraphTest, EdgeDensity) {
    EXPECT_DOUBLE_EQ(edge_density(complete_graph(4)), 1.0);
    EXPECT_DOUBLE_EQ(edge_density(empty_graph(10)), 0.0);
    EXPECT_DOUBLE_EQ(edge_density(cycle_graph(5)), 0.5);
    EXPECT_THROW(edge_density(empty_graph(1)), InvalidArgument);
}

TEST(GraphTest, RandomGraphProperties) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const std::size_t n = 1 + seed % 8;
        const double p = 0.15 + 0.1 * static_cast<double>(seed % 8);
        auto g = random_graph(n, p, seed);
        std::size_t degree_sum = 0;
        auto bulk = triangle_counts(g);
        auto c_all = local_clustering_all(g);
        for (NodeId i = 0; i < n; ++i) {
            degree_sum += g.degree(i);
            EXPECT_FALSE(g.has_edge(i, i));
            for (NodeId j : g.neighbors(i)) EXPECT_TRUE(g.has_edge(j, i));
            const auto expected = brute_triangles_at(g, i);
            EXPECT_EQ(triangles_at(g, i), expected);
            EXPECT_EQ(bulk[i], expected);
            const double c = local_clustering(g, i);
            EXPECT_EQ(c, c_all[i]);
            EXPECT_GE(c, 0.0);
            EXPECT_LE(c, 1.0);
            // C = 1 exactly when the neighborhood is a clique of size >= 2.
            const auto d = g.degree(i);
            const bool clique = d >= 2 && expected == d * (d - 1) / 2;
            EXPECT_EQ(c == 1.0, clique);
        }
        EXPECT_EQ(degree_sum, 2 * g.edge_count());
    }
}

TEST(GraphTest, TriangleKernelsAgree) {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const std::size_t n = 2 + seed % 70;
        auto g = random_graph(n, 0.1 + 0.8 * static_cast<double>(seed % 5) / 4.0, seed);
        auto forward = detail::triangle_counts_forward(g);
        EXPECT_EQ(forward, detail::triangle_counts_bitset(g));
        if (n <= 12) {
            for (NodeId i = 0; i < n; ++i) EXPECT_EQ(forward[i], brute_triangles_at(g, i));
        }
    }
}

TEST(GraphTest, EdgesAreCanonical) {
    auto g = Graph::from_edge_list(4, std::vector<Edge>{{3, 1}, {2, 0}, {1, 0}});
    EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {0, 2}, {1, 3}}));
}

}  // namespace
