#include <gtest/gtest.h>

#include <sstream>

#include "graphidx/edge_list.hpp"
#include "test_graphs.hpp"

using namespace graphidx;

namespace {

Graph parse(const std::string& text) {
    std::istringstream in(text);
    return read_edge_list(in);
}

TEST(EdgeListTest, ReadsHeaderAndEdges) {
    auto g = parse("3 3\n0 1\n1 0\n1 2\n");
    EXPECT_EQ(g.node_count(), 3u);
    EXPECT_EQ(g.edge_count(), 2u);
}

TEST(EdgeListTest, RejectsLoopWithLineNumber) {
    try {
        parse("3 2\n0 1\n2 2\n");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3u);
    }
}

TEST(EdgeListTest, MalformedInputs) {
    EXPECT_THROW(parse(""), ParseError);
    EXPECT_THROW(parse("3\n"), ParseError);
    EXPECT_THROW(parse("3 2\n0 1\n"), ParseError);
    EXPECT_THROW(parse("3 1\n0 x\n"), ParseError);
    EXPECT_THROW(parse("3 1\n0 3\n"), ParseError);
    EXPECT_THROW(parse("3 1\n0 1\n1 2\n"), ParseError);
    EXPECT_THROW(parse("3 1\n0 1 2\n"), ParseError);
}

TEST(EdgeListTest, WriteThenReadIsIdentity) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto g = graphidx::testing::random_graph(15, 0.3, seed);
        std::stringstream buf;
        write_edge_list(buf, g);
        EXPECT_EQ(read_edge_list(buf), g);
    }
}

TEST(EdgeListTest, SkipsCommentsAndBlankLines) {
    auto g = parse("# header\n4 1\n\n  2 3\n");
    EXPECT_TRUE(g.has_edge(2, 3));
}

}  // namespace
