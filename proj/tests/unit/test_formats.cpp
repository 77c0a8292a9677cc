#include <gtest/gtest.h>

#include "blockset/formats.hpp"
#include "blockset/generators.hpp"
#include "fixtures.hpp"

using namespace blockset;
using namespace blockset::testing;
using namespace blockset::io;

TEST(ParseGraph, Examples) {
    EXPECT_EQ(parse_graph("p edge 2 1\ne 1 2\n"), k2());
    EXPECT_EQ(parse_graph("p edge 3 0\n"), Graph(3));
    EXPECT_THROW(parse_graph("p edge 2 1\ne 1 1\n"), ParseError);
}

TEST(ParseGraph, CommentsDuplicatesAndErrors) {
    std::vector<std::string> warnings;
    Graph g = parse_graph("c a comment\np edge 3 3\ne 1 2\nc\ne 2 1\ne 2 3\n", &warnings);
    EXPECT_EQ(g, p3());
    ASSERT_EQ(warnings.size(), 1u);
    EXPECT_NE(warnings[0].find("duplicate"), std::string::npos);
    EXPECT_THROW(parse_graph("p edge 2 1\ne 1 3\n"), ParseError);
    EXPECT_THROW(parse_graph("p graph 2 1\n"), ParseError);
    EXPECT_THROW(parse_graph("p edge 2 x\n"), ParseError);
    EXPECT_THROW(parse_graph(""), ParseError);
    EXPECT_THROW(parse_graph("p edge 2 1\nf 1 2\n"), ParseError);
}

TEST(ParseHypergraph, Examples) {
    EXPECT_EQ(parse_hypergraph("p hs 4 3\n1 2\n2 3\n3 4\n"), path3());
    EXPECT_THROW(parse_hypergraph("p hs 4 3\n1 2\n\n3 4\n"), ParseError);
    EXPECT_THROW(parse_hypergraph("p hs 4 3\n1 2\n2 3\n"), ParseError);
    EXPECT_THROW(parse_hypergraph("p hs 2 1\n1 5\n"), ParseError);
    EXPECT_EQ(parse_hypergraph("p hs 4 3\n1 2\n2 3\n3 4\n\n\n"), path3());
}

TEST(ParseTd, RoundTripAndErrors) {
    int n = 0;
    TreeDecomposition d = parse_td("c pace\ns td 3 3 4\nb 1 1 2 3\nb 2 1 3 4\nb 3 1 3\n1 3\n2 3\n", &n);
    EXPECT_EQ(n, 4);
    EXPECT_EQ(d.bags.size(), 3u);
    EXPECT_EQ(d.declared_width, 2);
    EXPECT_TRUE(validate_td(c4(), d));
    TreeDecomposition again = parse_td(print_td(d, 4));
    EXPECT_EQ(again.bags, d.bags);
    EXPECT_EQ(again.tree_edges, d.tree_edges);
    EXPECT_THROW(parse_td("s td 2 2 3\nb 1 1 2\n"), ParseError);
    EXPECT_THROW(parse_td("s td 1 2 3\nb 1 1 9\n"), ParseError);
    EXPECT_THROW(parse_td("s td 1 2 3\nb 1 1 2\n1 4\n"), ParseError);
}

TEST(Detect, HypergraphHeader) {
    EXPECT_TRUE(looks_like_hypergraph("c x\np hs 1 0\n"));
    EXPECT_FALSE(looks_like_hypergraph("p edge 1 0\n"));
}

class FormatRoundTrip : public ::testing::TestWithParam<int> {};

TEST_P(FormatRoundTrip, GraphsAndHypergraphs) {
    const int seed = GetParam();
    Graph g = gen::random_graph(1 + seed % 20, 0.3, seed);
    EXPECT_EQ(parse_graph(print_graph(g)), g);
    Hypergraph h = gen::random_hypergraph(1 + seed % 12, seed % 9, 4, seed);
    EXPECT_EQ(parse_hypergraph(print_hypergraph(h)), h);
    if (g.num_vertices() <= 12) {
        auto td = compute_td_small(g, 16);
        TreeDecomposition d = parse_td(print_td(*td, g.num_vertices()));
        EXPECT_TRUE(validate_td(g, d));
    }
}

INSTANTIATE_TEST_SUITE_P(Seeds, FormatRoundTrip, ::testing::Range(0, 30));
