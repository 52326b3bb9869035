#include <algorithm>

#include <gtest/gtest.h>

#include "zforge/dot.hpp"
#include "zforge/errors.hpp"
#include "zforge/graph.hpp"

using namespace zforge;

TEST(Graph, AddAndLookup) {
    ColoredGraph g;
    VertexId a = g.add_vertex("a");
    VertexId b = g.add_vertex("b", Color::black);
    EXPECT_EQ(g.vertex_count(), 2u);
    EXPECT_EQ(g.name(a), "a");
    EXPECT_EQ(g.find("b"), std::optional<VertexId>(b));
    EXPECT_EQ(g.find("zz"), std::nullopt);
    EXPECT_EQ(g.vertex("a"), a);
    EXPECT_THROW(g.vertex("zz"), ShapeError);
}

TEST(Graph, RejectsBadVertices) {
    ColoredGraph g;
    g.add_vertex("a");
    EXPECT_THROW(g.add_vertex("a"), ShapeError);
    EXPECT_THROW(g.add_vertex(""), ShapeError);
}

TEST(Graph, EdgesAreSimpleAndSymmetric) {
    ColoredGraph g;
    VertexId a = g.add_vertex("a");
    VertexId b = g.add_vertex("b");
    VertexId c = g.add_vertex("c");
    g.add_edge(a, b);
    EXPECT_TRUE(g.has_edge(a, b));
    EXPECT_TRUE(g.has_edge(b, a));
    EXPECT_FALSE(g.has_edge(a, c));
    EXPECT_EQ(g.edge_count(), 1u);
    EXPECT_THROW(g.add_edge(a, b), ShapeError);
    EXPECT_THROW(g.add_edge(b, a), ShapeError);
    EXPECT_THROW(g.add_edge(a, a), ShapeError);
}

TEST(Graph, NeighborsSorted) {
    ColoredGraph g;
    VertexId a = g.add_vertex("a");
    VertexId b = g.add_vertex("b");
    VertexId c = g.add_vertex("c");
    VertexId d = g.add_vertex("d");
    g.add_edge(a, d);
    g.add_edge(a, b);
    g.add_edge(a, c);
    auto nbrs = g.neighbors(a);
    ASSERT_EQ(nbrs.size(), 3u);
    EXPECT_TRUE(std::is_sorted(nbrs.begin(), nbrs.end()));
}

TEST(Graph, Colors) {
    ColoredGraph g;
    VertexId a = g.add_vertex("a", Color::black);
    VertexId b = g.add_vertex("b");
    EXPECT_TRUE(g.black(a));
    EXPECT_FALSE(g.black(b));
    EXPECT_EQ(g.black_count(), 1u);
    EXPECT_FALSE(g.all_black());
    g.set_color(b, Color::black);
    EXPECT_TRUE(g.all_black());
    EXPECT_EQ(g.black_vertices(), (VertexSet{a, b}));

    ColoredGraph w = g.blank();
    EXPECT_EQ(w.black_count(), 0u);
    EXPECT_EQ(w.vertex_count(), 2u);
}

TEST(Graph, EmptyGraphIsAllBlack) {
    ColoredGraph g;
    EXPECT_TRUE(g.all_black());
    EXPECT_EQ(g.vertex_count(), 0u);
}

TEST(Dot, RendersColorsAndEdges) {
    ColoredGraph g;
    VertexId a = g.add_vertex("a", Color::black);
    VertexId b = g.add_vertex("b");
    g.add_edge(a, b);
    std::string dot = to_dot(g, "demo");
    EXPECT_NE(dot.find("graph \"demo\" {"), std::string::npos);
    EXPECT_NE(dot.find("\"a\" [fillcolor=black, fontcolor=white];"),
              std::string::npos);
    EXPECT_NE(dot.find("\"b\" [fillcolor=white];"), std::string::npos);
    EXPECT_NE(dot.find("\"a\" -- \"b\";"), std::string::npos);
}

TEST(Dot, QuotesSpecialCharacters) {
    ColoredGraph g;
    g.add_vertex("a\"b");
    std::string dot = to_dot(g);
    EXPECT_NE(dot.find("\"a\\\"b\""), std::string::npos);
}
