#include "gcomp/graph.hpp"

#include <gtest/gtest.h>

#include <sstream>
#include <vector>

using gcomp::ComposeKind;
using gcomp::Edge;
using gcomp::FamilyKind;
using gcomp::Graph;
using gcomp::Vertex;

namespace {

Graph family(FamilyKind kind, int n) { return gcomp::build_family({kind, n, {}}); }

std::vector<Edge> edges_of(const Graph& g) { return {g.edges().begin(), g.edges().end()}; }

// Degree sequence, sorted; enough to tell the small graphs below apart.
std::vector<int> degrees(const Graph& g)
{
    std::vector<int> d;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        d.push_back(static_cast<int>(g.neighbours(v).size()));
    }
    std::sort(d.begin(), d.end());
    return d;
}

}  // namespace

TEST(Graph, RejectsMalformedEdges)
{
    EXPECT_THROW(Graph(3, {{0, 0}}), std::invalid_argument);
    EXPECT_THROW(Graph(3, {{0, 3}}), std::invalid_argument);
    EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    EXPECT_THROW(Graph(-1, {}), std::invalid_argument);
}

TEST(BuildFamily, CanonicalLabelings)
{
    EXPECT_EQ(edges_of(family(FamilyKind::path, 4)), (std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}}));
    const Graph d2 = family(FamilyKind::matching, 2);
    EXPECT_EQ(d2.vertex_count(), 4);
    EXPECT_EQ(edges_of(d2), (std::vector<Edge>{{0, 1}, {2, 3}}));
    EXPECT_EQ(edges_of(family(FamilyKind::cycle, 4)), (std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}, {2, 3}}));
    EXPECT_EQ(edges_of(family(FamilyKind::star, 4)), (std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}}));
    EXPECT_EQ(family(FamilyKind::complete, 5).edge_count(), 10U);
}

TEST(BuildFamily, RejectsInvalidSizes)
{
    EXPECT_THROW(family(FamilyKind::cycle, 2), std::invalid_argument);
    EXPECT_THROW(family(FamilyKind::path, 0), std::invalid_argument);
    EXPECT_THROW(family(FamilyKind::star, 1), std::invalid_argument);
    EXPECT_THROW(family(FamilyKind::complete, 0), std::invalid_argument);
}

TEST(BuildFamily, TreePayloadValidated)
{
    EXPECT_NO_THROW(gcomp::build_family({FamilyKind::tree, 4, {{0, 1}, {1, 2}, {1, 3}}}));
    // cycle plus isolated vertex: right edge count, not a tree
    EXPECT_THROW(gcomp::build_family({FamilyKind::tree, 4, {{0, 1}, {1, 2}, {0, 2}}}), std::invalid_argument);
    EXPECT_THROW(gcomp::build_family({FamilyKind::tree, 4, {{0, 1}, {1, 2}}}), std::invalid_argument);
}

TEST(ComposeGraphs, Examples)
{
    const Graph p2 = family(FamilyKind::path, 2);
    EXPECT_EQ(gcomp::compose_graphs(ComposeKind::disjoint, p2, p2), family(FamilyKind::matching, 2));

    // bridging endpoints 1 and 0 gives the path 0-1-2-3 exactly
    EXPECT_EQ(gcomp::compose_graphs(ComposeKind::bridge, p2, p2, 1, 0), family(FamilyKind::path, 4));

    const Graph k3 = family(FamilyKind::complete, 3);
    const Graph bowtie = gcomp::compose_graphs(ComposeKind::wedge, k3, k3, 2, 1);
    EXPECT_EQ(bowtie.vertex_count(), 5);
    EXPECT_EQ(bowtie.edge_count(), 6U);
    EXPECT_EQ(degrees(bowtie), (std::vector<int>{2, 2, 2, 2, 4}));
    EXPECT_EQ(bowtie.neighbours(2).size(), 4U);
}

TEST(ComposeGraphs, CountsAreAdditive)
{
    const Graph a = family(FamilyKind::cycle, 5);
    const Graph b = family(FamilyKind::star, 4);
    for (Vertex a1 = 0; a1 < 5; ++a1) {
        for (Vertex a2 = 0; a2 < 4; ++a2) {
            const Graph w = gcomp::compose_graphs(ComposeKind::wedge, a, b, a1, a2);
            EXPECT_EQ(w.vertex_count(), 8);
            EXPECT_EQ(w.edge_count(), 8U);
            const Graph br = gcomp::compose_graphs(ComposeKind::bridge, a, b, a1, a2);
            EXPECT_EQ(br.vertex_count(), 9);
            EXPECT_EQ(br.edge_count(), 9U);
            EXPECT_TRUE(br.adjacent(a1, 5 + a2));
        }
    }
    EXPECT_THROW(gcomp::compose_graphs(ComposeKind::wedge, a, b, 5, 0), std::invalid_argument);
    EXPECT_THROW(gcomp::compose_graphs(ComposeKind::bridge, a, b, 0, -1), std::invalid_argument);
    EXPECT_NO_THROW(gcomp::compose_graphs(ComposeKind::disjoint, a, b, 99, 99));
}

TEST(DeleteFromComplete, Examples)
{
    const Graph p3_like = gcomp::delete_from_complete(3, family(FamilyKind::path, 2));
    EXPECT_EQ(edges_of(p3_like), (std::vector<Edge>{{0, 2}, {1, 2}}));

    const Graph c4_like = gcomp::delete_from_complete(4, family(FamilyKind::matching, 2));
    EXPECT_EQ(c4_like.edge_count(), 4U);
    EXPECT_EQ(degrees(c4_like), (std::vector<int>{2, 2, 2, 2}));
    EXPECT_TRUE(c4_like.is_connected());

    EXPECT_THROW(gcomp::delete_from_complete(2, family(FamilyKind::complete, 3)), std::invalid_argument);
}

TEST(DeleteFromComplete, EdgeCount)
{
    for (int big_n = 5; big_n <= 9; ++big_n) {
        for (const Graph& g : {family(FamilyKind::cycle, 5), family(FamilyKind::path, 4), family(FamilyKind::star, 5)}) {
            EXPECT_EQ(gcomp::delete_from_complete(big_n, g).edge_count(),
                      static_cast<std::size_t>(big_n * (big_n - 1) / 2) - g.edge_count());
        }
    }
}

TEST(Subsets, Connectivity)
{
    const Graph p4 = family(FamilyKind::path, 4);
    const Graph c4 = family(FamilyKind::cycle, 4);
    EXPECT_TRUE(gcomp::is_connected_subset(p4, std::vector<Vertex>{0}));
    EXPECT_FALSE(gcomp::is_connected_subset(p4, std::vector<Vertex>{0, 2}));
    EXPECT_TRUE(gcomp::is_connected_subset(c4, std::vector<Vertex>{0, 1, 3}));
    EXPECT_THROW(gcomp::is_connected_subset(p4, std::vector<Vertex>{}), std::invalid_argument);
    EXPECT_THROW(gcomp::is_connected_subset(p4, std::vector<Vertex>{4}), std::invalid_argument);
    EXPECT_THROW(gcomp::is_connected_subset(p4, std::vector<Vertex>{1, 1}), std::invalid_argument);
}

TEST(Subsets, Badness)
{
    EXPECT_TRUE(gcomp::is_bad_subset(family(FamilyKind::path, 2), std::vector<Vertex>{0, 1}));
    EXPECT_FALSE(gcomp::is_bad_subset(family(FamilyKind::path, 3), std::vector<Vertex>{0, 2}));
    EXPECT_TRUE(gcomp::is_bad_subset(family(FamilyKind::cycle, 4), std::vector<Vertex>{0, 1, 2, 3}));
    EXPECT_THROW(gcomp::is_bad_subset(family(FamilyKind::path, 2), std::vector<Vertex>{}), std::invalid_argument);
}

TEST(Subsets, BadnessIsComplementDisconnection)
{
    const Graph g(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {4, 5}, {1, 4}});
    const Graph gc = g.complement();
    for (unsigned mask = 1; mask < 64; ++mask) {
        std::vector<Vertex> s;
        for (Vertex v = 0; v < 6; ++v) {
            if (mask >> v & 1U) {
                s.push_back(v);
            }
        }
        ASSERT_EQ(gcomp::is_bad_subset(g, s), !gcomp::is_connected_subset(gc, s));
        if (s.size() == 1) {
            ASSERT_FALSE(gcomp::is_bad_subset(g, s));
        }
        if (s.size() == 2) {
            ASSERT_EQ(gcomp::is_bad_subset(g, s), g.adjacent(s[0], s[1]));
        }
    }
}

TEST(EdgeList, ParsesCommentsAndBlankLines)
{
    std::istringstream in("# a triangle with a tail\n4 4\n\n0 1\n1 2  # middle\n2 0\n2 3\n");
    const Graph g = gcomp::parse_edge_list(in);
    EXPECT_EQ(g.vertex_count(), 4);
    EXPECT_EQ(g.edge_count(), 4U);
    EXPECT_TRUE(g.adjacent(3, 2));

    std::ostringstream out;
    gcomp::write_edge_list(out, g);
    std::istringstream again(out.str());
    EXPECT_EQ(gcomp::parse_edge_list(again), g);
}

TEST(EdgeList, RejectsBadInput)
{
    const auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return gcomp::parse_edge_list(in);
    };
    EXPECT_THROW(parse(""), std::invalid_argument);
    EXPECT_THROW(parse("3 1\n0 3\n"), std::invalid_argument);
    EXPECT_THROW(parse("3 2\n0 1\n1 0\n"), std::invalid_argument);
    EXPECT_THROW(parse("3 2\n0 1\n"), std::invalid_argument);
    EXPECT_THROW(parse("3 1\n0 x\n"), std::invalid_argument);
    EXPECT_THROW(parse("3 1\n0 1 2\n"), std::invalid_argument);
    EXPECT_THROW(parse("3 1\n1 1\n"), std::invalid_argument);
}
