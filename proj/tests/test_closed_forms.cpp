#include "gcomp/closed_forms.hpp"
#include "gcomp/partition_oracle.hpp"

#include <gtest/gtest.h>

#include <vector>

using gcomp::BigNat;
using gcomp::CoefficientTable;
using gcomp::ComposeKind;
using gcomp::CompositionVector;
using gcomp::FamilyKind;
using gcomp::Graph;

namespace {

Graph family(FamilyKind kind, int n) { return gcomp::build_family({kind, n, {}}); }

CoefficientTable table_from(int n, std::initializer_list<std::tuple<int, int, int>> cells)
{
    CoefficientTable t(n);
    for (auto [j, m, v] : cells) {
        t.set(j, m, v);
    }
    return t;
}

}  // namespace

TEST(TreeSpectrum, Examples)
{
    EXPECT_EQ(gcomp::tree_spectrum(5)[2], 4);
    EXPECT_EQ(gcomp::tree_spectrum(1), (CompositionVector{1}));
    EXPECT_EQ(gcomp::tree_spectrum(4), (CompositionVector{1, 3, 3, 1}));
    EXPECT_EQ(gcomp::composition_spectrum(family(FamilyKind::star, 4)), gcomp::tree_spectrum(4));
    EXPECT_THROW(gcomp::tree_spectrum(0), std::invalid_argument);
}

TEST(CycleSpectrum, Examples)
{
    EXPECT_EQ(gcomp::cycle_spectrum(4)[2], 6);
    EXPECT_EQ(gcomp::cycle_spectrum(5)[1], 1);
    EXPECT_EQ(gcomp::cycle_spectrum(5)[3], 10);
    EXPECT_EQ(gcomp::cycle_spectrum(4), gcomp::composition_spectrum(family(FamilyKind::cycle, 4)));
    EXPECT_THROW(gcomp::cycle_spectrum(2), std::invalid_argument);
}

TEST(CompleteSpectrum, Examples)
{
    EXPECT_EQ(gcomp::complete_spectrum(4), (CompositionVector{1, 7, 6, 1}));
    EXPECT_EQ(gcomp::complete_spectrum(1), (CompositionVector{1}));
    EXPECT_EQ(gcomp::complete_spectrum(5)[3], 25);
}

TEST(Convolutions, DisjointUnion)
{
    EXPECT_EQ(gcomp::disjoint_union_spectrum({1, 1}, {1, 1}), (CompositionVector{0, 1, 2, 1}));
    EXPECT_EQ(gcomp::disjoint_union_spectrum({1}, {1}), (CompositionVector{0, 1}));
    EXPECT_EQ(gcomp::disjoint_union_spectrum({1, 3, 1}, {1}), (CompositionVector{0, 1, 3, 1}));
}

TEST(Convolutions, SharedVertex)
{
    const CompositionVector bowtie = gcomp::shared_vertex_spectrum({1, 3, 1}, {1, 3, 1});
    EXPECT_EQ(bowtie, (CompositionVector{1, 6, 11, 6, 1}));
    EXPECT_EQ(bowtie.total(), 25);
    const Graph k3 = family(FamilyKind::complete, 3);
    EXPECT_EQ(gcomp::composition_spectrum(gcomp::compose_graphs(ComposeKind::wedge, k3, k3, 0, 0)), bowtie);
    EXPECT_EQ(gcomp::shared_vertex_spectrum({1}, {1, 1}), (CompositionVector{1, 1}));
    EXPECT_EQ(gcomp::shared_vertex_spectrum({1, 1}, {1, 1}), gcomp::tree_spectrum(3));
}

TEST(Convolutions, Bridge)
{
    EXPECT_EQ(gcomp::bridge_spectrum({1, 1}, {1, 1}), (CompositionVector{1, 3, 3, 1}));
    EXPECT_EQ(gcomp::bridge_spectrum({1}, {1}), (CompositionVector{1, 1}));
    // K3 with a pendant vertex: C^3 counts the 4 edges, so the spectrum is 1,4,4,1
    const CompositionVector pendant = gcomp::bridge_spectrum({1, 3, 1}, {1});
    EXPECT_EQ(pendant, (CompositionVector{1, 4, 4, 1}));
    EXPECT_EQ(gcomp::bridge_spectrum({1}, {1, 3, 1}), pendant);
    const Graph g = gcomp::compose_graphs(ComposeKind::bridge, family(FamilyKind::complete, 3), Graph(1, {}), 1, 0);
    EXPECT_EQ(gcomp::composition_spectrum(g), pendant);
}

TEST(Convolutions, BridgeWithDisconnectedSecondGraph)
{
    // G2 = two isolated vertices; C^1(G2) = 0 must not be replaced by 1
    const Graph g2(2, {});
    const Graph g1 = family(FamilyKind::path, 3);
    const auto c1 = gcomp::composition_spectrum(g1);
    const auto c2 = gcomp::composition_spectrum(g2);
    const auto truth = gcomp::composition_spectrum(gcomp::compose_graphs(ComposeKind::bridge, g1, g2, 1, 0));
    EXPECT_EQ(gcomp::bridge_spectrum(c1, c2), truth);
    EXPECT_EQ(gcomp::bridge_spectrum(c2, c1), truth);
}

TEST(DeletionSpectrum, Examples)
{
    const auto p2 = table_from(2, {{2, 1, 1}});
    EXPECT_EQ(gcomp::deletion_spectrum(3, p2, 2), 2);

    const CoefficientTable nothing(0);
    for (int big_n = 1; big_n <= 8; ++big_n) {
        for (int k = 1; k <= big_n; ++k) {
            EXPECT_EQ(gcomp::deletion_spectrum(big_n, nothing, k), gcomp::stirling2(big_n, k));
        }
    }

    const auto d2 = table_from(4, {{2, 1, 2}, {4, 2, 1}});
    EXPECT_EQ(gcomp::deletion_spectrum(4, d2, 2), 6);
    EXPECT_EQ(gcomp::deletion_spectrum(4, d2, 2), gcomp::cycle_spectrum(4)[2]);

    EXPECT_THROW(gcomp::deletion_spectrum(3, CoefficientTable(4), 1), std::invalid_argument);
    EXPECT_THROW(gcomp::deletion_spectrum(3, p2, 0), std::invalid_argument);
    EXPECT_THROW(gcomp::deletion_spectrum(3, p2, 4), std::invalid_argument);
}

TEST(DeletionSpectrum, NegativeTotalIsAnInternalError)
{
    // not the table of any graph: three disjoint-looking edges on 2 vertices
    const auto bogus = table_from(2, {{2, 1, 3}});
    EXPECT_THROW(gcomp::deletion_spectrum(2, bogus, 1), std::logic_error);
}

TEST(PathTable, Examples)
{
    const auto p3 = gcomp::path_b_table(3);
    EXPECT_EQ(p3.entry(2, 1), 2);
    EXPECT_EQ(p3.entry(3, 1), 1);
    EXPECT_EQ(gcomp::path_b_table(4).entry(3, 1), 2);
    for (int n = 0; n <= 12; ++n) {
        EXPECT_EQ(gcomp::path_b_table(n).entry(0, 0), 1);
    }
    const auto p5 = gcomp::path_b_table(5);
    EXPECT_EQ(p5, table_from(5, {{2, 1, 4}, {3, 1, 3}, {4, 2, 3}, {5, 2, 2}}));
    EXPECT_THROW(gcomp::path_b_table(-1), std::invalid_argument);
}

TEST(CycleTable, Examples)
{
    const auto c4 = gcomp::cycle_b_table(4);
    EXPECT_EQ(c4.entry(2, 1), 4);
    EXPECT_EQ(c4.entry(4, 1), 1);
    EXPECT_EQ(c4, table_from(4, {{2, 1, 4}, {3, 1, 4}, {4, 1, 1}, {4, 2, 2}}));
    EXPECT_EQ(gcomp::cycle_b_table(5).entry(3, 1), 5);
    EXPECT_EQ(gcomp::cycle_b_table(3), table_from(3, {{2, 1, 3}, {3, 1, 1}}));
    EXPECT_THROW(gcomp::cycle_b_table(2), std::invalid_argument);
}

TEST(CycleTable, ExcludedCellsMatchOracle)
{
    for (int n : {3, 4}) {
        EXPECT_EQ(gcomp::cycle_b_table(n), gcomp::bad_coefficient_table(family(FamilyKind::cycle, n))) << n;
    }
}

TEST(StarDeletion, Examples)
{
    EXPECT_EQ(gcomp::star_deletion_spectrum(4, 2, 2), 4);
    const Graph k4_minus_star = gcomp::delete_from_complete(4, family(FamilyKind::star, 3));
    EXPECT_EQ(gcomp::composition_spectrum(k4_minus_star)[2], 4);
    const auto p2 = table_from(2, {{2, 1, 1}});
    for (int big_n = 2; big_n <= 8; ++big_n) {
        for (int k = 1; k <= big_n; ++k) {
            const BigNat expected = gcomp::stirling2(big_n, k) - gcomp::stirling2(big_n - 2, k - 1);
            EXPECT_EQ(gcomp::star_deletion_spectrum(big_n, 1, k), expected);
            EXPECT_EQ(gcomp::star_deletion_spectrum(big_n, 1, k), gcomp::deletion_spectrum(big_n, p2, k));
        }
    }
    EXPECT_EQ(gcomp::star_deletion_spectrum(3, 2, 3), 1);
    EXPECT_THROW(gcomp::star_deletion_spectrum(3, 3, 1), std::invalid_argument);
    EXPECT_THROW(gcomp::star_deletion_spectrum(3, 0, 1), std::invalid_argument);
}

TEST(MatchingDeletion, Examples)
{
    EXPECT_EQ(gcomp::matching_deletion_spectrum(4, 2, 2), 6);
    EXPECT_EQ(gcomp::matching_deletion_spectrum(4, 2, 3), 4);
    EXPECT_EQ(gcomp::matching_deletion_spectrum(4, 2, 3), gcomp::binomial(4, 3));
    for (int big_n = 1; big_n <= 8; ++big_n) {
        for (int k = 1; k <= big_n; ++k) {
            EXPECT_EQ(gcomp::matching_deletion_spectrum(big_n, 0, k), gcomp::stirling2(big_n, k));
        }
    }
    EXPECT_THROW(gcomp::matching_deletion_spectrum(3, 2, 1), std::invalid_argument);
}

TEST(MatchingDeletion, AlternativeSignReadingDisagrees)
{
    // K_2 minus its edge: two isolated vertices, so C^1 = 0
    EXPECT_EQ(gcomp::matching_deletion_spectrum(2, 1, 1), 0);
    EXPECT_EQ(gcomp::matching_deletion_alternative(2, 1, 1), 2);
}

TEST(SpectrumBounds, Examples)
{
    EXPECT_TRUE(gcomp::spectrum_bounds_check(gcomp::composition_spectrum(family(FamilyKind::cycle, 5)), true));
    EXPECT_TRUE(gcomp::spectrum_bounds_check(gcomp::tree_spectrum(6), true));
    EXPECT_TRUE(gcomp::spectrum_bounds_check(gcomp::complete_spectrum(6), true));
    EXPECT_FALSE(gcomp::spectrum_bounds_check(CompositionVector{1, 1, 1}, true));
    EXPECT_FALSE(gcomp::spectrum_bounds_check(CompositionVector{1, 4, 1}, true));
    EXPECT_THROW(gcomp::spectrum_bounds_check(CompositionVector{0, 1}, false), std::invalid_argument);
}

TEST(Spectra, RowSumsAreCompositionNumbers)
{
    for (int n = 3; n <= 30; ++n) {
        EXPECT_EQ(gcomp::complete_spectrum(n).total(), gcomp::bell(n));
        EXPECT_EQ(gcomp::tree_spectrum(n).total(), BigNat(1) << (n - 1));
        // every subset of the n edges except those of size exactly n-1
        EXPECT_EQ(gcomp::cycle_spectrum(n).total(), (BigNat(1) << n) - n);
    }
}
