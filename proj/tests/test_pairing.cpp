#include "gauss4/pairing.hpp"

#include <gtest/gtest.h>

using namespace gauss4;

namespace {

GaussDiagram diagram(std::vector<std::vector<int>> circles, std::map<int, int> signs) {
    GaussDiagram g;
    g.circles = std::move(circles);
    g.signs = std::move(signs);
    return g;
}

const Configuration kPairX = make_config("pat.pair.X", {{1, 2, 1, 2}});
const Configuration kPairXDoubled = make_config("v3.1.D3", {{1, 2, 1, 2}}, {{1, 2}, {2, 1}});
const Configuration kJoin = make_config("pat.join", {{1}, {1}});
const Configuration kTriangle = make_config("tri", {{1, 2, 3, 1, 2, 3}});
const Configuration kChain3 = make_config("chain", {{1, 2, 1, 3, 2, 3}});

// The pairing example after the ML-diagram definition: a one-circle diagram
// whose chord 1 crosses chords 2 and 3 while 2 and 3 are parallel.
GaussDiagram example_diagram(int e1, int e2, int e3) {
    return diagram({{2, 1, 2, 3, 1, 3}}, {{1, e1}, {2, e2}, {3, e3}});
}

TEST(Pairing, DefinitionExample) {
    for (int e1 : {+1, -1})
        for (int e2 : {+1, -1})
            for (int e3 : {+1, -1}) {
                GaussDiagram G = example_diagram(e1, e2, e3);
                EXPECT_EQ(pair(G, kPairX), Rat(e1 * e2 + e1 * e3));
                EXPECT_EQ(pair(G, kPairXDoubled),
                          Rat(e1 * e1 * e2 + e1 * e2 * e2 + e1 * e1 * e3 + e1 * e3 * e3));
            }
}

TEST(Pairing, TrefoilCounts) {
    GaussDiagram G = diagram({{1, 2, 3, 1, 2, 3}}, {{1, 1}, {2, 1}, {3, 1}});
    EXPECT_EQ(pair(G, kPairX), Rat(3));        // three interleaved pairs
    EXPECT_EQ(pair(G, kPairXDoubled), Rat(6)); // each with two kappa classes
    EXPECT_EQ(pair(G, kTriangle), Rat(1));     // one kappa class
    EXPECT_EQ(pair(G, kChain3), Rat(0));       // occurrence gaps cannot match
}

TEST(Pairing, CircleCountMismatchIsZero) {
    GaussDiagram G = diagram({{1, 1}}, {{1, 1}});
    EXPECT_EQ(pair(G, kJoin), Rat(0));
    GaussDiagram H = diagram({{1}, {1}}, {{1, 1}});
    EXPECT_EQ(pair(H, kPairX), Rat(0));
}

TEST(Pairing, MoreChordsThanDiagramIsZero) {
    GaussDiagram G = diagram({{1, 1}}, {{1, 1}});
    EXPECT_EQ(pair(G, kPairX), Rat(0));
}

TEST(Pairing, HopfJoinValues) {
    GaussDiagram G = diagram({{1, 2}, {1, 2}}, {{1, 1}, {2, 1}});
    EXPECT_EQ(pair(G, kJoin), Rat(2)); // eps1 + eps2
    const Configuration two_join = make_config("pat.2join", {{1, 2}, {1, 2}});
    EXPECT_EQ(pair(G, two_join), Rat(1)); // single kappa class, eps1*eps2

    GaussDiagram M = diagram({{1, 2}, {1, 2}}, {{1, -1}, {2, 1}});
    EXPECT_EQ(pair(M, kJoin), Rat(0));
    EXPECT_EQ(pair(M, two_join), Rat(-1));
}

TEST(Pairing, RotationInvariance) {
    GaussDiagram G = diagram({{2, 1, 2, 3, 1, 3}}, {{1, 1}, {2, -1}, {3, 1}});
    Rat base = pair(G, kPairX);
    for (int r = 1; r < 6; ++r) {
        GaussDiagram R = G;
        std::rotate(R.circles[0].begin(), R.circles[0].begin() + r, R.circles[0].end());
        EXPECT_EQ(pair(R, kPairX), base);
    }
}

TEST(Pairing, ChordRelabelInvariance) {
    GaussDiagram G = example_diagram(1, -1, 1);
    const Configuration relabeled = make_config("x", {{7, 9, 7, 9}});
    EXPECT_EQ(pair(G, kPairX), pair(G, relabeled));
}

TEST(Pairing, BilinearExtension) {
    GaussSum gs;
    gs.terms.emplace_back(Rat(2), example_diagram(1, 1, 1));
    gs.terms.emplace_back(Rat(-1, 2), example_diagram(1, -1, -1));
    ConfigCombo combo;
    combo.add(Rat(3), kPairX);
    // <.,.> = 3 * (2 * (1+1) + (-1/2) * (-1-1)) = 3 * 5 = 15
    EXPECT_EQ(pair_sum(gs, combo), Rat(15));
    GaussSum empty;
    EXPECT_EQ(pair_sum(empty, combo), Rat(0));
}

TEST(Pairing, EmptyConfigMatchesBareCircleCount) {
    // A single bare circle embeds into any one-circle diagram.
    const Configuration bare = make_config("bare", {{}});
    GaussDiagram G = diagram({{1, 1}}, {{1, 1}});
    EXPECT_EQ(pair(G, bare), Rat(1));
}

} // namespace
