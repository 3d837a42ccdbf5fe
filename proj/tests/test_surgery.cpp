#include "gauss4/surgery.hpp"

#include <gtest/gtest.h>

using namespace gauss4;

namespace {

const char* kTrefoil = "O1+ U2+ O3+ U1+ O2+ U3+";

TEST(Alpha, DescendingFixedPoint) {
    LinkCode D = parse_link("O1+ O2+ O3+ U1+ U2+ U3+");
    EXPECT_EQ(alpha_unknot(D), D);
}

TEST(Alpha, TrefoilSwitchSet) {
    LinkCode K = parse_link(kTrefoil);
    LinkCode A = alpha_unknot(K);
    EXPECT_EQ(serialize(A), "O1+ O2- O3+ U1+ U2- U3+\n");
    // idempotent
    EXPECT_EQ(alpha_unknot(A), A);
    // alternate rule gives an ascending diagram, also a fixed point of itself
    LinkCode B = alpha_unknot(K, AlphaRule::FirstEncounterUnder);
    EXPECT_EQ(alpha_unknot(B, AlphaRule::FirstEncounterUnder), B);
}

TEST(Alpha, JoiningRule) {
    // Lower-indexed component ends on top under the default rule.
    LinkCode H = parse_link("O1+ U2+\nU1+ O2+");
    LinkCode A = alpha_unknot(H);
    EXPECT_EQ(serialize(A), "O1+ O2-\nU1+ U2-\n");
}

TEST(Smooth, GammaIsIdentity) {
    LinkCode K = parse_link(kTrefoil);
    EXPECT_EQ(smooth(K, {1}, "C"), K);
    EXPECT_EQ(smooth(K, {1, 2, 3}, "CCC"), K);
    LinkCode H = parse_link("O1+ U2+\nU1+ O2+");
    EXPECT_EQ(smooth(H, {1, 2}, "CC"), H);
}

TEST(Smooth, Errors) {
    LinkCode K = parse_link(kTrefoil);
    EXPECT_THROW(smooth(K, {1, 2}, "A"), LengthMismatch);
    EXPECT_THROW(smooth(K, {9}, "A"), UnknownCrossing);
    EXPECT_THROW(smooth(K, {1}, "D"), LengthMismatch);
    EXPECT_THROW(smooth(K, {1, 1}, "AA"), LengthMismatch);
}

TEST(Smooth, SeifertSelfCrossingSplits) {
    LinkCode K = parse_link(kTrefoil);
    LinkCode Q = smooth(K, {1}, "A");
    EXPECT_EQ(Q.component_count(), 2u);
    // Remaining crossings join the two circles; signs are untouched.
    EXPECT_EQ(serialize(Q), "U2+ O3+\nO2+ U3+\n");
}

TEST(Smooth, SeifertJoiningCrossingMerges) {
    LinkCode H = parse_link("O1+ U2+\nU1+ O2+");
    LinkCode Q = smooth(H, {1}, "A");
    EXPECT_EQ(Q.component_count(), 1u);
    EXPECT_EQ(serialize(Q), "U2+ O2+\n");
}

TEST(Smooth, BetaReversesArcAndFlipsLoneSigns) {
    LinkCode K = parse_link(kTrefoil);
    LinkCode Q = smooth(K, {1}, "B");
    // One circle; the arc between the passes of crossing 1 is reversed, so
    // crossings 2 and 3 each have exactly one reversed pass and flip sign.
    EXPECT_EQ(serialize(Q), "U2- O3- U3- O2-\n");
}

// The K^[n] cardinality table pins down which letter is which.
TEST(Smooth, ComponentCountTable) {
    LinkCode K = parse_link(kTrefoil);
    // self crossing, alpha
    EXPECT_EQ(component_count_after(K, {1}, "A"), 2u); // K1

    LinkCode H = parse_link("O1+ U2+\nU1+ O2+");
    EXPECT_EQ(component_count_after(H, {1}, "A"), 1u); // K2

    // interleaved pair on a knot
    EXPECT_EQ(component_count_after(K, {1, 2}, "AC"), 2u); // K3
    EXPECT_EQ(component_count_after(K, {1, 2}, "CA"), 2u); // K4
    EXPECT_EQ(component_count_after(K, {1, 2}, "BB"), 2u); // K5

    // non-interleaved pair on a knot (two kinks)
    LinkCode KK = parse_link("O1+ U1+ O2+ U2+");
    EXPECT_EQ(component_count_after(KK, {1, 2}, "AC"), 2u); // K6
    EXPECT_EQ(component_count_after(KK, {1, 2}, "CA"), 2u); // K7
    EXPECT_EQ(component_count_after(KK, {1, 2}, "AA"), 3u); // K8

    // two joining crossings between two circles
    EXPECT_EQ(component_count_after(H, {1, 2}, "BB"), 2u); // K9

    // one self plus one joining crossing on a 2-component link
    LinkCode SJ = parse_link("O2+ U1+ U2+\nO1+");
    EXPECT_EQ(component_count_after(SJ, {2, 1}, "CA"), 1u); // K10
    EXPECT_EQ(component_count_after(SJ, {2, 1}, "AA"), 2u); // K11
    EXPECT_EQ(component_count_after(SJ, {2, 1}, "CC"), 2u); // K12
    EXPECT_EQ(component_count_after(SJ, {2, 1}, "AC"), 3u); // K13

    // three-component chain
    LinkCode C3 = parse_link("O1+\nU1+ O2+\nU2+");
    EXPECT_EQ(component_count_after(C3, {1, 2}, "AA"), 1u); // K14
    EXPECT_EQ(component_count_after(C3, {1, 2}, "CA"), 2u); // K15
    EXPECT_EQ(component_count_after(C3, {1, 2}, "AC"), 2u); // K16

    // self crossing on one component of a 2-component link
    LinkCode SU = parse_link("O1+ U1+\nO2+ U2+");
    EXPECT_EQ(component_count_after(SU, {1}, "A"), 3u); // K17
}

TEST(Smooth, AllEmptyResultKeepsCircles) {
    LinkCode KK = parse_link("O1+ U1+");
    LinkCode Q = smooth(KK, {1}, "A");
    EXPECT_EQ(Q.component_count(), 2u);
    EXPECT_TRUE(Q.components[0].empty());
    EXPECT_TRUE(Q.components[1].empty());
}

TEST(SplitComponents, FormalSum) {
    LinkCode H = parse_link("O1+ U2+\nU1+ O2+");
    LinkCodeSum S = split_components(H);
    ASSERT_EQ(S.terms.size(), 2u);
    EXPECT_EQ(S.terms[0].first, Rat(1));
    EXPECT_TRUE(S.terms[0].second.components[0].empty());
    EXPECT_TRUE(S.terms[1].second.components[0].empty());

    LinkCode K = parse_link(kTrefoil);
    LinkCodeSum SK = split_components(K);
    ASSERT_EQ(SK.terms.size(), 1u);
    EXPECT_EQ(SK.terms[0].second, K);
}

TEST(ROperator, ZeroCoefficientSkipped) {
    LinkCode K = parse_link(kTrefoil);
    WordCombo combo;
    combo.add(Rat(0), "C");
    EXPECT_TRUE(R(K, {1}, combo).terms.empty());
}

TEST(ROperator, GammaMinusAlphaTermCount) {
    LinkCode K = parse_link(kTrefoil);
    WordCombo combo;
    combo.add(Rat(1), "C").add(Rat(-1), "A");
    GaussSum r = R(K, {1}, combo);
    // C keeps one component, A splits into two: three terms total.
    ASSERT_EQ(r.terms.size(), 3u);
    EXPECT_EQ(r.terms[0].first, Rat(1));
    EXPECT_EQ(r.terms[1].first, Rat(-1));
    EXPECT_EQ(r.terms[2].first, Rat(-1));
    for (const auto& [c, g] : r.terms) EXPECT_EQ(g.circles.size(), 1u);
}

} // namespace
