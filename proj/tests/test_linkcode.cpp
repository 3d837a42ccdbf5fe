#include "gauss4/linkcode.hpp"

#include <gtest/gtest.h>

using namespace gauss4;

namespace {

const char* kTrefoil = "O1+ U2+ O3+ U1+ O2+ U3+";
const char* kHopf = "O1+ U2+\nU1+ O2+";

TEST(LinkCode, ParseTrefoil) {
    LinkCode L = parse_link(kTrefoil);
    ASSERT_EQ(L.component_count(), 1u);
    EXPECT_EQ(L.crossing_count(), 3u);
    EXPECT_EQ(L.components[0][0].crossing_id, 1);
    EXPECT_EQ(L.components[0][0].strand, Strand::Over);
    EXPECT_EQ(L.components[0][0].sign, +1);
    for (int id : {1, 2, 3}) EXPECT_TRUE(is_self_crossing(L, id));
}

TEST(LinkCode, ParseEmpty) {
    LinkCode L = parse_link("");
    EXPECT_EQ(L.component_count(), 0u);
    L = parse_link("\n   \n# only a comment\n");
    EXPECT_EQ(L.component_count(), 0u);
}

TEST(LinkCode, CommentsAndBlankLines) {
    LinkCode L = parse_link("# trefoil\nO1+ U2+ O3+ U1+ O2+ U3+  # right handed\n\n");
    EXPECT_EQ(L.crossing_count(), 3u);
}

TEST(LinkCode, SyntaxErrors) {
    EXPECT_THROW(parse_link("O1"), SyntaxError);
    EXPECT_THROW(parse_link("X1+"), SyntaxError);
    EXPECT_THROW(parse_link("O+"), SyntaxError);
    EXPECT_THROW(parse_link("O1*"), SyntaxError);
    EXPECT_THROW(parse_link("O1x2+"), SyntaxError);
}

TEST(LinkCode, ValidationErrors) {
    EXPECT_THROW(parse_link("O1+ U1-"), ValidationError);      // sign mismatch
    EXPECT_THROW(parse_link("O1+ O1+"), ValidationError);      // strand mismatch
    EXPECT_THROW(parse_link("O1+ U2+ U1+"), ValidationError);  // id 2 once
    EXPECT_THROW(parse_link("O1+ U1+ O1+ U1+"), ValidationError);
}

TEST(LinkCode, RoundTrip) {
    for (const char* text : {kTrefoil, kHopf, "O1+ U1+", "U5- O7+ O5- U7+"}) {
        LinkCode L = parse_link(text);
        EXPECT_EQ(parse_link(serialize(L)), L) << text;
    }
}

TEST(LinkCode, SwitchCrossing) {
    LinkCode L = parse_link(kTrefoil);
    LinkCode S = switch_crossing(L, 1);
    EXPECT_EQ(serialize(S), "U1- U2+ O3+ O1- O2+ U3+\n");
    EXPECT_EQ(switch_crossing(S, 1), L); // involution
    EXPECT_THROW(switch_crossing(L, 9), UnknownCrossing);

    LinkCode H = parse_link(kHopf);
    LinkCode H2 = switch_crossing(switch_crossing(H, 1), 2);
    EXPECT_EQ(serialize(H2), "U1- O2-\nO1- U2-\n");
}

TEST(LinkCode, SelfSubdiagram) {
    LinkCode H = parse_link(kHopf);
    LinkCode K0 = self_subdiagram(H, 0);
    EXPECT_EQ(K0.component_count(), 1u);
    EXPECT_TRUE(K0.components[0].empty()); // no self crossings
    EXPECT_THROW(self_subdiagram(H, 2), IndexError);

    LinkCode K = parse_link(kTrefoil);
    EXPECT_EQ(self_subdiagram(K, 0), K); // single component: identity

    // Component 0 keeps only its self crossing id 3.
    LinkCode L = parse_link("O1+ U2+ O3- U3- \nU1+ O2+");
    LinkCode S = self_subdiagram(L, 0);
    EXPECT_EQ(serialize(S), "O3- U3-\n");
}

TEST(LinkCode, WritheSigns) {
    LinkCode K = parse_link(kTrefoil);
    std::map<int, int> w = writhe_signs(K);
    EXPECT_EQ(w, (std::map<int, int>{{1, +1}, {2, +1}, {3, +1}}));
    w = writhe_signs(switch_crossing(K, 1));
    EXPECT_EQ(w, (std::map<int, int>{{1, -1}, {2, +1}, {3, +1}}));
    EXPECT_TRUE(writhe_signs(parse_link("")).empty());
}

TEST(LinkCode, Sublink) {
    LinkCode L = parse_link("O1+ U2+ O3- U3-\nU1+ O2+ O4+\nU4+");
    LinkCode S = sublink(L, {0, 1});
    EXPECT_EQ(serialize(S), "O1+ U2+ O3- U3-\nU1+ O2+\n");
    LinkCode T = sublink(L, {1, 2});
    EXPECT_EQ(serialize(T), "O4+\nU4+\n");
}

TEST(LinkCode, BasepointRotation) {
    LinkCode K = parse_link(kTrefoil);
    LinkCode R1 = rotate_basepoint(K, 0, 2);
    EXPECT_EQ(serialize(R1), "O3+ U1+ O2+ U3+ O1+ U2+\n");
    EXPECT_EQ(rotate_basepoint(K, 0, 6), K);
}

} // namespace
