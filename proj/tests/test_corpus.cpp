#include "gauss4/corpus.hpp"

#include <gtest/gtest.h>

#include "gauss4/homfly.hpp"

using namespace gauss4;

namespace {

TEST(Braid, TrefoilFromSigma1Cubed) {
    LinkCode K = braid_closure({1, 1, 1});
    EXPECT_EQ(serialize(K), "O1+ U2+ O3+ U1+ O2+ U3+\n");
}

TEST(Braid, PositiveHopf) {
    LinkCode H = braid_closure({1, 1});
    EXPECT_EQ(serialize(H), "O1+ U2+\nU1+ O2+\n");
}

TEST(Braid, InverseGeneratorGivesNegativeCrossing) {
    LinkCode H = braid_closure({-1, -1});
    for (const auto& [id, s] : writhe_signs(H)) EXPECT_EQ(s, -1);
    EXPECT_EQ(homfly(H), homfly(parse_link("U1- O2-\nO1- U2-")));
}

TEST(Braid, MarkovStabilizationPreservesHomfly) {
    // closure(w) and closure(w sigma_k) on one more strand are the same link
    LinkCode a = braid_closure({1, 1, 1});
    LinkCode b = braid_closure({1, 1, 1, 2}, 3);
    EXPECT_EQ(b.component_count(), a.component_count());
    EXPECT_EQ(homfly(a), homfly(b));
    // an R2 pair against a third strand splits off an unknot component
    LinkCode c = braid_closure({1, 2, -2, 1, 1}, 3);
    EXPECT_EQ(c.component_count(), 2u);
    EXPECT_EQ(homfly(c), homfly_delta() * homfly(a));
}

TEST(Braid, SplitStrandMakesCrossinglessComponent) {
    LinkCode L = braid_closure({1}, 3);
    EXPECT_EQ(L.component_count(), 2u);
    EXPECT_TRUE(L.components[1].empty());
}

TEST(RandomCorpus, ValidAndDeterministic) {
    auto a = random_corpus(42, 25);
    auto b = random_corpus(42, 25);
    ASSERT_EQ(a.size(), 25u);
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_NO_THROW(validate(a[i]));
        EXPECT_LE(a[i].crossing_count(), 8u);
        EXPECT_LE(a[i].component_count(), 3u);
        EXPECT_EQ(a[i], b[i]);
        for (const auto& comp : a[i].components) EXPECT_FALSE(comp.empty());
    }
    auto c = random_corpus(43, 25);
    bool any_different = false;
    for (std::size_t i = 0; i < c.size(); ++i) any_different |= !(a[i] == c[i]);
    EXPECT_TRUE(any_different);
}

TEST(RandomCorpus, MixOfComponentCounts) {
    auto codes = random_corpus(7, 120);
    std::size_t ones = 0, twos = 0, threes = 0;
    for (const auto& L : codes) {
        if (L.component_count() == 1) ++ones;
        if (L.component_count() == 2) ++twos;
        if (L.component_count() == 3) ++threes;
    }
    EXPECT_GT(ones, 10u);
    EXPECT_GT(twos, 10u);
    EXPECT_GT(threes, 5u);
}

} // namespace
