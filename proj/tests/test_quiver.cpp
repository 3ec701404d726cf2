#include "torus_lab/quiver.hpp"

#include <gtest/gtest.h>

using namespace torus_lab;

TEST(Quiver, ArrowsAndRelations) {
    EXPECT_EQ(source(Arrow::alpha1), 1);
    EXPECT_EQ(target(Arrow::alpha1), 2);
    EXPECT_EQ(target(Arrow::gamma2), 1);
    EXPECT_EQ(jacobian_relations().size(), 6u);
    EXPECT_TRUE(is_relation(Arrow::alpha1, Arrow::beta1));
    EXPECT_FALSE(is_relation(Arrow::alpha1, Arrow::beta2));
    EXPECT_EQ(successor(Arrow::alpha1), Arrow::beta2);
    EXPECT_EQ(predecessor(Arrow::alpha1), Arrow::gamma2);
    for (Arrow a : all_arrows) {
        EXPECT_TRUE(composable(a, successor(a)));
        EXPECT_EQ(predecessor(successor(a)), a);
    }
}

TEST(Quiver, ExchangeMatrix) {
    auto b = quiver_exchange_matrix();
    std::array<std::array<int, 3>, 3> want{{{0, -2, 2}, {2, 0, -2}, {-2, 2, 0}}};
    EXPECT_EQ(b, want);
}

TEST(Quiver, PathBasisCounts) {
    // three idempotents, six arrows, then six nonzero paths of each length
    EXPECT_EQ(path_basis(2).size(), 9u);
    EXPECT_EQ(path_basis(3).size(), 15u);
    EXPECT_EQ(path_basis(5).size(), 27u);
    for (const Path& p : path_basis(5)) EXPECT_TRUE(p.nonzero());
    EXPECT_THROW(path_basis(1), Error);
}

TEST(Quiver, LetterParsing) {
    Letter l = parse_letter("b2-");
    EXPECT_EQ(l.arrow, Arrow::beta2);
    EXPECT_TRUE(l.inverse);
    EXPECT_EQ(l.s(), 3);
    EXPECT_EQ(letter_name(l), "b2-");
    EXPECT_THROW(parse_letter("x1"), Error);
}
