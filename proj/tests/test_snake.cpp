#include "torus_lab/snake.hpp"

#include <gtest/gtest.h>

using namespace torus_lab;

namespace {

std::vector<SignFunction> all_sign_functions(int d) {
    std::vector<SignFunction> out;
    for (unsigned mask = 0; mask < (1u << (d - 1)); ++mask) {
        SignFunction sf{d, {}};
        for (int i = 0; i < d - 1; ++i) sf.signs.push_back(mask >> i & 1 ? -1 : 1);
        out.push_back(sf);
    }
    return out;
}

} // namespace

TEST(Snake, SmallCounts) {
    EXPECT_EQ(matchings(parse_signs("")), 2);
    EXPECT_EQ(matchings(parse_signs("+")), 3);
    EXPECT_EQ(matchings(parse_signs("+-")), 5);
    EXPECT_EQ(matchings(parse_signs("++")), 4);
    EXPECT_THROW(parse_signs("+x"), Error);
}

TEST(Snake, GraphShape) {
    SnakeGraph g = snake_graph(parse_signs("+-+-"));
    EXPECT_EQ(g.tiles.size(), 5u);
    EXPECT_EQ(g.vertices.size(), 12u);
    EXPECT_EQ(g.edges.size(), 16u);
    // straight: all tiles on one row
    for (auto [x, y] : g.tiles) EXPECT_EQ(y, g.tiles.front().second);
}

TEST(Snake, StraightSnakesAreFibonacci) {
    for (int d = 1; d <= 20; ++d) {
        SignFunction sf{d, {}};
        for (int i = 0; i < d - 1; ++i) sf.signs.push_back(i % 2 ? -1 : 1);
        EXPECT_EQ(matchings(sf), fibonacci(d + 2)) << d;
    }
}

TEST(Snake, TransferAgreesWithBruteForce) {
    for (int d = 1; d <= 9; ++d)
        for (const SignFunction& sf : all_sign_functions(d)) EXPECT_EQ(matchings(sf), matchings_brute(sf)) << sf.to_string();
}

TEST(Snake, MatchingsEqualDiagramCount) {
    for (int d = 1; d <= 11; ++d)
        for (const SignFunction& sf : all_sign_functions(d)) EXPECT_EQ(matchings(sf), m_dp(string_from_signs(sf))) << sf.to_string();
}

TEST(Snake, InversionAndReversal) {
    for (const SignFunction& sf : all_sign_functions(9)) {
        SignFunction inv = sf, rev = sf;
        for (int& s : inv.signs) s = -s;
        std::reverse(rev.signs.begin(), rev.signs.end());
        EXPECT_EQ(matchings(inv), matchings(sf));
        EXPECT_EQ(matchings(rev), matchings(sf));
    }
}

TEST(Snake, Diagram) {
    EXPECT_EQ(format_diagram(string_from_signs(parse_signs("++"))), "dd");
    EXPECT_EQ(format_diagram(string_from_signs(parse_signs("+-"))), "du");
    EXPECT_EQ(m_dp(string_from_signs(parse_signs(""))), 2);
    EXPECT_EQ(m_dp(string_from_signs(parse_signs("++"))), 4);
    EXPECT_EQ(m_dp(string_from_signs(parse_signs("+-"))), 5);
}
