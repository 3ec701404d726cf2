#include "torus_lab/enumerate.hpp"
#include "torus_lab/markov.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace torus_lab;

namespace {

const Letter a1{Arrow::alpha1, false};
BigInt m_of(const Seq& s, Letter x1 = a1) { return m_dp(seq_to_string({x1, s, false})); }

} // namespace

TEST(Markov, SmallValues) {
    EXPECT_EQ(m_of({1}), 5);
    EXPECT_EQ(m_of({2}), 13);
    EXPECT_EQ(m_of({1, 1}), 29);
    EXPECT_EQ(m_of({3}), 34);
    EXPECT_EQ(m_of({0}), 2);
    for (int a = 0; a <= 30; ++a) EXPECT_EQ(m_of({a}), fibonacci(2 * a + 3));
}

TEST(Markov, SubsetsDpRecurrenceAgree) {
    for (Letter x1 : index_one_letters)
        for (const Seq& s : all_sequences(4, 3)) {
            StringWord w = seq_to_string({x1, s, false});
            BigInt d = m_dp(w);
            EXPECT_EQ(m_subsets(w), d);
            EXPECT_EQ(m_recurrence(s), d);
            for (std::size_t i = 1; i < s.size(); ++i) EXPECT_EQ(m_recurrence(s, i), d);
            BigInt total = 0;
            for (const auto& [e, c] : graded_counts(w)) total += c;
            EXPECT_EQ(total, d);
        }
}

TEST(Markov, SubsetsOnLongDiagrams) {
    std::mt19937 rng(11);
    for (int len : {30, 47, 80}) {
        Diagram d;
        for (int i = 0; i < len; ++i) d.push_back(rng() & 1);
        EXPECT_EQ(m_subsets(d), m_dp(d));
    }
    EXPECT_EQ(m_subsets(Diagram{}), 2);
}

TEST(Markov, SizeBounds) {
    for (const Seq& s : all_sequences(5, 3)) {
        if (s.size() < 2) continue;
        int sum = 0;
        for (int x : s) sum += x;
        int n = static_cast<int>(s.size());
        BigInt m = m_of(s);
        EXPECT_LT(m_of({sum + (n + 1) / 2 - 1}), m);
        EXPECT_LT(m, m_of({sum + n - 1}));
    }
}

TEST(Markov, CalderoChapoton) {
    EXPECT_EQ(cc_function(Component::simple(1)).to_string(), "x1^-1*x2^2 + x1^-1*x3^2");
    EXPECT_EQ(cc_function(Component::negative_simple(2)), LaurentPoly::variable(1));
    Seed s;
    EXPECT_EQ(mutate_seed(s, 1).x[0], cc_function(Component::simple(1)));
    for (const Component& c : rigid_string_components(3, 2)) EXPECT_EQ(cc_function(c).at_ones(), markov_number(c));
    EXPECT_THROW(cc_function(Component::simple(1).band_partner()), Error);
}

TEST(Markov, SeedMutationIsInvolutive) {
    Seed s;
    for (int k = 1; k <= 3; ++k) {
        Seed t = mutate_seed(mutate_seed(s, k), k);
        EXPECT_EQ(t.b, s.b);
        for (int i = 0; i < 3; ++i) EXPECT_EQ(t.x[i], s.x[i]);
    }
    EXPECT_THROW(mutate_seed(s, 4), Error);
}

TEST(Markov, Triples) {
    MarkovTriple t{{1, 2, 5}};
    EXPECT_TRUE(t.valid());
    EXPECT_EQ(triple_mutate(t, 1), (MarkovTriple{{29, 2, 5}}));
    auto tree = triple_tree(3);
    EXPECT_EQ(tree.size(), 22u);
    for (const auto& n : triple_tree(8)) EXPECT_TRUE(n.triple.valid());
    EXPECT_THROW(triple_mutate(MarkovTriple{{1, 1, 3}}, 1), Error);
}

TEST(Markov, SeedsEvaluateToTriples) {
    Seed s;
    for (int k : {1, 2, 3, 1, 2}) {
        s = mutate_seed(s, k);
        EXPECT_TRUE(triple_at_ones(s).valid());
    }
}

TEST(Markov, NoCollisionsAtSmallBounds) {
    EXPECT_TRUE(collision_scan(rigid_sequences(5, 3)).empty());
}
