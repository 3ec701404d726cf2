#include "torus_lab/modules.hpp"
#include "torus_lab/rep.hpp"

#include <gtest/gtest.h>

using namespace torus_lab;

TEST(Rep, ProjectivesAndInjectives) {
    // dimension vectors at truncation 3, frozen from the path basis
    EXPECT_EQ(projective<Rational>(1, 3).dims, (Dims{1, 2, 2}));
    EXPECT_EQ(injective<Rational>(1, 3).dims, (Dims{1, 2, 2}));
    for (Vertex v : all_vertices)
        for (int p : {2, 3, 5}) {
            auto P = projective<Rational>(v, p);
            auto I = injective<Rational>(v, p);
            EXPECT_TRUE(P.satisfies_relations());
            EXPECT_TRUE(I.satisfies_relations());
            Dims s = I.socle_dims();
            Dims unit{};
            unit[v - 1] = 1;
            EXPECT_EQ(s, unit);
        }
}

TEST(Rep, StringModuleShape) {
    StringWord w = seq_to_string(parse_seq("a1:1,1"));
    auto m = string_module<Rational>(w);
    EXPECT_TRUE(m.satisfies_relations());
    EXPECT_EQ(m.dims, w.dims());
    EXPECT_EQ(m.nilpotency(), nilpotency(w));
}

TEST(Rep, HomOfSimples) {
    auto s1 = string_module<Rational>(StringWord{1, {}});
    auto s2 = string_module<Rational>(StringWord{2, {}});
    EXPECT_EQ(hom_dim(s1, s1), 1u);
    EXPECT_EQ(hom_dim(s1, s2), 0u);
}

TEST(Rep, BandBrick) {
    BandWord b = seq_to_band(parse_seq("a1:1,"));
    auto m = band_module<Rational>(b, Rational(1));
    auto n = band_module<Rational>(b, Rational(2));
    EXPECT_TRUE(m.satisfies_relations());
    EXPECT_EQ(hom_dim(m, m), 1u);
    EXPECT_EQ(hom_dim(m, n), 0u);
}

TEST(Rep, PrimeFieldAgreesWithRationals) {
    for (const char* t : {"a1:1,1", "a1:2,1,2", "b1-:1,2", "g1:3"}) {
        StringWord w = seq_to_string(parse_seq(t));
        auto q = string_module<Rational>(w);
        auto f = string_module<ModPrime>(w);
        EXPECT_EQ(hom_dim(q, q), hom_dim(f, f)) << t;
    }
}
