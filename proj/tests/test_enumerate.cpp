#include "torus_lab/enumerate.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace torus_lab;

TEST(Enumerate, SequenceCounts) {
    EXPECT_EQ(all_sequences(3, 2).size(), 14u);
    EXPECT_EQ(all_sequences(0, 3).size(), 0u);
    EXPECT_EQ(rigid_sequences(6, 3).size(), 30u);
}

TEST(Enumerate, PsiGeneratorEqualsFilter) {
    for (Letter x1 : index_one_letters) {
        std::set<Seq> gen, filt;
        for (const PsiCode& c : rigid_codes(x1, 7, 3)) {
            SeqForm f = psi_decode(c);
            EXPECT_EQ(f.x1, x1);
            EXPECT_TRUE(gen.insert(f.entries).second) << format_psi(c);
        }
        for (const Seq& s : rigid_sequences(7, 3)) filt.insert(s);
        EXPECT_EQ(gen, filt);
    }
}

TEST(Enumerate, BandSequencesAreCanonical) {
    for (const Seq& s : band_sequences(5, 3)) {
        EXPECT_TRUE(is_strongly_reduced_band(s));
        SeqForm f{Letter{Arrow::alpha1, false}, s, true};
        // the band is the partner of some rigid string
        EXPECT_NO_THROW(psi_encode(f));
    }
}

TEST(Enumerate, RigidComponents) {
    EXPECT_TRUE(rigid_string_components(0, 3).empty());
    auto comps = rigid_string_components(2, 2);
    std::set<Component> unique(comps.begin(), comps.end());
    EXPECT_EQ(unique.size(), comps.size());
    for (Vertex i : all_vertices) EXPECT_TRUE(unique.count(Component::simple(i)));
}
