#include "torus_lab/enumerate.hpp"
#include "torus_lab/words.hpp"

#include <gtest/gtest.h>

using namespace torus_lab;

namespace {
const Letter a1{Arrow::alpha1, false};
}

TEST(Words, PsiDecodeKnownCodes) {
    EXPECT_EQ(format_seq(psi_decode(parse_psi("a1:1|1|1|2"))), "a1:1,2,2,1");
    EXPECT_EQ(format_seq(psi_decode(parse_psi("a1:1|2|2"))), "a1:1,1,2,1,1");
    EXPECT_EQ(format_seq(psi_decode(parse_psi("a1:2|1"))), "a1:2");
    EXPECT_EQ(format_seq(psi_decode(parse_psi("a1:0|1"))), "a1:0");
    EXPECT_EQ(psi_decode(parse_psi("a1:1|4|1|3")).entries.size(), 22u);
    EXPECT_EQ(psi_decode(parse_psi("a1:1|3|5")).entries.size(), 19u);
}

TEST(Words, PsiBandPartners) {
    EXPECT_EQ(format_seq(psi_decode(parse_psi("a1:1|2|2,"))), "a1:1,1,2,1,2,");
    EXPECT_EQ(format_seq(psi_decode(parse_psi("a1:2|1,"))), "a1:3,");
    EXPECT_EQ(format_seq(psi_decode(parse_psi("a1:0|1,"))), "a1:1,");
    EXPECT_EQ(format_psi(psi_encode(parse_seq("a1:1,1,2,1,2,"))), "a1:1|2|2,");
}

TEST(Words, PsiRoundTripOnRigidSequences) {
    for (const Seq& s : rigid_sequences(6, 3)) {
        SeqForm f{a1, s, false};
        PsiCode c = psi_encode(f);
        EXPECT_EQ(psi_decode(c), f) << format_psi(c);
        EXPECT_EQ(parse_psi(format_psi(c)), c);
    }
}

TEST(Words, NonRigidHasNoCode) {
    EXPECT_THROW(psi_encode(parse_seq("a1:1,2")), Error);
    try {
        psi_encode(parse_seq("a1:2,1,2"));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::no_psi_form);
    }
}

TEST(Words, StringSequenceRoundTrip) {
    for (Letter x1 : index_one_letters)
        for (const Seq& s : all_sequences(4, 3)) {
            SeqForm f{x1, s, false};
            StringWord w = seq_to_string(f);
            EXPECT_TRUE(is_valid(w));
            EXPECT_EQ(string_to_seq(w), string_to_seq(w.inverse()));
            EXPECT_EQ(seq_to_string(string_to_seq(w)).length(), w.length());
        }
}

TEST(Words, BandsAndPrimitivity) {
    BandWord b = seq_to_band(parse_seq("a1:1,2,"));
    EXPECT_TRUE(is_valid(b));
    EXPECT_TRUE(b.equivalent(b.rotated(1)));
    EXPECT_TRUE(b.equivalent(b.inverse()));
    BandWord twice = b;
    twice.letters.insert(twice.letters.end(), b.letters.begin(), b.letters.end());
    EXPECT_FALSE(twice.primitive());
    EXPECT_EQ(format_seq(band_to_seq(seq_to_band(parse_seq("a1:0,")))), "a1:0,");
}

TEST(Words, ParseErrors) {
    EXPECT_THROW(parse_psi("a1"), Error);
    EXPECT_THROW(parse_psi("a2:1|1"), Error);
    EXPECT_THROW(parse_seq("a1:x"), Error);
    try {
        parse_psi("a1:1");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::malformed_psi);
    }
}
