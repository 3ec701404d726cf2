#include "torus_lab/laurent.hpp"

#include <gtest/gtest.h>

using namespace torus_lab;

TEST(Laurent, Arithmetic) {
    LaurentPoly x = LaurentPoly::variable(0), y = LaurentPoly::variable(1);
    LaurentPoly p = (x + y) * (x + y);
    EXPECT_EQ(p.to_string(), "x1^2 + 2*x1*x2 + x2^2");
    EXPECT_EQ((p - p), LaurentPoly());
    EXPECT_EQ(p.at_ones(), 4);
    LaurentPoly inv = LaurentPoly::monomial({-1, 2, 0});
    EXPECT_EQ((inv * LaurentPoly::monomial({1, -2, 0})), LaurentPoly::constant(1));
}

TEST(Laurent, ExactDivision) {
    LaurentPoly x = LaurentPoly::variable(0), z = LaurentPoly::variable(2);
    LaurentPoly num = x * x * z - z * z * z;
    LaurentPoly q = exact_divide(num, x - z);
    EXPECT_EQ(q * (x - z), num);
    LaurentPoly shifted = exact_divide(num * LaurentPoly::monomial({-3, 0, -1}), LaurentPoly::monomial({0, 0, 1}));
    EXPECT_EQ(shifted * z, num * LaurentPoly::monomial({-3, 0, -1}));
    try {
        exact_divide(x + LaurentPoly::constant(1), x + z);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::not_divisible);
    }
}
