#include "torus_lab/component_graph.hpp"
#include "torus_lab/farey.hpp"

#include <gtest/gtest.h>

using namespace torus_lab;

namespace {

using F = CurveFamily;

GVector sum_of(const std::vector<WeightedCurve>& parts) {
    GVector s{0, 0, 0};
    for (const auto& p : parts)
        for (int i = 0; i < 3; ++i) s[i] += p.weight * p.curve.vector()[i];
    return s;
}

} // namespace

TEST(Farey, Neighbors) {
    EXPECT_TRUE(are_neighbors({0, 1}, {1, 1}));
    EXPECT_TRUE(are_neighbors({1, 2}, {1, 1}));
    EXPECT_FALSE(are_neighbors({1, 3}, {1, 1}));
    EXPECT_TRUE(FareyPoint({0, 1}).standard());
    EXPECT_FALSE(FareyPoint({0, -1}).standard());
    EXPECT_FALSE(FareyPoint({2, 4}).farey());
}

TEST(Farey, CurveVectors) {
    EXPECT_EQ(curve_vector(F::ccw, {1, 1}, 0).vector(), (GVector{0, 2, -1}));
    EXPECT_EQ(curve_vector(F::ccw, {0, 1}, 0).vector(), (GVector{0, 1, 0}));
    EXPECT_EQ(curve_vector(F::cw, {1, 2}, 0).vector(), (GVector{-3, 0, 2}));
    EXPECT_EQ(curve_vector(F::cw, {1, 2}, 1).vector(), (GVector{2, -3, 0}));
    EXPECT_THROW(curve_vector(F::ccw, {1, 0}, 0), Error);
    EXPECT_THROW(curve_vector(F::cw, {0, 1}, 0), Error);
    EXPECT_THROW(curve_vector(F::ccw, {1, 1}, 3), Error);
}

TEST(Farey, GVectorToCurve) {
    CurveVector c = gvector_to_curve({-1, 0, 2});
    EXPECT_EQ(c.family, F::ccw);
    EXPECT_EQ(c.point, (FareyPoint{1, 1}));
    EXPECT_EQ(c.vector(), (GVector{-1, 0, 2}));

    EXPECT_EQ(gvector_to_curve({1, -1, 0}).family, F::closed);
    EXPECT_EQ(gvector_to_curve({2, -3, 0}).family, F::cw);
    try {
        gvector_to_curve({5, 5, 5});
        FAIL() << "expected an error";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::not_a_component_gvector);
    }
    // closed vectors with a common factor are not curves
    EXPECT_THROW(gvector_to_curve({2, -2, 0}), Error);
}

TEST(Farey, RoundTripOverAllCurves) {
    for (F f : {F::ccw, F::cw, F::closed})
        for (long a = 0; a <= 12; ++a)
            for (long b = 0; b <= 12; ++b) {
                FareyPoint p{a, b};
                if (!in_domain(f, p)) continue;
                for (int r = 0; r < 3; ++r) {
                    CurveVector c = curve_vector(f, p, r);
                    EXPECT_EQ(gvector_to_curve(c.vector()), c) << format_curve(c);
                }
            }
}

TEST(Farey, Compatibility) {
    EXPECT_TRUE(compatible(curve_vector(F::ccw, {0, 1}, 0), curve_vector(F::ccw, {1, 1}, 0)));
    EXPECT_FALSE(compatible(curve_vector(F::cw, {1, 1}, 0), curve_vector(F::ccw, {1, 1}, 0)));
    EXPECT_TRUE(compatible(curve_vector(F::closed, {1, 1}, 0), curve_vector(F::ccw, {1, 1}, 0)));
    EXPECT_FALSE(compatible(curve_vector(F::closed, {1, 1}, 0), curve_vector(F::closed, {1, 2}, 0)));
    EXPECT_FALSE(compatible(curve_vector(F::ccw, {1, 3}, 0), curve_vector(F::ccw, {1, 1}, 0)));
}

TEST(Farey, CompatibilityIsSymmetric) {
    std::vector<CurveVector> curves;
    for (F f : {F::ccw, F::cw, F::closed})
        for (long a = 0; a <= 5; ++a)
            for (long b = 0; b <= 5; ++b)
                if (in_domain(f, {a, b}))
                    for (int r = 0; r < 3; ++r) curves.push_back(curve_vector(f, {a, b}, r));
    for (const auto& u : curves)
        for (const auto& v : curves) EXPECT_EQ(compatible(u, v), compatible(v, u));
}

TEST(Farey, RigidStringsAreCcwCurves) {
    for (const Component& c : rigid_string_components(4, 3)) {
        CurveVector cv = gvector_to_curve(g_formula(c));
        EXPECT_EQ(cv.family, F::ccw) << format_psi(c.code);
        GVector band = g_formula(c.band_partner());
        EXPECT_EQ(gvector_to_curve(band).family, F::closed);
        long k = std::gcd(std::gcd(std::abs(band[0]), std::abs(band[1])), std::abs(band[2]));
        EXPECT_EQ(k, 1);
    }
}

TEST(Farey, Decompose) {
    EXPECT_TRUE(decompose_z3({0, 0, 0}).empty());

    auto one = decompose_z3({0, 2, -1});
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one[0].weight, 1);
    EXPECT_EQ(one[0].curve.vector(), (GVector{0, 2, -1}));

    auto two = decompose_z3({0, 3, -1});
    EXPECT_EQ(sum_of(two), (GVector{0, 3, -1}));
    ASSERT_EQ(two.size(), 2u);
    EXPECT_TRUE(compatible(two[0].curve, two[1].curve));

    auto cl = decompose_z3({3, -3, 0});
    ASSERT_EQ(cl.size(), 1u);
    EXPECT_EQ(cl[0].weight, 3);
    EXPECT_EQ(cl[0].curve.family, F::closed);
}

TEST(Farey, DecomposeBox) {
    for (long x = -4; x <= 4; ++x)
        for (long y = -4; y <= 4; ++y)
            for (long z = -4; z <= 4; ++z) {
                GVector v{x, y, z};
                auto parts = decompose_z3(v);
                EXPECT_EQ(sum_of(parts), v);
                for (std::size_t i = 0; i < parts.size(); ++i) {
                    EXPECT_GT(parts[i].weight, 0);
                    for (std::size_t j = i + 1; j < parts.size(); ++j)
                        EXPECT_TRUE(compatible(parts[i].curve, parts[j].curve));
                }
            }
}

TEST(Farey, DecomposeCap) {
    try {
        decompose_z3({-20, 41, -20}, 2);
        FAIL() << "expected an error";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::search_bound_exceeded);
    }
    EXPECT_EQ(sum_of(decompose_z3({-20, 41, -20})), (GVector{-20, 41, -20}));
    EXPECT_THROW(decompose_z3({1, 0, 0}, 0), Error);
}
