#include "torus_lab/classification.hpp"
#include "torus_lab/enumerate.hpp"

#include <gtest/gtest.h>

using namespace torus_lab;

namespace {

const Letter a1{Arrow::alpha1, false};
const Letter a1_inv{Arrow::alpha1, true};

DecoratedModule module_of(Letter x1, const Seq& s) { return DecoratedModule::of_string(seq_to_string({x1, s, false})); }

// E vanishing both ways, computed homologically; band self-pairs use two
// distinct parameters.
bool oracle_edge(const Component& u, const Component& v) {
    auto mu = u.module(), mv = v.module();
    if (u.kind == ComponentKind::band && v.kind == ComponentKind::band) {
        auto nv = DecoratedModule::of_band(v.module().band, 2);
        return e_invariant(mu, nv) == 0 && e_invariant(nv, mu) == 0;
    }
    return e_invariant(mu, mv) == 0 && e_invariant(mv, mu) == 0;
}

} // namespace

TEST(Classification, RigidityMatchesE) {
    for (Letter x1 : {a1, a1_inv})
        for (const Seq& s : all_sequences(4, 3)) {
            auto m = module_of(x1, s);
            EXPECT_EQ(is_rigid(s), e_invariant(m, m) == 0) << letter_name(x1);
        }
}

TEST(Classification, VanishingMatchesE) {
    auto seqs = all_sequences(3, 2);
    for (const Seq& c : seqs)
        for (const Seq& cp : seqs) {
            long e = e_invariant(module_of(a1, cp), module_of(a1, c));
            EXPECT_EQ(e_vanishes(cp, c), e == 0);
        }
}

TEST(Classification, StronglyReducedBands) {
    for (const Seq& s : all_sequences(4, 3)) {
        BandWord b{seq_letters({a1, s, true})};
        if (!b.primitive()) continue;
        auto m = DecoratedModule::of_band(b);
        EXPECT_EQ(is_strongly_reduced_band(s), hom_dimension(m, m) == 1);
    }
}

TEST(Classification, EdgesMatchHomologicalOracle) {
    std::vector<Component> comps;
    for (Vertex i : all_vertices) comps.push_back(Component::negative_simple(i));
    for (const Component& c : rigid_string_components(3, 2)) comps.push_back(c);
    std::size_t n = comps.size();
    for (std::size_t i = 0; i < n; ++i) comps.push_back(comps[i].band_partner());
    for (std::size_t i = 0; i < comps.size(); ++i)
        for (std::size_t j = i + 1; j < comps.size(); ++j)
            EXPECT_EQ(components_adjacent(comps[i], comps[j]), oracle_edge(comps[i], comps[j]))
                << comps[i].label() << " " << comps[j].label();
}

TEST(Classification, GFormulaMatchesCopresentation) {
    for (const Component& c : rigid_string_components(3, 3)) {
        for (const Component& z : {c, c.band_partner()}) {
            GVector f = g_formula(z);
            Dims o = g_vector_copresentation(z.module());
            EXPECT_EQ(f, (GVector{o[0], o[1], o[2]})) << z.label();
        }
    }
}

TEST(Classification, GVectorSums) {
    for (const Component& c : rigid_string_components(4, 3)) {
        auto sum = [](const GVector& g) { return g[0] + g[1] + g[2]; };
        EXPECT_EQ(sum(g_formula(c)), 1);
        EXPECT_EQ(sum(g_formula(c.band_partner())), 0);
        EXPECT_EQ(sum(g_formula(c.tau_copy())), -1);
    }
    EXPECT_EQ(g_formula(Component::negative_simple(2)), (GVector{0, 1, 0}));
    EXPECT_EQ(g_formula(Component::negative_simple(2).tau_copy()), (GVector{0, -1, 0}));
}

TEST(Classification, TranslateFormulaMatchesPresentation) {
    for (const Component& c : rigid_string_components(3, 3)) {
        Dims o = g_vector_translate(c.module());
        EXPECT_EQ(g_formula(c.tau_copy()), (GVector{o[0], o[1], o[2]})) << c.label();
    }
}

TEST(Classification, NegativeSimpleNeighbours) {
    // S3- sees exactly the components with nothing at vertex 3
    Component s3 = Component::negative_simple(3);
    for (const Component& c : rigid_string_components(3, 2))
        EXPECT_EQ(components_adjacent(s3, c), c.dims()[2] == 0) << c.label();
    EXPECT_TRUE(components_adjacent(Component::simple(1), Component::negative_simple(2)));
    EXPECT_TRUE(components_adjacent(Component::simple(1), Component::negative_simple(3)));
}
