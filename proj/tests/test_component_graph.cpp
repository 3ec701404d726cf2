#include "torus_lab/component_graph.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace torus_lab;

namespace {

Component psi(const char* text) { return Component::from_code(parse_psi(text)); }

std::size_t entries(const Component& c) { return psi_decode(c.code).entries.size(); }

std::set<std::string> codes(const std::vector<Component>& cs) {
    std::set<std::string> out;
    for (const auto& c : cs) out.insert(code_string(c));
    return out;
}

// Neighbours by the adjacency predicate over a finite vertex set.
std::set<std::string> predicate_neighbors(const Component& z, const std::vector<Component>& pool) {
    std::set<std::string> out;
    for (const auto& c : pool)
        if (c != z && components_adjacent(z, c)) out.insert(code_string(c));
    return out;
}

} // namespace

TEST(ComponentGraph, NegativeSimplesOnly) {
    ComponentGraph g = build_gamma(0, 0);
    ASSERT_EQ(g.vertices.size(), 3u);
    EXPECT_EQ(g.edges.size(), 3u);
    for (const auto& r : g.vertices) {
        EXPECT_EQ(r.component.kind, ComponentKind::negative_simple);
        ASSERT_TRUE(r.markov.has_value());
        EXPECT_EQ(*r.markov, 1);
    }
    EXPECT_EQ(clusters(g).size(), 1u);
}

TEST(ComponentGraph, NeighborsOfFirstString) {
    std::set<std::string> got = codes(neighbors_psi(psi("a1:1|1"), 4));
    for (const char* want : {"a1:0|-1", "a1:0|1", "a1:1|2", "a1:1|1|2", "a1:2|1", "a1:2|2", "a1:2|3", "a1:1|1,"})
        EXPECT_TRUE(got.count(want)) << want;
}

TEST(ComponentGraph, NeighborsMatchPredicate) {
    std::vector<Component> pool = gamma_vertices(6, 3);
    for (const Component& z : rigid_string_components(4, 2)) {
        std::set<std::string> got;
        for (const auto& c : neighbors_psi(z, 6))
            if (std::find(pool.begin(), pool.end(), c) != pool.end()) got.insert(code_string(c));
        EXPECT_EQ(got, predicate_neighbors(z, pool)) << code_string(z);
    }
}

TEST(ComponentGraph, ShorterNeighborsConcatenate) {
    // the two strictly shorter rigid neighbours of a non-simple string
    for (const Component& z : rigid_string_components(5, 3)) {
        if (entries(z) <= 1) continue;
        std::vector<Component> shorter;
        for (const auto& c : neighbors_psi(z, z.size()))
            if (c.kind == ComponentKind::rigid_string && entries(c) < entries(z)) shorter.push_back(c);
        ASSERT_EQ(shorter.size(), 2u) << code_string(z);
        EXPECT_EQ(entries(shorter[0]) + entries(shorter[1]), entries(z)) << code_string(z);
    }
}

TEST(ComponentGraph, CompleteCluster) {
    Component s1 = Component::simple(1);
    Component n2 = Component::negative_simple(2), n3 = Component::negative_simple(3);
    auto [p, q] = complete_cluster(n3, s1);
    std::set<std::string> got{code_string(p), code_string(q)};
    EXPECT_TRUE(got.count(code_string(n2)));

    auto [c, d] = complete_cluster(psi("a1:1|1"), psi("a1:1|2"));
    EXPECT_EQ(codes({c, d}), (std::set<std::string>{"a1:0|1", "a1:1|1|2"}));

    EXPECT_FALSE(components_adjacent(psi("a1:1|1"), psi("a1:1|4")));
    try {
        complete_cluster(psi("a1:1|1"), psi("a1:1|4"));
        FAIL() << "expected an error";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::not_an_edge);
    }
}

TEST(ComponentGraph, MutationIsInvolution) {
    ComponentGraph g = build_gamma(4, 3);
    auto adj = g.adjacency();
    int checked = 0;
    for (const auto& cl : clusters(g)) {
        if (cl.size() != 3) continue;
        for (int k = 0; k < 3; ++k) {
            const Component& z1 = g.vertices[cl[(k + 1) % 3]].component;
            const Component& z2 = g.vertices[cl[(k + 2) % 3]].component;
            const Component& z3 = g.vertices[cl[k]].component;
            auto [p, q] = complete_cluster(z1, z2);
            ASSERT_TRUE(p == z3 || q == z3);
            Component other = p == z3 ? q : p;
            EXPECT_TRUE(components_adjacent(other, z1));
            EXPECT_TRUE(components_adjacent(other, z2));
            auto [r, s] = complete_cluster(z1, z2);
            EXPECT_EQ((std::set<Component>{r, s}), (std::set<Component>{z3, other}));
            ++checked;
        }
        if (checked > 60) break;
    }
    EXPECT_GT(checked, 0);
}

TEST(ComponentGraph, CliqueSizes) {
    ComponentGraph g = build_gamma(4, 3);
    for (const auto& cl : clusters(g)) {
        ASSERT_TRUE(cl.size() == 2 || cl.size() == 3);
        if (cl.size() == 2) {
            const Component& a = g.vertices[cl[0]].component;
            const Component& b = g.vertices[cl[1]].component;
            EXPECT_TRUE(a.kind == ComponentKind::band || b.kind == ComponentKind::band);
        }
    }
}

TEST(ComponentGraph, GammaPrime) {
    ComponentGraph gp = build_gamma_prime(3, 2);
    EXPECT_EQ(connected_components(gp).size(), 1u);
    std::set<GVector> gs;
    for (const auto& r : gp.vertices) {
        ASSERT_TRUE(r.g.has_value());
        EXPECT_TRUE(gs.insert(*r.g).second);
    }
}

TEST(ComponentGraph, Export) {
    ComponentGraph g = build_gamma(2, 2);
    auto j = nlohmann::json::parse(export_graph(g, "json"));
    ASSERT_EQ(j["vertices"].size(), g.vertices.size());
    EXPECT_EQ(j["edges"].size(), g.edges.size());
    std::set<std::vector<long>> gs;
    for (const auto& v : j["vertices"]) {
        EXPECT_TRUE(gs.insert(v["g"].get<std::vector<long>>()).second);
        std::string kind = v["kind"];
        EXPECT_TRUE(kind == "rigid_string" || kind == "band" || kind == "neg_simple") << kind;
    }

    std::string dot = export_graph(g, "dot");
    EXPECT_EQ(dot.rfind("graph gamma {", 0), 0u);
    EXPECT_EQ(static_cast<std::size_t>(std::count(dot.begin(), dot.end(), '[')), g.vertices.size());
    EXPECT_EQ(static_cast<std::size_t>(std::count(dot.begin(), dot.end(), '>')), 0u);

    try {
        export_graph(g, "graphml");
        FAIL() << "expected an error";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::unknown_format);
    }
}
