#pragma once

#include "component_graph.hpp"
#include "enumerate.hpp"
#include "farey.hpp"
#include "homology.hpp"
#include "markov.hpp"
#include "snake.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace torus_lab {

enum class Suite { fast, all };

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    bool flagged = false; // a finding worth reporting that does not fail the suite
    std::string detail;
    double seconds = 0;
};

namespace detail {

// Counts checks and failures, keeping the first few failure messages.
struct Tally {
    long checks = 0, failures = 0;
    std::vector<std::string> first;

    void check(bool ok, const std::function<std::string()>& what) {
        ++checks;
        if (ok) return;
        ++failures;
        if (first.size() < 3) first.push_back(what());
    }

    std::string summary(const std::string& label) const {
        std::string s = std::to_string(checks - failures) + "/" + std::to_string(checks) + " " + label;
        for (const auto& f : first) s += "; " + f;
        return s;
    }
};

inline std::string fmt(const GVector& g) {
    return "(" + std::to_string(g[0]) + "," + std::to_string(g[1]) + "," + std::to_string(g[2]) + ")";
}
inline std::string fmt(const Dims& g) { return fmt(GVector{g[0], g[1], g[2]}); }
inline GVector as_g(const Dims& d) { return {d[0], d[1], d[2]}; }

inline std::string seq_text(const Seq& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return out;
}

inline constexpr Letter alpha1{Arrow::alpha1, false};
inline constexpr Letter alpha1_inv{Arrow::alpha1, true};

inline std::vector<SeqForm> string_corpus(int max_n, int max_a, std::initializer_list<Letter> x1s) {
    std::vector<SeqForm> out;
    for (Letter x1 : x1s) {
        if (!x1.inverse) out.push_back({x1, {0}, false});
        for (const Seq& s : all_sequences(max_n, max_a)) out.push_back({x1, s, false});
    }
    return out;
}

// Primitive band sequences of the given sizes (one rotation each).
inline std::vector<BandWord> band_corpus(int max_n, int max_a) {
    std::vector<BandWord> out;
    for (const Seq& s : all_sequences(max_n, max_a)) {
        bool smallest = true;
        for (std::size_t r = 1; r < s.size() && smallest; ++r) {
            Seq rot(s.begin() + r, s.end());
            rot.insert(rot.end(), s.begin(), s.begin() + r);
            if (rot < s) smallest = false;
        }
        BandWord w{seq_letters({alpha1, s, true})};
        if (smallest && w.primitive()) out.push_back(w);
    }
    return out;
}

} // namespace detail

// 1. Hom dimensions by linear algebra against admissible pairs.
inline CriterionResult criterion_hom(Suite suite) {
    int n = suite == Suite::all ? 4 : 3;
    auto corpus = detail::string_corpus(n, 2, {detail::alpha1, detail::alpha1_inv});
    std::vector<StringWord> ws;
    for (const auto& s : corpus) ws.push_back(seq_to_string(s));
    std::vector<std::vector<int>> bad(ws.size());
    parallel_for(ws.size(), [&](std::size_t i) {
        auto x = DecoratedModule::of_string(ws[i]);
        for (std::size_t j = 0; j < ws.size(); ++j)
            if (hom_dimension(x, DecoratedModule::of_string(ws[j])) != admissible_pairs(ws[i], ws[j]).size())
                bad[i].push_back(static_cast<int>(j));
    });
    detail::Tally t;
    for (std::size_t i = 0; i < ws.size(); ++i)
        for (std::size_t j = 0; j < ws.size(); ++j) {
            bool ok = std::find(bad[i].begin(), bad[i].end(), static_cast<int>(j)) == bad[i].end();
            t.check(ok, [&] { return "hom(" + format_seq(corpus[i]) + ", " + format_seq(corpus[j]) + ")"; });
        }
    return {1, "hom dimension equals admissible pairs", t.failures == 0, false, t.summary("string pairs")};
}

// 2. Rigidity and strong reduction against the E-invariant and End.
inline CriterionResult criterion_rigidity(Suite suite) {
    int ns = suite == Suite::all ? 6 : 4, nb = suite == Suite::all ? 5 : 4;
    auto seqs = all_sequences(ns, 3);
    std::vector<int> ok(seqs.size());
    parallel_for(seqs.size(), [&](std::size_t i) {
        auto m = DecoratedModule::of_string(seq_to_string({detail::alpha1, seqs[i], false}));
        ok[i] = (e_invariant(m, m) == 0) == is_rigid(seqs[i]);
    });
    detail::Tally t;
    for (std::size_t i = 0; i < seqs.size(); ++i)
        t.check(ok[i], [&] { return "rigidity of " + detail::seq_text(seqs[i]); });
    auto bands = detail::band_corpus(nb, 3);
    std::vector<int> okb(bands.size());
    parallel_for(bands.size(), [&](std::size_t i) {
        auto m = DecoratedModule::of_band(bands[i]);
        okb[i] = (hom_dimension(m, m) == 1) == is_strongly_reduced_band(band_to_seq(bands[i]));
    });
    for (std::size_t i = 0; i < bands.size(); ++i)
        t.check(okb[i], [&] { return "band " + format_seq(band_to_seq(bands[i])); });
    return {2, "rigidity and strongly reduced bands", t.failures == 0, false,
            t.summary("strings and bands")};
}

// 3. E-invariants and g-vectors do not depend on the truncation.
inline CriterionResult criterion_stability(Suite suite) {
    int ns = suite == Suite::all ? 6 : 4, nb = suite == Suite::all ? 5 : 4;
    std::vector<DecoratedModule> mods;
    for (const Seq& s : all_sequences(ns, 3))
        mods.push_back(DecoratedModule::of_string(seq_to_string({detail::alpha1, s, false})));
    for (const BandWord& b : detail::band_corpus(nb, 3)) mods.push_back(DecoratedModule::of_band(b));
    std::vector<int> ok(mods.size());
    parallel_for(mods.size(), [&](std::size_t i) {
        const auto& m = mods[i];
        int base = m.nil() + 2;
        long e = e_invariant(m, m, base);
        Dims g = g_vector_copresentation(m, base);
        bool same = true;
        for (int p : {base + 1, base + 2}) same = same && e_invariant(m, m, p) == e && g_vector_copresentation(m, p) == g;
        ok[i] = same;
    });
    detail::Tally t;
    for (std::size_t i = 0; i < mods.size(); ++i) t.check(ok[i], [&] { return "module " + std::to_string(i); });
    return {3, "truncation stability", t.failures == 0, false, t.summary("modules at p = nil+2..nil+4")};
}

// 4. Closed-form g-vectors against injective copresentations.
inline CriterionResult criterion_gvectors(Suite suite) {
    int n = suite == Suite::all ? 5 : 3;
    std::vector<Component> comps;
    for (const Component& c : rigid_string_components(n, 3)) {
        comps.push_back(c);
        comps.push_back(c.band_partner());
    }
    for (Vertex i : all_vertices) comps.push_back(Component::negative_simple(i));
    std::vector<GVector> oracle(comps.size());
    parallel_for(comps.size(), [&](std::size_t i) { oracle[i] = detail::as_g(g_vector_copresentation(comps[i].module())); });
    detail::Tally t;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        GVector f = g_formula(comps[i]);
        t.check(f == oracle[i], [&] {
            return code_string(comps[i]) + " formula " + detail::fmt(f) + " vs " + detail::fmt(oracle[i]);
        });
    }
    const std::vector<std::pair<DecoratedModule, GVector>> printed{
        {Component::simple(1).module(), {-1, 0, 2}},
        {Component::simple(2).module(), {2, -1, 0}},
        {Component::simple(3).module(), {0, 2, -1}},
        {DecoratedModule::of_band(seq_to_band(parse_seq("a1:0,"))), {1, -1, 0}},
        {DecoratedModule::of_band(seq_to_band(parse_seq("b1:0,"))), {0, 1, -1}},
        {DecoratedModule::of_band(seq_to_band(parse_seq("g1:0,"))), {-1, 0, 1}},
    };
    for (const auto& [m, g] : printed) {
        GVector got = detail::as_g(g_vector_copresentation(m));
        t.check(got == g, [&] { return "expected " + detail::fmt(g) + ", got " + detail::fmt(got); });
    }
    return {4, "g-vector formula", t.failures == 0, false, t.summary("g-vectors")};
}

inline int gamma_bound_n(Suite suite) { return suite == Suite::all ? 5 : 3; }

// 5. Structure of Gamma.
inline CriterionResult criterion_gamma(Suite suite) {
    int n = gamma_bound_n(suite);
    ComponentGraph g = build_gamma(n, 3);
    auto adj = g.adjacency();
    detail::Tally t;
    std::set<GVector> gs;
    for (const auto& r : g.vertices) gs.insert(*r.g);
    t.check(gs.size() == g.vertices.size(), [] { return std::string("g-vectors collide"); });
    for (const auto& c : clusters(g))
        t.check(c.size() == 2 || c.size() == 3, [&] { return "clique of size " + std::to_string(c.size()); });
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        const Component& z = g.vertices[i].component;
        if (z.kind == ComponentKind::band) {
            bool ok = adj[i].size() == 1 && g.vertices[*adj[i].begin()].component == z.rigid_partner();
            t.check(ok, [&] { return "band " + code_string(z) + " neighbours"; });
        } else if (z.kind == ComponentKind::rigid_string && !z.is_simple()) {
            bool shorter = false;
            for (std::size_t j : adj[i])
                shorter = shorter || (g.vertices[j].component.rigid() && g.vertices[j].component.size() < z.size());
            t.check(shorter, [&] { return code_string(z) + " has no shorter neighbour"; });
        }
    }
    std::vector<std::pair<std::size_t, std::size_t>> rigid_edges;
    for (auto e : g.edges)
        if (g.vertices[e.first].component.rigid() && g.vertices[e.second].component.rigid()) rigid_edges.push_back(e);
    std::vector<std::string> err(rigid_edges.size());
    parallel_for(rigid_edges.size(), [&](std::size_t k) {
        auto [i, j] = rigid_edges[k];
        const Component &u = g.vertices[i].component, &v = g.vertices[j].component;
        try {
            auto [a, b] = complete_cluster(u, v);
            if (a == b) err[k] = "equal completions";
        } catch (const Error& e) {
            err[k] = code_string(u) + " -- " + code_string(v) + ": " + e.what();
        }
    });
    for (const auto& e : err) t.check(e.empty(), [&] { return e; });
    return {5, "structure of the component graph", t.failures == 0, false,
            t.summary("checks on " + std::to_string(g.vertices.size()) + " vertices, " +
                      std::to_string(g.edges.size()) + " edges")};
}

// 6. The graph over the finite-dimensional algebra.
inline CriterionResult criterion_gamma_prime(Suite suite) {
    int n = gamma_bound_n(suite);
    ComponentGraph base = build_gamma(n, 3);
    ComponentGraph g = build_gamma_prime(n, 3);
    detail::Tally t;
    auto is_rigid_record = [](const ComponentRecord& r) { return r.component.rigid(); };
    auto parts = connected_components(g, is_rigid_record);
    t.check(parts.size() == 2, [&] { return std::to_string(parts.size()) + " rigid components"; });
    if (parts.size() == 2) {
        std::set<Component> first, second;
        for (std::size_t i : parts[0]) first.insert(g.vertices[i].component);
        for (std::size_t i : parts[1]) second.insert(g.vertices[i].component);
        std::set<Component> image;
        for (const Component& c : first) image.insert(c.tau_copy());
        t.check(image == second, [] { return std::string("tau does not exchange the rigid components"); });
    }
    t.check(connected_components(g).size() == 1, [] { return std::string("not connected"); });
    // Gamma is the full subgraph on the original vertices
    std::set<std::pair<Component, Component>> orig, restricted;
    for (auto [i, j] : base.edges) orig.insert({base.vertices[i].component, base.vertices[j].component});
    for (auto [i, j] : g.edges) {
        const Component &u = g.vertices[i].component, &v = g.vertices[j].component;
        if (base.index_of(u) && base.index_of(v)) restricted.insert({u, v});
    }
    t.check(orig == restricted, [] { return std::string("Gamma is not a full subgraph"); });
    std::set<GVector> gs;
    for (const auto& r : g.vertices) {
        gs.insert(*r.g);
        const Component& z = r.component;
        if (z.kind != ComponentKind::tau_rigid && z.kind != ComponentKind::injective_shift) continue;
        GVector v = *r.g;
        auto c = match_curve(v);
        t.check(v[0] + v[1] + v[2] == -1 && c && c->family == CurveFamily::cw,
                [&] { return code_string(z) + " " + detail::fmt(v); });
    }
    t.check(gs.size() == g.vertices.size(), [] { return std::string("g-vectors collide"); });
    return {6, "graph over the finite-dimensional algebra", t.failures == 0, false,
            t.summary("checks on " + std::to_string(g.vertices.size()) + " vertices")};
}

// 7. Markov numbers by three routes, the Fibonacci values, split
// independence and the size bounds.
inline CriterionResult criterion_markov(Suite suite) {
    int n = suite == Suite::all ? 6 : 4;
    detail::Tally t;
    std::vector<Seq> rigid = rigid_sequences(n, 3);
    for (const Seq& s : rigid) {
        StringWord w = seq_to_string({detail::alpha1, s, false});
        BigInt a = m_subsets(w), b = m_dp(w), c = m_recurrence(s);
        t.check(a == b && b == c, [&] { return "m(" + detail::seq_text(s) + ")"; });
    }
    for (int a = 0; a <= 30; ++a) {
        BigInt m = m_dp(seq_to_string({detail::alpha1, {a}, false}));
        t.check(m == fibonacci(2 * a + 3), [&] { return "m(" + std::to_string(a) + ")"; });
    }
    std::mt19937 rng(20240601);
    std::vector<Seq> long_ones;
    for (const Seq& s : all_sequences(n, 3))
        if (s.size() >= 2) long_ones.push_back(s);
    for (int k = 0; k < 200; ++k) {
        const Seq& s = long_ones[rng() % long_ones.size()];
        std::size_t split = 1 + rng() % (s.size() - 1);
        t.check(m_recurrence(s, split) == m_dp(seq_to_string({detail::alpha1, s, false})),
                [&] { return "split of " + detail::seq_text(s) + " at " + std::to_string(split); });
    }
    for (const Seq& s : all_sequences(n, 3)) {
        if (s.size() < 2) continue;
        int sum = 0;
        for (int x : s) sum += x;
        int len = static_cast<int>(s.size());
        BigInt m = m_recurrence(s);
        BigInt lo = fibonacci(2 * (sum + (len + 1) / 2 - 1) + 3), hi = fibonacci(2 * (sum + len - 1) + 3);
        t.check(lo < m && m < hi, [&] { return "bounds for " + detail::seq_text(s); });
    }
    return {7, "Markov number routes and bounds", t.failures == 0, false, t.summary("checks")};
}

// 8. Mutation of clusters against mutation of seeds.
inline CriterionResult criterion_clusters(Suite suite) {
    int depth = suite == Suite::all ? 6 : 4;
    struct State {
        std::array<Component, 3> cluster;
        Seed seed;
        std::vector<int> path;
    };
    std::map<std::vector<int>, MarkovTriple> tree;
    for (const auto& node : triple_tree(depth)) tree[node.path] = node.triple;
    detail::Tally t;
    std::vector<State> layer{{{Component::negative_simple(1), Component::negative_simple(2),
                               Component::negative_simple(3)},
                              Seed{},
                              {}}};
    auto check_state = [&](const State& s) {
        for (int i = 0; i < 3; ++i) {
            LaurentPoly cc = cc_function(s.cluster[i]);
            t.check(cc == s.seed.x[i], [&] { return "CC of " + code_string(s.cluster[i]); });
        }
        MarkovTriple m{{markov_number(s.cluster[0]), markov_number(s.cluster[1]), markov_number(s.cluster[2])}};
        MarkovTriple ones = triple_at_ones(s.seed);
        t.check(m == ones && m.valid() && tree.at(s.path) == m, [&] { return "triple " + m.to_string(); });
    };
    check_state(layer.front());
    for (int d = 0; d < depth; ++d) {
        std::vector<State> next;
        for (const State& s : layer)
            for (int k = 1; k <= 3; ++k) {
                if (!s.path.empty() && s.path.back() == k) continue;
                int i = k - 1;
                auto [a, b] = complete_cluster(s.cluster[(i + 1) % 3], s.cluster[(i + 2) % 3]);
                t.check(a == s.cluster[i] || b == s.cluster[i], [&] { return std::string("lost the mutated vertex"); });
                State c = s;
                c.cluster[i] = a == s.cluster[i] ? b : a;
                c.seed = mutate_seed(s.seed, k);
                c.path.push_back(k);
                next.push_back(std::move(c));
            }
        for (const State& s : next) check_state(s);
        layer = std::move(next);
    }
    return {8, "clusters and cluster variables", t.failures == 0, false,
            t.summary("checks to depth " + std::to_string(depth))};
}

// 9. Farey curves.
inline CriterionResult criterion_farey(Suite suite) {
    int n = gamma_bound_n(suite);
    ComponentGraph g = build_gamma_prime(n, 3);
    detail::Tally t;
    std::vector<std::size_t> rigid;
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        const Component& z = g.vertices[i].component;
        CurveFamily want = z.kind == ComponentKind::band                                                  ? CurveFamily::closed
                           : z.kind == ComponentKind::tau_rigid || z.kind == ComponentKind::injective_shift ? CurveFamily::cw
                                                                                                             : CurveFamily::ccw;
        auto c = match_curve(*g.vertices[i].g);
        t.check(c && c->family == want, [&] { return code_string(z) + " has no curve in its family"; });
        if (z.kind == ComponentKind::rigid_string || z.kind == ComponentKind::negative_simple) rigid.push_back(i);
    }
    std::vector<CurveVector> curves;
    for (std::size_t i : rigid) curves.push_back(gvector_to_curve(*g.vertices[i].g));
    for (std::size_t x = 0; x < rigid.size(); ++x)
        for (std::size_t y = x + 1; y < rigid.size(); ++y) {
            const Component &u = g.vertices[rigid[x]].component, &v = g.vertices[rigid[y]].component;
            t.check(components_adjacent(u, v) == compatible(curves[x], curves[y]),
                    [&] { return code_string(u) + " / " + code_string(v); });
        }
    for (long a = -3; a <= 3; ++a)
        for (long b = -3; b <= 3; ++b)
            for (long c = -3; c <= 3; ++c) {
                GVector v{a, b, c};
                auto parts = decompose_z3(v);
                GVector sum{0, 0, 0};
                bool ok = true;
                for (const auto& p : parts) {
                    ok = ok && p.weight > 0;
                    GVector w = p.curve.vector();
                    for (int i = 0; i < 3; ++i) sum[i] += p.weight * w[i];
                }
                for (std::size_t x = 0; x < parts.size(); ++x)
                    for (std::size_t y = x + 1; y < parts.size(); ++y)
                        ok = ok && compatible(parts[x].curve, parts[y].curve);
                t.check(ok && sum == v, [&] { return "decomposition of " + detail::fmt(v); });
            }
    return {9, "Farey curves and compatibility", t.failures == 0, false, t.summary("checks")};
}

// 10. Snake graph matchings.
inline CriterionResult criterion_snake(Suite suite) {
    int max_d = suite == Suite::all ? 12 : 10;
    detail::Tally t;
    for (int d = 1; d <= max_d; ++d)
        for (int mask = 0; mask < (1 << (d - 1)); ++mask) {
            SignFunction sf{d, {}};
            for (int i = 0; i < d - 1; ++i) sf.signs.push_back(mask >> i & 1 ? 1 : -1);
            t.check(matchings(sf) == m_dp(string_from_signs(sf)), [&] { return "signs " + sf.to_string(); });
        }
    return {10, "snake graph matchings", t.failures == 0, false, t.summary("sign functions")};
}

// 11. Distinct rigid sequences with the same Markov number. A collision
// is reported, not failed.
inline CriterionResult criterion_collisions(Suite suite) {
    int n = suite == Suite::all ? 5 : 4;
    auto seqs = rigid_sequences(n, 3);
    auto found = collision_scan(seqs);
    CriterionResult r{11, "Markov number collisions", true, !found.empty(), "", 0};
    r.detail = std::to_string(found.size()) + " collisions among " + std::to_string(seqs.size()) + " sequences";
    for (std::size_t i = 0; i < found.size() && i < 3; ++i)
        r.detail += "; " + detail::seq_text(found[i].first) + " ~ " + detail::seq_text(found[i].second) + " = " +
                    found[i].value.str();
    return r;
}

inline std::vector<std::function<CriterionResult(Suite)>> acceptance_criteria() {
    return {criterion_hom,      criterion_rigidity, criterion_stability, criterion_gvectors,
            criterion_gamma,    criterion_gamma_prime, criterion_markov, criterion_clusters,
            criterion_farey,    criterion_snake,    criterion_collisions};
}

inline CriterionResult run_criterion(const std::function<CriterionResult(Suite)>& c, int id, Suite suite) {
    auto start = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
        r = c(suite);
    } catch (const std::exception& e) {
        r = {id, "criterion " + std::to_string(id), false, false, std::string("error: ") + e.what(), 0};
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

inline std::string format_result(const CriterionResult& r) {
    std::ostringstream os;
    os << (r.passed ? (r.flagged ? "FLAG" : "PASS") : "FAIL") << " [" << r.id << "] " << r.name << ": " << r.detail
       << " (" << static_cast<long>(r.seconds * 1000) << " ms)";
    return os.str();
}

} // namespace torus_lab
