#pragma once

#include "classification.hpp"
#include "enumerate.hpp"
#include "errors.hpp"
#include "markov.hpp"
#include "parallel.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace torus_lab {

struct ComponentRecord {
    Component component;
    std::optional<GVector> g;
    std::optional<Dims> dims;      // absent for the translates
    std::optional<BigInt> markov;  // rigid components only
};

// Undirected graph; every vertex carries an implicit loop.
struct ComponentGraph {
    std::vector<ComponentRecord> vertices;
    std::vector<std::pair<std::size_t, std::size_t>> edges; // i < j, sorted

    std::optional<std::size_t> index_of(const Component& c) const {
        auto it = std::lower_bound(vertices.begin(), vertices.end(), c,
                                   [](const ComponentRecord& r, const Component& x) { return r.component < x; });
        if (it == vertices.end() || it->component != c) return std::nullopt;
        return static_cast<std::size_t>(it - vertices.begin());
    }

    std::vector<std::set<std::size_t>> adjacency() const {
        std::vector<std::set<std::size_t>> adj(vertices.size());
        for (auto [i, j] : edges) {
            adj[i].insert(j);
            adj[j].insert(i);
        }
        return adj;
    }
};

inline ComponentRecord make_record(const Component& c) {
    ComponentRecord r{c, g_formula(c), std::nullopt, std::nullopt};
    if (c.kind != ComponentKind::tau_rigid && c.kind != ComponentKind::injective_shift) r.dims = c.dims();
    if (c.kind == ComponentKind::rigid_string || c.kind == ComponentKind::negative_simple) r.markov = markov_number(c);
    return r;
}

namespace detail {

inline ComponentGraph assemble(std::vector<Component> comps) {
    std::sort(comps.begin(), comps.end());
    comps.erase(std::unique(comps.begin(), comps.end()), comps.end());
    ComponentGraph g;
    g.vertices.resize(comps.size());
    parallel_for(comps.size(), [&](std::size_t i) { g.vertices[i] = make_record(comps[i]); });
    return g;
}

} // namespace detail

// Vertices of Gamma up to the bounds: the negative simples, the rigid
// strings with n <= max_n and a <= max_a, and the bands of those sizes.
// Every strongly reduced band is the partner of a rigid string with the
// same code, and only partners within the bounds are kept.
inline std::vector<Component> gamma_vertices(int max_n, int max_a) {
    require(max_n >= 0 && max_a >= 0, ErrorKind::invalid_parameter, "bounds must be nonnegative");
    std::vector<Component> comps;
    for (Vertex i : all_vertices) comps.push_back(Component::negative_simple(i));
    for (const Component& c : rigid_string_components(max_n, max_a)) comps.push_back(c);
    if (max_n >= 1) {
        std::size_t rigid = comps.size();
        for (std::size_t i = 0; i < rigid; ++i) {
            Component b = comps[i].band_partner();
            if (b.seq().entries.size() <= static_cast<std::size_t>(max_n) && b.max_entry() <= max_a)
                comps.push_back(b);
        }
    }
    std::sort(comps.begin(), comps.end());
    comps.erase(std::unique(comps.begin(), comps.end()), comps.end());
    return comps;
}

inline ComponentGraph build_gamma(int max_n, int max_a) {
    auto comps = gamma_vertices(max_n, max_a);
    ComponentGraph g = detail::assemble(std::move(comps));
    std::size_t n = g.vertices.size();
    std::vector<std::vector<std::size_t>> hits(n);
    parallel_for(n, [&](std::size_t i) {
        for (std::size_t j = i + 1; j < n; ++j)
            if (components_adjacent(g.vertices[i].component, g.vertices[j].component)) hits[i].push_back(j);
    });
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j : hits[i]) g.edges.emplace_back(i, j);
    return g;
}

// ---- neighbours from the Psi code ------------------------------------------

namespace detail {

inline Component with_k(const PsiCode& c, int a, std::vector<int> k) {
    return Component::from_code({c.x1, a, std::move(k), false});
}

} // namespace detail

// Neighbours of a rigid string of size at most `bound`: the two shorter
// ones, the families built on the code, the band partner and the negative
// simples at the vertices the string misses. For simples the list comes
// from filtering the all-ones strings.
inline std::vector<Component> neighbors_psi(const Component& z, std::size_t bound) {
    require(z.kind == ComponentKind::rigid_string, ErrorKind::invalid_input, "expected a rigid string");
    std::vector<Component> out;
    auto keep = [&](const Component& c) {
        if (c.kind != ComponentKind::rigid_string || c.size() <= bound) out.push_back(c);
    };

    if (z.is_simple()) {
        for (const Component& c : rigid_string_components(static_cast<int>(bound), 1))
            if (c != z && components_adjacent(z, c)) out.push_back(c);
    } else {
        const PsiCode& c = z.code;
        const std::vector<int>& k = c.k;
        std::size_t m = k.size() - 1;
        auto prefix = [&](std::size_t len) { return std::vector<int>(k.begin(), k.begin() + len); };

        // C1
        if (k[m] >= 3 || (m == 0 && k[0] == 2)) {
            auto k1 = k;
            --k1[m];
            keep(detail::with_k(c, c.a, k1));
        } else if (m >= 1 && k[m] == 2) {
            std::size_t j = 0;
            for (std::size_t i = 1; i + 1 <= m; ++i)
                if (k[i] != 1) j = i;
            keep(detail::with_k(c, c.a, prefix(j + 1)));
        } else if (m == 0 && k[0] == 1) {
            keep(detail::with_k(c, 0, {-1}));
        }
        // C2
        if (m >= 1) {
            auto k2 = prefix(m);
            ++k2[m - 1];
            keep(detail::with_k(c, c.a, k2));
        } else {
            keep(detail::with_k(c, c.a - 1, {1}));
        }
        // C3
        {
            auto k3 = k;
            ++k3[m];
            keep(detail::with_k(c, c.a, k3));
        }
        // C4^j: j ones, then 2
        for (std::size_t j = 0;; ++j) {
            auto k4 = k;
            k4.insert(k4.end(), j, 1);
            k4.push_back(2);
            Component n4 = detail::with_k(c, c.a, k4);
            if (n4.size() > bound) break;
            out.push_back(n4);
        }
        // C5^l, l >= 2
        for (int l = 2;; ++l) {
            std::optional<Component> n5;
            if (k[m] >= 2) {
                auto k5 = k;
                --k5[m];
                k5.push_back(l);
                n5 = detail::with_k(c, c.a, k5);
            } else if (m == 0) {
                n5 = detail::with_k(c, c.a + 1, {l - 1});
            }
            if (!n5 || n5->size() > bound) break;
            out.push_back(*n5);
        }
    }
    out.push_back(z.band_partner());
    Dims d = z.dims();
    for (Vertex i : all_vertices)
        if (d[i - 1] == 0) out.push_back(Component::negative_simple(i));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// ---- mutation ----------------------------------------------------------------

// The two rigid components completing an edge {z1, z2} to a cluster.
inline std::pair<Component, Component> complete_cluster(const Component& z1, const Component& z2) {
    require(z1.rigid() && z2.rigid() && z1.kind != ComponentKind::tau_rigid && z2.kind != ComponentKind::tau_rigid &&
                z1.kind != ComponentKind::injective_shift && z2.kind != ComponentKind::injective_shift,
            ErrorKind::invalid_input, "cluster completion needs rigid components");
    require(z1 != z2 && components_adjacent(z1, z2), ErrorKind::not_an_edge, "the components are not adjacent");
    std::size_t bound = z1.size() + z2.size() + 1;
    auto special = [](const Component& z) { return z.kind == ComponentKind::negative_simple || z.is_simple(); };

    std::vector<Component> cand;
    if (!special(z1) || !special(z2)) {
        cand = neighbors_psi(special(z1) ? z2 : z1, bound);
        for (Vertex i : all_vertices) {
            cand.push_back(Component::negative_simple(i));
            cand.push_back(Component::simple(i));
        }
    } else {
        cand = rigid_string_components(static_cast<int>(bound), 2);
        for (Vertex i : all_vertices) cand.push_back(Component::negative_simple(i));
    }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

    std::vector<Component> found;
    for (const Component& c : cand)
        if (c.rigid() && c != z1 && c != z2 && components_adjacent(c, z1) && components_adjacent(c, z2))
            found.push_back(c);
    require(found.size() == 2, ErrorKind::search_bound_exceeded,
            "expected two completions within size " + std::to_string(bound) + ", found " +
                std::to_string(found.size()));
    return {found[0], found[1]};
}

// ---- cliques and connectivity -----------------------------------------------

// Maximal cliques (Bron-Kerbosch with pivoting), each sorted, in lex order.
inline std::vector<std::vector<std::size_t>> clusters(const ComponentGraph& g) {
    auto adj = g.adjacency();
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> r;
    auto bk = [&](auto&& self, std::set<std::size_t> p, std::set<std::size_t> x) -> void {
        if (p.empty() && x.empty()) {
            auto c = r;
            std::sort(c.begin(), c.end());
            out.push_back(std::move(c));
            return;
        }
        std::size_t pivot = p.empty() ? *x.begin() : *p.begin();
        std::size_t best = 0;
        for (const auto* s : {&p, &x})
            for (std::size_t u : *s) {
                std::size_t cnt = 0;
                for (std::size_t w : adj[u]) cnt += p.count(w);
                if (cnt >= best) {
                    best = cnt;
                    pivot = u;
                }
            }
        std::vector<std::size_t> todo;
        for (std::size_t v : p)
            if (!adj[pivot].count(v)) todo.push_back(v);
        for (std::size_t v : todo) {
            std::set<std::size_t> np, nx;
            for (std::size_t w : adj[v]) {
                if (p.count(w)) np.insert(w);
                if (x.count(w)) nx.insert(w);
            }
            r.push_back(v);
            self(self, std::move(np), std::move(nx));
            r.pop_back();
            p.erase(v);
            x.insert(v);
        }
    };
    std::set<std::size_t> all;
    for (std::size_t i = 0; i < g.vertices.size(); ++i) all.insert(i);
    bk(bk, all, {});
    std::sort(out.begin(), out.end());
    return out;
}

// Connected components of the subgraph on the vertices accepted by `keep`.
template <class Pred>
std::vector<std::vector<std::size_t>> connected_components(const ComponentGraph& g, Pred keep) {
    auto adj = g.adjacency();
    std::vector<int> seen(g.vertices.size(), 0);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t s = 0; s < g.vertices.size(); ++s) {
        if (seen[s] || !keep(g.vertices[s])) continue;
        std::vector<std::size_t> comp{s}, stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            std::size_t u = stack.back();
            stack.pop_back();
            for (std::size_t w : adj[u])
                if (!seen[w] && keep(g.vertices[w])) {
                    seen[w] = 1;
                    comp.push_back(w);
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

inline std::vector<std::vector<std::size_t>> connected_components(const ComponentGraph& g) {
    return connected_components(g, [](const ComponentRecord&) { return true; });
}

// ---- the graph over the finite-dimensional algebra -------------------------

// Gamma together with the translates of its rigid vertices. A band is its
// own translate; edges between translates mirror those of Gamma, and a
// band also meets the translate of its partner.
inline ComponentGraph build_gamma_prime(int max_n, int max_a) {
    ComponentGraph base = build_gamma(max_n, max_a);
    std::vector<Component> comps;
    for (const auto& r : base.vertices) {
        comps.push_back(r.component);
        if (r.component.rigid()) comps.push_back(r.component.tau_copy());
    }
    ComponentGraph g = detail::assemble(std::move(comps));
    std::set<std::pair<std::size_t, std::size_t>> edges;
    auto add = [&](const Component& u, const Component& v) {
        std::size_t i = *g.index_of(u), j = *g.index_of(v);
        edges.insert({std::min(i, j), std::max(i, j)});
    };
    for (auto [i, j] : base.edges) {
        const Component& u = base.vertices[i].component;
        const Component& v = base.vertices[j].component;
        add(u, v);
        add(u.tau_copy(), v.tau_copy());
    }
    g.edges.assign(edges.begin(), edges.end());
    return g;
}

// ---- export ---------------------------------------------------------------------

inline std::string code_string(const Component& c) {
    PsiCode code = c.code;
    code.band = c.kind == ComponentKind::band;
    std::string s = format_psi(code);
    if (c.kind == ComponentKind::tau_rigid || c.kind == ComponentKind::injective_shift) return "tau(" + s + ")";
    return s;
}

inline nlohmann::ordered_json to_json(const ComponentGraph& g) {
    nlohmann::ordered_json verts = nlohmann::ordered_json::array(), edges = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        const auto& r = g.vertices[i];
        nlohmann::ordered_json v{{"id", i}, {"kind", kind_name(r.component.kind)}, {"code", code_string(r.component)}};
        v["g"] = r.g ? nlohmann::ordered_json(*r.g) : nlohmann::ordered_json(nullptr);
        v["dims"] = r.dims ? nlohmann::ordered_json(*r.dims) : nlohmann::ordered_json(nullptr);
        v["markov"] = r.markov ? nlohmann::ordered_json(r.markov->str()) : nlohmann::ordered_json(nullptr);
        verts.push_back(std::move(v));
    }
    for (auto [i, j] : g.edges) edges.push_back({i, j});
    return {{"vertices", verts}, {"edges", edges}};
}

inline std::string to_dot(const ComponentGraph& g) {
    std::ostringstream os;
    os << "graph gamma {\n";
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
        os << "  v" << i << " [label=\"" << code_string(g.vertices[i].component) << "\"];\n";
    for (auto [i, j] : g.edges) os << "  v" << i << " -- v" << j << ";\n";
    os << "}\n";
    return os.str();
}

inline std::string export_graph(const ComponentGraph& g, std::string_view format) {
    if (format == "json") return to_json(g).dump(2) + "\n";
    if (format == "dot") return to_dot(g);
    fail(ErrorKind::unknown_format, "unknown export format '" + std::string(format) + "'");
}

} // namespace torus_lab
