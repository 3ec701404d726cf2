#pragma once

#include "homology.hpp"
#include "words.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

namespace torus_lab {

using Seq = std::vector<int>;
using GVector = std::array<long, 3>;

// ---- sequence predicates --------------------------------------------------

namespace detail {

// Start positions of s inside t.
inline std::vector<std::size_t> occurrences(const Seq& t, const Seq& s, std::size_t from, std::size_t len) {
    std::vector<std::size_t> out;
    if (len > t.size()) return out;
    for (std::size_t q = 0; q + len <= t.size(); ++q)
        if (std::equal(s.begin() + from, s.begin() + from + len, t.begin() + q)) out.push_back(q);
    return out;
}

inline Seq slice(const Seq& s, std::size_t from, std::size_t len) {
    return Seq(s.begin() + from, s.begin() + from + len);
}

} // namespace detail

inline bool is_symmetric(const Seq& s) { return std::equal(s.begin(), s.end(), s.rbegin()); }

// Contiguous rigidity test: symmetric, entries in {a, a+1}, and the two
// forbidden occurrence patterns.
inline bool is_rigid(const Seq& s) {
    if (s.size() == 1 && s[0] == 0) return true;
    if (s.empty()) return false;
    for (int x : s)
        if (x < 1) return false;
    if (!is_symmetric(s)) return false;
    int a = s[0];
    for (int x : s)
        if (x != a && x != a + 1) return false;
    std::size_t n = s.size();
    // (s, a+1, ...) and (..., s, a, ...) with the second s not at the start
    for (std::size_t len = 0; len < n; ++len) {
        if (s[len] != a + 1) continue;
        for (std::size_t q : detail::occurrences(s, s, 0, len))
            if (q >= 1 && q + len < n && s[q + len] == a) return false;
    }
    // (..., a+1, s, a+1, ..., a, s, a, ...)
    for (std::size_t len = 0; len + 2 <= n; ++len)
        for (std::size_t i = 1; i + len < n; ++i) {
            if (s[i - 1] != a + 1 || s[i + len] != a + 1) continue;
            Seq mid = detail::slice(s, i, len);
            for (std::size_t q : detail::occurrences(s, mid, 0, len))
                if (q >= 1 && q + len < n && s[q - 1] == a && s[q + len] == a) return false;
        }
    return true;
}

inline bool is_rigid(const SeqForm& f) {
    require(!f.band, ErrorKind::not_a_string, "bands are never rigid");
    check_seq(f);
    return is_rigid(f.entries);
}

// E(C', C) = 0 for two sequence-form strings with the same x1 in Q1.
inline bool e_vanishes(const Seq& cp, const Seq& c) {
    std::size_t n = c.size(), m = cp.size();
    require(n >= 1 && m >= 1, ErrorKind::invalid_sequence, "empty sequence");
    int b = *std::max_element(c.begin(), c.end());
    for (int x : cp)
        if (x < b - 1) return false;
    // prefixes of C followed by a_i against occurrences in C' with something before
    for (std::size_t len = 0; len < n; ++len)
        for (std::size_t q : detail::occurrences(cp, c, 0, len))
            if (q >= 1 && q + len < m && c[len] > cp[q + len]) return false;
    // suffixes of C preceded by a_i against occurrences with something after
    for (std::size_t len = 0; len < n; ++len)
        for (std::size_t q : detail::occurrences(cp, c, n - len, len))
            if (q >= 1 && q + len < m && c[n - len - 1] > cp[q - 1]) return false;
    // interior occurrences in both
    for (std::size_t len = 0; len + 2 <= n; ++len)
        for (std::size_t i = 1; i + len < n; ++i)
            for (std::size_t q : detail::occurrences(cp, c, i, len))
                if (q >= 1 && q + len < m && c[i - 1] > cp[q - 1] && c[i + len] > cp[q + len]) return false;
    // C inside C' only as a prefix or a suffix
    for (std::size_t q : detail::occurrences(cp, c, 0, n))
        if (q != 0 && q + n != m) return false;
    return true;
}

// Strongly reduced band test on the cyclic entries.
inline bool is_strongly_reduced_band(const Seq& b) {
    std::size_t n = b.size();
    if (n == 1 && b[0] == 0) return true;
    if (n == 0) return false;
    for (int x : b)
        if (x < 1) return false;
    for (std::size_t d = 1; d < n; ++d) {
        if (n % d) continue;
        bool periodic = true;
        for (std::size_t i = 0; i < n && periodic; ++i) periodic = b[i] == b[(i + d) % n];
        if (periodic) return false;
    }
    int a = *std::min_element(b.begin(), b.end());
    for (int x : b)
        if (x != a && x != a + 1) return false;
    Seq b2 = b;
    b2.insert(b2.end(), b.begin(), b.end());
    std::size_t N = b2.size();
    // no s with both (a, s, a) and (a+1, s, a+1) inside B^2
    for (std::size_t len = 0; len + 2 <= N; ++len)
        for (std::size_t i = 1; i + len < N; ++i) {
            if (b2[i - 1] != a + 1 || b2[i + len] != a + 1) continue;
            for (std::size_t q : detail::occurrences(b2, b2, i, len))
                if (q >= 1 && q + len < N && b2[q - 1] == a && b2[q + len] == a) return false;
        }
    return true;
}

inline bool is_strongly_reduced_band(const SeqForm& f) {
    require(f.band, ErrorKind::not_a_band, "not a band sequence");
    check_seq(f);
    return is_strongly_reduced_band(f.entries);
}

// ---- components -----------------------------------------------------------

enum class ComponentKind { negative_simple, rigid_string, band, tau_rigid, injective_shift };

inline std::string_view kind_name(ComponentKind k) {
    switch (k) {
    case ComponentKind::negative_simple: return "neg_simple";
    case ComponentKind::rigid_string: return "rigid_string";
    case ComponentKind::band: return "band";
    case ComponentKind::tau_rigid: return "tau_rigid";
    case ComponentKind::injective_shift: return "injective_shift";
    }
    return "unknown";
}

// An indecomposable strongly reduced component, named by the code of its
// rigid string (bands by the code of their partner string).
struct Component {
    ComponentKind kind = ComponentKind::negative_simple;
    PsiCode code;

    static Component negative_simple(Vertex i) { return {ComponentKind::negative_simple, negative_simple_code(i)}; }
    static Component simple(Vertex i) { return {ComponentKind::rigid_string, simple_code(i)}; }

    // From a code; (x1:0|-1) becomes the negative simple, a band flag a band.
    static Component from_code(const PsiCode& raw) {
        PsiCode c = normalize(raw);
        if (c.band) return {ComponentKind::band, c};
        if (c.negative_simple()) return {ComponentKind::negative_simple, c};
        return {ComponentKind::rigid_string, c};
    }

    static Component from_seq(const SeqForm& s) { return from_code(psi_encode(s)); }

    bool rigid() const { return kind != ComponentKind::band; }
    bool is_simple() const { return kind == ComponentKind::rigid_string && code.simple(); }
    Vertex vertex() const { return negative_simple_vertex(code); }

    // Sequence form; the negative simples have none.
    SeqForm seq() const {
        require(kind == ComponentKind::rigid_string || kind == ComponentKind::band, ErrorKind::no_psi_form,
                "component has no sequence form");
        PsiCode c = code;
        c.band = kind == ComponentKind::band;
        SeqForm s = psi_decode(c);
        if (s.band) s = band_to_seq(seq_to_band(s));
        return s;
    }

    // Number of entries, with 0 for the negative and plain simples.
    std::size_t size() const {
        if (kind == ComponentKind::negative_simple || kind == ComponentKind::injective_shift) return 0;
        if (code.simple() || code.negative_simple()) return 0;
        PsiCode c = code;
        c.band = false;
        return psi_decode(c).entries.size();
    }

    int max_entry() const {
        if (kind == ComponentKind::negative_simple || kind == ComponentKind::injective_shift || code.simple() ||
            code.negative_simple())
            return 0;
        PsiCode c = code;
        c.band = false;
        auto e = psi_decode(c).entries;
        return *std::max_element(e.begin(), e.end());
    }

    DecoratedModule module() const {
        switch (kind) {
        case ComponentKind::negative_simple: return DecoratedModule::negative_simple(vertex());
        case ComponentKind::rigid_string: return DecoratedModule::of_string(seq_to_string(seq()));
        case ComponentKind::band: return DecoratedModule::of_band(seq_to_band(seq()));
        default: fail(ErrorKind::unsupported, "translates over the finite-dimensional algebra have no module here");
        }
    }

    Dims dims() const {
        if (kind == ComponentKind::negative_simple) return {0, 0, 0};
        return module().dims();
    }

    Component band_partner() const {
        require(kind == ComponentKind::rigid_string || kind == ComponentKind::negative_simple, ErrorKind::invalid_input,
                "only rigid components have a band partner");
        PsiCode c = code;
        c.band = true;
        return {ComponentKind::band, c};
    }

    Component rigid_partner() const {
        require(kind == ComponentKind::band, ErrorKind::not_a_band, "not a band component");
        PsiCode c = code;
        c.band = false;
        return from_code(c);
    }

    Component tau_copy() const {
        switch (kind) {
        case ComponentKind::negative_simple: return {ComponentKind::injective_shift, code};
        case ComponentKind::rigid_string: return {ComponentKind::tau_rigid, code};
        case ComponentKind::band: return *this;
        default: fail(ErrorKind::invalid_input, "already a translate");
        }
    }

    std::string label() const {
        switch (kind) {
        case ComponentKind::band: return format_seq(seq());
        case ComponentKind::tau_rigid:
        case ComponentKind::injective_shift: return "tau(" + format_psi(code) + ")";
        default: return format_psi(code);
        }
    }

    friend bool operator==(const Component& a, const Component& b) {
        return a.kind == b.kind && a.code == b.code;
    }
    friend auto operator<=>(const Component& a, const Component& b) {
        if (auto c = static_cast<int>(a.kind) <=> static_cast<int>(b.kind); c != 0) return c;
        return a.code <=> b.code;
    }
};

// ---- edge rules ------------------------------------------------------------

namespace detail {

// The index-one direct arrow into vertex v.
inline Letter arrow_into(Vertex v) { return {make_arrow(v == 1 ? 2 : v - 2, 1), false}; }

inline bool all_ones(const Seq& s) {
    return std::all_of(s.begin(), s.end(), [](int x) { return x == 1; });
}

} // namespace detail

// E vanishes both ways between two rigid strings.
inline bool edge_rigid(const SeqForm& c, const SeqForm& cp) {
    require(!c.band && !cp.band, ErrorKind::not_a_string, "expected strings");
    check_seq(c);
    check_seq(cp);
    bool zc = is_zero_form(c), zcp = is_zero_form(cp);
    if (zc && zcp) return c.x1.s() == cp.x1.s();
    if (zc || zcp) {
        const SeqForm& simple = zc ? c : cp;
        const SeqForm& other = zc ? cp : c;
        if (!detail::all_ones(other.entries)) return false;
        Vertex v = simple.x1.s();
        return other.x1 == direct_x1_at(v) || other.x1 == detail::arrow_into(v).inv();
    }
    if (c.x1 != cp.x1) return false;
    return e_vanishes(c.entries, cp.entries) && e_vanishes(cp.entries, c.entries);
}

// A rigid string and a strongly reduced band are neighbours exactly when
// the band is the partner of the string.
inline bool edge_string_band(const SeqForm& c, const SeqForm& b) {
    require(!c.band && b.band, ErrorKind::invalid_input, "expected a string and a band");
    PsiCode mine = psi_encode(c);
    mine.band = true;
    return psi_encode(b) == mine;
}

// Edge (E vanishing both ways) between two components of the infinite-
// dimensional algebra; loops are reported for rigid components.
inline bool components_adjacent(const Component& u, const Component& v) {
    using K = ComponentKind;
    require(u.kind != K::tau_rigid && u.kind != K::injective_shift && v.kind != K::tau_rigid &&
                v.kind != K::injective_shift,
            ErrorKind::invalid_input, "use the finite-dimensional graph for translates");
    if (u.kind == K::negative_simple && v.kind == K::negative_simple) return true;
    if (u.kind == K::negative_simple) return v.dims()[u.vertex() - 1] == 0;
    if (v.kind == K::negative_simple) return u.dims()[v.vertex() - 1] == 0;
    if (u.kind == K::band && v.kind == K::band) return false;
    if (u.kind == K::band) return edge_string_band(v.seq(), u.seq());
    if (v.kind == K::band) return edge_string_band(u.seq(), v.seq());
    return edge_rigid(u.seq(), v.seq());
}

// ---- generic g-vectors ------------------------------------------------------

inline GVector rotate_g(GVector v, int r) {
    for (int i = 0; i < ((r % 3) + 3) % 3; ++i) v = {v[2], v[0], v[1]};
    return v;
}

namespace detail {

// Tables for x1 = alpha1 and alpha1^-; beta and gamma are cyclic shifts.
inline GVector g_table(Letter x1, long n, long a, ComponentKind kind) {
    GVector base;
    if (kind == ComponentKind::rigid_string)
        base = x1.inverse ? GVector{2 + a, n - 2 - a, -n + 1} : GVector{-n + a, -a, n + 1};
    else if (kind == ComponentKind::band)
        base = x1.inverse ? GVector{a, n - a, -n} : GVector{-n + a, -a, n};
    else
        base = x1.inverse ? GVector{a, n - a, -n - 1} : GVector{-n + 2 + a, -a - 2, n - 1};
    return rotate_g(base, arrow_family(x1.arrow));
}

} // namespace detail

inline GVector unit_vector(Vertex i, long s = 1) {
    GVector g{0, 0, 0};
    g[i - 1] = s;
    return g;
}

// Closed-form generic g-vector of a component.
inline GVector g_formula(const Component& z) {
    using K = ComponentKind;
    switch (z.kind) {
    case K::negative_simple: return unit_vector(z.vertex());
    case K::injective_shift: return unit_vector(z.vertex(), -1);
    default: break;
    }
    if (z.code.simple()) {
        Vertex i = simple_vertex(z.code);
        Vertex t = i % 3 + 1;
        switch (z.kind) {
        case K::rigid_string: {
            GVector g = unit_vector(i, -1);
            g[(t % 3 + 1) - 1] = 2; // the two arrows into i come from the previous vertex
            return g;
        }
        case K::tau_rigid: {
            GVector g = unit_vector(i);
            g[t - 1] = -2;
            return g;
        }
        default: break;
        }
    }
    if (z.kind == K::band && z.code.negative_simple()) {
        // the band x2^- x1 next to the negative simple
        Letter x1 = z.code.x1;
        GVector g{0, 0, 0};
        g[x1.s() - 1] = 1;
        g[x1.t() - 1] = -1;
        return g;
    }
    SeqForm s = z.kind == K::band ? z.seq() : [&] {
        PsiCode c = z.code;
        c.band = false;
        return psi_decode(c);
    }();
    long n = static_cast<long>(s.entries.size());
    long a = 0;
    for (int x : s.entries) a += x;
    return detail::g_table(s.x1, n, a, z.kind);
}

} // namespace torus_lab
