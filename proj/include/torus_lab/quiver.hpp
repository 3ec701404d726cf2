#pragma once

#include "errors.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace torus_lab {

// Vertices are numbered 1, 2, 3.
using Vertex = int;
using Dims = std::array<int, 3>;

inline constexpr std::array<Vertex, 3> all_vertices{1, 2, 3};

inline void check_vertex(Vertex v) {
    require(v >= 1 && v <= 3, ErrorKind::invalid_input, "vertex must be 1, 2 or 3");
}

// Two arrows 1 -> 2 (alpha), two 2 -> 3 (beta), two 3 -> 1 (gamma).
enum class Arrow : std::uint8_t { alpha1, alpha2, beta1, beta2, gamma1, gamma2 };

inline constexpr std::array<Arrow, 6> all_arrows{Arrow::alpha1, Arrow::alpha2, Arrow::beta1,
                                                 Arrow::beta2,  Arrow::gamma1, Arrow::gamma2};

constexpr int arrow_index(Arrow a) { return static_cast<int>(a); }
constexpr int arrow_family(Arrow a) { return static_cast<int>(a) / 2; } // 0 alpha, 1 beta, 2 gamma
constexpr int arrow_number(Arrow a) { return static_cast<int>(a) % 2 + 1; } // 1 or 2

constexpr Arrow make_arrow(int family, int number) { return static_cast<Arrow>(family * 2 + number - 1); }

constexpr Vertex source(Arrow a) { return arrow_family(a) + 1; }
constexpr Vertex target(Arrow a) { return arrow_family(a) == 2 ? 1 : arrow_family(a) + 2; }

inline std::string_view arrow_name(Arrow a) {
    static constexpr std::array<std::string_view, 6> names{"a1", "a2", "b1", "b2", "g1", "g2"};
    return names[arrow_index(a)];
}

inline std::string_view arrow_pretty(Arrow a) {
    static constexpr std::array<std::string_view, 6> names{"alpha1", "alpha2", "beta1", "beta2", "gamma1", "gamma2"};
    return names[arrow_index(a)];
}

inline Arrow parse_arrow(std::string_view s) {
    for (Arrow a : all_arrows)
        if (arrow_name(a) == s || arrow_pretty(a) == s) return a;
    fail(ErrorKind::invalid_input, "unknown arrow '" + std::string(s) + "'");
}

// The potential's cyclic derivatives give six zero relations; a path
// "second after first" vanishes exactly when both arrows share the index.
constexpr bool is_relation(Arrow first, Arrow second) {
    return target(first) == source(second) && arrow_number(first) == arrow_number(second);
}

constexpr bool composable(Arrow first, Arrow second) {
    return target(first) == source(second) && !is_relation(first, second);
}

// Relations as (first, second) pairs: gamma1 beta1, alpha1 gamma1, ...
inline std::vector<std::pair<Arrow, Arrow>> jacobian_relations() {
    std::vector<std::pair<Arrow, Arrow>> out;
    for (Arrow f : all_arrows)
        for (Arrow s : all_arrows)
            if (is_relation(f, s)) out.emplace_back(f, s);
    return out;
}

// The unique arrow continuing a direct path after `a`.
constexpr Arrow successor(Arrow a) {
    int fam = arrow_family(a) == 2 ? 0 : arrow_family(a) + 1;
    return make_arrow(fam, 3 - arrow_number(a));
}

// The unique arrow that may precede `a`.
constexpr Arrow predecessor(Arrow a) {
    int fam = arrow_family(a) == 0 ? 2 : arrow_family(a) - 1;
    return make_arrow(fam, 3 - arrow_number(a));
}

constexpr Arrow parallel(Arrow a) { return make_arrow(arrow_family(a), 3 - arrow_number(a)); }

// A letter of a string: an arrow or its formal inverse.
struct Letter {
    Arrow arrow = Arrow::alpha1;
    bool inverse = false;

    constexpr Vertex s() const { return inverse ? target(arrow) : source(arrow); }
    constexpr Vertex t() const { return inverse ? source(arrow) : target(arrow); }
    constexpr Letter inv() const { return {arrow, !inverse}; }
    constexpr bool direct() const { return !inverse; }

    friend constexpr bool operator==(Letter, Letter) = default;
    friend constexpr auto operator<=>(Letter a, Letter b) {
        if (auto c = arrow_index(a.arrow) <=> arrow_index(b.arrow); c != 0) return c;
        return a.inverse <=> b.inverse;
    }
};

inline std::string letter_name(Letter l) { return std::string(arrow_name(l.arrow)) + (l.inverse ? "-" : ""); }

inline Letter parse_letter(std::string_view s) {
    bool inv = !s.empty() && s.back() == '-';
    if (inv) s.remove_suffix(1);
    return {parse_arrow(s), inv};
}

// Letters `first` then `second` may follow each other in a string.
constexpr bool letters_compatible(Letter first, Letter second) {
    if (first.t() != second.s()) return false;
    if (first.direct() && second.direct()) return !is_relation(first.arrow, second.arrow);
    if (first.inverse && second.inverse) return !is_relation(second.arrow, first.arrow);
    return first.arrow != second.arrow; // no l l^- cancellation
}

// Path in the quiver, arrows listed in the order they are traversed.
struct Path {
    Vertex start = 1;
    std::vector<Arrow> arrows;

    Vertex end() const { return arrows.empty() ? start : target(arrows.back()); }
    std::size_t length() const { return arrows.size(); }
    bool nonzero() const {
        for (std::size_t i = 1; i < arrows.size(); ++i)
            if (!composable(arrows[i - 1], arrows[i])) return false;
        return true;
    }
    friend bool operator==(const Path&, const Path&) = default;
};

inline std::string path_name(const Path& p) {
    if (p.arrows.empty()) return "e" + std::to_string(p.start);
    std::string out;
    for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) {
        if (!out.empty()) out += '.';
        out += arrow_name(*it);
    }
    return out;
}

// Nonzero paths of length < p, ordered by length then lexicographically.
inline std::vector<Path> path_basis(int p) {
    require(p >= 2, ErrorKind::truncation_too_small, "truncation index must be at least 2");
    std::vector<Path> out;
    std::vector<Path> layer;
    for (Vertex v : all_vertices) layer.push_back({v, {}});
    for (int len = 0; len < p; ++len) {
        out.insert(out.end(), layer.begin(), layer.end());
        std::vector<Path> next;
        for (const Path& q : layer)
            for (Arrow a : all_arrows) {
                if (source(a) != q.end()) continue;
                if (!q.arrows.empty() && !composable(q.arrows.back(), a)) continue;
                Path r = q;
                r.arrows.push_back(a);
                next.push_back(std::move(r));
            }
        layer = std::move(next);
    }
    return out;
}

// Exchange matrix of the quiver: b_ij = #(j -> i) - #(i -> j).
inline std::array<std::array<int, 3>, 3> quiver_exchange_matrix() {
    std::array<std::array<int, 3>, 3> b{};
    for (Arrow a : all_arrows) {
        int s = source(a) - 1, t = target(a) - 1;
        b[t][s] += 1;
        b[s][t] -= 1;
    }
    return b;
}

} // namespace torus_lab
