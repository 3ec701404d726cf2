#pragma once

#include "errors.hpp"
#include "markov.hpp"
#include "numeric.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace torus_lab {

// Sign function on the d-1 interior edges of d tiles (or d diagram vertices).
struct SignFunction {
    int d = 1;
    std::vector<int> signs; // each +1 or -1, size d-1

    std::string to_string() const {
        std::string out;
        for (int s : signs) out += s > 0 ? '+' : '-';
        return out;
    }
};

inline SignFunction parse_signs(std::string_view text) {
    SignFunction sf;
    for (char c : text) {
        require(c == '+' || c == '-', ErrorKind::invalid_input, "sign functions are words over '+' and '-'");
        sf.signs.push_back(c == '+' ? 1 : -1);
    }
    sf.d = static_cast<int>(sf.signs.size()) + 1;
    return sf;
}

struct SnakeGraph {
    std::vector<std::pair<int, int>> tiles;    // lower-left corners
    std::vector<std::pair<int, int>> vertices; // in order of appearance
    std::vector<std::pair<int, int>> edges;    // vertex indices, i < j
};

// Tiles are placed by the twisted sign f(i)(-1)^i: +1 puts the next tile
// above, -1 to the right. Alternating f gives a straight snake, constant
// f a zigzag.
inline SnakeGraph snake_graph(const SignFunction& sf) {
    require(sf.d >= 1 && static_cast<int>(sf.signs.size()) == sf.d - 1, ErrorKind::invalid_input,
            "a sign function on d tiles has d-1 signs");
    SnakeGraph g;
    std::map<std::pair<int, int>, int> index;
    std::set<std::pair<int, int>> edge_set;
    auto vertex = [&](int x, int y) {
        auto [it, fresh] = index.try_emplace({x, y}, static_cast<int>(g.vertices.size()));
        if (fresh) g.vertices.emplace_back(x, y);
        return it->second;
    };
    int x = 0, y = 0;
    for (int t = 0; t < sf.d; ++t) {
        if (t > 0) {
            int twisted = sf.signs[t - 1] * (t % 2 == 1 ? -1 : 1);
            (twisted > 0 ? y : x) += 1;
        }
        g.tiles.emplace_back(x, y);
        std::array<int, 4> c{vertex(x, y), vertex(x + 1, y), vertex(x, y + 1), vertex(x + 1, y + 1)};
        for (auto [i, j] : {std::pair{0, 1}, {0, 2}, {1, 3}, {2, 3}})
            edge_set.insert({std::min(c[i], c[j]), std::max(c[i], c[j])});
    }
    g.edges.assign(edge_set.begin(), edge_set.end());
    return g;
}

// Perfect matchings by a transfer over vertices in order of appearance;
// the state records which later vertices are already matched.
inline BigInt matchings(const SignFunction& sf) {
    SnakeGraph g = snake_graph(sf);
    int n = static_cast<int>(g.vertices.size());
    std::vector<std::vector<int>> later(n);
    for (auto [i, j] : g.edges) {
        require(j - i < 63, ErrorKind::internal_error, "snake graph bandwidth too large");
        later[i].push_back(j - i);
    }
    std::map<std::uint64_t, BigInt> states{{0, 1}};
    for (int v = 0; v < n; ++v) {
        std::map<std::uint64_t, BigInt> next;
        for (auto& [mask, count] : states) {
            if (mask & 1) {
                next[mask >> 1] += count;
                continue;
            }
            for (int off : later[v])
                if (!(mask >> off & 1)) next[(mask | std::uint64_t{1} << off) >> 1] += count;
        }
        states = std::move(next);
    }
    auto it = states.find(0);
    return it == states.end() ? BigInt(0) : it->second;
}

// Exhaustive enumeration: match the first free vertex in every possible way.
inline BigInt matchings_brute(const SignFunction& sf) {
    require(sf.d <= 10, ErrorKind::too_long, "brute-force matching count limited to 10 tiles");
    SnakeGraph g = snake_graph(sf);
    std::size_t n = g.vertices.size();
    std::vector<std::vector<int>> adj(n);
    for (auto [i, j] : g.edges) {
        adj[i].push_back(j);
        adj[j].push_back(i);
    }
    std::vector<bool> used(n, false);
    std::uint64_t count = 0;
    auto rec = [&](auto&& self) -> void {
        std::size_t v = 0;
        while (v < n && used[v]) ++v;
        if (v == n) {
            ++count;
            return;
        }
        used[v] = true;
        for (int u : adj[v])
            if (!used[u]) {
                used[u] = true;
                self(self);
                used[u] = false;
            }
        used[v] = false;
    };
    rec(rec);
    return count;
}

// Diagram with the same sign function: the first edge points down (from
// v_1 to v_2), equal consecutive signs keep the direction, a change of
// sign reverses it.
inline Diagram string_from_signs(const SignFunction& sf) {
    require(static_cast<int>(sf.signs.size()) == sf.d - 1, ErrorKind::invalid_input,
            "a sign function on d vertices has d-1 signs");
    Diagram d;
    for (int s : sf.signs) d.push_back(s == sf.signs.front());
    return d;
}

inline std::string format_diagram(const Diagram& d) {
    std::string out;
    for (bool f : d) out += f ? 'd' : 'u';
    return out;
}

} // namespace torus_lab
