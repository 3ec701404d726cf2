#pragma once

#include "classification.hpp"
#include "laurent.hpp"
#include "words.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

namespace torus_lab {

// ---- successor-closed subquivers of a string diagram -----------------------

// Orientation of each diagram edge: true when it points from y_i to y_{i+1}.
using Diagram = std::vector<bool>;

inline Diagram diagram_of(const StringWord& w) {
    Diagram d;
    for (Letter l : w.letters) d.push_back(l.direct());
    return d;
}

namespace detail {

// Subsets of the vertices [lo, hi] closed under the arrows among them,
// tallied by the membership of the two end vertices.
inline std::array<std::array<BigInt, 2>, 2> closed_block(const Diagram& d, std::size_t lo, std::size_t hi) {
    std::array<std::array<BigInt, 2>, 2> tally{};
    std::size_t nv = hi - lo + 1;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << nv); ++mask) {
        bool closed = true;
        for (std::size_t i = lo; i < hi && closed; ++i) {
            bool in_i = mask >> (i - lo) & 1, in_j = mask >> (i + 1 - lo) & 1;
            closed = d[i] ? (!in_i || in_j) : (!in_j || in_i);
        }
        if (closed) tally[mask & 1][mask >> (nv - 1) & 1] += 1;
    }
    return tally;
}

} // namespace detail

inline constexpr std::size_t subsets_block_size = 12;

// Brute force: every vertex subset closed under arrow targets. Subsets of
// consecutive blocks of vertices are enumerated outright and glued along
// the arrow between neighbouring blocks, so long diagrams stay feasible.
inline BigInt m_subsets(const Diagram& d) {
    std::size_t nv = d.size() + 1;
    // acc[s][t]: closed subsets of the vertices so far with first vertex s, last t
    std::array<std::array<BigInt, 2>, 2> acc{};
    for (std::size_t lo = 0; lo < nv; lo += subsets_block_size) {
        std::size_t hi = std::min(nv, lo + subsets_block_size) - 1;
        auto block = detail::closed_block(d, lo, hi);
        if (lo == 0) {
            acc = block;
            continue;
        }
        bool forward = d[lo - 1];
        std::array<std::array<BigInt, 2>, 2> next{};
        for (int s = 0; s < 2; ++s)
            for (int t = 0; t < 2; ++t)
                for (int u = 0; u < 2; ++u)
                    for (int w = 0; w < 2; ++w) {
                        bool ok = forward ? (!t || u) : (!u || t);
                        if (ok) next[s][w] += acc[s][t] * block[u][w];
                    }
        acc = std::move(next);
    }
    return acc[0][0] + acc[0][1] + acc[1][0] + acc[1][1];
}

inline BigInt m_subsets(const StringWord& w) { return m_subsets(diagram_of(w)); }

// Transfer along the diagram with the membership of the last vertex as state.
inline BigInt m_dp(const Diagram& d) {
    BigInt out = 1, in = 1;
    for (bool forward : d) {
        // forward: y_i in forces y_{i+1} in; backward: y_{i+1} in forces y_i in
        BigInt nout = forward ? out : out + in;
        BigInt nin = forward ? out + in : in;
        out = std::move(nout);
        in = std::move(nin);
    }
    return out + in;
}

inline BigInt m_dp(const StringWord& w) { return m_dp(diagram_of(w)); }

inline Dims add_unit(Dims d, Vertex v) {
    ++d[v - 1];
    return d;
}

// Number N_e of successor-closed subsets of each dimension vector e.
inline std::map<Dims, BigInt> graded_counts(const StringWord& w) {
    using Poly = std::map<Dims, BigInt>;
    Poly out{{Dims{0, 0, 0}, 1}}, in{{add_unit({0, 0, 0}, w.vertex_at(0)), 1}};
    auto merge = [](Poly& into, const Poly& from) {
        for (auto& [e, c] : from) into[e] += c;
    };
    auto shift = [](const Poly& p, Vertex v) {
        Poly q;
        for (auto& [e, c] : p) q[add_unit(e, v)] += c;
        return q;
    };
    for (std::size_t i = 0; i < w.length(); ++i) {
        Vertex v = w.vertex_at(i + 1);
        bool forward = w.letters[i].direct();
        Poly nout = out, nin = shift(in, v);
        if (forward)
            merge(nin, shift(out, v));
        else
            merge(nout, in);
        out = std::move(nout);
        in = std::move(nin);
    }
    merge(out, in);
    return out;
}

// ---- the recursion on sequences -------------------------------------------

// Fibonacci numbers with F(-n) = (-1)^(n+1) F(n).
inline BigInt fibonacci_signed(int n) {
    if (n >= 0) return fibonacci(n);
    BigInt f = fibonacci(-n);
    return (-n) % 2 == 0 ? BigInt(-f) : f;
}

namespace detail {

inline BigInt m_rec(const Seq& s, std::map<Seq, BigInt>& memo, std::optional<std::size_t> split) {
    if (s.size() == 1) return fibonacci_signed(2 * s[0] + 3);
    if (!split)
        if (auto it = memo.find(s); it != memo.end()) return it->second;
    std::size_t i = split.value_or(s.size() / 2);
    Seq left(s.begin(), s.begin() + i), right(s.begin() + i, s.end());
    Seq left_d = left, right_d = right;
    left_d.back() -= 1;
    right_d.front() -= 1;
    BigInt v = m_rec(left, memo, {}) * m_rec(right, memo, {}) + m_rec(left_d, memo, {}) * m_rec(right_d, memo, {});
    if (!split) memo.emplace(s, v);
    return v;
}

} // namespace detail

// m(a1..an) by splitting after position `split` (1 <= split <= n-1; the
// middle by default) and recursing down to the Fibonacci values.
inline BigInt m_recurrence(const Seq& s, std::optional<std::size_t> split = std::nullopt) {
    require(!s.empty(), ErrorKind::invalid_sequence, "empty sequence");
    if (split) require(*split >= 1 && *split < s.size(), ErrorKind::invalid_parameter, "split point out of range");
    std::map<Seq, BigInt> memo;
    return detail::m_rec(s, memo, split);
}

inline BigInt m_recurrence(const SeqForm& f, std::optional<std::size_t> split = std::nullopt) {
    require(!f.band, ErrorKind::not_a_string, "bands have no Markov number here");
    check_seq(f);
    return m_recurrence(f.entries, split);
}

// Markov number of a rigid component: 1 for the negative simples.
inline BigInt markov_number(const Component& z) {
    if (z.kind == ComponentKind::negative_simple) return 1;
    require(z.kind == ComponentKind::rigid_string, ErrorKind::unsupported, "Markov numbers are defined for rigid strings");
    return m_dp(seq_to_string(z.seq()));
}

// ---- Caldero-Chapoton functions -------------------------------------------

inline LaurentPoly x_power(const GVector& g) {
    return LaurentPoly::monomial({static_cast<int>(g[0]), static_cast<int>(g[1]), static_cast<int>(g[2])});
}

inline LaurentPoly cc_function(const Component& z) {
    require(z.kind == ComponentKind::rigid_string || z.kind == ComponentKind::negative_simple,
            ErrorKind::unsupported, "Caldero-Chapoton functions are computed for rigid components only");
    GVector g = g_formula(z);
    if (z.kind == ComponentKind::negative_simple) return x_power(g);
    auto b = quiver_exchange_matrix();
    LaurentPoly out;
    for (auto& [e, c] : graded_counts(seq_to_string(z.seq()))) {
        Monomial m;
        for (int i = 0; i < 3; ++i) m[i] = static_cast<int>(g[i]) + b[i][0] * e[0] + b[i][1] * e[1] + b[i][2] * e[2];
        out.add_term(m, c);
    }
    return out;
}

// ---- seeds -----------------------------------------------------------------

using ExchangeMatrix = std::array<std::array<int, 3>, 3>;

struct Seed {
    ExchangeMatrix b = quiver_exchange_matrix();
    std::array<LaurentPoly, 3> x{LaurentPoly::variable(0), LaurentPoly::variable(1), LaurentPoly::variable(2)};
};

inline ExchangeMatrix mutate_matrix(const ExchangeMatrix& b, int k) {
    ExchangeMatrix out = b;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i == k || j == k)
                out[i][j] = -b[i][j];
            else
                out[i][j] = b[i][j] + (std::abs(b[i][k]) * b[k][j] + b[i][k] * std::abs(b[k][j])) / 2;
        }
    return out;
}

// Mutation at k in {1, 2, 3}.
inline Seed mutate_seed(const Seed& s, int k) {
    require(k >= 1 && k <= 3, ErrorKind::invalid_parameter, "mutation index must be 1, 2 or 3");
    int kk = k - 1;
    LaurentPoly plus = LaurentPoly::constant(1), minus = LaurentPoly::constant(1);
    for (int i = 0; i < 3; ++i) {
        int v = s.b[i][kk];
        for (int t = 0; t < std::abs(v); ++t) (v > 0 ? plus : minus) = (v > 0 ? plus : minus) * s.x[i];
    }
    Seed out = s;
    try {
        out.x[kk] = exact_divide(plus + minus, s.x[kk]);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::not_divisible) fail(ErrorKind::internal_error, "exchange relation is not Laurent");
        throw;
    }
    out.b = mutate_matrix(s.b, kk);
    return out;
}

// ---- Markov triples ----------------------------------------------------------

struct MarkovTriple {
    std::array<BigInt, 3> v{1, 1, 1};

    bool valid() const {
        return v[0] > 0 && v[1] > 0 && v[2] > 0 && v[0] * v[0] + v[1] * v[1] + v[2] * v[2] == 3 * v[0] * v[1] * v[2];
    }
    friend bool operator==(const MarkovTriple&, const MarkovTriple&) = default;

    std::string to_string() const {
        std::ostringstream os;
        os << "(" << v[0] << "," << v[1] << "," << v[2] << ")";
        return os.str();
    }
};

// Replace the k-th entry (k in {1, 2, 3}) by 3bc - a.
inline MarkovTriple triple_mutate(const MarkovTriple& t, int k) {
    require(k >= 1 && k <= 3, ErrorKind::invalid_parameter, "mutation index must be 1, 2 or 3");
    require(t.valid(), ErrorKind::invalid_input, "not a Markov triple");
    MarkovTriple out = t;
    int i = k - 1;
    out.v[i] = 3 * t.v[(i + 1) % 3] * t.v[(i + 2) % 3] - t.v[i];
    return out;
}

inline MarkovTriple triple_at_ones(const Seed& s) {
    return {{s.x[0].at_ones(), s.x[1].at_ones(), s.x[2].at_ones()}};
}

struct TripleNode {
    MarkovTriple triple;
    std::vector<int> path; // mutation indices from (1,1,1)
};

// All nodes of the mutation tree from (1,1,1) up to the given depth,
// never mutating the same index twice in a row.
inline std::vector<TripleNode> triple_tree(int depth) {
    require(depth >= 0, ErrorKind::invalid_parameter, "depth must be nonnegative");
    std::vector<TripleNode> out{{MarkovTriple{}, {}}};
    std::size_t layer_begin = 0;
    for (int d = 0; d < depth; ++d) {
        std::size_t layer_end = out.size();
        for (std::size_t n = layer_begin; n < layer_end; ++n)
            for (int k = 1; k <= 3; ++k) {
                if (!out[n].path.empty() && out[n].path.back() == k) continue;
                TripleNode c{triple_mutate(out[n].triple, k), out[n].path};
                c.path.push_back(k);
                out.push_back(std::move(c));
            }
        layer_begin = layer_end;
    }
    return out;
}

// ---- collision scan ------------------------------------------------------------

struct Collision {
    Seq first, second;
    BigInt value;
};

// Distinct rigid sequences (x1 ignored) sharing a Markov number.
inline std::vector<Collision> collision_scan(const std::vector<Seq>& seqs) {
    std::map<BigInt, Seq> seen;
    std::vector<Collision> out;
    for (const Seq& s : seqs) {
        BigInt m = m_recurrence(s);
        auto [it, fresh] = seen.emplace(m, s);
        if (!fresh && it->second != s) out.push_back({it->second, s, m});
    }
    return out;
}

} // namespace torus_lab
