#pragma once

#include "linalg.hpp"
#include "quiver.hpp"

#include <array>
#include <map>
#include <vector>

namespace torus_lab {

// A representation: a vector space per vertex and a matrix per arrow
// (rows index the target space, columns the source space).
template <class F>
struct ExplicitRep {
    Dims dims{0, 0, 0};
    std::array<Matrix<F>, 6> maps;

    static ExplicitRep zero() { return with_dims({0, 0, 0}); }

    static ExplicitRep with_dims(Dims d) {
        ExplicitRep r;
        r.dims = d;
        for (Arrow a : all_arrows) r.maps[arrow_index(a)] = Matrix<F>(d[target(a) - 1], d[source(a) - 1]);
        return r;
    }

    int dim(Vertex v) const { return dims[v - 1]; }
    int total_dim() const { return dims[0] + dims[1] + dims[2]; }
    Matrix<F>& map(Arrow a) { return maps[arrow_index(a)]; }
    const Matrix<F>& map(Arrow a) const { return maps[arrow_index(a)]; }

    // Matrix of a path, applied arrow by arrow.
    Matrix<F> path_map(const Path& p) const {
        Matrix<F> m = Matrix<F>::identity(dim(p.start));
        for (Arrow a : p.arrows) m = map(a) * m;
        return m;
    }

    bool satisfies_relations() const {
        for (auto [f, s] : jacobian_relations())
            if (!(map(s) * map(f)).is_zero()) return false;
        return true;
    }

    // Smallest k with every path of length k acting as zero.
    int nilpotency() const {
        if (total_dim() == 0) return 0;
        std::vector<Path> layer;
        for (Vertex v : all_vertices) layer.push_back({v, {}});
        for (int k = 0;; ++k) {
            std::vector<Path> alive;
            for (auto& q : layer)
                if (!path_map(q).is_zero()) alive.push_back(q);
            if (alive.empty()) return k;
            std::vector<Path> next;
            for (auto& q : alive)
                for (Arrow a : all_arrows)
                    if (source(a) == q.end()) {
                        Path r = q;
                        r.arrows.push_back(a);
                        next.push_back(std::move(r));
                    }
            layer = std::move(next);
            require(k < 4 * total_dim() + 4, ErrorKind::internal_error, "representation is not nilpotent");
        }
    }

    // Basis of the socle at v as columns.
    Matrix<F> socle_basis(Vertex v) const {
        Matrix<F> stacked(0, dim(v));
        for (Arrow a : all_arrows)
            if (source(a) == v) stacked = Matrix<F>::stack(stacked, map(a));
        return null_space(stacked);
    }

    Dims socle_dims() const {
        Dims d{};
        for (Vertex v : all_vertices) d[v - 1] = static_cast<int>(socle_basis(v).cols());
        return d;
    }
};

// The algebra with all paths of length >= p killed.
struct TruncatedAlgebra {
    int p = 2;
    std::vector<Path> basis;

    explicit TruncatedAlgebra(int p_) : p(p_), basis(path_basis(p_)) {}
    std::size_t dimension() const { return basis.size(); }
};

namespace detail {

inline std::vector<Path> paths_from(Vertex v, int p) {
    std::vector<Path> out;
    for (auto& q : path_basis(p))
        if (q.start == v) out.push_back(q);
    return out;
}

inline std::vector<Path> paths_to(Vertex v, int p) {
    std::vector<Path> out;
    for (auto& q : path_basis(p))
        if (q.end() == v) out.push_back(q);
    return out;
}

} // namespace detail

// Indecomposable projective at i: paths starting at i, placed at their end.
template <class F>
ExplicitRep<F> projective(Vertex i, int p) {
    check_vertex(i);
    auto paths = detail::paths_from(i, p);
    Dims d{};
    std::vector<int> slot(paths.size());
    for (std::size_t k = 0; k < paths.size(); ++k) slot[k] = d[paths[k].end() - 1]++;
    auto rep = ExplicitRep<F>::with_dims(d);
    for (std::size_t k = 0; k < paths.size(); ++k)
        for (Arrow a : all_arrows) {
            if (source(a) != paths[k].end()) continue;
            Path q = paths[k];
            q.arrows.push_back(a);
            if (!q.nonzero() || static_cast<int>(q.length()) >= p) continue;
            for (std::size_t l = 0; l < paths.size(); ++l)
                if (paths[l] == q) rep.map(a)(slot[l], slot[k]) = F(1);
        }
    return rep;
}

// Indecomposable injective at i: dual basis of paths ending at i, the dual
// of a path placed at its start; an arrow a sends (q a)^* to q^*.
template <class F>
ExplicitRep<F> injective(Vertex i, int p) {
    check_vertex(i);
    auto paths = detail::paths_to(i, p);
    Dims d{};
    std::vector<int> slot(paths.size());
    for (std::size_t k = 0; k < paths.size(); ++k) slot[k] = d[paths[k].start - 1]++;
    auto rep = ExplicitRep<F>::with_dims(d);
    for (std::size_t k = 0; k < paths.size(); ++k) {
        const Path& q = paths[k];
        if (q.arrows.empty()) continue;
        Arrow a = q.arrows.front();
        Path rest{target(a), std::vector<Arrow>(q.arrows.begin() + 1, q.arrows.end())};
        for (std::size_t l = 0; l < paths.size(); ++l)
            if (paths[l] == rest) rep.map(a)(slot[l], slot[k]) = F(1);
    }
    return rep;
}

// Dimension of Hom(M, N) by solving N_a f_s = f_t M_a for all arrows.
template <class F>
std::size_t hom_dim(const ExplicitRep<F>& m, const ExplicitRep<F>& n) {
    std::array<std::size_t, 3> offset{};
    std::size_t total = 0;
    for (Vertex v : all_vertices) {
        offset[v - 1] = total;
        total += static_cast<std::size_t>(n.dim(v)) * m.dim(v);
    }
    if (total == 0) return 0;
    // unknown (r, c) of f_v: row r of N_v, column c of M_v
    auto var = [&](Vertex v, int r, int c) { return offset[v - 1] + static_cast<std::size_t>(r) * m.dim(v) + c; };
    SparseEliminator<F> elim(total);
    for (Arrow a : all_arrows) {
        Vertex s = source(a), t = target(a);
        const Matrix<F>& na = n.map(a);
        const Matrix<F>& ma = m.map(a);
        // nonzeros by row of N_a and by column of M_a
        std::vector<std::vector<std::pair<int, F>>> n_rows(n.dim(t)), m_cols(m.dim(s));
        for (int r = 0; r < n.dim(t); ++r)
            for (int k = 0; k < n.dim(s); ++k)
                if (!is_zero(na(r, k))) n_rows[r].emplace_back(k, na(r, k));
        for (int k = 0; k < m.dim(t); ++k)
            for (int c = 0; c < m.dim(s); ++c)
                if (!is_zero(ma(k, c))) m_cols[c].emplace_back(k, ma(k, c));
        for (int r = 0; r < n.dim(t); ++r)
            for (int c = 0; c < m.dim(s); ++c) {
                typename SparseEliminator<F>::Row row;
                for (auto& [k, x] : n_rows[r]) row.emplace_back(var(s, k, c), x);
                for (auto& [k, x] : m_cols[c]) row.emplace_back(var(t, r, k), -x);
                if (!row.empty()) elim.add(std::move(row));
            }
    }
    return total - elim.rank();
}

} // namespace torus_lab
