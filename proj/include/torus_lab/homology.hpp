#pragma once

#include "modules.hpp"

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace torus_lab {

// ---- Auslander-Reiten translates of string modules ---------------------

namespace detail {

// Hook at the start: a direct arrow into y_1 preceded by the inverse of a
// maximal direct path. Falls back to deleting the cohook (the leading
// direct run and the inverse letter after it).
inline StringWord tau_inverse_start(const StringWord& c, int p) {
    std::optional<Arrow> beta;
    for (Arrow a : all_arrows) {
        if (target(a) != c.start()) continue;
        StringWord t{source(a), {Letter{a, false}}};
        t.letters.insert(t.letters.end(), c.letters.begin(), c.letters.end());
        if (!is_valid(t, p)) continue;
        if (!beta || (c.empty() && arrow_number(a) < arrow_number(*beta))) beta = a;
    }
    if (beta) {
        std::vector<Letter> d; // direct path from s(beta), first arrow the parallel one
        Arrow cur = parallel(*beta);
        for (int k = 0; k < p - 1; ++k) {
            d.push_back({cur, false});
            cur = successor(cur);
        }
        StringWord out;
        for (auto it = d.rbegin(); it != d.rend(); ++it) out.letters.push_back(it->inv());
        out.letters.push_back({*beta, false});
        out.letters.insert(out.letters.end(), c.letters.begin(), c.letters.end());
        out.base = out.start();
        return out;
    }
    std::size_t r = 0;
    while (r < c.length() && c.letters[r].direct()) ++r;
    require(r < c.length(), ErrorKind::truncation_too_small,
            "translate degenerates: directed string meets the truncation");
    StringWord out{c.letters[r].t(), std::vector<Letter>(c.letters.begin() + r + 1, c.letters.end())};
    return out;
}

// Cohook at the start: an inverse arrow out of y_1 preceded by a maximal
// direct path into its target; else delete the hook.
inline StringWord tau_start(const StringWord& c, int p) {
    std::optional<Arrow> gamma;
    for (Arrow a : all_arrows) {
        if (source(a) != c.start()) continue;
        StringWord t{target(a), {Letter{a, true}}};
        t.letters.insert(t.letters.end(), c.letters.begin(), c.letters.end());
        if (!is_valid(t, p)) continue;
        if (!gamma || (c.empty() && arrow_number(a) < arrow_number(*gamma))) gamma = a;
    }
    if (gamma) {
        std::vector<Letter> e; // path ending at t(gamma), last arrow the parallel one
        Arrow cur = parallel(*gamma);
        for (int k = 0; k < p - 1; ++k) {
            e.push_back({cur, false});
            cur = predecessor(cur);
        }
        StringWord out;
        for (auto it = e.rbegin(); it != e.rend(); ++it) out.letters.push_back(*it);
        out.letters.push_back({*gamma, true});
        out.letters.insert(out.letters.end(), c.letters.begin(), c.letters.end());
        out.base = out.start();
        return out;
    }
    std::size_t r = 0;
    while (r < c.length() && c.letters[r].inverse) ++r;
    require(r < c.length(), ErrorKind::truncation_too_small,
            "translate degenerates: inverse directed string meets the truncation");
    StringWord out{c.letters[r].t(), std::vector<Letter>(c.letters.begin() + r + 1, c.letters.end())};
    return out;
}

} // namespace detail

// tau^{-1} M(C) = M(_h C_h) over the truncation at p.
inline StringWord tau_inverse(const StringWord& c, int p) {
    require(p >= 2, ErrorKind::truncation_too_small, "p must be at least 2");
    require(is_valid(c, p), ErrorKind::truncation_too_small, "string is not a string of the truncation");
    StringWord x = detail::tau_inverse_start(c, p);
    return detail::tau_inverse_start(x.inverse(), p).inverse();
}

// tau M(C) = M(_c C_c).
inline StringWord tau(const StringWord& c, int p) {
    require(p >= 2, ErrorKind::truncation_too_small, "p must be at least 2");
    require(is_valid(c, p), ErrorKind::truncation_too_small, "string is not a string of the truncation");
    StringWord x = detail::tau_start(c, p);
    return detail::tau_start(x.inverse(), p).inverse();
}

inline bool same_string(const StringWord& a, const StringWord& b) { return a == b || a == b.inverse(); }

// ---- admissible pairs ---------------------------------------------------

// A factor substring C[i..j] of C matched with a substring C'[k..l] of C'
// (vertex positions), possibly read backwards.
struct AdmissiblePair {
    std::size_t i, j, k, l;
    bool reversed;
};

namespace detail {

inline std::string interval_key(const StringWord& w, std::size_t i, std::size_t j, bool reversed) {
    std::string key;
    if (!reversed) {
        key.push_back(static_cast<char>(w.vertex_at(i)));
        for (std::size_t q = i; q < j; ++q) {
            Letter l = w.letters[q];
            key.push_back(static_cast<char>(8 + arrow_index(l.arrow) * 2 + l.inverse));
        }
    } else {
        key.push_back(static_cast<char>(w.vertex_at(j)));
        for (std::size_t q = j; q > i; --q) {
            Letter l = w.letters[q - 1].inv();
            key.push_back(static_cast<char>(8 + arrow_index(l.arrow) * 2 + l.inverse));
        }
    }
    return key;
}

} // namespace detail

// Pairs giving the standard basis of Hom(M(C), M(C')).
inline std::vector<AdmissiblePair> admissible_pairs(const StringWord& c, const StringWord& cp) {
    require(is_valid(c) && is_valid(cp), ErrorKind::invalid_input, "not a valid string");
    std::unordered_map<std::string, std::vector<std::pair<std::size_t, std::size_t>>> subs;
    std::size_t mp = cp.length();
    for (std::size_t k = 0; k <= mp; ++k) {
        if (k > 0 && !cp.letters[k - 1].direct()) continue;
        for (std::size_t l = k; l <= mp; ++l) {
            if (l < mp && !cp.letters[l].inverse) continue;
            subs[detail::interval_key(cp, k, l, false)].emplace_back(k, l);
        }
    }
    std::vector<AdmissiblePair> out;
    std::size_t m = c.length();
    for (std::size_t i = 0; i <= m; ++i) {
        if (i > 0 && !c.letters[i - 1].inverse) continue;
        for (std::size_t j = i; j <= m; ++j) {
            if (j < m && !c.letters[j].direct()) continue;
            if (auto it = subs.find(detail::interval_key(c, i, j, false)); it != subs.end())
                for (auto [k, l] : it->second) out.push_back({i, j, k, l, false});
            if (j == i) continue;
            if (auto it = subs.find(detail::interval_key(c, i, j, true)); it != subs.end())
                for (auto [k, l] : it->second) out.push_back({i, j, k, l, true});
        }
    }
    return out;
}

// ---- decorated modules ----------------------------------------------------

// A module given combinatorially (zero, string or band with parameter)
// plus a decoration vector.
struct DecoratedModule {
    enum class Kind { zero, string, band };
    Kind kind = Kind::zero;
    StringWord word;
    BandWord band;
    int lambda = 1;
    Dims v{0, 0, 0};

    static DecoratedModule of_string(StringWord w) {
        require(is_valid(w), ErrorKind::invalid_input, "not a valid string");
        DecoratedModule m;
        m.kind = Kind::string;
        m.word = std::move(w);
        return m;
    }
    static DecoratedModule of_band(BandWord b, int lambda = 1) {
        require(is_valid(b), ErrorKind::not_a_band, "not a valid band");
        require(lambda != 0, ErrorKind::invalid_parameter, "lambda must be nonzero");
        DecoratedModule m;
        m.kind = Kind::band;
        m.band = std::move(b);
        m.lambda = lambda;
        return m;
    }
    static DecoratedModule negative_simple(Vertex i) {
        check_vertex(i);
        DecoratedModule m;
        m.v[i - 1] = 1;
        return m;
    }

    Dims dims() const {
        switch (kind) {
        case Kind::zero: return {0, 0, 0};
        case Kind::string: return word.dims();
        case Kind::band: return band.dims();
        }
        return {0, 0, 0};
    }

    int nil() const {
        switch (kind) {
        case Kind::zero: return 0;
        case Kind::string: return nilpotency(word);
        case Kind::band: return nilpotency(band);
        }
        return 0;
    }

    template <class F>
    ExplicitRep<F> rep() const {
        switch (kind) {
        case Kind::zero: return ExplicitRep<F>::zero();
        case Kind::string: return string_module<F>(word);
        case Kind::band: return band_module<F>(band, F(lambda));
        }
        return ExplicitRep<F>::zero();
    }
};

enum class EMethod { hom, pairs };
enum class FieldKind { rational, prime };

inline int default_truncation(const DecoratedModule& m, const DecoratedModule& n) {
    return std::max({m.nil(), n.nil(), 1}) + 2;
}

namespace detail {

inline int dot(const Dims& a, const Dims& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

template <class F>
std::size_t hom_modules(const DecoratedModule& x, const DecoratedModule& y) {
    if (x.kind == DecoratedModule::Kind::zero || y.kind == DecoratedModule::Kind::zero) return 0;
    return hom_dim(x.rep<F>(), y.rep<F>());
}

} // namespace detail

// Hom(X, Y) between combinatorial modules. On the prime field a string
// pair is cross-checked against its admissible pairs and recomputed over
// the rationals on any discrepancy; bands always use the rationals.
inline std::size_t hom_dimension(const DecoratedModule& x, const DecoratedModule& y,
                                 FieldKind field = FieldKind::rational) {
    using K = DecoratedModule::Kind;
    if (x.kind == K::zero || y.kind == K::zero) return 0;
    if (field == FieldKind::prime && x.kind == K::string && y.kind == K::string) {
        std::size_t fast = detail::hom_modules<ModPrime>(x, y);
        if (fast == admissible_pairs(x.word, y.word).size()) return fast;
    }
    return detail::hom_modules<Rational>(x, y);
}

// E(M, N) = dim Hom(tau^{-1} N, M) + sum_i v_N(i) dim M_i over the truncation at p.
inline long e_invariant(const DecoratedModule& m, const DecoratedModule& n, std::optional<int> p_opt = std::nullopt,
                        EMethod method = EMethod::hom, FieldKind field = FieldKind::rational) {
    int p = p_opt ? *p_opt : default_truncation(m, n);
    require(p > std::max(m.nil(), n.nil()), ErrorKind::truncation_too_small,
            "truncation must exceed the nilpotency of both modules");
    long deco = detail::dot(n.v, m.dims());
    if (m.kind == DecoratedModule::Kind::zero || n.kind == DecoratedModule::Kind::zero) return deco;
    DecoratedModule shifted = n;
    shifted.v = {0, 0, 0};
    if (n.kind == DecoratedModule::Kind::string) shifted.word = tau_inverse(n.word, p);
    if (method == EMethod::pairs && shifted.kind == DecoratedModule::Kind::string &&
        m.kind == DecoratedModule::Kind::string)
        return static_cast<long>(admissible_pairs(shifted.word, m.word).size()) + deco;
    return static_cast<long>(hom_dimension(shifted, m, field)) + deco;
}

// ---- g-vectors from a minimal injective copresentation -------------------

namespace detail {

// Functionals on the space at v restricting to a dual basis of the socle.
template <class F>
Matrix<F> socle_functionals(const Matrix<F>& soc) {
    // pick rows of the socle basis forming an invertible block
    Matrix<F> t = soc.transpose();
    Matrix<F> red = t;
    auto piv = row_reduce(red);
    std::size_t s = soc.cols(), d = soc.rows();
    Matrix<F> block(s, s);
    for (std::size_t r = 0; r < s; ++r)
        for (std::size_t c = 0; c < s; ++c) block(r, c) = soc(piv[r], c);
    // invert block via row reduction of [block | I]
    Matrix<F> aug(s, 2 * s);
    for (std::size_t r = 0; r < s; ++r) {
        for (std::size_t c = 0; c < s; ++c) aug(r, c) = block(r, c);
        aug(r, s + r) = F(1);
    }
    row_reduce(aug);
    Matrix<F> phi(s, d);
    for (std::size_t r = 0; r < s; ++r)
        for (std::size_t c = 0; c < s; ++c) phi(r, piv[c]) = aug(r, s + c);
    return phi;
}

template <class F>
Dims copresentation_g(const ExplicitRep<F>& m, int p) {
    Dims soc = m.socle_dims();
    // injective envelope I0 = sum_i I(i)^{soc_i}
    std::vector<std::pair<Vertex, Matrix<F>>> pieces; // (i, functional on M_i)
    for (Vertex i : all_vertices) {
        if (soc[i - 1] == 0) continue;
        Matrix<F> phi = socle_functionals(m.socle_basis(i));
        for (std::size_t r = 0; r < phi.rows(); ++r) {
            Matrix<F> row(1, phi.cols());
            for (std::size_t c = 0; c < phi.cols(); ++c) row(0, c) = phi(r, c);
            pieces.emplace_back(i, row);
        }
    }
    // I0 as a representation with the embedding f: M -> I0
    Dims d0{};
    std::vector<ExplicitRep<F>> injs;
    std::vector<Dims> offs;
    for (auto& [i, phi] : pieces) {
        injs.push_back(injective<F>(i, p));
        offs.push_back(d0);
        for (Vertex v : all_vertices) d0[v - 1] += injs.back().dim(v);
    }
    auto i0 = ExplicitRep<F>::with_dims(d0);
    std::array<Matrix<F>, 3> f;
    for (Vertex v : all_vertices) f[v - 1] = Matrix<F>(d0[v - 1], m.dim(v));
    for (std::size_t q = 0; q < pieces.size(); ++q) {
        auto& [i, phi] = pieces[q];
        const auto& inj = injs[q];
        for (Arrow a : all_arrows) {
            const auto& mat = inj.map(a);
            for (std::size_t r = 0; r < mat.rows(); ++r)
                for (std::size_t c = 0; c < mat.cols(); ++c)
                    i0.map(a)(offs[q][target(a) - 1] + r, offs[q][source(a) - 1] + c) = mat(r, c);
        }
        // coordinates of f(x) at the dual path q^*: phi(M_q x)
        std::array<int, 3> slot{};
        for (auto& path : detail::paths_to(i, p)) {
            Vertex j = path.start;
            Matrix<F> row = phi * m.path_map(path);
            for (std::size_t c = 0; c < row.cols(); ++c) f[j - 1](offs[q][j - 1] + slot[j - 1], c) = row(0, c);
            ++slot[j - 1];
        }
    }
    for (Vertex v : all_vertices)
        require(rank(f[v - 1]) == static_cast<std::size_t>(m.dim(v)), ErrorKind::internal_error,
                "injective envelope is not injective");
    // socle of the cokernel: {w : I0_a w in im f_t for all a out of v} / im f_v
    std::array<Matrix<F>, 3> ann;
    for (Vertex v : all_vertices) ann[v - 1] = left_null_space(f[v - 1]);
    Dims g{};
    for (Vertex v : all_vertices) {
        Matrix<F> k(0, d0[v - 1]);
        for (Arrow a : all_arrows)
            if (source(a) == v) k = Matrix<F>::stack(k, ann[target(a) - 1] * i0.map(a));
        int pre = d0[v - 1] - static_cast<int>(rank(k));
        int soc1 = pre - m.dim(v);
        g[v - 1] = -soc[v - 1] + soc1;
    }
    return g;
}

} // namespace detail

// g(M, V) = -soc(I0) + soc(I1) + v for a minimal copresentation 0 -> M -> I0 -> I1.
inline Dims g_vector_copresentation(const DecoratedModule& m, std::optional<int> p_opt = std::nullopt,
                                    FieldKind field = FieldKind::rational) {
    if (m.kind == DecoratedModule::Kind::zero) return m.v;
    int p = p_opt ? *p_opt : m.nil() + 2;
    require(p > m.nil(), ErrorKind::truncation_too_small, "truncation must exceed the nilpotency");
    Dims g = field == FieldKind::rational ? detail::copresentation_g(m.rep<Rational>(), p)
                                          : detail::copresentation_g(m.rep<ModPrime>(), p);
    for (int i = 0; i < 3; ++i) g[i] += m.v[i];
    return g;
}

// E(M, N) from its definition: hom(M, N) + sum_i g_i(N) dim M_i.
inline long e_definition(const DecoratedModule& m, const DecoratedModule& n, std::optional<int> p_opt = std::nullopt) {
    int p = p_opt ? *p_opt : default_truncation(m, n);
    Dims g = g_vector_copresentation(n, p);
    return static_cast<long>(hom_dimension(m, n)) + detail::dot(g, m.dims());
}

// ---- g-vectors of translates from a minimal projective presentation --------

namespace detail {

// [top P0] - [top P1] for a minimal presentation P1 -> P0 -> M -> 0.
template <class F>
Dims presentation_g(const ExplicitRep<F>& m, int p) {
    // top basis vectors of M: standard vectors completing the radical
    std::vector<std::pair<Vertex, std::vector<F>>> gens;
    for (Vertex v : all_vertices) {
        int d = m.dim(v);
        Matrix<F> rad(0, d);
        for (Arrow a : all_arrows)
            if (target(a) == v) rad = Matrix<F>::stack(rad, m.map(a).transpose());
        std::size_t r = rank(rad);
        for (int j = 0; j < d; ++j) {
            Matrix<F> e(1, d);
            e(0, j) = F(1);
            Matrix<F> trial = Matrix<F>::stack(rad, e);
            if (rank(trial) > r) {
                rad = trial;
                ++r;
                std::vector<F> u(d, F(0));
                u[j] = F(1);
                gens.emplace_back(v, u);
            }
        }
    }
    // P0 basis at w: (generator, path from its vertex ending at w)
    std::array<std::vector<std::pair<std::size_t, Path>>, 3> basis;
    for (std::size_t g = 0; g < gens.size(); ++g)
        for (auto& q : paths_from(gens[g].first, p)) basis[q.end() - 1].emplace_back(g, q);
    std::array<Matrix<F>, 3> ker;
    for (Vertex w : all_vertices) {
        Matrix<F> pi(m.dim(w), basis[w - 1].size());
        for (std::size_t c = 0; c < basis[w - 1].size(); ++c) {
            auto& [g, q] = basis[w - 1][c];
            Matrix<F> pm = m.path_map(q);
            for (std::size_t r = 0; r < pm.rows(); ++r)
                for (std::size_t k = 0; k < pm.cols(); ++k) pi(r, c) += pm(r, k) * gens[g].second[k];
        }
        ker[w - 1] = null_space(pi);
    }
    // an arrow sends (g, q) to (g, q a) when that path survives
    auto arrow_matrix = [&](Arrow a) {
        Vertex s = source(a), t = target(a);
        Matrix<F> out(basis[t - 1].size(), basis[s - 1].size());
        for (std::size_t c = 0; c < basis[s - 1].size(); ++c) {
            auto [g, q] = basis[s - 1][c];
            q.arrows.push_back(a);
            if (!q.nonzero() || static_cast<int>(q.length()) >= p) continue;
            for (std::size_t r = 0; r < basis[t - 1].size(); ++r)
                if (basis[t - 1][r].first == g && basis[t - 1][r].second == q) out(r, c) = F(1);
        }
        return out;
    };
    Dims top0{}, top1{};
    for (auto& g : gens) ++top0[g.first - 1];
    for (Vertex w : all_vertices) {
        Matrix<F> rad(0, basis[w - 1].size());
        for (Arrow a : all_arrows)
            if (target(a) == w) rad = Matrix<F>::stack(rad, (arrow_matrix(a) * ker[source(a) - 1]).transpose());
        top1[w - 1] = static_cast<int>(ker[w - 1].cols() - rank(rad));
    }
    return {top0[0] - top1[0], top0[1] - top1[1], top0[2] - top1[2]};
}

} // namespace detail

// g-vector of the translate of M over the finite-dimensional Jacobian
// algebra: the translate's injective copresentation is the Nakayama image
// of a minimal projective presentation of M. Both agree with the
// truncation at p for modules of Loewy length below p - 1.
inline Dims g_vector_translate(const DecoratedModule& m, std::optional<int> p_opt = std::nullopt) {
    require(m.kind == DecoratedModule::Kind::string, ErrorKind::unsupported, "translates are computed for strings");
    int p = p_opt ? *p_opt : m.nil() + 2;
    require(p > m.nil() + 1, ErrorKind::truncation_too_small, "truncation must exceed the nilpotency plus one");
    return detail::presentation_g(m.rep<Rational>(), p);
}

} // namespace torus_lab
