#pragma once

#include "classification.hpp"
#include "words.hpp"

#include <functional>
#include <vector>

namespace torus_lab {

// All sequences with 1 <= n <= max_n entries in [1, max_a].
inline std::vector<Seq> all_sequences(int max_n, int max_a) {
    std::vector<Seq> out;
    Seq cur;
    std::function<void()> rec = [&] {
        if (!cur.empty()) out.push_back(cur);
        if (static_cast<int>(cur.size()) == max_n) return;
        for (int x = 1; x <= max_a; ++x) {
            cur.push_back(x);
            rec();
            cur.pop_back();
        }
    };
    rec();
    return out;
}

// Rigid sequences (entries in {a, a+1}) with n <= max_n and max entry <= max_a.
inline std::vector<Seq> rigid_sequences(int max_n, int max_a) {
    std::vector<Seq> out;
    for (int a = 1; a <= max_a; ++a) {
        Seq cur;
        std::function<void()> rec = [&] {
            if (!cur.empty() && is_rigid(cur)) out.push_back(cur);
            if (static_cast<int>(cur.size()) == max_n) return;
            for (int x : {a, a + 1}) {
                if (x > max_a || (cur.empty() && x != a)) continue;
                cur.push_back(x);
                rec();
                cur.pop_back();
            }
        };
        rec();
    }
    return out;
}

// Rigid sequences generated by the Psi recursion, n <= max_n, a <= max_a.
// Much faster than filtering when max_n is large.
inline std::vector<PsiCode> rigid_codes(Letter x1, int max_n, int max_a) {
    std::vector<PsiCode> out;
    std::size_t bound = static_cast<std::size_t>(max_n);
    for (int a = 1; a <= max_a; ++a) {
        for (int k0 = 1; k0 <= max_n; ++k0) {
            std::vector<int> ks{k0};
            std::function<void(const detail::PsiState&)> rec = [&](const detail::PsiState& st) {
                if ((ks.size() == 1 || ks.back() >= 2)) {
                    int top = *std::max_element(st.v.begin(), st.v.end());
                    if (top <= max_a) out.push_back({x1, a, ks, false});
                }
                if (st.P.size() + st.w.size() <= bound) {
                    ks.push_back(1);
                    rec(detail::psi_step(st, 1));
                    ks.pop_back();
                }
                std::size_t block = st.v.size() + st.P.size();
                for (int k = 2; (k - 1) * block + st.v.size() <= bound; ++k) {
                    ks.push_back(k);
                    rec(detail::psi_step(st, k));
                    ks.pop_back();
                }
            };
            rec(detail::psi_start(a, k0));
        }
    }
    return out;
}

// Strongly reduced band sequences, n <= max_n, entries <= max_a, each
// listed once up to rotation (lexicographically smallest rotation).
inline std::vector<Seq> band_sequences(int max_n, int max_a) {
    std::vector<Seq> out;
    for (const Seq& s : all_sequences(max_n, max_a)) {
        bool smallest = true;
        for (std::size_t r = 1; r < s.size() && smallest; ++r) {
            Seq rot(s.begin() + r, s.end());
            rot.insert(rot.end(), s.begin(), s.begin() + r);
            if (rot < s) smallest = false;
        }
        if (smallest && is_strongly_reduced_band(s)) out.push_back(s);
    }
    return out;
}

// Rigid strings of the infinite-dimensional algebra as components: the
// three simples and every rigid code with 1 <= n <= max_n, a <= max_a,
// for all six choices of x1.
inline std::vector<Component> rigid_string_components(int max_n, int max_a) {
    std::vector<Component> out;
    if (max_n < 1) return out;
    for (Vertex i : all_vertices) out.push_back(Component::simple(i));
    for (Letter x1 : index_one_letters)
        for (const PsiCode& c : rigid_codes(x1, max_n, max_a)) out.push_back(Component::from_code(c));
    return out;
}

} // namespace torus_lab
