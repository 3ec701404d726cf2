#pragma once

#include "rep.hpp"
#include "words.hpp"

#include <vector>

namespace torus_lab {

namespace detail {

// Position of each diagram vertex inside its vertex space.
inline std::vector<int> slots(const std::vector<Vertex>& vs, Dims& d) {
    d = {0, 0, 0};
    std::vector<int> out;
    for (Vertex v : vs) out.push_back(d[v - 1]++);
    return out;
}

} // namespace detail

template <class F>
ExplicitRep<F> string_module(const StringWord& w) {
    require(is_valid(w), ErrorKind::invalid_input, "not a valid string");
    std::vector<Vertex> vs;
    for (std::size_t i = 0; i <= w.length(); ++i) vs.push_back(w.vertex_at(i));
    Dims d;
    auto slot = detail::slots(vs, d);
    auto rep = ExplicitRep<F>::with_dims(d);
    for (std::size_t i = 0; i < w.length(); ++i) {
        Letter l = w.letters[i];
        if (l.direct())
            rep.map(l.arrow)(slot[i + 1], slot[i]) = F(1);
        else
            rep.map(l.arrow)(slot[i], slot[i + 1]) = F(1);
    }
    return rep;
}

// Band module M(B, lambda, 1); the last letter carries lambda.
template <class F>
ExplicitRep<F> band_module(const BandWord& b, const F& lambda) {
    require(is_valid(b), ErrorKind::not_a_band, "not a valid band");
    require(!is_zero(lambda), ErrorKind::invalid_parameter, "lambda must be nonzero");
    std::size_t m = b.length();
    std::vector<Vertex> vs;
    for (std::size_t i = 0; i < m; ++i) vs.push_back(b.letters[i].s());
    Dims d;
    auto slot = detail::slots(vs, d);
    auto rep = ExplicitRep<F>::with_dims(d);
    for (std::size_t i = 0; i < m; ++i) {
        Letter l = b.letters[i];
        std::size_t j = (i + 1) % m;
        F c = (i + 1 == m) ? lambda : F(1);
        if (l.direct())
            rep.map(l.arrow)(slot[j], slot[i]) = c;
        else
            rep.map(l.arrow)(slot[i], slot[j]) = c;
    }
    return rep;
}

} // namespace torus_lab
