#pragma once

#include "classification.hpp"
#include "errors.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace torus_lab {

struct FareyPoint {
    long a = 0, b = 1;

    bool farey() const { return std::gcd(a, b) == 1; }
    bool standard() const { return farey() && a >= 0 && (a > 0 || b == 1); }
    friend bool operator==(const FareyPoint&, const FareyPoint&) = default;
    friend auto operator<=>(const FareyPoint&, const FareyPoint&) = default;
};

inline std::string format_point(const FareyPoint& p) {
    return "(" + std::to_string(p.a) + "," + std::to_string(p.b) + ")";
}

inline bool are_neighbors(const FareyPoint& p, const FareyPoint& q) {
    long d = p.a * q.b - p.b * q.a;
    return d == 1 || d == -1;
}

// Sign-normalised representative of a point of the projective line.
inline FareyPoint standardize(FareyPoint p) {
    require(p.farey(), ErrorKind::invalid_input, "not a Farey point");
    if (p.a < 0 || (p.a == 0 && p.b < 0)) p = {-p.a, -p.b};
    return p;
}

enum class CurveFamily { ccw, cw, closed };

inline std::string_view family_name(CurveFamily f) {
    switch (f) {
    case CurveFamily::ccw: return "ccw";
    case CurveFamily::cw: return "cw";
    case CurveFamily::closed: return "cl";
    }
    return "?";
}

// An allowable curve: a family, a Farey point in the family's domain and
// one of the three cyclic rotations of the coordinate vector.
struct CurveVector {
    CurveFamily family = CurveFamily::ccw;
    FareyPoint point;
    int rotation = 0;

    GVector vector() const {
        long a = point.a, b = point.b;
        GVector base;
        switch (family) {
        case CurveFamily::ccw: base = {1 - b, a + 1, b - a - 1}; break;
        case CurveFamily::cw: base = {-1 - b, a - 1, b - a + 1}; break;
        case CurveFamily::closed: base = {-b, a, b - a}; break;
        }
        return rotate_g(base, rotation);
    }

    // The rotations glue the three domains into one projective line; the
    // maps below are unimodular, so Farey neighbours stay neighbours.
    FareyPoint unified() const {
        long a = point.a, b = point.b;
        switch (rotation) {
        case 0: return standardize({a + b, b});
        case 1: return standardize({a, a + b});
        default: return standardize({-b, a});
        }
    }

    friend bool operator==(const CurveVector&, const CurveVector&) = default;
};

inline std::string format_curve(const CurveVector& c) {
    return std::string(family_name(c.family)) + format_point(c.point) + "^" + std::to_string(c.rotation);
}

inline bool in_domain(CurveFamily f, const FareyPoint& p) {
    if (!p.farey()) return false;
    if (f == CurveFamily::cw) return p.a > 0 && p.b >= 0;
    return p.a >= 0 && p.b > 0;
}

inline CurveVector curve_vector(CurveFamily f, const FareyPoint& p, int rotation) {
    require(in_domain(f, p), ErrorKind::invalid_input, "Farey point outside the family's domain");
    require(rotation >= 0 && rotation <= 2, ErrorKind::invalid_parameter, "rotation must be 0, 1 or 2");
    return {f, p, rotation};
}

// The curve of a family lying over a point of the projective line.
inline CurveVector curve_at(CurveFamily f, FareyPoint u) {
    u = standardize(u);
    long x = u.a, y = u.b;
    if (f == CurveFamily::cw) {
        if (y >= 0 && x > y) return {f, {x - y, y}, 0};
        if (x > 0 && y >= x) return {f, {x, y - x}, 1};
        if (x == 0) return {f, {1, 0}, 2};
        return {f, {-y, x}, 2};
    }
    if (y > 0 && x >= y) return {f, {x - y, y}, 0};
    if (x < y) return {f, {x, y - x}, 1};
    return {f, {-y, x}, 2};
}

// Curve with the given coordinate vector, if any.
inline std::optional<CurveVector> match_curve(const GVector& g) {
    long s = g[0] + g[1] + g[2];
    CurveFamily f = s == 1 ? CurveFamily::ccw : s == -1 ? CurveFamily::cw : CurveFamily::closed;
    if (s != 0 && s != 1 && s != -1) return std::nullopt;
    std::optional<CurveVector> found;
    for (int r = 0; r < 3; ++r) {
        GVector base = rotate_g(g, 3 - r);
        FareyPoint p;
        switch (f) {
        case CurveFamily::ccw: p = {base[1] - 1, 1 - base[0]}; break;
        case CurveFamily::cw: p = {base[1] + 1, -1 - base[0]}; break;
        case CurveFamily::closed: p = {base[1], -base[0]}; break;
        }
        if (!in_domain(f, p)) continue;
        CurveVector c{f, p, r};
        if (c.vector() != g) continue;
        require(!found, ErrorKind::internal_error, "curve coordinates are not unique");
        found = c;
    }
    return found;
}

inline CurveVector gvector_to_curve(const GVector& g) {
    auto c = match_curve(g);
    require(c.has_value(), ErrorKind::not_a_component_gvector, "vector is not the g-vector of a component");
    return *c;
}

inline bool compatible(const CurveVector& u, const CurveVector& v) {
    using F = CurveFamily;
    if (u == v) return true;
    FareyPoint p = u.unified(), q = v.unified();
    if (u.family == F::closed || v.family == F::closed) {
        if (u.family == v.family) return false;
        return p == q;
    }
    if (u.family != v.family) return false;
    return are_neighbors(p, q);
}

// ---- decomposition of integer vectors ------------------------------------

struct WeightedCurve {
    CurveVector curve;
    long weight = 0;
};

inline constexpr int default_descent_cap = 64;

namespace detail {

inline long det3(const GVector& a, const GVector& b, const GVector& c) {
    return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0]);
}

inline GVector scaled_sub(const GVector& v, long k, const GVector& w) {
    return {v[0] - k * w[0], v[1] - k * w[1], v[2] - k * w[2]};
}

// v - s * spiral(P) as a nonnegative multiple of cl(P), if it is one.
inline std::optional<long> closed_multiple(const GVector& v, long s, const CurveVector& spiral) {
    GVector rest = scaled_sub(v, s, spiral.vector());
    GVector cl = curve_at(CurveFamily::closed, spiral.unified()).vector();
    long k = 0;
    for (int i = 0; i < 3; ++i)
        if (cl[i] != 0) {
            k = rest[i] / cl[i];
            break;
        }
    if (k < 0) return std::nullopt;
    if (scaled_sub(rest, k, cl) != GVector{0, 0, 0}) return std::nullopt;
    return k;
}

} // namespace detail

// Positive combination of pairwise compatible curves equal to v. The
// sign of x+y+z picks the spiral family; Farey triangles are then searched
// down the Stern-Brocot tree from the root triangle (1,0),(1,1),(0,1),
// at most `cap` levels deep. Vertices of the answer have norm at most
// 8|v| + 4, which bounds the search.
inline std::vector<WeightedCurve> decompose_z3(const GVector& v, int cap = default_descent_cap) {
    require(cap >= 1, ErrorKind::invalid_parameter, "iteration cap must be positive");
    std::vector<WeightedCurve> out;
    long s = v[0] + v[1] + v[2];
    if (v == GVector{0, 0, 0}) return out;
    if (s == 0) {
        long k = std::gcd(std::gcd(std::abs(v[0]), std::abs(v[1])), std::abs(v[2]));
        GVector w{v[0] / k, v[1] / k, v[2] / k};
        out.push_back({gvector_to_curve(w), k});
        return out;
    }
    CurveFamily f = s > 0 ? CurveFamily::ccw : CurveFamily::cw;
    long total = s > 0 ? s : -s;
    long vmax = std::max({std::abs(v[0]), std::abs(v[1]), std::abs(v[2])});
    long bound = 8 * vmax + 4;
    auto norm = [](const FareyPoint& p) { return std::max(std::abs(p.a), std::abs(p.b)); };
    bool truncated = false;

    auto try_triangle = [&](const std::array<FareyPoint, 3>& tri) {
        std::array<CurveVector, 3> c;
        std::array<GVector, 3> g;
        for (int i = 0; i < 3; ++i) {
            c[i] = curve_at(f, tri[i]);
            g[i] = c[i].vector();
        }
        for (int i = 0; i < 3; ++i)
            if (auto k = detail::closed_multiple(v, total, c[i])) {
                out.push_back({c[i], total});
                if (*k > 0) out.push_back({curve_at(CurveFamily::closed, tri[i]), *k});
                return true;
            }
        long d = detail::det3(g[0], g[1], g[2]);
        require(d == 1 || d == -1, ErrorKind::internal_error, "Farey triangle is not a basis");
        std::array<long, 3> coef{detail::det3(v, g[1], g[2]) * d, detail::det3(g[0], v, g[2]) * d,
                                 detail::det3(g[0], g[1], v) * d};
        for (long x : coef)
            if (x < 0) return false;
        for (int i = 0; i < 3; ++i)
            if (coef[i] > 0) out.push_back({c[i], coef[i]});
        return true;
    };

    // the triangle beyond the edge (p, q) has third vertex p + q
    std::function<bool(FareyPoint, FareyPoint, int)> descend = [&](FareyPoint p, FareyPoint q, int depth) {
        FareyPoint m{p.a + q.a, p.b + q.b};
        if (norm(m) > bound) return false;
        if (depth >= cap) {
            truncated = true;
            return false;
        }
        if (try_triangle({p, q, m})) return true;
        return descend(p, m, depth + 1) || descend(m, q, depth + 1);
    };

    if (try_triangle({FareyPoint{1, 0}, FareyPoint{1, 1}, FareyPoint{0, 1}})) return out;
    if (descend({1, 0}, {1, 1}, 1) || descend({1, 1}, {0, 1}, 1) || descend({0, -1}, {1, 0}, 1)) return out;
    require(!truncated, ErrorKind::search_bound_exceeded,
            "decomposition not found within " + std::to_string(cap) + " Stern-Brocot levels");
    fail(ErrorKind::internal_error, "no compatible decomposition exists");
}

} // namespace torus_lab
