#pragma once

#include "errors.hpp"
#include "numeric.hpp"

#include <array>
#include <map>
#include <sstream>
#include <string>

namespace torus_lab {

using Monomial = std::array<int, 3>;

// Laurent polynomial in x1, x2, x3 with integer coefficients.
class LaurentPoly {
public:
    LaurentPoly() = default;
    static LaurentPoly constant(const BigInt& c) {
        LaurentPoly p;
        p.add_term({0, 0, 0}, c);
        return p;
    }
    static LaurentPoly monomial(Monomial e, const BigInt& c = 1) {
        LaurentPoly p;
        p.add_term(e, c);
        return p;
    }
    static LaurentPoly variable(int i) {
        Monomial e{0, 0, 0};
        e[i] = 1;
        return monomial(e);
    }

    void add_term(const Monomial& e, const BigInt& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.try_emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    const std::map<Monomial, BigInt>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly out = a;
        for (auto& [e, c] : b.terms_) out.add_term(e, c);
        return out;
    }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly out = a;
        for (auto& [e, c] : b.terms_) out.add_term(e, -c);
        return out;
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly out;
        for (auto& [e1, c1] : a.terms_)
            for (auto& [e2, c2] : b.terms_) out.add_term({e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]}, c1 * c2);
        return out;
    }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

    // Value at x = (1, 1, 1).
    BigInt at_ones() const {
        BigInt s = 0;
        for (auto& [e, c] : terms_) s += c;
        return s;
    }

    Monomial min_exponents() const {
        Monomial m{0, 0, 0};
        bool first = true;
        for (auto& [e, c] : terms_) {
            for (int i = 0; i < 3; ++i) m[i] = first ? e[i] : std::min(m[i], e[i]);
            first = false;
        }
        return m;
    }

    LaurentPoly shifted(const Monomial& s) const {
        LaurentPoly out;
        for (auto& [e, c] : terms_) out.terms_.emplace(Monomial{e[0] + s[0], e[1] + s[1], e[2] + s[2]}, c);
        return out;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            BigInt mag = c < 0 ? BigInt(-c) : c;
            if (!first) os << (c < 0 ? " - " : " + ");
            else if (c < 0) os << "-";
            first = false;
            bool unit = e == Monomial{0, 0, 0};
            if (mag != 1 || unit) os << mag;
            bool need_star = mag != 1;
            for (int i = 0; i < 3; ++i) {
                if (e[i] == 0) continue;
                if (need_star) os << "*";
                os << "x" << (i + 1);
                if (e[i] != 1) os << "^" << e[i];
                need_star = true;
            }
        }
        return os.str();
    }

private:
    std::map<Monomial, BigInt> terms_;
};

// Exact quotient num / den; throws not-divisible when den does not divide num.
inline LaurentPoly exact_divide(const LaurentPoly& num, const LaurentPoly& den) {
    require(!den.is_zero(), ErrorKind::not_divisible, "division by zero");
    if (num.is_zero()) return {};
    // clear denominators so both are polynomials not divisible by any x_i
    Monomial mn = num.min_exponents(), md = den.min_exponents();
    LaurentPoly r = num.shifted({-mn[0], -mn[1], -mn[2]});
    LaurentPoly d = den.shifted({-md[0], -md[1], -md[2]});
    // lexicographic long division; the map's last key is the leading monomial
    auto lead_d = *d.terms().rbegin();
    LaurentPoly q;
    std::size_t guard = 0;
    while (!r.is_zero()) {
        auto [er, cr] = *r.terms().rbegin();
        Monomial e{er[0] - lead_d.first[0], er[1] - lead_d.first[1], er[2] - lead_d.first[2]};
        require(e[0] >= 0 && e[1] >= 0 && e[2] >= 0, ErrorKind::not_divisible, "not divisible");
        require(cr % lead_d.second == 0, ErrorKind::not_divisible, "coefficient not divisible");
        LaurentPoly t = LaurentPoly::monomial(e, cr / lead_d.second);
        q = q + t;
        r = r - t * d;
        require(++guard < 1000000, ErrorKind::internal_error, "division does not terminate");
    }
    return q.shifted({mn[0] - md[0], mn[1] - md[1], mn[2] - md[2]});
}

} // namespace torus_lab
