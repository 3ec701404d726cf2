#pragma once

#include "errors.hpp"
#include "quiver.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace torus_lab {

// A string c_m ... c_1, stored with c_1 first. The diagram has basis
// vectors y_1 .. y_{m+1}; a direct c_i maps y_i to y_{i+1}, an inverse
// letter maps y_{i+1} to y_i. An empty string lives at `base`.
struct StringWord {
    Vertex base = 1;
    std::vector<Letter> letters;

    std::size_t length() const { return letters.size(); }
    bool empty() const { return letters.empty(); }
    Vertex start() const { return letters.empty() ? base : letters.front().s(); }
    Vertex end() const { return letters.empty() ? base : letters.back().t(); }

    // Vertex carrying y_{i+1}, i = 0 .. m.
    Vertex vertex_at(std::size_t i) const { return i == 0 ? start() : letters[i - 1].t(); }

    StringWord inverse() const {
        StringWord w{end(), {}};
        for (auto it = letters.rbegin(); it != letters.rend(); ++it) w.letters.push_back(it->inv());
        return w;
    }

    Dims dims() const {
        Dims d{};
        for (std::size_t i = 0; i <= length(); ++i) ++d[vertex_at(i) - 1];
        return d;
    }

    friend bool operator==(const StringWord& a, const StringWord& b) {
        return a.start() == b.start() && a.letters == b.letters;
    }
};

// Longest run of consecutive letters with the same orientation.
inline std::size_t longest_run(const std::vector<Letter>& ls, bool cyclic) {
    std::size_t n = ls.size();
    if (n == 0) return 0;
    std::size_t best = 0;
    std::size_t reps = cyclic ? 2 * n : n;
    std::size_t cur = 0;
    for (std::size_t i = 0; i < reps; ++i) {
        const Letter& l = ls[i % n];
        if (i > 0 && ls[(i - 1) % n].inverse == l.inverse)
            ++cur;
        else
            cur = 1;
        best = std::max(best, std::min(cur, n));
    }
    return best;
}

// Valid string over the Jacobian algebra; with p, also over the truncation.
inline bool is_valid(const StringWord& w, std::optional<int> p = std::nullopt) {
    for (std::size_t i = 1; i < w.letters.size(); ++i)
        if (!letters_compatible(w.letters[i - 1], w.letters[i])) return false;
    if (p && static_cast<int>(longest_run(w.letters, false)) >= *p) return false;
    return true;
}

// Smallest k such that all paths of length k act as zero on M(C).
inline int nilpotency(const StringWord& w) { return static_cast<int>(longest_run(w.letters, false)) + 1; }

// A band: a cyclic word, stored like a string whose end meets its start.
struct BandWord {
    std::vector<Letter> letters;

    std::size_t length() const { return letters.size(); }

    BandWord rotated(std::size_t r) const {
        BandWord b;
        for (std::size_t i = 0; i < letters.size(); ++i) b.letters.push_back(letters[(i + r) % letters.size()]);
        return b;
    }

    BandWord inverse() const {
        BandWord b;
        for (auto it = letters.rbegin(); it != letters.rend(); ++it) b.letters.push_back(it->inv());
        return b;
    }

    Dims dims() const {
        Dims d{};
        for (auto& l : letters) ++d[l.s() - 1];
        return d;
    }

    bool primitive() const {
        std::size_t n = letters.size();
        for (std::size_t d = 1; d < n; ++d) {
            if (n % d) continue;
            if (rotated(d).letters == letters) return false;
        }
        return true;
    }

    // Equal up to rotation and inversion.
    bool equivalent(const BandWord& o) const {
        if (o.length() != length()) return false;
        BandWord inv = o.inverse();
        for (std::size_t r = 0; r < length(); ++r)
            if (o.rotated(r).letters == letters || inv.rotated(r).letters == letters) return true;
        return false;
    }
};

inline bool is_valid(const BandWord& b, std::optional<int> p = std::nullopt) {
    std::size_t n = b.letters.size();
    if (n == 0) return false;
    for (std::size_t i = 0; i < n; ++i)
        if (!letters_compatible(b.letters[i], b.letters[(i + 1) % n])) return false;
    bool has_direct = false, has_inverse = false;
    for (auto& l : b.letters) (l.inverse ? has_inverse : has_direct) = true;
    if (!has_direct || !has_inverse) return false;
    if (p && static_cast<int>(longest_run(b.letters, true)) >= *p) return false;
    return b.primitive();
}

inline int nilpotency(const BandWord& b) { return static_cast<int>(longest_run(b.letters, true)) + 1; }

inline bool is_index_one(Letter l) { return arrow_number(l.arrow) == 1; }

inline constexpr std::array<Letter, 6> index_one_letters{
    Letter{Arrow::alpha1, false}, Letter{Arrow::alpha1, true}, Letter{Arrow::beta1, false},
    Letter{Arrow::beta1, true},   Letter{Arrow::gamma1, false}, Letter{Arrow::gamma1, true}};

// Order used for canonical forms: direct before inverse, then alpha, beta, gamma.
inline int x1_rank(Letter l) { return (l.inverse ? 3 : 0) + arrow_family(l.arrow); }

// The partner letter with the same source and the other index.
inline Letter x2_of(Letter x1) { return {parallel(x1.arrow), x1.inverse}; }

// The connecting letters y1^- and y2 that join two units x2^- x1.
struct Connector {
    Letter first;  // y1^-
    Letter second; // y2
};

inline Connector connector_of(Letter x1) {
    require(is_index_one(x1), ErrorKind::invalid_sequence, "x1 must be an index-one letter");
    Letter unit_end = x2_of(x1).inv();
    std::vector<Connector> found;
    for (Arrow a1 : all_arrows) {
        if (arrow_number(a1) != 1 || a1 == x1.arrow) continue;
        for (bool inv1 : {false, true}) {
            Letter l1{a1, inv1};
            if (!letters_compatible(unit_end, l1)) continue;
            for (Arrow a2 : all_arrows) {
                if (arrow_number(a2) != 2) continue;
                for (bool inv2 : {false, true}) {
                    Letter l2{a2, inv2};
                    if (letters_compatible(l1, l2) && letters_compatible(l2, x1) && l2.t() == x1.s())
                        found.push_back({l1, l2});
                }
            }
        }
    }
    require(found.size() == 1, ErrorKind::internal_error, "connector letters are not unique");
    return found.front();
}

// Sequence form (x1 : a1, ..., an), optionally a band (trailing comma).
struct SeqForm {
    Letter x1{Arrow::alpha1, false};
    std::vector<int> entries;
    bool band = false;

    friend bool operator==(const SeqForm&, const SeqForm&) = default;
};

inline bool is_zero_form(const SeqForm& s) { return s.entries.size() == 1 && s.entries[0] == 0; }

// The direct index-one letter starting at v.
inline Letter direct_x1_at(Vertex v) { return {make_arrow(v - 1, 1), false}; }

inline void check_seq(const SeqForm& s) {
    require(is_index_one(s.x1), ErrorKind::invalid_sequence, "x1 must be an index-one letter");
    require(!s.entries.empty(), ErrorKind::invalid_sequence, "empty sequence");
    if (s.entries.size() == 1 && s.entries[0] == 0) return;
    for (int a : s.entries)
        require(a >= 1, ErrorKind::invalid_sequence, "entries must be positive (or a single 0)");
}

// Letters of the word encoded by (x1 : a1..an): units first, in order.
inline std::vector<Letter> seq_letters(const SeqForm& s) {
    Letter x1 = s.x1, x2i = x2_of(s.x1).inv();
    Connector c = connector_of(x1);
    std::vector<Letter> out;
    for (std::size_t i = 0; i < s.entries.size(); ++i) {
        if (i > 0) {
            out.push_back(c.first);
            out.push_back(c.second);
        }
        for (int k = 0; k < s.entries[i]; ++k) {
            out.push_back(x1);
            out.push_back(x2i);
        }
    }
    if (s.band) {
        out.push_back(c.first);
        out.push_back(c.second);
    }
    return out;
}

inline StringWord seq_to_string(const SeqForm& s) {
    check_seq(s);
    require(!s.band, ErrorKind::not_a_string, "sequence is a band");
    if (is_zero_form(s)) return {s.x1.s(), {}};
    StringWord w{s.x1.s(), seq_letters(s)};
    require(is_valid(w), ErrorKind::internal_error, "decoded word is not a string");
    return w;
}

inline BandWord seq_to_band(const SeqForm& s) {
    check_seq(s);
    require(s.band, ErrorKind::not_a_band, "sequence is not marked as a band");
    if (is_zero_form(s)) return {{s.x1, x2_of(s.x1).inv()}};
    BandWord b{seq_letters(s)};
    require(b.primitive(), ErrorKind::not_a_band, "band word is a proper power");
    require(is_valid(b), ErrorKind::internal_error, "decoded word is not a band");
    return b;
}

namespace detail {

// Parse letters as units/connectors for the given x1; band parses end on a connector.
inline std::optional<std::vector<int>> parse_units(const std::vector<Letter>& ls, Letter x1, bool band) {
    if (!is_index_one(x1)) return std::nullopt;
    Letter x2i = x2_of(x1).inv();
    Connector c = connector_of(x1);
    std::vector<int> entries;
    std::size_t i = 0;
    while (true) {
        int count = 0;
        while (i + 1 < ls.size() && ls[i] == x1 && ls[i + 1] == x2i) {
            ++count;
            i += 2;
        }
        if (count == 0) return std::nullopt;
        entries.push_back(count);
        if (i == ls.size()) return band ? std::nullopt : std::optional(entries);
        if (i + 1 < ls.size() && ls[i] == c.first && ls[i + 1] == c.second) {
            i += 2;
            if (i == ls.size()) return band ? std::optional(entries) : std::nullopt;
            continue;
        }
        return std::nullopt;
    }
}

} // namespace detail

// Canonical sequence form of a string (the orientation with x1 of index one).
inline SeqForm string_to_seq(const StringWord& w) {
    require(is_valid(w), ErrorKind::invalid_sequence, "not a valid string");
    if (w.empty()) return {direct_x1_at(w.base), {0}, false};
    for (const StringWord& c : {w, w.inverse()}) {
        Letter x1 = c.letters.front();
        if (auto e = detail::parse_units(c.letters, x1, false)) return {x1, *e, false};
    }
    fail(ErrorKind::invalid_sequence, "string has no sequence form");
}

// Canonical sequence form of a band: lexicographically smallest entries,
// then x1 by direct-before-inverse and alpha < beta < gamma.
inline SeqForm band_to_seq(const BandWord& b) {
    require(is_valid(b), ErrorKind::not_a_band, "not a valid band");
    std::optional<SeqForm> best;
    auto consider = [&](SeqForm s) {
        if (!best || s.entries < best->entries ||
            (s.entries == best->entries && x1_rank(s.x1) < x1_rank(best->x1)))
            best = std::move(s);
    };
    if (b.length() == 2) {
        for (const BandWord& c : {b, b.inverse()})
            for (std::size_t r = 0; r < 2; ++r) {
                BandWord d = c.rotated(r);
                Letter x1 = d.letters[0];
                if (is_index_one(x1) && x1.direct() && d.letters[1] == x2_of(x1).inv()) consider({x1, {0}, true});
            }
    }
    for (const BandWord& c : {b, b.inverse()})
        for (std::size_t r = 0; r < c.length(); ++r) {
            BandWord d = c.rotated(r);
            Letter x1 = d.letters[0];
            if (auto e = detail::parse_units(d.letters, x1, true)) consider({x1, *e, true});
        }
    require(best.has_value(), ErrorKind::not_a_band, "band has no sequence form");
    return *best;
}

// Psi code (x1 : a | k0 | ... | km). Special codes: (x1 : 0 | 1) is the
// simple at s(x1), (x1 : 0 | -1) the negative simple away from x1.
struct PsiCode {
    Letter x1{Arrow::alpha1, false};
    int a = 0;
    std::vector<int> k;
    bool band = false;

    bool special() const { return a == 0; }
    bool negative_simple() const { return a == 0 && k.size() == 1 && k[0] == -1; }
    bool simple() const { return a == 0 && k.size() == 1 && k[0] == 1; }

    friend bool operator==(const PsiCode&, const PsiCode&) = default;
    friend auto operator<=>(const PsiCode& x, const PsiCode& y) {
        if (auto c = x1_rank(x.x1) <=> x1_rank(y.x1); c != 0) return c;
        if (auto c = x.a <=> y.a; c != 0) return c;
        if (auto c = x.k <=> y.k; c != 0) return c;
        return x.band <=> y.band;
    }
};

// The vertex of a negative simple code: the one off the arrow x1.
inline Vertex negative_simple_vertex(const PsiCode& c) { return 6 - c.x1.s() - c.x1.t(); }
inline Vertex simple_vertex(const PsiCode& c) { return c.x1.s(); }

inline PsiCode negative_simple_code(Vertex i) {
    check_vertex(i);
    // the direct index-one arrow avoiding i starts at i+1
    return {direct_x1_at(i % 3 + 1), 0, {-1}, false};
}

inline PsiCode simple_code(Vertex i) {
    check_vertex(i);
    return {direct_x1_at(i), 0, {1}, false};
}

// Brings special codes to a direct x1 and checks the normal form.
inline PsiCode normalize(PsiCode c) {
    require(is_index_one(c.x1), ErrorKind::malformed_psi, "x1 must be an index-one letter");
    require(!c.k.empty(), ErrorKind::malformed_psi, "missing k0");
    if (c.a == 0) {
        require(c.k.size() == 1 && (c.k[0] == 1 || c.k[0] == -1), ErrorKind::malformed_psi,
                "a = 0 allows only |1 or |-1");
        if (c.k[0] == 1)
            c.x1 = direct_x1_at(c.x1.s());
        else
            c.x1 = negative_simple_code(6 - c.x1.s() - c.x1.t()).x1;
        return c;
    }
    require(c.a > 0, ErrorKind::malformed_psi, "a must be nonnegative");
    require(c.k[0] >= 1, ErrorKind::malformed_psi, "k0 must be positive");
    for (std::size_t i = 1; i < c.k.size(); ++i)
        require(c.k[i] >= 1, ErrorKind::malformed_psi, "k_i must be positive");
    if (c.k.size() > 1) require(c.k.back() >= 2, ErrorKind::not_in_normal_form, "last k must be at least 2");
    return c;
}

namespace detail {

struct PsiState {
    std::vector<int> v, w, P;
};

inline std::vector<int> repeat_then(const std::vector<int>& block, int times, const std::vector<int>& tail) {
    std::vector<int> out;
    for (int i = 0; i < times; ++i) out.insert(out.end(), block.begin(), block.end());
    out.insert(out.end(), tail.begin(), tail.end());
    return out;
}

inline PsiState psi_start(int a, int k0) {
    PsiState s;
    s.v.assign(k0, a);
    s.w.assign(k0 - 1, a);
    s.w.push_back(a + 1);
    s.P = {a + 1};
    return s;
}

// One recursion step with index k; P is updated with the old w.
inline PsiState psi_step(const PsiState& s, int k) {
    std::vector<int> block = s.v;
    block.insert(block.end(), s.P.begin(), s.P.end());
    PsiState n;
    n.v = repeat_then(block, k - 1, s.v);
    n.w = repeat_then(block, k - 1, s.w);
    n.P = s.P;
    n.P.insert(n.P.end(), s.w.begin(), s.w.end());
    return n;
}

} // namespace detail

inline std::size_t psi_length_limit() { return 1u << 20; }

// Sequence form of a code; the negative simple has none.
inline SeqForm psi_decode(const PsiCode& raw) {
    PsiCode c = normalize(raw);
    if (c.a == 0) {
        if (c.k[0] == 1) return {c.x1, c.band ? std::vector<int>{1} : std::vector<int>{0}, c.band};
        require(c.band, ErrorKind::no_psi_form, "the negative simple has no sequence form");
        return {c.x1, {0}, true};
    }
    auto s = detail::psi_start(c.a, c.k[0]);
    for (std::size_t i = 1; i < c.k.size(); ++i) {
        s = detail::psi_step(s, c.k[i]);
        require(s.v.size() < psi_length_limit(), ErrorKind::too_long, "decoded sequence too long");
    }
    return {c.x1, c.band ? s.w : s.v, c.band};
}

namespace detail {

inline bool is_prefix(const std::vector<int>& p, const std::vector<int>& s) {
    return p.size() <= s.size() && std::equal(p.begin(), p.end(), s.begin());
}

inline bool psi_search(const PsiState& st, std::vector<int>& ks, const std::vector<int>& target,
                       std::vector<int>& out) {
    if (st.v == target && (ks.size() == 1 || ks.back() >= 2)) {
        out = ks;
        return true;
    }
    std::vector<int> block = st.v;
    block.insert(block.end(), st.P.begin(), st.P.end());
    // k = 1 keeps v and lengthens P
    if (st.P.size() + st.w.size() <= target.size()) {
        ks.push_back(1);
        if (psi_search(psi_step(st, 1), ks, target, out)) return true;
        ks.pop_back();
    }
    for (int k = 2;; ++k) {
        std::size_t len = (k - 1) * block.size() + st.v.size();
        if (len > target.size()) break;
        PsiState nx = psi_step(st, k);
        if (!is_prefix(nx.v, target)) break;
        ks.push_back(k);
        if (psi_search(nx, ks, target, out)) return true;
        ks.pop_back();
    }
    return false;
}

} // namespace detail

// Code of a sequence form: strings by the forward recursion, bands by
// matching against the partner of a rigid string.
inline PsiCode psi_encode(const SeqForm& s) {
    check_seq(s);
    if (!s.band) {
        if (is_zero_form(s)) return {direct_x1_at(s.x1.s()), 0, {1}, false};
        const auto& e = s.entries;
        int a = e[0];
        int k0 = 0;
        while (k0 < static_cast<int>(e.size()) && e[k0] == a) ++k0;
        std::vector<int> ks{k0};
        std::vector<int> found;
        if (detail::psi_search(detail::psi_start(a, k0), ks, e, found)) {
            PsiCode c{s.x1, a, found, false};
            require(psi_decode(c) == s, ErrorKind::internal_error, "psi round trip failed");
            return c;
        }
        fail(ErrorKind::no_psi_form, "sequence is not in the image of Psi");
    }
    if (is_zero_form(s)) return normalize({s.x1, 0, {-1}, true});
    std::size_t n = s.entries.size();
    std::optional<PsiCode> best;
    BandWord mine = seq_to_band(s);
    for (std::size_t r = 0; r < n; ++r) {
        std::vector<int> rot(n);
        for (std::size_t i = 0; i < n; ++i) rot[i] = s.entries[(i + r) % n];
        rot.back() -= 1;
        if (rot.back() == 0 && n > 1) continue;
        PsiCode c;
        try {
            c = psi_encode(SeqForm{s.x1, rot, false});
        } catch (const Error& err) {
            if (err.kind() == ErrorKind::no_psi_form) continue;
            throw;
        }
        c.band = true;
        if (mine.equivalent(seq_to_band(psi_decode(c))) && (!best || c < *best)) best = c;
    }
    require(best.has_value(), ErrorKind::no_psi_form, "band is not the partner of a rigid string");
    return *best;
}

// ---- text grammar -------------------------------------------------------

namespace detail {

inline int parse_int(std::string_view s, ErrorKind kind) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    require(ec == std::errc() && ptr == s.data() + s.size() && !s.empty(), kind,
            "bad integer '" + std::string(s) + "'");
    return v;
}

inline Letter parse_side(std::string_view s, ErrorKind kind) {
    bool inv = !s.empty() && s.back() == '-';
    std::string_view base = inv ? s.substr(0, s.size() - 1) : s;
    require(base == "a1" || base == "b1" || base == "g1", kind, "side must be a1, b1 or g1 with optional '-'");
    return {parse_arrow(base), inv};
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (true) {
        std::size_t q = s.find(sep, pos);
        out.push_back(s.substr(pos, q == std::string_view::npos ? std::string_view::npos : q - pos));
        if (q == std::string_view::npos) break;
        pos = q + 1;
    }
    return out;
}

} // namespace detail

inline std::string side_name(Letter x1) { return letter_name(x1); }

// "a1:1,2,1" is a string, "a1:1,2,1," a band.
inline SeqForm parse_seq(std::string_view text) {
    auto colon = text.find(':');
    require(colon != std::string_view::npos, ErrorKind::invalid_input, "missing ':' in sequence");
    SeqForm s;
    s.x1 = detail::parse_side(text.substr(0, colon), ErrorKind::invalid_input);
    std::string_view body = text.substr(colon + 1);
    if (!body.empty() && body.back() == ',') {
        s.band = true;
        body.remove_suffix(1);
    }
    for (auto part : detail::split(body, ',')) {
        int v = detail::parse_int(part, ErrorKind::invalid_input);
        require(v >= 0, ErrorKind::invalid_sequence, "entries must be nonnegative");
        s.entries.push_back(v);
    }
    check_seq(s);
    return s;
}

inline std::string format_seq(const SeqForm& s) {
    std::string out = side_name(s.x1) + ":";
    for (std::size_t i = 0; i < s.entries.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(s.entries[i]);
    }
    if (s.band) out += ',';
    return out;
}

// "a1:1|2|2"; a trailing ',' marks the band partner code.
inline PsiCode parse_psi(std::string_view text) {
    auto colon = text.find(':');
    require(colon != std::string_view::npos, ErrorKind::malformed_psi, "missing ':' in code");
    PsiCode c;
    c.x1 = detail::parse_side(text.substr(0, colon), ErrorKind::malformed_psi);
    std::string_view body = text.substr(colon + 1);
    if (!body.empty() && body.back() == ',') {
        c.band = true;
        body.remove_suffix(1);
    }
    auto parts = detail::split(body, '|');
    require(parts.size() >= 2, ErrorKind::malformed_psi, "code needs a and k0");
    c.a = detail::parse_int(parts[0], ErrorKind::malformed_psi);
    for (std::size_t i = 1; i < parts.size(); ++i) c.k.push_back(detail::parse_int(parts[i], ErrorKind::malformed_psi));
    return normalize(c);
}

inline std::string format_psi(const PsiCode& c) {
    std::string out = side_name(c.x1) + ":" + std::to_string(c.a);
    for (int k : c.k) out += "|" + std::to_string(k);
    if (c.band) out += ',';
    return out;
}

inline std::string format_word(const std::vector<Letter>& ls) {
    std::string out;
    for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
        if (!out.empty()) out += ' ';
        out += letter_name(*it);
    }
    return out;
}

inline std::string format_string(const StringWord& w) {
    if (w.empty()) return "e" + std::to_string(w.base);
    return format_word(w.letters);
}

} // namespace torus_lab
