#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <ostream>

namespace torus_lab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Arithmetic modulo the Mersenne prime 2^61 - 1.
class ModPrime {
public:
    static constexpr std::uint64_t modulus = (std::uint64_t{1} << 61) - 1;

    constexpr ModPrime() = default;
    constexpr ModPrime(long long v) : v_(reduce_signed(v)) {}

    constexpr std::uint64_t value() const { return v_; }

    friend constexpr ModPrime operator+(ModPrime a, ModPrime b) { return from_raw(fold(a.v_ + b.v_)); }
    friend constexpr ModPrime operator-(ModPrime a, ModPrime b) { return from_raw(fold(a.v_ + modulus - b.v_)); }
    friend constexpr ModPrime operator-(ModPrime a) { return from_raw(a.v_ == 0 ? 0 : modulus - a.v_); }
    friend constexpr ModPrime operator*(ModPrime a, ModPrime b) {
        unsigned __int128 p = static_cast<unsigned __int128>(a.v_) * b.v_;
        std::uint64_t lo = static_cast<std::uint64_t>(p & modulus);
        std::uint64_t hi = static_cast<std::uint64_t>(p >> 61);
        return from_raw(fold(lo + hi));
    }
    friend constexpr ModPrime operator/(ModPrime a, ModPrime b) { return a * b.inverse(); }
    ModPrime& operator+=(ModPrime b) { return *this = *this + b; }
    ModPrime& operator-=(ModPrime b) { return *this = *this - b; }
    ModPrime& operator*=(ModPrime b) { return *this = *this * b; }
    ModPrime& operator/=(ModPrime b) { return *this = *this / b; }
    friend constexpr bool operator==(ModPrime a, ModPrime b) { return a.v_ == b.v_; }

    constexpr ModPrime inverse() const {
        // Fermat; the caller guarantees a nonzero value.
        ModPrime base = *this, acc = 1;
        std::uint64_t e = modulus - 2;
        while (e) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    friend std::ostream& operator<<(std::ostream& os, ModPrime a) { return os << a.v_; }

private:
    std::uint64_t v_ = 0;

    static constexpr std::uint64_t fold(std::uint64_t x) {
        x = (x & modulus) + (x >> 61);
        return x >= modulus ? x - modulus : x;
    }
    static constexpr std::uint64_t reduce_signed(long long v) {
        long long r = v % static_cast<long long>(modulus);
        if (r < 0) r += static_cast<long long>(modulus);
        return static_cast<std::uint64_t>(r);
    }
    static constexpr ModPrime from_raw(std::uint64_t v) {
        ModPrime m;
        m.v_ = v;
        return m;
    }
};

template <class F>
inline bool is_zero(const F& x) {
    return x == F(0);
}

inline BigInt fibonacci(int n) {
    // F(1) = F(2) = 1, F(0) = 0.
    BigInt a = 0, b = 1;
    for (int i = 0; i < n; ++i) {
        BigInt c = a + b;
        a = b;
        b = c;
    }
    return a;
}

} // namespace torus_lab
