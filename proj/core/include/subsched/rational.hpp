#ifndef SUBSCHED_RATIONAL_HPP
#define SUBSCHED_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace subsched {

/// Exact rational with canonical form (gcd-reduced, positive denominator).
/// Normalized sum-rate values are small fractions like 2/5 or 11/30 and must
/// compare exactly against golden values; doubles never enter the arithmetic.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }
    static Rational from_int(std::int64_t n) { return Rational(n, 1); }

    double value() const { return double(num) / double(den); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        const __int128 n = __int128(a.num) * b.den + __int128(b.num) * a.den;
        const __int128 d = __int128(a.den) * b.den;
        return reduce128(n, d);
    }
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return __int128(a.num) * b.den < __int128(b.num) * a.den;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return a == b || a < b; }

    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

private:
    static Rational reduce128(__int128 n, __int128 d) {
        if (d < 0) { n = -n; d = -d; }
        __int128 a = n < 0 ? -n : n;
        __int128 b = d;
        while (b != 0) { __int128 t = a % b; a = b; b = t; }
        if (a > 1) { n /= a; d /= a; }
        constexpr __int128 lo = INT64_MIN, hi = INT64_MAX;
        if (n < lo || n > hi || d > hi)
            throw std::overflow_error("Rational: value exceeds 64-bit range");
        return Rational(std::int64_t(n), std::int64_t(d));
    }
};

inline Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }

}  // namespace subsched

#endif
