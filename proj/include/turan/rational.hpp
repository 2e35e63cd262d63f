#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace turan {

// Exact rational on 64-bit numerator/denominator. Densities compare against
// thresholds like 3/4 exactly; floating point is never involved. Comparisons
// cross-multiply in 128-bit, so values up to ~1.7e11 (C(10^4,3)) are safe.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;

    Rational(long long n, long long d) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    static Rational from_int(long long n) { return Rational(n, 1); }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }

    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        __int128 n = static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den;
        __int128 d = static_cast<__int128>(a.den) * b.den;
        __int128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
            throw std::overflow_error("Rational addition overflow");
        return Rational(static_cast<long long>(n), static_cast<long long>(d));
    }

    friend Rational operator/(const Rational& a, long long k) {
        if (k == 0) throw std::invalid_argument("Rational: divide by zero");
        __int128 n = a.num;
        __int128 d = static_cast<__int128>(a.den) * k;
        if (d < 0) { n = -n; d = -d; }
        __int128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
            throw std::overflow_error("Rational division overflow");
        return Rational(static_cast<long long>(n), static_cast<long long>(d));
    }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

  private:
    static __int128 gcd128(__int128 a, __int128 b) {
        while (b != 0) { __int128 t = a % b; a = b; b = t; }
        return a == 0 ? 1 : a;
    }
};

}  // namespace turan
