// Minimal exact rational on int64, enough for regularity targets and ratio
// bands. Comparisons cross-multiply in 128 bits, so they never overflow for
// in-range operands.
#ifndef ORDEX_RATIONAL_HPP
#define ORDEX_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ordex {

struct Rational {
    long long num = 0;
    long long den = 1;   // > 0, gcd(|num|, den) == 1

    Rational() = default;
    Rational(long long n, long long d = 1) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        const long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    double as_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    // Accepts "7", "7/2" and plain decimals like "1.25".
    static Rational parse(const std::string& s) {
        if (s.empty()) throw std::invalid_argument("Rational::parse: empty string");
        const auto slash = s.find('/');
        if (slash != std::string::npos) {
            return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
        }
        const auto dot = s.find('.');
        if (dot != std::string::npos) {
            const std::string frac = s.substr(dot + 1);
            if (frac.size() > 12) throw std::invalid_argument("Rational::parse: too many decimals");
            long long den = 1;
            for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
            const long long whole = dot == 0 ? 0 : std::stoll(s.substr(0, dot));
            const long long fpart = frac.empty() ? 0 : std::stoll(frac);
            const bool neg = s.front() == '-';
            const long long mag = (whole < 0 ? -whole : whole) * den + fpart;
            return Rational(neg ? -mag : mag, den);
        }
        return Rational(std::stoll(s));
    }

    std::string str() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }
};

// a*b < c*d in exact arithmetic (for degree-threshold tests like deg*k_den < d*k_num)
inline bool lt_product(long long a, long long b, long long c, long long d) {
    return static_cast<__int128>(a) * b < static_cast<__int128>(c) * d;
}
inline bool le_product(long long a, long long b, long long c, long long d) {
    return static_cast<__int128>(a) * b <= static_cast<__int128>(c) * d;
}

}  // namespace ordex

#endif
