// Exact nonnegative rationals for delays and trace timestamps.

#ifndef TATEST_RATIONAL_HPP
#define TATEST_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace tatest {

struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n) : num(n), den(1) {}
    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::invalid_argument("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }

    friend Rational operator+(Rational a, Rational b) { return Rational(a.num * b.den + b.num * a.den, a.den * b.den); }
    friend Rational operator-(Rational a, Rational b) { return Rational(a.num * b.den - b.num * a.den, a.den * b.den); }
    friend Rational operator*(Rational a, Rational b) { return Rational(a.num * b.num, a.den * b.den); }
    friend Rational operator/(Rational a, Rational b) { return Rational(a.num * b.den, a.den * b.num); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.num == b.num && a.den == b.den; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return a.num * b.den < b.num * a.den; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.num * b.den <= b.num * a.den; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

    bool is_integer() const { return den == 1; }

    // Prints as a decimal when the denominator is a power of 2 or 5 times
    // a power of 10 (always true on the grids we use), else as num/den.
    std::string to_string() const {
        if (den == 1) return std::to_string(num);
        std::int64_t d = den;
        while (d % 2 == 0) d /= 2;
        while (d % 5 == 0) d /= 5;
        if (d != 1) return std::to_string(num) + "/" + std::to_string(den);
        std::int64_t ip = num / den, rem = num % den;
        std::string out = std::to_string(ip);
        if (rem != 0) {
            out += '.';
            while (rem != 0) {
                rem *= 10;
                out += char('0' + rem / den);
                rem %= den;
            }
        }
        (void)pow10;
        return out;
    }

    static Rational parse(const std::string& s) {
        auto dot = s.find('.');
        if (dot == std::string::npos) return Rational(std::stoll(s));
        std::int64_t ip = dot == 0 ? 0 : std::stoll(s.substr(0, dot));
        std::string frac = s.substr(dot + 1);
        if (frac.empty()) throw std::invalid_argument("bad rational: " + s);
        std::int64_t den = 1;
        for (char c : frac) { if (c < '0' || c > '9') throw std::invalid_argument("bad rational: " + s); den *= 10; }
        return Rational(ip * den + std::stoll(frac), den);
    }
};

} // namespace tatest

#endif
