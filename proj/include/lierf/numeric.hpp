#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace lierf {

// Exact rational over int64. Values stay tiny (multiplicities up to 144,
// small CLI literals), so no big-integer backend is needed.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n) : num(n), den(1) {}
    Rational(long long n, long long d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num * b.num, a.den * b.den);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num == 0) throw std::domain_error("Rational: division by zero");
        return Rational(a.num * b.den, a.den * b.num);
    }
    Rational operator-() const { return Rational(-num, den); }
    friend bool operator==(const Rational&, const Rational&) = default;
    friend auto operator<=>(const Rational& a, const Rational& b) {
        return a.num * b.den <=> b.num * a.den;
    }

    bool is_zero() const { return num == 0; }
    double to_double() const { return double(num) / double(den); }
    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

// Gaussian rational a + b*i.
struct GRat {
    Rational re;
    Rational im;

    GRat() = default;
    GRat(long long n) : re(n) {}
    GRat(Rational r) : re(r) {}
    GRat(Rational r, Rational i) : re(r), im(i) {}

    static GRat i() { return GRat(Rational(0), Rational(1)); }

    friend GRat operator+(const GRat& a, const GRat& b) { return {a.re + b.re, a.im + b.im}; }
    friend GRat operator-(const GRat& a, const GRat& b) { return {a.re - b.re, a.im - b.im}; }
    friend GRat operator*(const GRat& a, const GRat& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GRat operator/(const GRat& a, const GRat& b) {
        Rational n = b.re * b.re + b.im * b.im;
        if (n.is_zero()) throw std::domain_error("GRat: division by zero");
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    GRat operator-() const { return {-re, -im}; }
    GRat conj() const { return {re, -im}; }
    friend bool operator==(const GRat&, const GRat&) = default;

    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    std::string str() const {
        if (im.is_zero()) return re.str();
        std::string imahs = im == Rational(1)    ? "i"
                            : im == Rational(-1) ? "-i"
                            : im.den == 1        ? im.str() + "i"
                                                 : "(" + im.str() + ")i";
        if (re.is_zero()) return imahs;
        if (im > Rational(0)) return re.str() + "+" + imahs;
        return re.str() + imahs;
    }
};

}  // namespace lierf
