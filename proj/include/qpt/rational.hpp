#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>
#include <string>

namespace qpt {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "3", "-7/2" and exact decimal strings like "0.25" are accepted.
Rational parse_rational(const std::string& s);

// Canonical form: "p" for integers, "p/q" otherwise (q > 0).
std::string format_rational(const Rational& r);

double to_double(const Rational& r);

// Exact k-th root of a nonnegative rational whose numerator and denominator
// are perfect k-th powers; nullopt otherwise.
std::optional<Rational> exact_root(const Rational& r, unsigned k);

int sign_of(const Rational& r);

// Complex number with exact rational real and imaginary parts.
struct CRational {
    Rational re;
    Rational im;

    CRational() = default;
    CRational(Rational r) : re(std::move(r)) {}
    CRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    CRational(int r) : re(r) {}

    static CRational i() { return CRational(Rational(0), Rational(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    CRational conj() const { return {re, -im}; }

    CRational operator-() const { return {-re, -im}; }
    CRational& operator+=(const CRational& o) { re += o.re; im += o.im; return *this; }
    CRational& operator-=(const CRational& o) { re -= o.re; im -= o.im; return *this; }

    friend CRational operator+(CRational a, const CRational& b) { a += b; return a; }
    friend CRational operator-(CRational a, const CRational& b) { a -= b; return a; }
    friend CRational operator*(const CRational& a, const CRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend CRational operator/(const CRational& a, const CRational& b) {
        Rational n = b.re * b.re + b.im * b.im;
        if (n == 0) throw std::domain_error("division by zero");
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    friend bool operator==(const CRational& a, const CRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const CRational& a, const CRational& b) { return !(a == b); }
};

std::string format_crational(const CRational& c);

}  // namespace qpt
