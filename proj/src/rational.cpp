#include "qpt/rational.hpp"

#include <cctype>

namespace qpt {

Rational parse_rational(const std::string& s) {
    auto bad = [&]() { throw ParseError("bad rational literal: '" + s + "'"); };
    if (s.empty()) bad();
    std::size_t pos = 0;
    bool neg = false;
    if (s[pos] == '+' || s[pos] == '-') {
        neg = s[pos] == '-';
        ++pos;
    }
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) bad();

    auto digits = [&](Int& out) {
        std::size_t start = pos;
        out = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            out = out * 10 + (s[pos] - '0');
            ++pos;
        }
        return pos > start;
    };

    Int whole;
    digits(whole);
    Rational r;
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        Int den;
        if (!digits(den) || pos != s.size() || den == 0) bad();
        r = Rational(whole, den);
    } else if (pos < s.size() && s[pos] == '.') {
        ++pos;
        Int frac = 0;
        Int scale = 1;
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            frac = frac * 10 + (s[pos] - '0');
            scale *= 10;
            ++pos;
        }
        if (pos == start || pos != s.size()) bad();
        r = Rational(whole) + Rational(frac, scale);
    } else {
        if (pos != s.size()) bad();
        r = Rational(whole);
    }
    return neg ? -r : r;
}

std::string format_rational(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

static std::optional<Int> int_root(const Int& v, unsigned k) {
    if (v < 0) return std::nullopt;
    if (v == 0 || v == 1) return v;
    // binary search on monotone pow
    Int lo = 1, hi = v;
    while (lo < hi) {
        Int mid = (lo + hi + 1) / 2;
        Int p = 1;
        bool over = false;
        for (unsigned i = 0; i < k; ++i) {
            p *= mid;
            if (p > v) {
                over = true;
                break;
            }
        }
        if (over)
            hi = mid - 1;
        else
            lo = mid;
    }
    Int p = 1;
    for (unsigned i = 0; i < k; ++i) p *= lo;
    if (p == v) return lo;
    return std::nullopt;
}

std::optional<Rational> exact_root(const Rational& r, unsigned k) {
    if (r < 0) return std::nullopt;
    auto n = int_root(numerator(r), k);
    auto d = int_root(denominator(r), k);
    if (!n || !d) return std::nullopt;
    return Rational(*n, *d);
}

int sign_of(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

std::string format_crational(const CRational& c) {
    if (c.im == 0) return format_rational(c.re);
    std::string s;
    if (c.re != 0) s = format_rational(c.re) + (c.im > 0 ? "+" : "");
    if (c.im == 1)
        s += "i";
    else if (c.im == -1)
        s += "-i";
    else
        s += format_rational(c.im) + "i";
    return s;
}

}  // namespace qpt
