#include "qpt/poly.hpp"

namespace qpt {

CPoly cpoly_z(std::size_t m, std::size_t k) { return CPoly::variable(2 * m, k); }
CPoly cpoly_zbar(std::size_t m, std::size_t k) { return CPoly::variable(2 * m, m + k); }

CPoly conj_cpoly(const CPoly& p) {
    std::size_t m = cpoly_nz(p);
    CPoly r(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        CPoly::Exponents f(e.size());
        for (std::size_t k = 0; k < m; ++k) {
            f[k] = e[m + k];
            f[m + k] = e[k];
        }
        r.add_term(std::move(f), c.conj());
    }
    return r;
}

bool is_real_valued(const CPoly& p) { return conj_cpoly(p) == p; }

CPoly d_z(const CPoly& p, std::size_t k) { return p.derivative(k); }
CPoly d_zbar(const CPoly& p, std::size_t k) { return p.derivative(cpoly_nz(p) + k); }

CPoly real_coordinate_in_chart(std::size_t n, std::size_t r) {
    if (r >= 4 * n) throw std::invalid_argument("real coordinate index out of range");
    std::size_t a = r / 4, m = 2 * n;
    CRational half(Rational(1, 2));
    CRational ihalf(Rational(0), Rational(1, 2));
    switch (r % 4) {
        case 0:  // t_a = (z + zbar)/2 on the odd coordinate
            return half * (cpoly_z(m, 2 * a) + cpoly_zbar(m, 2 * a));
        case 1:  // x_a = -i/2 (z - zbar)
            return (-ihalf) * (cpoly_z(m, 2 * a) - cpoly_zbar(m, 2 * a));
        case 2:  // y_a = (z + zbar)/2 on the even coordinate
            return half * (cpoly_z(m, 2 * a + 1) + cpoly_zbar(m, 2 * a + 1));
        default:  // z_a = i/2 (z - zbar)
            return ihalf * (cpoly_z(m, 2 * a + 1) - cpoly_zbar(m, 2 * a + 1));
    }
}

CPoly cpoly_from_rpoly(const RPoly& p) {
    if (p.nvars() % 4 != 0)
        throw std::invalid_argument("cpoly_from_rpoly: variable count must be 4n");
    std::size_t n = p.nvars() / 4;
    std::vector<CPoly> images;
    images.reserve(4 * n);
    for (std::size_t r = 0; r < 4 * n; ++r) images.push_back(real_coordinate_in_chart(n, r));
    CPoly acc(4 * n);
    for (const auto& [e, c] : p.terms()) {
        CPoly term(4 * n, CRational(c));
        for (std::size_t v = 0; v < p.nvars(); ++v)
            for (int k = 0; k < e[v]; ++k) term = term * images[v];
        acc += term;
    }
    return acc;
}

std::vector<CRational> complex_coords(const std::vector<Quaternion>& q) {
    std::vector<CRational> z;
    z.reserve(2 * q.size());
    for (const auto& c : q) {
        z.emplace_back(c.t, c.x);
        z.emplace_back(c.y, -c.z);
    }
    return z;
}

std::vector<std::complex<double>> complex_coords_d(const std::vector<BasicQuaternion<double>>& q) {
    std::vector<std::complex<double>> z;
    z.reserve(2 * q.size());
    for (const auto& c : q) {
        z.emplace_back(c.t, c.x);
        z.emplace_back(c.y, -c.z);
    }
    return z;
}

CRational eval_cpoly(const CPoly& p, const std::vector<CRational>& z) {
    std::size_t m = cpoly_nz(p);
    if (z.size() != m) throw std::invalid_argument("eval_cpoly: needs one value per z variable");
    std::vector<CRational> x = z;
    x.reserve(2 * m);
    for (std::size_t k = 0; k < m; ++k) x.push_back(z[k].conj());
    return p.eval(x, [](const CRational& c) { return c; });
}

std::complex<double> eval_cpoly_d(const CPoly& p, const std::vector<std::complex<double>>& z) {
    std::size_t m = cpoly_nz(p);
    if (z.size() != m) throw std::invalid_argument("eval_cpoly_d: needs one value per z variable");
    std::vector<std::complex<double>> x = z;
    x.reserve(2 * m);
    for (std::size_t k = 0; k < m; ++k) x.push_back(std::conj(z[k]));
    return p.eval(x, [](const CRational& c) {
        return std::complex<double>(to_double(c.re), to_double(c.im));
    });
}

Rational eval_rpoly(const RPoly& p, const std::vector<Rational>& x) {
    return p.eval(x, [](const Rational& c) { return c; });
}

double eval_rpoly_d(const RPoly& p, const std::vector<double>& x) {
    return p.eval(x, [](const Rational& c) { return to_double(c); });
}

namespace {

std::string cvar_name(std::size_t m, std::size_t v) {
    bool bar = v >= m;
    std::size_t k = bar ? v - m : v;
    return (bar ? "zb" : "z") + std::to_string(k + 1);
}

std::string rvar_name(std::size_t v) {
    static const char* comp[] = {"t", "x", "y", "z"};
    return comp[v % 4] + std::to_string(v / 4 + 1);
}

template <class C, class NameFn, class CoeffFn>
std::string format_poly(const SparsePoly<C>& p, NameFn name, CoeffFn fmt) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [e, c] : p.terms()) {
        std::string mono;
        for (std::size_t v = 0; v < p.nvars(); ++v) {
            if (e[v] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += name(v);
            if (e[v] > 1) mono += "^" + std::to_string(e[v]);
        }
        std::string coeff = fmt(c);
        // compound coefficients keep their sign inside parentheses
        bool compound = coeff.find_first_of("+-", 1) != std::string::npos;
        if (!out.empty()) {
            if (!compound && coeff[0] == '-') {
                out += " - ";
                coeff = coeff.substr(1);
            } else {
                out += " + ";
            }
        }
        if (compound) coeff = "(" + coeff + ")";
        if (mono.empty())
            out += coeff;
        else if (coeff == "1")
            out += mono;
        else if (coeff == "-1")
            out += "-" + mono;
        else
            out += coeff + "*" + mono;
    }
    return out;
}

}  // namespace

std::string format_cpoly(const CPoly& p) {
    std::size_t m = cpoly_nz(p);
    return format_poly(p, [m](std::size_t v) { return cvar_name(m, v); }, format_crational);
}

std::string format_rpoly(const RPoly& p) {
    return format_poly(p, rvar_name, format_rational);
}

}  // namespace qpt
