#include "qpt/structure.hpp"

namespace qpt {

namespace {

// image of a covector letter under the fiberwise action, as (factor, letter)
std::pair<CRational, int> letter_image(Structure s, std::size_t m, int letter) {
    bool bar = letter >= static_cast<int>(m);
    int k = bar ? letter - static_cast<int>(m) : letter;
    int a = k / 2;
    bool odd_slot = k % 2 == 0;  // 1-indexed odd complex coordinate of the pair
    CRational i = CRational::i();
    switch (s) {
        case Structure::I:
            return {bar ? -i : i, letter};
        case Structure::J:
            if (!bar) {
                if (odd_slot) return {CRational(-1), static_cast<int>(m) + 2 * a + 1};
                return {CRational(1), static_cast<int>(m) + 2 * a};
            }
            if (odd_slot) return {CRational(-1), 2 * a + 1};
            return {CRational(1), 2 * a};
        case Structure::K:
            if (!bar) {
                if (odd_slot) return {i, static_cast<int>(m) + 2 * a + 1};
                return {-i, static_cast<int>(m) + 2 * a};
            }
            if (odd_slot) return {-i, 2 * a + 1};
            return {i, 2 * a};
    }
    throw std::logic_error("unreachable");
}

}  // namespace

Form apply_structure(Structure s, const Form& f) {
    std::size_t m = f.m();
    Form r(m);
    for (const auto& [w, c] : f.terms()) {
        CRational factor(1);
        Form::Word image;
        image.reserve(w.size());
        for (int l : w) {
            auto [fac, il] = letter_image(s, m, l);
            factor = factor * fac;
            image.push_back(il);
        }
        r.add_term(std::move(image), factor * c);
    }
    return r;
}

Form apply_structure_inverse(Structure s, const Form& f) {
    std::size_t m = f.m();
    Form r(m);
    for (const auto& [w, c] : f.terms()) {
        CRational factor(w.size() % 2 == 0 ? 1 : -1);
        Form::Word image;
        image.reserve(w.size());
        for (int l : w) {
            auto [fac, il] = letter_image(s, m, l);
            factor = factor * fac;
            image.push_back(il);
        }
        r.add_term(std::move(image), factor * c);
    }
    return r;
}

Form twisted_d(Structure s, const Form& f) {
    return apply_structure_inverse(s, exterior_d(apply_structure(s, f)));
}

Form del_J(const Form& f) {
    return apply_structure_inverse(Structure::J, delbar(apply_structure(Structure::J, f)));
}

bool is_j_real(const Form& f) { return apply_structure(Structure::J, conj_form(f)) == f; }

namespace {

// omega(X, X j) as a polynomial; X has rational quaternion components
CPoly quadratic_value(const Form& omega, const std::vector<Quaternion>& x) {
    std::size_t m = omega.m();
    std::vector<Quaternion> xj = x;
    for (auto& q : xj) q = q * Quaternion::unit_j();
    CPoly acc(2 * m);
    for (const auto& [w, c] : omega.terms()) {
        CRational pair = covector_value(m, w[0], x) * covector_value(m, w[1], xj) -
                         covector_value(m, w[1], x) * covector_value(m, w[0], xj);
        if (pair.is_zero()) continue;
        acc += pair * c;
    }
    return acc;
}

CPoly require_real(const CPoly& p, const char* what) {
    if (!is_real_valued(p)) throw std::invalid_argument(std::string(what) + ": form is not J-real");
    return p;
}

Rational real_part_constant(const CPoly& p, const char* what) {
    if (!p.is_constant()) throw std::invalid_argument(std::string(what) + ": entries are not constant");
    CRational c = p.constant_term();
    if (c.im != 0) throw std::invalid_argument(std::string(what) + ": entries are not real");
    return c.re;
}

}  // namespace

PolyQuatMatrix t_map_field(const Form& omega) {
    if (omega.m() % 2 != 0) throw std::invalid_argument("t_map: odd number of complex coordinates");
    std::size_t n = omega.m() / 2;
    auto bd = bidegree(omega);
    if (!omega.is_zero() && (!is_homogeneous(omega, 2) || !bd || *bd != std::make_pair(2, 0)))
        throw std::invalid_argument("t_map: needs a (2,0)-form");

    auto basis = [&](std::size_t a) {
        std::vector<Quaternion> e(n);
        e[a] = Quaternion(Rational(1));
        return e;
    };
    std::vector<CPoly> diag;
    diag.reserve(n);
    for (std::size_t a = 0; a < n; ++a)
        diag.push_back(require_real(quadratic_value(omega, basis(a)), "t_map"));

    PolyQuatMatrix g(n, n);
    for (std::size_t a = 0; a < n; ++a) {
        g(a, a).t = diag[a];
        for (std::size_t b = a + 1; b < n; ++b) {
            PolyQuaternion q;
            const Quaternion units[4] = {Quaternion(Rational(1)), Quaternion::unit_i(),
                                         Quaternion::unit_j(), Quaternion::unit_k()};
            CPoly* comps[4] = {&q.t, &q.x, &q.y, &q.z};
            for (int u = 0; u < 4; ++u) {
                std::vector<Quaternion> x = basis(a);
                x[b] = units[u];
                CPoly s = quadratic_value(omega, x) - diag[a] - diag[b];
                s = require_real(s, "t_map");
                Rational half(u == 0 ? 1 : -1, 2);
                *comps[u] = half * s;
            }
            g(a, b) = q;
            g(b, a) = q.conj();
        }
    }
    return g;
}

HyperhermitianMatrix t_map(const Form& omega) {
    PolyQuatMatrix g = t_map_field(omega);
    QuaternionMatrix out(g.rows(), g.cols());
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j)
            out(i, j) = {real_part_constant(g(i, j).t, "t_map"),
                         real_part_constant(g(i, j).x, "t_map"),
                         real_part_constant(g(i, j).y, "t_map"),
                         real_part_constant(g(i, j).z, "t_map")};
    return HyperhermitianMatrix(std::move(out));
}

namespace {

// complexified coordinate tangent vectors Z_1..Z_{2n} as columns over the
// real coordinate slots (t_a, x_a, y_a, z_a)
CRational tangent_component(std::size_t zi, std::size_t slot) {
    std::size_t a = zi / 2, sa = slot / 4;
    if (a != sa) return CRational(0);
    Rational half(1, 2);
    bool odd_slot = zi % 2 == 0;
    switch (slot % 4) {
        case 0:  // d/dt
            return odd_slot ? CRational(half) : CRational(0);
        case 1:  // d/dx
            return odd_slot ? CRational(Rational(0), -half) : CRational(0);
        case 2:  // d/dy
            return odd_slot ? CRational(0) : CRational(half);
        default:  // d/dz
            return odd_slot ? CRational(0) : CRational(Rational(0), half);
    }
}

}  // namespace

Form t_inv_field(const PolyQuatMatrix& g) {
    if (g.rows() != g.cols()) throw std::invalid_argument("t_inv: square matrix required");
    std::size_t n = g.rows(), m = 2 * n;
    if (!is_hyperhermitian_field(g)) throw std::invalid_argument("t_inv: matrix is not hyperhermitian");

    // realize the quaternion entries into a symmetric 4n x 4n polynomial
    // matrix S, then pair complexified tangent vectors through the right
    // actions of j and k: eta(X, Y) = -(S(X, R_j Y) - i S(X, R_k Y))
    Matrix<CPoly> s = realize_components(g);

    RationalMatrix rj = right_action_matrix(Quaternion::unit_j(), n);
    RationalMatrix rk = right_action_matrix(Quaternion::unit_k(), n);

    auto eta = [&](std::size_t zi, std::size_t zj) {
        CPoly acc(2 * m);
        for (std::size_t r = 0; r < 4 * n; ++r) {
            CRational xr = tangent_component(zi, r);
            if (xr.is_zero()) continue;
            for (std::size_t c2 = 0; c2 < 4 * n; ++c2) {
                CRational yj(0), yk(0);
                for (std::size_t u = 0; u < 4 * n; ++u) {
                    CRational yu = tangent_component(zj, u);
                    if (yu.is_zero()) continue;
                    if (rj(c2, u) != 0) yj += CRational(rj(c2, u)) * yu;
                    if (rk(c2, u) != 0) yk += CRational(rk(c2, u)) * yu;
                }
                CRational wj = xr * yj, wk = xr * yk;
                if (!wj.is_zero()) acc += (-wj) * s(r, c2);
                if (!wk.is_zero()) acc += (CRational::i() * wk) * s(r, c2);
            }
        }
        return acc;
    };

    Form omega(m);
    for (std::size_t zi = 0; zi < m; ++zi)
        for (std::size_t zj = zi + 1; zj < m; ++zj) {
            CPoly c = eta(zi, zj);
            if (c.is_zero()) continue;
            omega.add_term({static_cast<int>(zi), static_cast<int>(zj)}, std::move(c));
        }
    return omega;
}

Form t_inv(const HyperhermitianMatrix& a) { return t_inv_field(lift_matrix(a)); }

bool is_hyperhermitian_field(const PolyQuatMatrix& g) {
    if (g.rows() != g.cols()) return false;
    for (std::size_t i = 0; i < g.rows(); ++i) {
        if (!g(i, i).x.is_zero() || !g(i, i).y.is_zero() || !g(i, i).z.is_zero()) return false;
        if (!is_real_valued(g(i, i).t)) return false;
        for (std::size_t j = 0; j < g.cols(); ++j) {
            if (g(i, j).conj() != g(j, i)) return false;
            // every component must be a real-valued function
            if (!is_real_valued(g(i, j).t) || !is_real_valued(g(i, j).x) ||
                !is_real_valued(g(i, j).y) || !is_real_valued(g(i, j).z))
                return false;
        }
    }
    return true;
}

bool is_constant_form(const Form& f) {
    for (const auto& [w, c] : f.terms())
        if (!c.is_constant()) return false;
    return true;
}

PolyQuatMatrix lift_matrix(const HyperhermitianMatrix& a) {
    std::size_t n = a.size();
    PolyQuatMatrix g(n, n);
    std::size_t w = 4 * n;  // coefficient width: 2m with m = 2n
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Quaternion& q = a(i, j);
            g(i, j).t = CPoly(w, CRational(q.t));
            g(i, j).x = CPoly(w, CRational(q.x));
            g(i, j).y = CPoly(w, CRational(q.y));
            g(i, j).z = CPoly(w, CRational(q.z));
        }
    return g;
}

}  // namespace qpt
