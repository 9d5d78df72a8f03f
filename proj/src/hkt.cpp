#include "qpt/hkt.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <utility>

#include "qpt/parser.hpp"
#include "qpt/simplex.hpp"
#include "qpt/structure.hpp"

namespace qpt {

namespace {

Quaternion unit_of(Structure l) {
    switch (l) {
        case Structure::I: return Quaternion(0, 1, 0, 0);
        case Structure::J: return Quaternion(0, 0, 1, 0);
        default: return Quaternion(0, 0, 0, 1);
    }
}

// dt, dx, dy, dz of the real coordinate r expanded in the chart letters; the
// pair owning r contributes its holomorphic letters h be 2a and l be 2a+1
// together with their conjugates offset by m
Form real_covector(std::size_t m, std::size_t r) {
    const int h = static_cast<int>(2 * (r / 4));
    const int l = h + 1;
    const int hc = static_cast<int>(m) + h, lc = static_cast<int>(m) + l;
    const CRational half(Rational(1, 2), Rational(0));
    const CRational ihalf(Rational(0), Rational(1, 2));
    switch (r % 4) {
        case 0: return half * Form::covector(m, h) + half * Form::covector(m, hc);
        case 1: return (-ihalf) * Form::covector(m, h) + ihalf * Form::covector(m, hc);
        case 2: return half * Form::covector(m, l) + half * Form::covector(m, lc);
        default: return ihalf * Form::covector(m, l) + (-ihalf) * Form::covector(m, lc);
    }
}

// W(a, b) = g(e_a, e_b L) for the right action matrix rl, whose entries are
// 0 or +-1, so the product is a signed row gather
Matrix<RPoly> pair_with_action(const Matrix<RPoly>& g, const RationalMatrix& rl) {
    const std::size_t d = g.rows();
    Matrix<RPoly> w(d, d, RPoly(g(0, 0).nvars()));
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            RPoly acc(g(0, 0).nvars());
            for (std::size_t c = 0; c < d; ++c) {
                const int s = sign_of(rl(c, b));
                if (s > 0)
                    acc += g(a, c);
                else if (s < 0)
                    acc -= g(a, c);
            }
            w(a, b) = acc;
        }
    return w;
}

std::vector<std::vector<int>> homogeneous_exponents(std::size_t nvars, int total) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto walk = [&](auto&& self, int rest) -> void {
        if (cur.size() + 1 == nvars) {
            cur.push_back(rest);
            out.push_back(cur);
            cur.pop_back();
            return;
        }
        for (int v = 0; v <= rest; ++v) {
            cur.push_back(v);
            self(self, rest - v);
            cur.pop_back();
        }
    };
    walk(walk, total);
    return out;
}

int exponent_degree(const std::vector<int>& e) {
    int t = 0;
    for (int v : e) t += v;
    return t;
}

}  // namespace

MetricField metric_from_potential(const RPoly& f, std::size_t n, const Grid& box) {
    if (n == 0) throw std::invalid_argument("metric_from_potential: empty module");
    if (f.nvars() != 4 * n)
        throw std::invalid_argument("metric_from_potential: potential needs 4n variables");
    const Field ff = parse_field(format_rpoly(f));
    const PshVerdict v = is_psh_c2(ff, n, box);
    if (v.status != PshStatus::StrictlyPsh) {
        std::string msg = "metric_from_potential: potential is not strictly psh on the box (";
        msg += v.detail + ")";
        throw NotStrictlyPsh(msg, v.witness_point);
    }
    Matrix<RPoly> g = realize_components(quat_hessian_poly(f));
    const Rational quarter(1, 4);
    for (std::size_t a = 0; a < g.rows(); ++a)
        for (std::size_t b = 0; b < g.cols(); ++b) g(a, b) = quarter * g(a, b);
    return MetricField{std::move(g), n};
}

Form omega_from_metric(const MetricField& gf) {
    const std::size_t n = gf.n;
    if (n == 0) throw std::invalid_argument("omega_from_metric: empty module");
    const std::size_t d = 4 * n, m = 2 * n;
    if (gf.g.rows() != d || gf.g.cols() != d)
        throw std::invalid_argument("omega_from_metric: metric must be 4n x 4n");
    Matrix<RPoly> g = gf.g;
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            if (g(a, b).nvars() == d) continue;
            if (g(a, b).is_constant())
                g(a, b) = RPoly(d, g(a, b).constant_term());
            else
                throw std::invalid_argument("omega_from_metric: entries need 4n variables");
        }
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = a + 1; b < d; ++b)
            if (!(g(a, b) == g(b, a)))
                throw std::invalid_argument("omega_from_metric: metric matrix must be symmetric");

    const Matrix<RPoly> wj = pair_with_action(g, right_action_matrix(unit_of(Structure::J), n));
    const Matrix<RPoly> wk = pair_with_action(g, right_action_matrix(unit_of(Structure::K), n));
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = a; b < d; ++b)
            if (!(wj(a, b) + wj(b, a)).is_zero() || !(wk(a, b) + wk(b, a)).is_zero())
                throw std::invalid_argument(
                    "omega_from_metric: metric is not quaternionic Hermitian (pairing with the "
                    "right action is not antisymmetric)");

    std::vector<Form> cov;
    cov.reserve(d);
    for (std::size_t r = 0; r < d; ++r) cov.push_back(real_covector(m, r));

    Form acc(m);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = a + 1; b < d; ++b) {
            const CPoly combined =
                cpoly_from_rpoly(wj(a, b)) - CRational::i() * cpoly_from_rpoly(wk(a, b));
            if (combined.is_zero()) continue;
            acc += wedge(Form::function(combined), wedge(cov[a], cov[b]));
        }
    // sign pinned by the Euclidean metric on H^1 mapping to dz_1 ^ dz_2
    Form omega = -acc;
    if (!omega.is_zero()) {
        const auto bi = bidegree(omega);
        if (!bi || *bi != std::make_pair(2, 0))
            throw std::invalid_argument(
                "omega_from_metric: metric is not quaternionic Hermitian (fundamental form has "
                "mixed type)");
        if (!is_j_real(omega))
            throw std::invalid_argument(
                "omega_from_metric: metric is not quaternionic Hermitian (fundamental form is "
                "not J-real)");
    }
    return omega;
}

HermitianReport is_quaternionic_hermitian(const MetricField& gf, const Grid& samples) {
    const std::size_t n = gf.n, d = 4 * n;
    if (gf.g.rows() != d || gf.g.cols() != d)
        throw std::invalid_argument("is_quaternionic_hermitian: metric must be 4n x 4n");
    if (samples.dim() != d)
        throw std::invalid_argument("is_quaternionic_hermitian: sample grid dimension mismatch");

    const std::array<Structure, 3> gens{Structure::I, Structure::J, Structure::K};
    std::array<Matrix<double>, 3> rl;
    for (std::size_t s = 0; s < 3; ++s) {
        const RationalMatrix r = right_action_matrix(unit_of(gens[s]), n);
        rl[s] = Matrix<double>(d, d, 0.0);
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = 0; b < d; ++b) rl[s](a, b) = to_double(r(a, b));
    }

    Matrix<double> gv(d, d, 0.0);
    for (std::size_t p = 0; p < samples.total(); ++p) {
        const std::vector<double> x = samples.point(p);
        double scale = 1.0;
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = 0; b < d; ++b) {
                gv(a, b) = eval_rpoly_d(gf.g(a, b), x);
                scale = std::max(scale, std::abs(gv(a, b)));
            }
        const double tol = 1e-9 * scale;
        for (std::size_t s = 0; s < 3; ++s)
            for (std::size_t a = 0; a < d; ++a)
                for (std::size_t b = 0; b < d; ++b) {
                    double moved = 0.0;
                    for (std::size_t u = 0; u < d; ++u) {
                        if (rl[s](u, a) == 0.0) continue;
                        for (std::size_t v = 0; v < d; ++v)
                            moved += rl[s](u, a) * gv(u, v) * rl[s](v, b);
                    }
                    const double defect = moved - gv(a, b);
                    if (std::abs(defect) > tol) {
                        HermitianReport rep;
                        rep.hermitian = false;
                        rep.witness = HermitianWitness{gens[s], a, b, x, defect};
                        return rep;
                    }
                }
    }
    return HermitianReport{};
}

HktCheck is_hkt(const MetricField& g) {
    Form omega = omega_from_metric(g);
    Form residual = del(omega);
    const bool flat_hkt = residual.is_zero();
    return HktCheck{flat_hkt, std::move(omega), std::move(residual)};
}

RPoly solve_potential(const Form& omega, std::size_t n, int degree_bound) {
    if (n == 0) throw std::invalid_argument("solve_potential: empty module");
    const std::size_t m = 2 * n, d = 4 * n;
    if (omega.m() != m) throw std::invalid_argument("solve_potential: chart size mismatch");
    if (degree_bound < 0) throw std::invalid_argument("solve_potential: negative degree bound");
    RPoly f(d, Rational(0));
    if (omega.is_zero()) return f;

    const auto bi = bidegree(omega);
    if (!bi || *bi != std::make_pair(2, 0))
        throw std::invalid_argument("solve_potential: right-hand side must be a (2,0)-form");
    if (!is_j_real(omega))
        throw std::invalid_argument("solve_potential: right-hand side must be J-real");
    Form res = del(omega);
    if (!res.is_zero())
        throw NotClosed("solve_potential: right-hand side is not holomorphically closed",
                        std::move(res));

    // split the coefficients by homogeneous degree; each slice lifts to a
    // potential of exactly two degrees higher
    std::map<int, Form> slices;
    for (const auto& [w, c] : omega.terms())
        for (const auto& [e, coef] : c.terms()) {
            const int deg = exponent_degree(e);
            auto it = slices.find(deg);
            if (it == slices.end()) it = slices.emplace(deg, Form(m)).first;
            it->second.add_term(w, CPoly::monomial(2 * m, e, coef));
        }
    for (const auto& [deg, slice] : slices)
        if (deg + 2 > degree_bound)
            throw DegreeBoundTooSmall("solve_potential: a homogeneous slice needs potential degree " +
                                          std::to_string(deg + 2),
                                      deg + 2);

    using RowKey = std::pair<Form::Word, SparsePoly<CRational>::Exponents>;
    for (const auto& [deg, slice] : slices) {
        const auto mons = homogeneous_exponents(d, deg + 2);
        std::vector<Form> cols;
        cols.reserve(mons.size());
        for (const auto& e : mons) cols.push_back(ddj_potential(RPoly::monomial(d, e, Rational(1))));

        std::map<RowKey, std::size_t> row_of;
        auto touch = [&](const Form& fm) {
            for (const auto& [w, c] : fm.terms())
                for (const auto& [e, coef] : c.terms()) {
                    const RowKey key{w, e};
                    if (!row_of.count(key)) {
                        const std::size_t next = row_of.size();
                        row_of.emplace(key, next);
                    }
                }
        };
        touch(slice);
        for (const Form& c : cols) touch(c);

        const std::size_t nrows = row_of.size(), ncols = cols.size();
        Matrix<Rational> a(2 * nrows, ncols, Rational(0));
        std::vector<Rational> b(2 * nrows, Rational(0));
        for (std::size_t j = 0; j < ncols; ++j)
            for (const auto& [w, c] : cols[j].terms())
                for (const auto& [e, coef] : c.terms()) {
                    const std::size_t r = row_of.at({w, e});
                    a(2 * r, j) = coef.re;
                    a(2 * r + 1, j) = coef.im;
                }
        for (const auto& [w, c] : slice.terms())
            for (const auto& [e, coef] : c.terms()) {
                const std::size_t r = row_of.at({w, e});
                b[2 * r] = coef.re;
                b[2 * r + 1] = coef.im;
            }

        const auto x = solve_linear(a, b);
        if (!x)
            throw std::logic_error(
                "solve_potential: closed right-hand side with no potential at its graded degree");
        for (std::size_t j = 0; j < ncols; ++j) {
            if ((*x)[j] == 0) continue;
            f += RPoly::monomial(d, mons[j], (*x)[j]);
        }
    }

    if (!(ddj_potential(f) == omega))
        throw std::logic_error("solve_potential: substitution check failed");
    return f;
}

}  // namespace qpt
