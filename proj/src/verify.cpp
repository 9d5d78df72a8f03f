#include "qpt/verify.hpp"

#include <chrono>
#include <optional>

#include "qpt/cones.hpp"
#include "qpt/hkt.hpp"
#include "qpt/ma.hpp"
#include "qpt/rng.hpp"

namespace qpt {

namespace {

Quaternion rand_quat(Rng& rng) {
    return {rng.small_rational(), rng.small_rational(), rng.small_rational(),
            rng.small_rational()};
}

QuaternionMatrix rand_square(Rng& rng, std::size_t n) {
    QuaternionMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = rand_quat(rng);
    return m;
}

HyperhermitianMatrix rand_hherm(Rng& rng, std::size_t n) {
    std::vector<Rational> d(n);
    for (auto& v : d) v = rng.small_rational();
    return HyperhermitianMatrix::diagonal(d).congruence(rand_square(rng, n));
}

RPoly rand_rpoly(Rng& rng, std::size_t nvars, int terms, int maxdeg) {
    RPoly p(nvars);
    for (int t = 0; t < terms; ++t) {
        std::vector<int> e(nvars, 0);
        int budget = maxdeg;
        for (std::size_t v = 0; v < nvars && budget > 0; ++v) {
            int x = static_cast<int>(rng.uniform_int(0, std::min(budget, 2)));
            e[v] = x;
            budget -= x;
        }
        p.add_term(e, rng.small_rational());
    }
    return p;
}

Form rand_form(Rng& rng, std::size_t m, std::size_t deg, int terms) {
    Form f(m);
    for (int t = 0; t < terms; ++t) {
        std::vector<int> w;
        for (int l = 0; l < static_cast<int>(2 * m) && w.size() < deg; ++l)
            if (rng.uniform_int(0, 1)) w.push_back(l);
        if (w.size() != deg) continue;
        CPoly c(2 * m);
        for (int ct = 0; ct < 2; ++ct) {
            std::vector<int> e(2 * m, 0);
            int budget = 2;
            for (std::size_t v = 0; v < 2 * m && budget > 0; ++v) {
                int x = static_cast<int>(rng.uniform_int(0, 1));
                e[v] = x;
                budget -= x;
            }
            c += CPoly::monomial(2 * m, e, CRational(rng.small_rational(), rng.small_rational()));
        }
        f.add_term(w, c);
    }
    return f;
}

std::string fmt_qmat(const QuaternionMatrix& m) {
    std::string s = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        s += i ? "; " : "";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Quaternion& q = m(i, j);
            s += (j ? " " : "") + std::string("(") + format_rational(q.t) + "," +
                 format_rational(q.x) + "," + format_rational(q.y) + "," + format_rational(q.z) +
                 ")";
        }
    }
    return s + "]";
}

PolyQuatMatrix scaled(PolyQuatMatrix m, const CRational& s) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            m(i, j).t = s * m(i, j).t;
            m(i, j).x = s * m(i, j).x;
            m(i, j).y = s * m(i, j).y;
            m(i, j).z = s * m(i, j).z;
        }
    return m;
}

// metric of a potential without any psh gate, for identities that hold for
// arbitrary polynomials
MetricField potential_metric(const RPoly& f, std::size_t n) {
    Matrix<RPoly> g = realize_components(quat_hessian_poly(f));
    const Rational quarter(1, 4);
    for (std::size_t a = 0; a < g.rows(); ++a)
        for (std::size_t b = 0; b < g.cols(); ++b) g(a, b) = quarter * g(a, b);
    return MetricField{std::move(g), n};
}

using BlockFn = std::function<std::optional<std::string>()>;

IdentityRecord run_block(const std::string& name, const std::string& description,
                         const BlockFn& body) {
    IdentityRecord rec;
    rec.name = name;
    rec.description = description;
    const auto start = std::chrono::steady_clock::now();
    try {
        const auto counterexample = body();
        rec.pass = !counterexample.has_value();
        if (counterexample) rec.counterexample = *counterexample;
    } catch (const std::exception& e) {
        rec.pass = false;
        rec.counterexample = std::string("exception: ") + e.what();
    }
    rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rec;
}

std::optional<std::string> block_moore() {
    if (moore_det(HyperhermitianMatrix::diagonal({Rational(2), Rational(3), Rational(5)})) !=
        Rational(30))
        return "diagonal (2,3,5) determinant";
    if (moore_det(HyperhermitianMatrix::diagonal({Rational(1), Rational(1)})) != Rational(1))
        return "identity determinant";
    Rng rng(1001);
    for (int it = 0; it < 10; ++it) {
        // 2 x 2 closed form: a d - |q|^2
        const Rational a = rng.small_rational(), d = rng.small_rational();
        const Quaternion q = rand_quat(rng);
        QuaternionMatrix m(2, 2);
        m(0, 0) = Quaternion(a);
        m(1, 1) = Quaternion(d);
        m(0, 1) = q;
        m(1, 0) = q.conj();
        const HyperhermitianMatrix h(m);
        if (moore_det(h) != a * d - q.norm_sq()) return "2x2 formula on " + fmt_qmat(m);
    }
    for (std::size_t n = 1; n <= 4; ++n)
        for (int it = 0; it < 10; ++it) {
            const HyperhermitianMatrix a = rand_hherm(rng, n);
            if (moore_det_via_realization(a) != moore_det(a))
                return "realization route on " + fmt_qmat(a.entries());
            const double exact = to_double(moore_det(a));
            const double fl = moore_det_float(a);
            if (std::abs(fl - exact) > 1e-6 * std::max(1.0, std::abs(exact)))
                return "float route on " + fmt_qmat(a.entries());
        }
    return std::nullopt;
}

std::optional<std::string> block_congruence() {
    Rng rng(1002);
    for (std::size_t n = 1; n <= 3; ++n)
        for (int it = 0; it < 10; ++it) {
            const HyperhermitianMatrix a = rand_hherm(rng, n);
            const QuaternionMatrix c = rand_square(rng, n);
            const HyperhermitianMatrix cc(conj_transpose(c) * c);
            if (moore_det(a.congruence(c)) != moore_det(a) * moore_det(cc))
                return "congruence by " + fmt_qmat(c) + " on " + fmt_qmat(a.entries());
        }
    for (std::size_t n = 1; n <= 3; ++n)
        for (int it = 0; it < 10; ++it) {
            QuaternionMatrix m(n, n);
            Matrix<CRational> c(n, n);
            for (std::size_t i = 0; i < n; ++i) {
                const Rational d = rng.small_rational();
                m(i, i) = Quaternion(d);
                c(i, i) = CRational(d);
                for (std::size_t j = i + 1; j < n; ++j) {
                    const Rational re = rng.small_rational(), im = rng.small_rational();
                    m(i, j) = Quaternion(re, im, Rational(0), Rational(0));
                    m(j, i) = m(i, j).conj();
                    c(i, j) = CRational(re, im);
                    c(j, i) = c(i, j).conj();
                }
            }
            const CRational cd = determinant(c);
            if (!cd.is_real() || moore_det(HyperhermitianMatrix(m)) != cd.re)
                return "complex embedding of " + fmt_qmat(m);
        }
    return std::nullopt;
}

std::optional<std::string> block_twisted() {
    Rng rng(1004);
    const CRational i = CRational::i();
    const CRational half(Rational(1, 2), Rational(0));
    for (std::size_t n : {std::size_t(1), std::size_t(2)}) {
        const std::size_t m = 2 * n;
        for (std::size_t deg = 0; deg <= 3; ++deg)
            for (int it = 0; it < 4; ++it) {
                const Form f = rand_form(rng, m, deg, 3);
                const Form di = twisted_d(Structure::I, f);
                const Form dj = twisted_d(Structure::J, f);
                const Form dk = twisted_d(Structure::K, f);
                if (di != i * (delbar(f) - del(f)))
                    return "first-twist expansion on " + format_form(f);
                if (del(f) != half * (exterior_d(f) + i * di))
                    return "holomorphic split on " + format_form(f);
                if (delbar(f) != half * (exterior_d(f) - i * di))
                    return "antiholomorphic split on " + format_form(f);
                if (del_J(f) != half * (dj - i * dk))
                    return "twisted-pair split on " + format_form(f);
                if (!twisted_d(Structure::J, dj).is_zero())
                    return "twist square on " + format_form(f);
            }
    }
    return std::nullopt;
}

std::optional<std::string> block_anticommute() {
    Rng rng(1005);
    const auto dd = [](int a, const Form& g) {
        if (a == 0) return exterior_d(g);
        return twisted_d(a == 1   ? Structure::I
                         : a == 2 ? Structure::J
                                  : Structure::K,
                         g);
    };
    for (std::size_t n : {std::size_t(1), std::size_t(2)}) {
        const std::size_t m = 2 * n;
        for (std::size_t deg = 0; deg <= 2; ++deg)
            for (int it = 0; it < 3; ++it) {
                const Form f = rand_form(rng, m, deg, 3);
                for (int a = 0; a < 4; ++a)
                    for (int b = a; b < 4; ++b)
                        if (!(dd(a, dd(b, f)) + dd(b, dd(a, f))).is_zero())
                            return "pair (" + std::to_string(a) + "," + std::to_string(b) +
                                   ") on " + format_form(f);
            }
    }
    return std::nullopt;
}

std::optional<std::string> block_realness() {
    Rng rng(1006);
    for (std::size_t n : {std::size_t(1), std::size_t(2)}) {
        for (int it = 0; it < 8; ++it) {
            const RPoly f = rand_rpoly(rng, 4 * n, 5, 3);
            const Form dd = ddj_potential(f);
            if (!is_j_real(dd)) return "real potential " + format_rpoly(f);
            const auto bi = dd.is_zero() ? std::make_optional(std::make_pair(2, 0)) : bidegree(dd);
            if (!bi || *bi != std::make_pair(2, 0))
                return "type of the image of " + format_rpoly(f);
        }
        const std::size_t m = 2 * n;
        for (std::size_t deg = 0; deg <= 2; ++deg)
            for (int it = 0; it < 4; ++it) {
                const Form f = rand_form(rng, m, deg, 3);
                if (del(del_J(f)) != -(del_J(del(f))))
                    return "operator order swap on " + format_form(f);
                if (!del_J(del_J(f)).is_zero()) return "del_J square on " + format_form(f);
            }
    }
    return std::nullopt;
}

std::optional<std::string> block_correspondence() {
    Rng rng(1007);
    for (std::size_t n = 1; n <= 3; ++n)
        for (int it = 0; it < 10; ++it) {
            const HyperhermitianMatrix a = rand_hherm(rng, n);
            const HyperhermitianMatrix back = t_map(t_inv(a));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (!(back(i, j) == a(i, j)))
                        return "matrix round trip on " + fmt_qmat(a.entries());
            if (t_inv(t_map(t_inv(a))) != t_inv(a))
                return "form round trip on " + fmt_qmat(a.entries());
        }
    for (std::size_t n : {std::size_t(1), std::size_t(2)})
        for (int it = 0; it < 5; ++it) {
            const RPoly f = rand_rpoly(rng, 4 * n, 5, 3);
            if (!is_hyperhermitian_field(t_map_field(ddj_potential(f))))
                return "pointwise symmetry for " + format_rpoly(f);
        }
    return std::nullopt;
}

std::optional<std::string> block_bridge() {
    Rng rng(1008);
    for (std::size_t n : {std::size_t(1), std::size_t(2)})
        for (int it = 0; it < 8; ++it) {
            const RPoly f = rand_rpoly(rng, 4 * n, 6, n == 1 ? 4 : 3);
            const PolyQuatMatrix lhs = t_map_field(ddj_potential(f));
            const PolyQuatMatrix rhs = complexify(quat_hessian_poly(f));
            if (!(scaled(lhs, CRational(Rational(4))) == rhs))
                return "quarter scaling on " + format_rpoly(f);
        }
    return std::nullopt;
}

std::optional<std::string> block_top_power() {
    // the factorial-normalized top coefficient of a wedge tuple is the mixed
    // determinant of the paired matrices
    Rng rng(1009);
    for (std::size_t n : {std::size_t(2), std::size_t(3)}) {
        Rational fact(1);
        for (std::size_t i = 1; i <= n; ++i) fact *= Rational(static_cast<int>(i));
        for (int it = 0; it < 8; ++it) {
            std::vector<HyperhermitianMatrix> as;
            Form prod = Form::function(CPoly(4 * n, CRational(Rational(1))));
            for (std::size_t i = 0; i < n; ++i) {
                as.push_back(rand_hherm(rng, n));
                prod = wedge(prod, t_inv(as.back()));
            }
            if (top_ratio(prod) / fact != mixed_det(as))
                return "tuple " + std::to_string(it) + " at n=" + std::to_string(n);
        }
        // matrix units give the reciprocal factorial
        std::vector<HyperhermitianMatrix> units;
        Form prod = Form::function(CPoly(4 * n, CRational(Rational(1))));
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<Rational> d(n, Rational(0));
            d[i] = Rational(1);
            units.push_back(HyperhermitianMatrix::diagonal(d));
            prod = wedge(prod, t_inv(units.back()));
        }
        if (mixed_det(units) != Rational(1) / fact || top_ratio(prod) != Rational(1))
            return "matrix units at n=" + std::to_string(n);
    }
    return std::nullopt;
}

std::optional<std::string> block_density_routes() {
    Rng rng(1010);
    for (std::size_t n : {std::size_t(1), std::size_t(2)})
        for (int it = 0; it < 6; ++it) {
            const RPoly f = rand_rpoly(rng, 4 * n, 6, 3);
            const DensityRoutes r = ma_density_routes(f, n);
            if (!(r.form_route == r.hessian_route)) return "density of " + format_rpoly(f);
        }
    return std::nullopt;
}

std::optional<std::string> block_fundamental_form() {
    // euclidean pin, then arbitrary potentials, then one inverse solve
    Matrix<RPoly> id4(4, 4, RPoly(4));
    for (std::size_t a = 0; a < 4; ++a) id4(a, a) = RPoly(4, Rational(1));
    const Form euclid = omega_from_metric(MetricField{id4, 1});
    if (euclid != t_inv(HyperhermitianMatrix::diagonal({Rational(1)})))
        return "euclidean normalization";
    Rng rng(1011);
    for (std::size_t n : {std::size_t(1), std::size_t(2)})
        for (int it = 0; it < 5; ++it) {
            const RPoly f = rand_rpoly(rng, 4 * n, 5, 3);
            if (omega_from_metric(potential_metric(f, n)) != ddj_potential(f))
                return "metric round trip on " + format_rpoly(f);
        }
    const RPoly f = rand_rpoly(rng, 4, 5, 4);
    const Form omega = ddj_potential(f);
    if (ddj_potential(solve_potential(omega, 1, 4)) != omega)
        return "potential solve on " + format_rpoly(f);
    return std::nullopt;
}

struct BlockSpec {
    const char* name;
    const char* description;
    BlockFn body;
};

std::vector<BlockSpec> battery() {
    return {
        {"moore-determinant",
         "cycle expansion against closed forms, the realization route, and the float route",
         block_moore},
        {"congruence-embedding",
         "determinant under congruence and agreement with complex hermitian determinants",
         block_congruence},
        {"structure-action", "letter tables, pullback composition laws, and inverse signs",
         []() -> std::optional<std::string> {
             const IdentityRecord r = check_structure_action(
                 [](Structure s, const Form& f) { return apply_structure(s, f); });
             if (r.pass) return std::nullopt;
             return r.counterexample;
         }},
        {"twisted-differentials",
         "expansion of the twisted exterior derivatives into holomorphic pieces",
         block_twisted},
        {"anticommutation", "pairwise anticommutation of d and its three twists",
         block_anticommute},
        {"potential-realness",
         "images of real potentials are J-real (2,0) forms; operator order swap",
         block_realness},
        {"matrix-correspondence",
         "constant (2,0) forms and hyperhermitian matrices convert back and forth exactly",
         block_correspondence},
        {"hessian-bridge",
         "form-side mixed derivatives equal a quarter of the quaternionic Hessian",
         block_bridge},
        {"top-power", "top coefficients of wedge products against mixed determinants",
         block_top_power},
        {"density-routes", "form route and Hessian route to the density agree", block_density_routes},
        {"fundamental-form",
         "metric to fundamental form normalization and the inverse potential solve",
         block_fundamental_form},
    };
}

}  // namespace

IdentityRecord check_structure_action(const StructureActionFn& act) {
    return run_block(
        "structure-action", "letter tables, pullback composition laws, and inverse signs",
        [&]() -> std::optional<std::string> {
            const CRational i = CRational::i();
            for (std::size_t n : {std::size_t(1), std::size_t(2)}) {
                const std::size_t m = 2 * n;
                for (std::size_t a = 0; a < n; ++a) {
                    const int h = static_cast<int>(2 * a), l = h + 1;
                    const int hc = static_cast<int>(m) + h, lc = static_cast<int>(m) + l;
                    const auto cov = [m](int letter) { return Form::covector(m, letter); };
                    const std::vector<std::pair<int, Form>> table_i = {
                        {h, i * cov(h)}, {l, i * cov(l)}, {hc, (-i) * cov(hc)}, {lc, (-i) * cov(lc)}};
                    const std::vector<std::pair<int, Form>> table_j = {
                        {h, CRational(Rational(-1)) * cov(lc)},
                        {l, cov(hc)},
                        {hc, CRational(Rational(-1)) * cov(l)},
                        {lc, cov(h)}};
                    const std::vector<std::pair<int, Form>> table_k = {
                        {h, i * cov(lc)}, {l, (-i) * cov(hc)}, {hc, (-i) * cov(l)}, {lc, i * cov(h)}};
                    const std::vector<std::pair<Structure, const std::vector<std::pair<int, Form>>*>>
                        tables = {{Structure::I, &table_i},
                                  {Structure::J, &table_j},
                                  {Structure::K, &table_k}};
                    for (const auto& [s, table] : tables)
                        for (const auto& [letter, expected] : *table)
                            if (act(s, Form::covector(m, letter)) != expected) {
                                std::string which = s == Structure::I   ? "first structure"
                                                    : s == Structure::J ? "second structure"
                                                                        : "third structure";
                                return which + " on " + format_form(Form::covector(m, letter));
                            }
                }
            }
            // composition and inverse laws on a small random corpus
            Rng rng(1003);
            for (std::size_t deg = 0; deg <= 3; ++deg)
                for (int it = 0; it < 4; ++it) {
                    const Form f = rand_form(rng, 4, deg, 3);
                    if (act(Structure::K, f) != act(Structure::I, act(Structure::J, f)))
                        return "composition into the third structure on " + format_form(f);
                    const Form twice = act(Structure::J, act(Structure::J, f));
                    if (twice != (deg % 2 == 0 ? f : -f))
                        return "square sign on " + format_form(f);
                }
            return std::nullopt;
        });
}

std::vector<std::string> verify_block_names() {
    std::vector<std::string> names;
    for (const auto& b : battery()) names.push_back(b.name);
    return names;
}

IdentitySuiteReport run_verify_suite(const std::string& filter) {
    IdentitySuiteReport report;
    for (const auto& b : battery()) {
        if (!filter.empty() && std::string(b.name).find(filter) == std::string::npos) continue;
        IdentityRecord rec = run_block(b.name, b.description, b.body);
        report.all_pass = report.all_pass && rec.pass;
        report.records.push_back(std::move(rec));
    }
    return report;
}

}  // namespace qpt
