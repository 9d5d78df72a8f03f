#include <doctest.h>

#include <string>

#include "qpt/hkt.hpp"
#include "qpt/parser.hpp"
#include "qpt/rng.hpp"
#include "qpt/structure.hpp"

using namespace qpt;

namespace {

RPoly rp(const std::string& text, std::size_t nvars) {
    auto p = parse_field(text).to_rpoly(nvars);
    if (!p) throw std::runtime_error("test potential is not polynomial: " + text);
    return *p;
}

RPoly random_low_rpoly(Rng& rng, std::size_t nvars, int terms, int maxdeg) {
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

// metric of a potential without the psh gate, for identities that hold for
// arbitrary polynomials
MetricField potential_metric(const RPoly& f, std::size_t n) {
    Matrix<RPoly> g = realize_components(quat_hessian_poly(f));
    const Rational quarter(1, 4);
    for (std::size_t a = 0; a < g.rows(); ++a)
        for (std::size_t b = 0; b < g.cols(); ++b) g(a, b) = quarter * g(a, b);
    return MetricField{std::move(g), n};
}

MetricField euclidean_metric(std::size_t n) {
    Matrix<RPoly> g(4 * n, 4 * n, RPoly(4 * n));
    for (std::size_t a = 0; a < 4 * n; ++a) g(a, a) = RPoly(4 * n, Rational(1));
    return MetricField{std::move(g), n};
}

MetricField diagonal_quaternionic_metric(const std::vector<RPoly>& h, std::size_t n) {
    Matrix<QRPoly> q(n, n);
    for (std::size_t a = 0; a < n; ++a)
        q(a, a) = QRPoly(h[a], RPoly(4 * n), RPoly(4 * n), RPoly(4 * n));
    return MetricField{realize_components(q), n};
}

Form dz_pair(std::size_t m, int a, int b) {
    return wedge(Form::covector(m, a), Form::covector(m, b));
}

}  // namespace

TEST_CASE("metric of a potential") {
    const Grid box1 = Grid::cube(4, 1.0, 3);
    const Grid box2 = Grid::cube(8, 1.0, 2);

    auto g2 = metric_from_potential(rp("t1^2+x1^2+y1^2+z1^2+t2^2+x2^2+y2^2+z2^2", 8), 2, box2);
    CHECK(g2.n == 2);
    for (std::size_t a = 0; a < 8; ++a)
        for (std::size_t b = 0; b < 8; ++b)
            CHECK(g2.g(a, b) == RPoly(8, Rational(a == b ? 2 : 0)));

    auto g1 = metric_from_potential(rp("t1^2+x1^2+y1^2+z1^2+1/12*t1^4", 4), 1, box1);
    CHECK(g1.g(0, 0).total_degree() == 2);
    CHECK(eval_rpoly(g1.g(0, 0), {Rational(1), Rational(0), Rational(0), Rational(0)}) >
          Rational(2));
    CHECK(g1.g(0, 1) == g1.g(1, 0));

    CHECK_THROWS_AS(metric_from_potential(RPoly(4, Rational(1)), 1, box1), NotStrictlyPsh);
    CHECK_THROWS_AS(metric_from_potential(rp("0-t1^2-x1^2-y1^2-z1^2", 4), 1, box1),
                    NotStrictlyPsh);
    // harmonic for the flat laplacian, so psh but not strictly
    try {
        metric_from_potential(rp("t1^2-x1^2", 4), 1, box1);
        CHECK(false);
    } catch (const NotStrictlyPsh& e) {
        CHECK(e.witness.size() == 4);
        CHECK(std::string(e.what()).find("strictly psh") != std::string::npos);
    }
    CHECK_THROWS_AS(metric_from_potential(rp("t1^2+x1^2+y1^2+z1^2", 4), 2, box2),
                    std::invalid_argument);
}

TEST_CASE("fundamental form of flat metrics") {
    const Form id1 = omega_from_metric(euclidean_metric(1));
    CHECK(id1 == dz_pair(2, 0, 1));
    CHECK(id1 == t_inv(HyperhermitianMatrix::diagonal({Rational(1)})));

    const Form id2 = omega_from_metric(euclidean_metric(2));
    CHECK(id2 == dz_pair(4, 0, 1) + dz_pair(4, 2, 3));
    CHECK(id2 == t_inv(HyperhermitianMatrix::diagonal({Rational(1), Rational(1)})));

    MetricField scaled = euclidean_metric(1);
    for (std::size_t a = 0; a < 4; ++a) scaled.g(a, a) = RPoly(4, Rational(3));
    CHECK(omega_from_metric(scaled) == CRational(Rational(3)) * dz_pair(2, 0, 1));

    MetricField zero{Matrix<RPoly>(4, 4, RPoly(4)), 1};
    CHECK(omega_from_metric(zero).is_zero());

    // width zero constant entries are accepted
    MetricField lazy{Matrix<RPoly>(4, 4), 1};
    for (std::size_t a = 0; a < 4; ++a) lazy.g(a, a) = RPoly(std::size_t{0}, Rational(1));
    CHECK(omega_from_metric(lazy) == dz_pair(2, 0, 1));

    MetricField bad = euclidean_metric(1);
    bad.g(0, 1) = RPoly(4, Rational(1));  // not symmetric
    CHECK_THROWS_AS(omega_from_metric(bad), std::invalid_argument);
    CHECK_THROWS_AS(omega_from_metric(MetricField{Matrix<RPoly>(3, 3, RPoly(4)), 1}),
                    std::invalid_argument);
}

TEST_CASE("round trip between potentials and fundamental forms") {
    // the normalization pins: squared norm doubles the euclidean form, a bare
    // t^2 contributes a quarter of it through the same quarter factor
    const RPoly qn = rp("t1^2+x1^2+y1^2+z1^2", 4);
    CHECK(omega_from_metric(potential_metric(qn, 1)) ==
          CRational(Rational(2)) * dz_pair(2, 0, 1));
    CHECK(omega_from_metric(potential_metric(qn, 1)) == ddj_potential(qn));
    CHECK(omega_from_metric(potential_metric(rp("t1^2", 4), 1)) ==
          CRational(Rational(1, 2)) * dz_pair(2, 0, 1));

    Rng rng(4242);
    for (int rep = 0; rep < 8; ++rep) {
        const RPoly f = random_low_rpoly(rng, 4, 5, 4);
        CHECK(omega_from_metric(potential_metric(f, 1)) == ddj_potential(f));
    }
    for (int rep = 0; rep < 6; ++rep) {
        const RPoly f = random_low_rpoly(rng, 8, 5, 3);
        CHECK(omega_from_metric(potential_metric(f, 2)) == ddj_potential(f));
    }

    // the psh-gated route agrees where it applies
    const RPoly quartic = rp("t1^2+x1^2+y1^2+z1^2+1/12*t1^4", 4);
    CHECK(omega_from_metric(metric_from_potential(quartic, 1, Grid::cube(4, 1.0, 3))) ==
          ddj_potential(quartic));
    const RPoly coupled =
        rp("t1^2+x1^2+y1^2+z1^2+t2^2+x2^2+y2^2+z2^2+1/4*t1*t2", 8);
    CHECK(omega_from_metric(metric_from_potential(coupled, 2, Grid::cube(8, 1.0, 2))) ==
          ddj_potential(coupled));
}

TEST_CASE("hermitian sampling") {
    CHECK(is_quaternionic_hermitian(euclidean_metric(2), Grid::cube(8, 1.0, 2)).hermitian);
    CHECK(is_quaternionic_hermitian(
              potential_metric(rp("t1^2+x1^2+y1^2+z1^2+1/12*t1^4", 4), 1), Grid::cube(4, 1.0, 3))
              .hermitian);

    MetricField skew = euclidean_metric(1);
    skew.g(1, 1) = RPoly(4, Rational(2));
    const auto rep = is_quaternionic_hermitian(skew, Grid::cube(4, 1.0, 2));
    REQUIRE(!rep.hermitian);
    REQUIRE(rep.witness);
    CHECK(rep.witness->l == Structure::I);
    CHECK(rep.witness->a == 0);
    CHECK(rep.witness->b == 0);
    CHECK(rep.witness->defect == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rep.witness->point.size() == 4);
    CHECK_THROWS_AS(omega_from_metric(skew), std::invalid_argument);

    MetricField drift = euclidean_metric(1);
    drift.g(0, 0) = rp("1+t1^2", 4);
    const auto rep2 = is_quaternionic_hermitian(drift, Grid::cube(4, 1.0, 2));
    REQUIRE(!rep2.hermitian);
    REQUIRE(rep2.witness);
    CHECK(rep2.witness->defect == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("hkt verdicts") {
    const auto flat = is_hkt(euclidean_metric(2));
    CHECK(flat.hkt);
    CHECK(flat.residual.is_zero());
    CHECK(flat.omega == dz_pair(4, 0, 1) + dz_pair(4, 2, 3));

    // potential metrics are always hkt: their form is a del of something
    Rng rng(77);
    for (int rep = 0; rep < 4; ++rep) {
        const auto chk = is_hkt(potential_metric(random_low_rpoly(rng, 8, 4, 3), 2));
        CHECK(chk.hkt);
        CHECK(chk.residual.is_zero());
    }

    // one quaternionic dimension leaves no room for a residual
    const auto conformal =
        is_hkt(diagonal_quaternionic_metric({rp("1+t1^2+x1^2+y1^2+z1^2", 4)}, 1));
    CHECK(conformal.hkt);
    CHECK(conformal.omega ==
          wedge(Form::function(cpoly_from_rpoly(rp("1+t1^2+x1^2+y1^2+z1^2", 4))),
                dz_pair(2, 0, 1)));

    // a coefficient depending on the second pair obstructs closedness
    const auto obstructed = is_hkt(
        diagonal_quaternionic_metric({rp("1+t2^2", 8), RPoly(8, Rational(1))}, 2));
    CHECK(!obstructed.hkt);
    CHECK(obstructed.omega ==
          wedge(Form::function(cpoly_from_rpoly(rp("1+t2^2", 8))), dz_pair(4, 0, 1)) +
              dz_pair(4, 2, 3));
    const Form expected_residual =
        wedge(Form::function(cpoly_from_rpoly(rp("t2", 8))),
              wedge(Form::covector(4, 0), wedge(Form::covector(4, 1), Form::covector(4, 2))));
    CHECK(obstructed.residual == expected_residual);
}

TEST_CASE("solving for a potential") {
    const Form two = CRational(Rational(2)) * dz_pair(2, 0, 1);
    const RPoly f2 = solve_potential(two, 1, 2);
    CHECK(ddj_potential(f2) == two);
    CHECK(f2.total_degree() == 2);

    const Form id2 = t_inv(HyperhermitianMatrix::diagonal({Rational(1), Rational(1)}));
    CHECK(ddj_potential(solve_potential(id2, 2, 2)) == id2);

    const Form quartic = ddj_potential(rp("t1^4", 4));
    CHECK(ddj_potential(solve_potential(quartic, 1, 4)) == quartic);
    try {
        solve_potential(quartic, 1, 3);
        CHECK(false);
    } catch (const DegreeBoundTooSmall& e) {
        CHECK(e.needed == 4);
    }

    const Form mixed = ddj_potential(rp("t1^2+x1^2+y1^2+z1^2+t1^4", 4));
    CHECK(ddj_potential(solve_potential(mixed, 1, 4)) == mixed);

    CHECK(solve_potential(Form(2), 1, 0) == RPoly(4, Rational(0)));

    const auto obstructed =
        omega_from_metric(diagonal_quaternionic_metric({rp("1+t2^2", 8), RPoly(8, Rational(1))}, 2));
    try {
        solve_potential(obstructed, 2, 4);
        CHECK(false);
    } catch (const NotClosed& e) {
        CHECK(!e.residual.is_zero());
        CHECK(e.residual ==
              wedge(Form::function(cpoly_from_rpoly(rp("t2", 8))),
                    wedge(Form::covector(4, 0),
                          wedge(Form::covector(4, 1), Form::covector(4, 2)))));
    }
    for (const char* coef : {"x2", "y2", "z2"}) {
        const auto leaky = omega_from_metric(
            diagonal_quaternionic_metric({rp(std::string("1+") + coef + "^2", 8),
                                          RPoly(8, Rational(1))},
                                         2));
        CHECK_THROWS_AS(solve_potential(leaky, 2, 4), NotClosed);
    }

    CHECK_THROWS_AS(solve_potential(two, 2, 4), std::invalid_argument);
    CHECK_THROWS_AS(solve_potential(wedge(Form::covector(2, 0), Form::covector(2, 2)), 1, 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(solve_potential(CRational::i() * dz_pair(2, 0, 1), 1, 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(solve_potential(two, 1, -1), std::invalid_argument);
}

TEST_CASE("potential solving round trips on a corpus") {
    Rng rng(90210);
    for (int rep = 0; rep < 6; ++rep) {
        const RPoly f = random_low_rpoly(rng, 4, 5, 6);
        const Form omega = ddj_potential(f);
        const RPoly back = solve_potential(omega, 1, 6);
        CHECK(ddj_potential(back) == omega);
    }
    for (int rep = 0; rep < 4; ++rep) {
        const RPoly f = random_low_rpoly(rng, 8, 4, 3);
        const Form omega = ddj_potential(f);
        const RPoly back = solve_potential(omega, 2, 3);
        CHECK(ddj_potential(back) == omega);
    }

    const Form omega = ddj_potential(rp("t1^4+t1^2*x1^2+y1^4", 4));
    const RPoly once = solve_potential(omega, 1, 4);
    const RPoly again = solve_potential(omega, 1, 4);
    CHECK(format_rpoly(once) == format_rpoly(again));
}
