#include <doctest.h>

#include "qpt/poly.hpp"
#include "qpt/rng.hpp"

using namespace qpt;

namespace {

CPoly random_cpoly(Rng& rng, std::size_t m, int terms, int maxdeg) {
    CPoly p(2 * m);
    for (int t = 0; t < terms; ++t) {
        CPoly::Exponents e(2 * m, 0);
        int budget = maxdeg;
        for (auto& x : e) {
            x = static_cast<int>(rng.uniform_int(0, std::min(budget, 2)));
            budget -= x;
        }
        p.add_term(e, CRational(rng.small_rational(), rng.small_rational()));
    }
    return p;
}

RPoly random_rpoly(Rng& rng, std::size_t nvars, int terms, int maxdeg) {
    RPoly p(nvars);
    for (int t = 0; t < terms; ++t) {
        RPoly::Exponents e(nvars, 0);
        int budget = maxdeg;
        for (auto& x : e) {
            x = static_cast<int>(rng.uniform_int(0, std::min(budget, 2)));
            budget -= x;
        }
        p.add_term(e, rng.small_rational());
    }
    return p;
}

std::vector<CRational> random_zpoint(Rng& rng, std::size_t m) {
    std::vector<CRational> z;
    for (std::size_t k = 0; k < m; ++k) z.emplace_back(rng.small_rational(), rng.small_rational());
    return z;
}

Quaternion random_quat(Rng& rng) {
    return {rng.small_rational(), rng.small_rational(), rng.small_rational(), rng.small_rational()};
}

}  // namespace

TEST_CASE("ring operations agree with pointwise evaluation") {
    Rng rng(50);
    for (int it = 0; it < 40; ++it) {
        std::size_t m = rng.uniform_int(1, 3);
        CPoly p = random_cpoly(rng, m, 5, 4), q = random_cpoly(rng, m, 5, 4);
        auto z = random_zpoint(rng, m);
        CHECK(eval_cpoly(p + q, z) == eval_cpoly(p, z) + eval_cpoly(q, z));
        CHECK(eval_cpoly(p - q, z) == eval_cpoly(p, z) - eval_cpoly(q, z));
        CHECK(eval_cpoly(p * q, z) == eval_cpoly(p, z) * eval_cpoly(q, z));
        CHECK(p * q == q * p);
    }
}

TEST_CASE("distributivity and associativity") {
    Rng rng(51);
    CPoly p = random_cpoly(rng, 2, 4, 3), q = random_cpoly(rng, 2, 4, 3),
          r = random_cpoly(rng, 2, 4, 3);
    CHECK(p * (q + r) == p * q + p * r);
    CHECK((p * q) * r == p * (q * r));
}

TEST_CASE("zero pruning keeps the representation canonical") {
    CPoly p(4);
    p.add_term({1, 0, 0, 0}, CRational(1));
    p.add_term({1, 0, 0, 0}, CRational(-1));
    CHECK(p.is_zero());
    CHECK(p.terms().empty());
    Rng rng(52);
    CPoly q = random_cpoly(rng, 2, 5, 3);
    CHECK((q - q).is_zero());
}

TEST_CASE("derivatives") {
    std::size_t m = 2;
    CPoly z1 = cpoly_z(m, 0);
    CPoly cube = z1 * z1 * z1;
    CHECK(d_z(cube, 0) == CRational(3) * (z1 * z1));
    CHECK(d_zbar(cube, 0).is_zero());

    Rng rng(53);
    for (int it = 0; it < 25; ++it) {
        CPoly p = random_cpoly(rng, m, 5, 4), q = random_cpoly(rng, m, 5, 4);
        std::size_t k = rng.uniform_int(0, m - 1);
        // product rule
        CHECK(d_z(p * q, k) == d_z(p, k) * q + p * d_z(q, k));
        CHECK(d_zbar(p * q, k) == d_zbar(p, k) * q + p * d_zbar(q, k));
        // mixed partials commute
        CHECK(d_zbar(d_z(p, 0), 1) == d_z(d_zbar(p, 1), 0));
    }
}

TEST_CASE("conjugation") {
    Rng rng(54);
    for (int it = 0; it < 25; ++it) {
        std::size_t m = rng.uniform_int(1, 3);
        CPoly p = random_cpoly(rng, m, 5, 4), q = random_cpoly(rng, m, 5, 4);
        CHECK(conj_cpoly(conj_cpoly(p)) == p);
        CHECK(conj_cpoly(p * q) == conj_cpoly(p) * conj_cpoly(q));
        CHECK(conj_cpoly(p + q) == conj_cpoly(p) + conj_cpoly(q));
        // pointwise: conj(p) evaluated at a point is the conjugate value
        auto z = random_zpoint(rng, m);
        CHECK(eval_cpoly(conj_cpoly(p), z) == eval_cpoly(p, z).conj());
    }
}

TEST_CASE("real-valuedness detection") {
    std::size_t m = 1;
    CPoly z = cpoly_z(m, 0), zb = cpoly_zbar(m, 0);
    CHECK(is_real_valued(z + zb));
    CHECK(is_real_valued(z * zb));
    CHECK(is_real_valued(CRational::i() * (z - zb)));
    CHECK(!is_real_valued(z - zb));
    CHECK(!is_real_valued(z));
}

TEST_CASE("chart rewrites real coordinates consistently") {
    // |q_1|^2 = t^2 + x^2 + y^2 + z^2 becomes z1 zb1 + z2 zb2
    RPoly norm(4);
    for (std::size_t v = 0; v < 4; ++v) {
        RPoly::Exponents e(4, 0);
        e[v] = 2;
        norm.add_term(e, Rational(1));
    }
    CPoly expect = cpoly_z(2, 0) * cpoly_zbar(2, 0) + cpoly_z(2, 1) * cpoly_zbar(2, 1);
    CHECK(cpoly_from_rpoly(norm) == expect);

    // each real coordinate round trips through the chart at sample points
    Rng rng(55);
    for (int it = 0; it < 30; ++it) {
        std::size_t n = rng.uniform_int(1, 2);
        std::vector<Quaternion> q;
        std::vector<Rational> x;
        for (std::size_t a = 0; a < n; ++a) {
            q.push_back(random_quat(rng));
            x.push_back(q[a].t);
            x.push_back(q[a].x);
            x.push_back(q[a].y);
            x.push_back(q[a].z);
        }
        auto z = complex_coords(q);
        for (std::size_t r = 0; r < 4 * n; ++r) {
            CRational v = eval_cpoly(real_coordinate_in_chart(n, r), z);
            CHECK(v.is_real());
            CHECK(v.re == x[r]);
        }
        // and a random polynomial evaluates identically in both pictures
        RPoly p = random_rpoly(rng, 4 * n, 6, 4);
        CRational via_chart = eval_cpoly(cpoly_from_rpoly(p), z);
        CHECK(via_chart.is_real());
        CHECK(via_chart.re == eval_rpoly(p, x));
    }
}

TEST_CASE("chart rewriting is a ring homomorphism with real output") {
    Rng rng(56);
    for (int it = 0; it < 15; ++it) {
        RPoly p = random_rpoly(rng, 4, 5, 3), q = random_rpoly(rng, 4, 5, 3);
        CHECK(cpoly_from_rpoly(p * q) == cpoly_from_rpoly(p) * cpoly_from_rpoly(q));
        CHECK(cpoly_from_rpoly(p + q) == cpoly_from_rpoly(p) + cpoly_from_rpoly(q));
        CHECK(is_real_valued(cpoly_from_rpoly(p)));
    }
}

TEST_CASE("substitution composes with evaluation") {
    Rng rng(57);
    for (int it = 0; it < 15; ++it) {
        CPoly p = random_cpoly(rng, 1, 4, 3);  // 2 variables
        std::vector<CPoly> images{random_cpoly(rng, 1, 3, 2), random_cpoly(rng, 1, 3, 2)};
        CPoly s = p.substitute(images);
        auto z = random_zpoint(rng, 1);
        std::vector<CRational> x{z[0], z[0].conj()};
        std::vector<CRational> at{images[0].eval(x, [](const CRational& c) { return c; }),
                                  images[1].eval(x, [](const CRational& c) { return c; })};
        CHECK(s.eval(x, [](const CRational& c) { return c; }) ==
              p.eval(at, [](const CRational& c) { return c; }));
    }
}

TEST_CASE("degrees") {
    std::size_t m = 2;
    CPoly p = cpoly_z(m, 0) * cpoly_z(m, 0) * cpoly_zbar(m, 1) + cpoly_z(m, 1);
    CHECK(p.total_degree() == 3);
    CHECK(p.degree_in(0) == 2);
    CHECK(p.degree_in(1) == 1);
    CHECK(p.degree_in(m + 1) == 1);
    CHECK(CPoly(4).total_degree() == 0);
}

TEST_CASE("float evaluation tracks exact evaluation") {
    Rng rng(58);
    for (int it = 0; it < 10; ++it) {
        CPoly p = random_cpoly(rng, 2, 6, 4);
        auto z = random_zpoint(rng, 2);
        std::vector<std::complex<double>> zd;
        for (const auto& c : z) zd.emplace_back(to_double(c.re), to_double(c.im));
        CRational exact = eval_cpoly(p, z);
        std::complex<double> approx = eval_cpoly_d(p, zd);
        CHECK(approx.real() == doctest::Approx(to_double(exact.re)).epsilon(1e-12));
        CHECK(approx.imag() == doctest::Approx(to_double(exact.im)).epsilon(1e-12));
    }
}

TEST_CASE("formatting") {
    std::size_t m = 1;
    CPoly p = CRational(Rational(-3, 2)) * (cpoly_z(m, 0) * cpoly_z(m, 0)) +
              CRational(Rational(0), Rational(1)) * cpoly_zbar(m, 0);
    CHECK(format_cpoly(p) == "i*zb1 - 3/2*z1^2");
    CHECK(format_cpoly(CPoly(2)) == "0");

    RPoly r(4);
    r.add_term({2, 0, 0, 0}, Rational(1));
    r.add_term({0, 0, 0, 1}, Rational(-2));
    CHECK(format_rpoly(r) == "-2*z1 + t1^2");
}
