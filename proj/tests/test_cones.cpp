#include <doctest.h>

#include "qpt/cones.hpp"
#include "qpt/simplex.hpp"

using namespace qpt;

namespace {

Quaternion rand_quat(Rng& rng) {
    return {rng.small_rational(), rng.small_rational(), rng.small_rational(),
            rng.small_rational()};
}

QuaternionMatrix rand_qmat(Rng& rng, std::size_t r, std::size_t c) {
    QuaternionMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rand_quat(rng);
    return m;
}

HyperhermitianMatrix rand_hherm(Rng& rng, std::size_t n, std::vector<Rational> d) {
    return HyperhermitianMatrix::diagonal(std::move(d)).congruence(rand_qmat(rng, n, n));
}

Form two_form(std::size_t n, int a, int b) { return wedge(Form::covector(2 * n, a), Form::covector(2 * n, b)); }

}  // namespace

TEST_CASE("phase-1 simplex") {
    Matrix<Rational> a(2, 2);
    a(0, 0) = 1;
    a(0, 1) = 1;
    a(1, 0) = 1;
    a(1, 1) = -1;
    std::vector<Rational> b = {2, 0};
    for (auto solve : {feasible_point_exact, feasible_point_float}) {
        auto r = solve(a, b);
        REQUIRE(r.feasible);
        CHECK(r.x[0] + r.x[1] == 2);
        CHECK(r.x[0] - r.x[1] == 0);
        CHECK(r.x[0] >= 0);
    }

    // nonnegative variables cannot reach a negative sum
    std::vector<Rational> neg = {-1, 0};
    Matrix<Rational> ones(2, 2);
    ones(0, 0) = ones(0, 1) = 1;
    for (auto solve : {feasible_point_exact, feasible_point_float})
        CHECK(!solve(ones, neg).feasible);

    // underdetermined system keeps the constraint exactly
    Matrix<Rational> row(1, 3);
    row(0, 0) = 1;
    row(0, 1) = 2;
    row(0, 2) = 3;
    auto u = feasible_point_exact(row, {6});
    REQUIRE(u.feasible);
    CHECK(u.x[0] + 2 * u.x[1] + 3 * u.x[2] == 6);

    // zero rows: consistent and inconsistent
    Matrix<Rational> z(1, 2);
    CHECK(feasible_point_exact(z, {0}).feasible);
    CHECK(!feasible_point_exact(z, {1}).feasible);
    CHECK(!feasible_point_float(z, {1}).feasible);
}

TEST_CASE("pullback generators") {
    // coordinate projections pick out the coordinate pair
    QuaternionMatrix p1(1, 2), p2(1, 2);
    p1(0, 0) = Quaternion(1);
    p2(0, 1) = Quaternion(1);
    CHECK(pullback_generator(p1, 2).form == two_form(2, 0, 1));
    CHECK(pullback_generator(p2, 2).form == two_form(2, 2, 3));

    // one variable: the pullback scales the area form by the squared norm
    Rng rng(911);
    for (int rep = 0; rep < 20; ++rep) {
        QuaternionMatrix c(1, 1);
        c(0, 0) = rand_quat(rng);
        CHECK(top_ratio(pullback_generator(c, 1).form) == c(0, 0).norm_sq());
    }

    // top degree: the scale is the Moore determinant of map^* map, hence
    // every full-rank map lands on the canonical half line
    for (int rep = 0; rep < 15; ++rep) {
        QuaternionMatrix a = rand_qmat(rng, 2, 2);
        Rational scale = moore_det(HyperhermitianMatrix::diagonal({1, 1}).congruence(a));
        CHECK(top_ratio(pullback_generator(a, 2).form) == scale);
        CHECK(scale >= 0);
    }

    // sampled generators validate: constant, J-real, pure bidegree
    for (std::size_t n : {std::size_t{2}, std::size_t{3}})
        for (std::size_t k = 0; k <= n; ++k)
            for (const auto& g : strong_generators(k, n, 5, 31 * n + k)) {
                auto checked = const_form(g.form, n, k);
                CHECK(checked.k == k);
            }
}

TEST_CASE("matrix correspondence of pullbacks") {
    // t(f* xi) = c^* c for a row map c, so pullbacks realize every rank-one
    // positive matrix
    Rng rng(912);
    for (std::size_t n : {std::size_t{1}, std::size_t{2}, std::size_t{3}}) {
        for (int rep = 0; rep < 6; ++rep) {
            QuaternionMatrix c = rand_qmat(rng, 1, n);
            HyperhermitianMatrix expect = HyperhermitianMatrix::diagonal({1}).congruence(c);
            HyperhermitianMatrix got = t_map(pullback_generator(c, n).form);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) CHECK(got(i, j) == expect(i, j));
        }
    }
}

TEST_CASE("exact degree-two membership") {
    Form id2 = two_form(2, 0, 1) + two_form(2, 2, 3);
    auto member = is_weakly_positive_2form(const_form(id2, 2));
    CHECK(member.verdict == ConeVerdict::Member);
    CHECK(member.detail.find("definite") != std::string::npos);

    auto neg = is_weakly_positive_2form(const_form(-two_form(1, 0, 1), 1));
    REQUIRE(neg.verdict == ConeVerdict::NonMember);
    REQUIRE(neg.vector_witness.has_value());
    CHECK(quadratic_form(t_map(-two_form(1, 0, 1)), *neg.vector_witness) < 0);

    auto zero = is_weakly_positive_2form(const_form(Form(2), 1, 1));
    CHECK(zero.verdict == ConeVerdict::Member);

    // non-real forms are rejected at validation and at the test itself
    Form imag = CRational::i() * two_form(1, 0, 1);
    CHECK_THROWS_AS(const_form(imag, 1), std::invalid_argument);
    CHECK_THROWS_AS(is_weakly_positive_2form(ConstForm2k{imag, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(is_weakly_positive_2form(const_form(Form(4), 2, 2)), std::invalid_argument);
}

TEST_CASE("degree-two cone equals the positive matrix cone") {
    Rng rng(913);
    // forward: every generator pairs to a positive semidefinite matrix
    for (std::size_t n : {std::size_t{1}, std::size_t{2}, std::size_t{3}})
        for (const auto& g : strong_generators(1, n, 10, 500 + n))
            CHECK(positivity(t_map(g.form)).verdict != Definiteness::Indefinite);

    // backward: a positive matrix decomposes into rank-one terms, and each
    // term is the pullback along the conjugated row, so the paired form is a
    // finite nonnegative sum of generators
    for (std::size_t n : {std::size_t{2}, std::size_t{3}}) {
        for (int rep = 0; rep < 5; ++rep) {
            std::vector<Rational> d;
            for (std::size_t i = 0; i < n; ++i) d.push_back(Rational(rng.uniform_int(0, 3)));
            HyperhermitianMatrix a = rand_hherm(rng, n, d);
            auto terms = psd_decompose(a);
            REQUIRE(terms.has_value());
            Form recon(2 * n);
            for (const auto& t : *terms) {
                QuaternionMatrix row(1, n);
                for (std::size_t j = 0; j < n; ++j) row(0, j) = t.vec[j].conj();
                recon += CRational(t.weight) * pullback_generator(row, n).form;
            }
            CHECK(recon == t_inv(a));
        }
    }

    CHECK(!psd_decompose(rand_hherm(rng, 2, {1, -1})).has_value());
}

TEST_CASE("weak positivity sweep") {
    // the classic sign-split form: positive against one coordinate plane,
    // negative against the other
    Form split = two_form(2, 0, 1) - two_form(2, 2, 3);
    auto ref = weak_positive_test(const_form(split, 2), 40, 7);
    REQUIRE(ref.verdict == ConeVerdict::NonMember);
    REQUIRE(ref.refuter.has_value());
    REQUIRE(ref.pairing.has_value());
    CHECK(*ref.pairing < 0);
    CHECK(top_ratio(wedge(split, *ref.refuter)) == *ref.pairing);

    // sums of generators never pair negatively
    auto gens = strong_generators(1, 2, 6, 77);
    Form eta(4);
    for (const auto& g : gens) eta += g.form;
    auto sweep = weak_positive_test(const_form(eta, 2), 50, 8);
    CHECK(sweep.verdict == ConeVerdict::Unknown);
    CHECK(*sweep.pairing >= 0);

    CHECK(weak_positive_test(const_form(Form(4), 2, 1), 10, 1).verdict == ConeVerdict::Member);

    // top degree pairs against constants, so the sign is read off directly
    Form top = wedge(two_form(2, 0, 1), two_form(2, 2, 3));
    CHECK(weak_positive_test(const_form(-top, 2), 5, 2).verdict == ConeVerdict::NonMember);
    CHECK(weak_positive_test(const_form(top, 2), 5, 2).verdict == ConeVerdict::Unknown);
}

TEST_CASE("degree-two criteria agree on a random corpus") {
    Rng rng(914);
    int refuted = 0, indefinite = 0;
    for (int rep = 0; rep < 12; ++rep) {
        bool flip = rep % 3 == 0;
        HyperhermitianMatrix a =
            rand_hherm(rng, 2, {Rational(1), Rational(flip ? -1 : rng.uniform_int(0, 2))});
        ConstForm2k eta = const_form(t_inv(a), 2);
        auto exact = is_weakly_positive_2form(eta);
        auto sweep = weak_positive_test(eta, 80, 9000 + rep);

        // refutations are sound, and members are never refuted
        if (sweep.verdict == ConeVerdict::NonMember)
            CHECK(exact.verdict == ConeVerdict::NonMember);
        if (exact.verdict == ConeVerdict::Member)
            CHECK(sweep.verdict != ConeVerdict::NonMember);
        if (exact.verdict == ConeVerdict::NonMember) {
            ++indefinite;
            refuted += sweep.verdict == ConeVerdict::NonMember;
        }
    }
    CHECK(indefinite > 0);
    // the sweep finds most indefinite instances at this budget
    CHECK(2 * refuted >= indefinite);
}

TEST_CASE("strong membership by linear programming") {
    auto gens = strong_generators(1, 2, 20, 55);
    Form eta(4);
    eta += CRational(1) * gens[0].form;
    eta += CRational(2) * gens[1].form;
    eta += CRational(3) * gens[2].form;
    auto cert = strong_positive_lp(const_form(eta, 2), 20, 55);
    REQUIRE(cert.verdict == ConeVerdict::Member);
    REQUIRE(cert.weights.size() == 20);
    Form recon(4);
    for (std::size_t g = 0; g < gens.size(); ++g) {
        CHECK(cert.weights[g] >= 0);
        recon += CRational(cert.weights[g]) * gens[g].form;
    }
    CHECK(recon == eta);
    CHECK(cert.detail.find("rational") != std::string::npos);

    // negated generator: the hull cannot contain it, the sweep refutes it
    auto unknown = strong_positive_lp(const_form(-gens[0].form, 2), 20, 55);
    CHECK(unknown.verdict == ConeVerdict::Unknown);
    CHECK(weak_positive_test(const_form(-gens[0].form, 2), 60, 3).verdict ==
          ConeVerdict::NonMember);

    CHECK(strong_positive_lp(const_form(Form(4), 2, 1), 10, 4).verdict == ConeVerdict::Member);
}

TEST_CASE("float road of the linear program") {
    auto gens = strong_generators(1, 2, 80, 56);
    Form eta(4);
    for (int g = 0; g < 10; ++g) eta += CRational(Rational(g + 1, 2)) * gens[g].form;
    auto cert = strong_positive_lp(const_form(eta, 2), 80, 56);
    REQUIRE(cert.verdict == ConeVerdict::Member);
    CHECK(cert.detail.find("float") != std::string::npos);
    Form recon(4);
    for (std::size_t g = 0; g < gens.size(); ++g) recon += CRational(cert.weights[g]) * gens[g].form;
    CHECK(recon == eta);  // weights are exact rationals despite the float solve
}

TEST_CASE("interior of the strong cone") {
    auto gens = strong_generators(1, 2, 24, 57);
    Form center(4);
    for (const auto& g : gens) center += g.form;

    Rng rng(915);
    QuaternionMatrix c = rand_qmat(rng, 2, 2);
    Form dir = t_inv(HyperhermitianMatrix::diagonal({1, -1}).congruence(c));
    // a unit-weight generator sum tolerates a small perturbation in any
    // J-real direction; delta = 1/8 stays member at this sample size
    Form off = center + CRational(Rational(1, 8)) * dir;
    CHECK(strong_positive_lp(const_form(off, 2), 24, 57).verdict == ConeVerdict::Member);
    CHECK(is_weakly_positive_2form(const_form(off, 2)).verdict == ConeVerdict::Member);
}

TEST_CASE("products of strong positives stay positive") {
    Rng rng(916);
    // complementary degrees: the product lands on the canonical half line
    auto left = strong_generators(1, 2, 8, 58);
    auto right = strong_generators(1, 2, 8, 59);
    for (const auto& a : left)
        for (const auto& b : right) CHECK(top_ratio(wedge(a.form, b.form)) >= 0);

    // middle degrees on H^3: products of sampled positives never refute
    auto g3 = strong_generators(1, 3, 4, 60);
    for (const auto& a : g3)
        for (const auto& b : g3) {
            Form prod = wedge(a.form, b.form);
            if (prod.is_zero()) continue;
            CHECK(weak_positive_test(const_form(prod, 3), 25, 11).verdict !=
                  ConeVerdict::NonMember);
        }
}
