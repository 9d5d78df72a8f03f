#include <doctest.h>

#include "qpt/hherm.hpp"
#include "qpt/rng.hpp"

using namespace qpt;

namespace {

Quaternion random_quat(Rng& rng) {
    return {rng.small_rational(), rng.small_rational(), rng.small_rational(), rng.small_rational()};
}

HyperhermitianMatrix random_hherm(Rng& rng, std::size_t n) {
    QuaternionMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = Quaternion(rng.small_rational());
        for (std::size_t j = i + 1; j < n; ++j) {
            m(i, j) = random_quat(rng);
            m(j, i) = m(i, j).conj();
        }
    }
    return HyperhermitianMatrix(std::move(m));
}

QuaternionMatrix random_square(Rng& rng, std::size_t n) {
    QuaternionMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = random_quat(rng);
    return m;
}

// Independent polarization oracle for the mixed determinant: expand the Moore
// cycle sum with every assignment of the n argument slots to the n matrices.
Rational mixed_det_slot_oracle(const std::vector<HyperhermitianMatrix>& as) {
    std::size_t n = as.size();
    std::vector<std::size_t> perm(n), assign(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    Quaternion total;
    do {
        std::vector<std::vector<std::size_t>> cycles;
        std::vector<bool> visited(n, false);
        for (std::size_t s = 0; s < n; ++s) {
            if (visited[s]) continue;
            std::vector<std::size_t> cyc;
            std::size_t c = s;
            do {
                visited[c] = true;
                cyc.push_back(c);
                c = perm[c];
            } while (c != s);
            cycles.push_back(std::move(cyc));
        }
        // factor positions in Moore order
        std::vector<std::pair<std::size_t, std::size_t>> factors;
        for (auto it = cycles.rbegin(); it != cycles.rend(); ++it)
            for (std::size_t p = 0; p < it->size(); ++p)
                factors.emplace_back((*it)[p], (*it)[(p + 1) % it->size()]);
        int sign = (n - cycles.size()) % 2 ? -1 : 1;
        for (std::size_t i = 0; i < n; ++i) assign[i] = i;
        do {  // each slot takes its entry from a distinct matrix
            Quaternion term{Rational(1)};
            for (std::size_t f = 0; f < n; ++f)
                term = term * as[assign[f]](factors[f].first, factors[f].second);
            total += Rational(sign) * term;
        } while (std::next_permutation(assign.begin(), assign.end()));
    } while (std::next_permutation(perm.begin(), perm.end()));
    REQUIRE(total.is_real());
    Rational fact = 1;
    for (std::size_t i = 2; i <= n; ++i) fact *= Rational(i);
    return total.t / fact;
}

}  // namespace

TEST_CASE("moore determinant basics") {
    CHECK(moore_det(HyperhermitianMatrix::diagonal({Rational(1), Rational(1), Rational(1)})) == 1);
    CHECK(moore_det(HyperhermitianMatrix::diagonal({Rational(2), Rational(-3), Rational(5, 2)})) ==
          Rational(-15));
    // 2x2 formula: det [[a, q], [conj q, b]] = ab - q conj(q)
    Rng rng(31);
    for (int it = 0; it < 50; ++it) {
        Rational a = rng.small_rational(), b = rng.small_rational();
        Quaternion q = random_quat(rng);
        QuaternionMatrix m(2, 2);
        m(0, 0) = Quaternion(a);
        m(1, 1) = Quaternion(b);
        m(0, 1) = q;
        m(1, 0) = q.conj();
        CHECK(moore_det(HyperhermitianMatrix(m)) == a * b - q.norm_sq());
    }
}

TEST_CASE("moore determinant agrees with the realization route") {
    Rng rng(32);
    for (std::size_t n = 1; n <= 4; ++n)
        for (int it = 0; it < 12; ++it) {
            HyperhermitianMatrix a = random_hherm(rng, n);
            Rational m = moore_det(a);
            CHECK(moore_det_via_realization(a) == m);
            // 4th power identity without root extraction
            CHECK(determinant(realize(a.entries())) == m * m * m * m);
        }
}

TEST_CASE("realization route recovers negative signs") {
    CHECK(moore_det_via_realization(HyperhermitianMatrix::diagonal({Rational(-1), Rational(2)})) ==
          Rational(-2));
    CHECK(moore_det_via_realization(HyperhermitianMatrix::diagonal({Rational(-1), Rational(-2)})) ==
          Rational(2));
}

TEST_CASE("congruence transformation rule") {
    Rng rng(33);
    for (std::size_t n = 1; n <= 3; ++n)
        for (int it = 0; it < 15; ++it) {
            HyperhermitianMatrix a = random_hherm(rng, n);
            QuaternionMatrix c = random_square(rng, n);
            QuaternionMatrix cc = conj_transpose(c) * c;
            CHECK(moore_det(a.congruence(c)) ==
                  moore_det(a) * moore_det(HyperhermitianMatrix(cc)));
        }
}

TEST_CASE("complex hermitian matrices embed with the ordinary determinant") {
    // complex numbers a+bi sit inside H; Moore det = usual hermitian det
    Rng rng(34);
    for (std::size_t n = 1; n <= 3; ++n)
        for (int it = 0; it < 15; ++it) {
            QuaternionMatrix m(n, n);
            Matrix<CRational> c(n, n);
            for (std::size_t i = 0; i < n; ++i) {
                Rational d = rng.small_rational();
                m(i, i) = Quaternion(d);
                c(i, i) = CRational(d);
                for (std::size_t j = i + 1; j < n; ++j) {
                    Rational re = rng.small_rational(), im = rng.small_rational();
                    m(i, j) = Quaternion(re, im, Rational(0), Rational(0));
                    m(j, i) = m(i, j).conj();
                    c(i, j) = CRational(re, im);
                    c(j, i) = c(i, j).conj();
                }
            }
            CRational cd = determinant(c);
            REQUIRE(cd.is_real());
            CHECK(moore_det(HyperhermitianMatrix(m)) == cd.re);
        }
}

TEST_CASE("cycle sum of hyperhermitian matrices is componentwise real") {
    Rng rng(35);
    for (int it = 0; it < 10; ++it) {
        HyperhermitianMatrix a = random_hherm(rng, 3);
        Quaternion s = moore_cycle_sum(a.entries());
        CHECK(s.x == 0);
        CHECK(s.y == 0);
        CHECK(s.z == 0);
    }
}

TEST_CASE("mixed determinant") {
    SUBCASE("all slots equal reduces to moore_det") {
        Rng rng(36);
        for (std::size_t n = 1; n <= 3; ++n) {
            HyperhermitianMatrix y = random_hherm(rng, n);
            std::vector<HyperhermitianMatrix> as(n, y);
            CHECK(mixed_det(as) == moore_det(y));
        }
    }
    SUBCASE("matrix units give 1/n!") {
        for (std::size_t n = 1; n <= 4; ++n) {
            std::vector<HyperhermitianMatrix> as;
            Rational fact = 1;
            for (std::size_t i = 0; i < n; ++i) {
                std::vector<Rational> d(n, Rational(0));
                d[i] = 1;
                as.push_back(HyperhermitianMatrix::diagonal(d));
                fact *= Rational(i + 1);
            }
            CHECK(mixed_det(as) == Rational(1) / fact);
        }
    }
    SUBCASE("vanishes when one argument is zero") {
        Rng rng(37);
        std::vector<HyperhermitianMatrix> as{random_hherm(rng, 2), HyperhermitianMatrix::zero(2)};
        CHECK(mixed_det(as) == 0);
    }
    SUBCASE("symmetric in its arguments and matches the slot-expansion oracle") {
        Rng rng(38);
        for (int it = 0; it < 8; ++it) {
            std::vector<HyperhermitianMatrix> as{random_hherm(rng, 3), random_hherm(rng, 3),
                                                 random_hherm(rng, 3)};
            Rational v = mixed_det(as);
            CHECK(v == mixed_det_slot_oracle(as));
            std::swap(as[0], as[2]);
            CHECK(mixed_det(as) == v);
        }
    }
    SUBCASE("multilinearity in the first slot") {
        Rng rng(39);
        HyperhermitianMatrix a = random_hherm(rng, 2), b = random_hherm(rng, 2),
                             c = random_hherm(rng, 2);
        Rational s(3, 2);
        CHECK(mixed_det({a + s * b, c}) == mixed_det({a, c}) + s * mixed_det({b, c}));
    }
}

TEST_CASE("capacity guard") {
    CHECK_THROWS_AS(moore_det(HyperhermitianMatrix::zero(9)), CapacityError);
}

TEST_CASE("positivity certificates") {
    SUBCASE("identity is positive definite") {
        auto cert = positivity(HyperhermitianMatrix::diagonal({Rational(1), Rational(1)}));
        CHECK(cert.verdict == Definiteness::PositiveDefinite);
    }
    SUBCASE("diag(1,-1) is indefinite with a valid witness") {
        HyperhermitianMatrix a = HyperhermitianMatrix::diagonal({Rational(1), Rational(-1)});
        auto cert = positivity(a);
        CHECK(cert.verdict == Definiteness::Indefinite);
        REQUIRE(cert.witness.has_value());
        Rational val = quadratic_form(a, *cert.witness);
        CHECK(val < 0);
        CHECK(val == *cert.witness_value);
        // the negative direction lives in the second coordinate
        CHECK((*cert.witness)[0].is_zero());
        CHECK(!(*cert.witness)[1].is_zero());
    }
    SUBCASE("[[1, j], [-j, 1]] is positive semidefinite with zero Moore det") {
        QuaternionMatrix m(2, 2);
        m(0, 0) = Quaternion(Rational(1));
        m(1, 1) = Quaternion(Rational(1));
        m(0, 1) = Quaternion::unit_j();
        m(1, 0) = -Quaternion::unit_j();
        HyperhermitianMatrix a(m);
        CHECK(moore_det(a) == 0);
        auto cert = positivity(a);
        CHECK(cert.verdict == Definiteness::PositiveSemidefinite);
        CHECK(cert.positive == 1);
        CHECK(cert.zero == 1);
        // float route: realization eigenvalues are {0 x4, 2 x4}
        CHECK(moore_det_float(a) == doctest::Approx(0.0).epsilon(1e-12));
    }
    SUBCASE("congruences C^* A C of definite A stay semidefinite") {
        Rng rng(40);
        for (int it = 0; it < 20; ++it) {
            QuaternionMatrix c = random_square(rng, 3);
            auto cert = positivity(
                HyperhermitianMatrix::diagonal({Rational(1), Rational(1), Rational(1)})
                    .congruence(c));
            CHECK(cert.verdict != Definiteness::Indefinite);
        }
    }
}

TEST_CASE("float moore determinant tracks the exact value") {
    Rng rng(41);
    for (int it = 0; it < 10; ++it) {
        HyperhermitianMatrix a = random_hherm(rng, 3);
        double exact = to_double(moore_det(a));
        CHECK(moore_det_float(a, 1e-7) == doctest::Approx(exact).epsilon(1e-7));
    }
}

TEST_CASE("psd decomposition reconstructs the matrix") {
    Rng rng(42);
    int done = 0;
    for (int it = 0; it < 60 && done < 15; ++it) {
        QuaternionMatrix c = random_square(rng, 3);
        HyperhermitianMatrix a(conj_transpose(c) * c);  // PSD by construction
        auto terms = psd_decompose(a);
        REQUIRE(terms.has_value());
        QuaternionMatrix sum(3, 3);
        for (const auto& t : *terms) {
            CHECK(t.weight > 0);
            for (std::size_t r = 0; r < 3; ++r)
                for (std::size_t cidx = 0; cidx < 3; ++cidx)
                    sum(r, cidx) += t.weight * (t.vec[r] * t.vec[cidx].conj());
        }
        CHECK(sum == a.entries());
        ++done;
    }
    CHECK(done == 15);
    // not PSD: no decomposition
    CHECK(!psd_decompose(HyperhermitianMatrix::diagonal({Rational(1), Rational(-1)})).has_value());
}

TEST_CASE("hyperhermitian validation rejects bad input") {
    QuaternionMatrix m(2, 2);
    m(0, 0) = Quaternion::unit_i();  // imaginary diagonal
    CHECK_THROWS_AS(HyperhermitianMatrix{m}, std::invalid_argument);
}
