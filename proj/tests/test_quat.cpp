#include <doctest.h>

#include "qpt/quat_matrix.hpp"
#include "qpt/rng.hpp"

using namespace qpt;

namespace {

// Independent product oracle: expand over the 4x4 basis table
// (1,i,j,k)x(1,i,j,k) instead of the closed component formula.
Quaternion mul_oracle(const Quaternion& a, const Quaternion& b) {
    // table[u][v] = (component index, sign) of e_u * e_v
    static const int idx[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sgn[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    const Rational ac[4] = {a.t, a.x, a.y, a.z};
    const Rational bc[4] = {b.t, b.x, b.y, b.z};
    Rational out[4] = {0, 0, 0, 0};
    for (int u = 0; u < 4; ++u)
        for (int v = 0; v < 4; ++v) out[idx[u][v]] += Rational(sgn[u][v]) * ac[u] * bc[v];
    return {out[0], out[1], out[2], out[3]};
}

Quaternion random_quat(Rng& rng) {
    return {rng.small_rational(), rng.small_rational(), rng.small_rational(), rng.small_rational()};
}

}  // namespace

TEST_CASE("unit relations") {
    Quaternion i = Quaternion::unit_i(), j = Quaternion::unit_j(), k = Quaternion::unit_k();
    Quaternion one(Rational(1));
    CHECK(i * i == -one);
    CHECK(j * j == -one);
    CHECK(k * k == -one);
    CHECK(i * j == k);
    CHECK(j * i == -k);
    CHECK(j * k == i);
    CHECK(k * j == -i);
    CHECK(k * i == j);
    CHECK(i * k == -j);
    // (i+j)(i-j) = -i*j + j*i + i*i - j*j ... expand via the oracle
    CHECK((i + j) * (i - j) == mul_oracle(i + j, i - j));
    CHECK((i + j) * (i - j) == Rational(-2) * k);
}

TEST_CASE("product matches basis-table oracle on random quaternions") {
    Rng rng(17);
    for (int it = 0; it < 200; ++it) {
        Quaternion a = random_quat(rng), b = random_quat(rng);
        CHECK(a * b == mul_oracle(a, b));
    }
}

TEST_CASE("conjugation is an anti-homomorphism and norm is multiplicative") {
    Rng rng(18);
    for (int it = 0; it < 100; ++it) {
        Quaternion a = random_quat(rng), b = random_quat(rng);
        CHECK((a * b).conj() == b.conj() * a.conj());
        CHECK((a * b).norm_sq() == a.norm_sq() * b.norm_sq());
        CHECK(a * a.conj() == Quaternion(a.norm_sq()));
    }
}

TEST_CASE("left multiplication matrix is an algebra homomorphism") {
    Rng rng(19);
    for (int it = 0; it < 50; ++it) {
        Quaternion a = random_quat(rng), b = random_quat(rng);
        CHECK(left_mult_matrix(a) * left_mult_matrix(b) == left_mult_matrix(a * b));
        // and it acts as left multiplication on components
        std::vector<Rational> vb = to_real_vector({b});
        CHECK(from_real_vector(left_mult_matrix(a) * vb)[0] == a * b);
    }
}

TEST_CASE("right multiplication matrices compose contravariantly") {
    Rng rng(20);
    Quaternion i = Quaternion::unit_i(), j = Quaternion::unit_j(), k = Quaternion::unit_k();
    // pinned composition order: R(j) * R(i) = R(i*j) = R(k)
    CHECK(right_mult_matrix(j) * right_mult_matrix(i) == right_mult_matrix(k));
    CHECK(right_mult_matrix(i) * right_mult_matrix(j) == right_mult_matrix(j * i));
    for (int it = 0; it < 50; ++it) {
        Quaternion a = random_quat(rng), b = random_quat(rng), v = random_quat(rng);
        CHECK(right_mult_matrix(a) * right_mult_matrix(b) == right_mult_matrix(b * a));
        CHECK(from_real_vector(right_mult_matrix(a) * to_real_vector({v}))[0] == v * a);
    }
}

TEST_CASE("realization is a homomorphism on random 2x2 products") {
    Rng rng(21);
    for (int it = 0; it < 30; ++it) {
        QuaternionMatrix a(2, 2), b(2, 2);
        for (std::size_t r = 0; r < 2; ++r)
            for (std::size_t c = 0; c < 2; ++c) {
                a(r, c) = random_quat(rng);
                b(r, c) = random_quat(rng);
            }
        CHECK(realize(a) * realize(b) == realize(a * b));
    }
}

TEST_CASE("right action squares to minus identity for the unit structures") {
    for (auto q : {Quaternion::unit_i(), Quaternion::unit_j(), Quaternion::unit_k()}) {
        RationalMatrix m = right_action_matrix(q, 2);
        RationalMatrix sq = m * m;
        CHECK(sq == Rational(-1) * RationalMatrix::identity(8));
    }
}

TEST_CASE("hyperhermitian matrices realize symmetrically") {
    Rng rng(22);
    QuaternionMatrix a(2, 2);
    a(0, 0) = Quaternion(rng.small_rational());
    a(1, 1) = Quaternion(rng.small_rational());
    a(0, 1) = random_quat(rng);
    a(1, 0) = a(0, 1).conj();
    RationalMatrix r = realize(a);
    CHECK(r == r.transposed());
}
