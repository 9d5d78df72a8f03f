#pragma once

#include "qpt/matrix.hpp"
#include "qpt/quaternion.hpp"

namespace qpt {

using QuaternionMatrix = Matrix<Quaternion>;
using RationalMatrix = Matrix<Rational>;

// 4x4 real matrix of v -> q*v in the component basis (t, x, y, z).
RationalMatrix left_mult_matrix(const Quaternion& q);

// 4x4 real matrix of v -> v*q. Note right_mult_matrix(a)*right_mult_matrix(b)
// = right_mult_matrix(b*a): right actions compose contravariantly.
RationalMatrix right_mult_matrix(const Quaternion& q);

// The 4n x 4n real matrix of the left H-linear action of A on H^n, component
// ordering (t_1, x_1, y_1, z_1, ..., t_n, x_n, y_n, z_n).
// realize(A*B) = realize(A)*realize(B); hyperhermitian A realizes symmetric.
RationalMatrix realize(const QuaternionMatrix& a);

// Block-diagonal 4n x 4n matrix of the componentwise right action X -> X*q.
RationalMatrix right_action_matrix(const Quaternion& q, std::size_t n);

// H^n vector <-> R^{4n} component vector.
std::vector<Rational> to_real_vector(const std::vector<Quaternion>& v);
std::vector<Quaternion> from_real_vector(const std::vector<Rational>& v);

QuaternionMatrix conj_transpose(const QuaternionMatrix& a);

// realize() generalized over the scalar ring: each quaternion entry becomes
// its 4x4 left multiplication block in the (t, x, y, z) component basis
template <class Q>
Matrix<typename Q::scalar_type> realize_components(const Matrix<Q>& a) {
    using S = typename Q::scalar_type;
    static constexpr int idx[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static constexpr int sgn[4][4] = {{1, -1, -1, -1}, {1, 1, -1, 1}, {1, 1, 1, -1}, {1, -1, 1, 1}};
    Matrix<S> m(4 * a.rows(), 4 * a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Q& q = a(i, j);
            const S* comp[4] = {&q.t, &q.x, &q.y, &q.z};
            for (int r = 0; r < 4; ++r)
                for (int c = 0; c < 4; ++c) {
                    const S& v = *comp[idx[r][c]];
                    m(4 * i + r, 4 * j + c) = sgn[r][c] == 1 ? v : S() - v;
                }
        }
    return m;
}

}  // namespace qpt
