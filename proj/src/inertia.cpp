#include "qpt/inertia.hpp"

namespace qpt {

namespace {

// column operation C_j += f * C_i as a congruence on m (rows and columns)
void congruence_axpy(Matrix<Rational>& m, Matrix<Rational>& basis, std::size_t j, std::size_t i,
                     const Rational& f) {
    std::size_t n = m.rows();
    for (std::size_t c = 0; c < n; ++c) m(j, c) += f * m(i, c);
    for (std::size_t r = 0; r < n; ++r) m(r, j) += f * m(r, i);
    for (std::size_t r = 0; r < n; ++r) basis(r, j) += f * basis(r, i);
}

void congruence_swap(Matrix<Rational>& m, Matrix<Rational>& basis, std::size_t a, std::size_t b) {
    if (a == b) return;
    std::size_t n = m.rows();
    for (std::size_t c = 0; c < n; ++c) std::swap(m(a, c), m(b, c));
    for (std::size_t r = 0; r < n; ++r) std::swap(m(r, a), m(r, b));
    for (std::size_t r = 0; r < n; ++r) std::swap(basis(r, a), basis(r, b));
}

}  // namespace

Inertia symmetric_inertia(const Matrix<Rational>& input) {
    if (input.rows() != input.cols()) throw std::invalid_argument("inertia needs a square matrix");
    std::size_t n = input.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (input(i, j) != input(j, i)) throw std::invalid_argument("matrix not symmetric");

    Matrix<Rational> m = input;
    Inertia out;
    out.basis = Matrix<Rational>::identity(n);

    std::size_t k = 0;
    while (k < n) {
        std::size_t piv = n;
        for (std::size_t i = k; i < n; ++i)
            if (m(i, i) != 0) {
                piv = i;
                break;
            }
        if (piv == n) {
            // all remaining diagonal entries vanish; seek an off-diagonal one
            std::size_t oi = n, oj = n;
            for (std::size_t i = k; i < n && oi == n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (m(i, j) != 0) {
                        oi = i;
                        oj = j;
                        break;
                    }
            if (oi == n) break;  // trailing block is zero
            // C_oi += C_oj turns the (oi,oi) entry into 2*m(oi,oj) != 0
            congruence_axpy(m, out.basis, oi, oj, Rational(1));
            continue;
        }
        congruence_swap(m, out.basis, piv, k);
        for (std::size_t j = k + 1; j < n; ++j) {
            if (m(k, j) == 0) continue;
            congruence_axpy(m, out.basis, j, k, -m(k, j) / m(k, k));
        }
        ++k;
    }

    out.diag.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.diag[i] = m(i, i);
        int s = sign_of(m(i, i));
        if (s > 0)
            ++out.pos;
        else if (s < 0)
            ++out.neg;
        else
            ++out.zero;
    }
    return out;
}

}  // namespace qpt
