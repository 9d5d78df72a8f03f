#pragma once

#include "qpt/matrix.hpp"
#include "qpt/rational.hpp"

namespace qpt {

// Inertia of a symmetric rational matrix computed by exact congruence
// diagonalization (Lagrange reduction with the hyperbolic-pair repair for
// zero diagonals). basis satisfies basis^T * M * basis = diag(diag), so
// column k is an explicit witness vector for the sign of diag[k].
struct Inertia {
    std::size_t pos = 0, neg = 0, zero = 0;
    std::vector<Rational> diag;
    Matrix<Rational> basis;
};

Inertia symmetric_inertia(const Matrix<Rational>& m);

}  // namespace qpt
