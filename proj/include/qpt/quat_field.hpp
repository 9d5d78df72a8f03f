#pragma once

#include "qpt/field.hpp"
#include "qpt/structure.hpp"

namespace qpt {

using QRPoly = BasicQuaternion<RPoly>;
using DQuaternion = BasicQuaternion<double>;

// First Dirac derivative in coordinate a of a scalar polynomial:
// f_t + i f_x + j f_y + k f_z, units on the left.
QRPoly dirac_qbar_poly(const RPoly& f, std::size_t a);

// Conjugate-direction derivative of a quaternion-valued polynomial:
// d_t g - (d_x g) i - (d_y g) j - (d_z g) k, units on the right.
QRPoly dirac_q_poly(const QRPoly& g, std::size_t a);

// Second Dirac operator. Entry (i, j) differentiates with the conjugate
// operator in coordinate i (units on the left) and the plain one in
// coordinate j (units on the right); the two applications commute on real f.
// Hyperhermitian with polynomial entries whenever f is real; reduces to the
// flat Laplacian on H^1.
Matrix<QRPoly> quat_hessian_poly(const RPoly& f);

bool is_hyperhermitian_poly(const Matrix<QRPoly>& g);

// componentwise chart rewrite into the complex picture
PolyQuatMatrix complexify(const Matrix<QRPoly>& g);

// del del_J of the chart rewrite of a real-coordinate polynomial
Form ddj_potential(const RPoly& f);

// Numeric quaternionic Hessian of a general scalar field: second derivatives
// are differentiated symbolically once, then evaluated per point.
class HessianEvaluator {
  public:
    HessianEvaluator(const Field& f, std::size_t n);

    std::size_t dim() const { return n_; }
    Matrix<DQuaternion> at(const std::vector<double>& x) const;

  private:
    std::size_t n_;
    std::vector<Field> second_;  // row-major upper triangle incl. diagonal
};

// contraction of a real 4n x 4n second-derivative matrix into the quaternion
// Hessian entries (left units from the conjugate derivative on the row)
Matrix<DQuaternion> contract_hessian(const Matrix<double>& h, std::size_t n);

// realization of a numeric quaternion matrix into 4n x 4n doubles
Matrix<double> realize_double(const Matrix<DQuaternion>& a);

// Moore determinant of a numeric hyperhermitian matrix via the cycle sum;
// tol bounds the imaginary residue tolerated before throwing.
double moore_det_numeric(const Matrix<DQuaternion>& a, double tol = 1e-8);

// mixed Moore determinant of numeric hyperhermitian matrices by
// inclusion-exclusion polarization
double mixed_det_numeric(const std::vector<Matrix<DQuaternion>>& as, double tol = 1e-8);

// Moore determinant with polynomial entries; throws when the cycle sum
// retains an imaginary component (it cannot for hyperhermitian input).
RPoly moore_det_poly(const Matrix<QRPoly>& a);

}  // namespace qpt
