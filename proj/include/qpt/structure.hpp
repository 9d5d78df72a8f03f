#pragma once

#include "qpt/form.hpp"
#include "qpt/hherm.hpp"

namespace qpt {

// The three complex structures of the hypercomplex package on H^n, acting on
// covectors fiberwise through the right action of the unit quaternions:
// (c . alpha)(X) = alpha(X c), extended multiplicatively over wedge words
// with coefficients untouched. On the covector letters (pair a, odd complex
// slot h = 2a+1, even slot l = 2a+2, 1-indexed):
//   I: dz_k -> i dz_k, dzb_k -> -i dzb_k
//   J: dz_h -> -dzb_l, dz_l -> dzb_h, dzb_h -> -dz_l, dzb_l -> dz_h
//   K: dz_h -> i dzb_l, dz_l -> -i dzb_h, dzb_h -> -i dz_l, dzb_l -> i dz_h
// so that K = I after J and J(J(alpha)) = -alpha on covectors.
enum class Structure { I, J, K };

Form apply_structure(Structure s, const Form& f);

// action of the inverse element: (-1)^degree times the action, per word
Form apply_structure_inverse(Structure s, const Form& f);

// twisted differential d_c = c^{-1} after d after c
Form twisted_d(Structure s, const Form& f);

// del_J = J^{-1} after delbar after J; on functions this reads
//   del_J f = sum_a (df/dzb_h) dz_l - (df/dzb_l) dz_h
Form del_J(const Form& f);

// the reality notion compatible with J: J(conj(f)) == f
bool is_j_real(const Form& f);

// Correspondence between J-real (2,0)-forms and hyperhermitian matrices.
// The matrix is recovered from the quadratic form X -> omega(X, X j) by
// polarization; t_map_field keeps polynomial entries, t_map requires constant
// coefficients. Normalized so that sum_a dz_{2a-1} ^ dz_{2a} maps to the
// identity.
using PolyQuaternion = BasicQuaternion<CPoly>;
using PolyQuatMatrix = Matrix<PolyQuaternion>;

PolyQuatMatrix t_map_field(const Form& omega);
HyperhermitianMatrix t_map(const Form& omega);

Form t_inv_field(const PolyQuatMatrix& g);
Form t_inv(const HyperhermitianMatrix& g);

// checks a_ij = conj(a_ji) with real-valued diagonal, entrywise on polynomials
bool is_hyperhermitian_field(const PolyQuatMatrix& g);

// constant-coefficient forms and matrices
bool is_constant_form(const Form& f);
PolyQuatMatrix lift_matrix(const HyperhermitianMatrix& a);

}  // namespace qpt
