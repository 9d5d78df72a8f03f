#pragma once

#include "qpt/field.hpp"
#include "qpt/form.hpp"

namespace qpt {

// Scalar field expressions over the real coordinates t1 x1 y1 z1 t2 ...
// with + - * / ^, parentheses and the functions sqrt exp log pospart step.
// Integer, fraction (via division) and exact decimal literals are accepted.
Field parse_field(const std::string& text);

// Form expressions on H^n (m = 2n complex coordinates): the same scalar
// grammar extended with the symbols z1..zm, zb1..zbm, i, and the covectors
// dz1..dzm, dzb1..dzbm. '*' and '^' both wedge covector factors; '^' before
// an integer literal is a power. Coefficients may be polynomial.
Form parse_form(const std::string& text, std::size_t n);

}  // namespace qpt
