#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qpt/matrix.hpp"
#include "qpt/rational.hpp"

namespace qpt {

// Exact Gaussian elimination for A x = b without sign constraints. Free
// variables are set to zero, which makes the representative deterministic in
// the column order; an inconsistent system yields nullopt.
std::optional<std::vector<Rational>> solve_linear(const Matrix<Rational>& a,
                                                  const std::vector<Rational>& b);

// Phase-1 feasibility for A x = b, x >= 0, on the artificial-variable
// tableau. The exact variant pivots by Bland's rule throughout and therefore
// terminates without cycling. The float variant pivots on the most negative
// reduced cost, then re-solves its final basis in rational arithmetic and
// re-checks the point exactly, so a feasible answer is always exact; a float
// run that fails to refine reports infeasible with a note.
struct FeasibilityResult {
    bool feasible = false;
    std::vector<Rational> x;  // exact feasible point when feasible
    std::string note;
};

FeasibilityResult feasible_point_exact(const Matrix<Rational>& a, const std::vector<Rational>& b);
FeasibilityResult feasible_point_float(const Matrix<Rational>& a, const std::vector<Rational>& b);

}  // namespace qpt
