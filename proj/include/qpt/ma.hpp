#pragma once

#include <functional>

#include "qpt/psh.hpp"

namespace qpt {

// Pointwise Moore determinant of the second Dirac matrix over a grid. The
// symbolic route differentiates the potential twice exactly and evaluates;
// the finite-difference flag marks densities from gridded samples instead.
struct MADensitySample {
    Grid grid;
    std::vector<double> values;
    bool finite_difference = false;
};

MADensitySample ma_density(const Field& u, std::size_t n, const Grid& g);

// density from gridded samples by second central differences; boundary nodes
// have no full stencil and report zero
MADensitySample fd_ma_density(const GriddedField& samples, std::size_t n);

// mixed Moore determinant of the Hessians of several potentials; symmetric
// in its arguments and equal to ma_density when they all coincide
MADensitySample mixed_ma_density(const std::vector<Field>& us, std::size_t n, const Grid& g);

// Exact cross-check for polynomial potentials: the coefficient of
// dz_1^...^dz_2n in the n-th wedge power of the mixed-derivative form
// against n!/4^n times the Moore determinant of the quaternionic Hessian.
// The two polynomials agree identically.
struct DensityRoutes {
    CPoly form_route;
    CPoly hessian_route;
};
DensityRoutes ma_density_routes(const RPoly& f, std::size_t n);

// L1 mass of the mixed density over an inner box against the product of the
// potentials' sup norms over a strictly larger box; evidence toward the
// compact-subset mass bound, not a proof of its constant.
struct MassReport {
    double mass = 0.0;
    double sup_product = 0.0;
    double ratio = 0.0;
    bool finite_difference = false;
};

MassReport cln_mass(const std::vector<Field>& us, std::size_t n, const Grid& inner,
                    const Grid& outer);

// the same report for one mollified potential (all n slots equal), with
// finite-difference Hessians of the smoothed samples
MassReport cln_mass_mollified(const Field& u, std::size_t n, const Grid& inner, const Grid& outer,
                              double eps);

struct PairingRecord {
    double eps = 0.0;
    double pairing = 0.0;
    double error_estimate = 0.0;  // from re-running on the doubled lattice spacing
};

struct WeakLimitReport {
    std::vector<PairingRecord> records;  // eps decreasing by halves
    double extrapolated = 0.0;
    double rate = 0.0;  // fitted convergence order in eps
};

// Pairings of det D2 of the mollified potential against a smooth test
// function over the schedule eps0 * 2^-k, with Richardson extrapolation.
// The test function must vanish on the boundary layer of the grid.
WeakLimitReport weak_convergence_experiment(const Field& u, const Field& phi, std::size_t n,
                                            const Grid& g, double eps0, int levels);

// total mass over the Euclidean ball of the given radius, using a one-cell
// smoothed indicator as the weight
WeakLimitReport ball_mass_experiment(const Field& u, std::size_t n, const Grid& g, double radius,
                                     double eps0, int levels);

}  // namespace qpt
