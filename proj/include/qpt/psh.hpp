#pragma once

#include <array>

#include "qpt/grid.hpp"
#include "qpt/quat_field.hpp"

namespace qpt {

// Verdicts are sample-relative: the positive outcomes certify the property on
// the points (or lines) actually examined, never universally. A negative
// outcome always carries a concrete witness. On flat space the three
// characterizations (nonnegative second Dirac matrix, sub-mean-value on right
// quaternionic lines, distributional positivity after mollification) agree
// for continuous functions, which the test batteries exercise; whether the
// continuous and generalized-section definitions coincide on general
// hypercomplex manifolds is open and not examined here.
enum class PshStatus { StrictlyPsh, Psh, NotPsh, Inconclusive };

struct PshVerdict {
    PshStatus status = PshStatus::Inconclusive;
    double worst = 0.0;                 // smallest Hessian eigenvalue or line slack seen
    std::vector<double> witness_point;  // sample attaining it
    std::string detail;
};

// C2 criterion: smallest eigenvalue of the realized second Dirac matrix over
// the samples. NotPsh below -tol, StrictlyPsh when everywhere >= margin.
PshVerdict is_psh_c2(const Field& f, std::size_t n, const std::vector<std::vector<double>>& samples,
                     double margin = 1e-8, double tol = 1e-9);
PshVerdict is_psh_c2(const Field& f, std::size_t n, const Grid& g, double margin = 1e-8,
                     double tol = 1e-9);

// exact variant for polynomial potentials at rational points
PshVerdict is_psh_c2_exact(const RPoly& f, const std::vector<std::vector<Rational>>& samples);

// The map q -> base + dir * q with a right quaternionic parameter q.
struct QuaternionicLine {
    std::vector<DQuaternion> base, dir;

    std::size_t n() const { return base.size(); }
    std::vector<double> at(const DQuaternion& q) const;  // real coordinates of base + dir*q
};

struct LineSample {
    double radius = 0.0;
    double mean = 0.0;        // sphere average of u along the line
    double slack = 0.0;       // mean - center value
    double quad_error = 0.0;  // estimate from comparing two quadrature orders
};

struct LineTestReport {
    PshStatus status = PshStatus::Inconclusive;
    double center = 0.0;
    std::vector<LineSample> samples;
    std::string detail;
};

// product quadrature on the unit 3-sphere; weights sum to 2*pi^2
struct S3Node {
    std::array<double, 4> s;
    double w;
};
std::vector<S3Node> s3_quadrature(int order);

// Sub-mean-value test of u along one line: for each radius, compares u at the
// line's base point with the sphere average of u over |q| = radius in the
// line parameter. Violations beyond tol plus the quadrature estimate give
// NotPsh with the offending radius recorded.
LineTestReport line_subharmonic_test(const Field& u, const QuaternionicLine& line,
                                     const std::vector<double>& radii, int order = 16,
                                     double tol = 1e-9);

// deterministic batch of lines: base points in the centered cube of the given
// half-width, directions uniform on the unit sphere of H^n
std::vector<QuaternionicLine> sample_lines(std::size_t n, std::size_t count, std::uint64_t seed,
                                           double base_halfwidth = 0.5);

// (f^p + g^p)^(1/p); pointwise max of f and g as p grows. Requires f, g > 0
// where evaluated (the log route raises EvalError otherwise).
Field pnorm_max(const Field& f, const Field& g, int p);

struct Mollified {
    GriddedField field;        // smoothed samples on the requested grid
    double sup_distance = 0;   // max |smoothed - original| over the grid
    double kernel_mass = 1.0;  // discrete kernel mass after normalization
};

// Discrete convolution with a separable C-infinity bump of per-axis
// half-width eps/2 (support inside the Euclidean eps-ball for d = 4). The
// kernel is normalized to unit discrete mass, so constants are reproduced
// exactly and linear functions by symmetry. Samples the field on the
// kernel-radius enlargement of the grid.
Mollified mollify(const Field& u, double eps, const Grid& g);

}  // namespace qpt
