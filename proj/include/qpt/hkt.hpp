#pragma once

#include <optional>

#include "qpt/psh.hpp"
#include "qpt/quat_field.hpp"

namespace qpt {

// Riemannian metric candidate on the flat chart: symmetric 4n x 4n matrix of
// real-coordinate polynomials. Symmetry is exact and validated where metrics
// are built; positive definiteness is only ever certified at sample points.
struct MetricField {
    Matrix<RPoly> g;
    std::size_t n = 0;
};

struct NotStrictlyPsh : std::runtime_error {
    std::vector<double> witness;
    NotStrictlyPsh(const std::string& msg, std::vector<double> w)
        : std::runtime_error(msg), witness(std::move(w)) {}
};

struct NotClosed : std::runtime_error {
    Form residual;
    NotClosed(const std::string& msg, Form r) : std::runtime_error(msg), residual(std::move(r)) {}
};

struct DegreeBoundTooSmall : std::runtime_error {
    int needed;
    DegreeBoundTooSmall(const std::string& msg, int d) : std::runtime_error(msg), needed(d) {}
};

// Metric of a potential: one quarter of the realized second Dirac matrix,
// which is the bilinear form paired to the mixed-derivative (2,0)-form of f.
// The potential must be strictly psh on the sample box; failures carry the
// witness point.
MetricField metric_from_potential(const RPoly& f, std::size_t n, const Grid& box);

// g(. , . * L) assembled for L in {j, k} and combined into the fundamental
// (2,0)-form; the overall sign is pinned so the Euclidean metric on H^1 gives
// exactly dz_1 ^ dz_2, matching the matrix correspondence normalization.
// Inputs whose combination is not a J-real (2,0)-form are rejected.
Form omega_from_metric(const MetricField& g);

struct HermitianWitness {
    Structure l = Structure::I;
    std::size_t a = 0, b = 0;  // real coordinate basis pair
    std::vector<double> point;
    double defect = 0.0;  // g(aL, bL) - g(a, b)
};

struct HermitianReport {
    bool hermitian = true;
    std::optional<HermitianWitness> witness;
};

// invariance of g under the right action of the unit quaternions, checked on
// basis pairs at the sample points; the generators i, j, k suffice
HermitianReport is_quaternionic_hermitian(const MetricField& g, const Grid& samples);

struct HktCheck {
    bool hkt = false;
    Form omega;     // the assembled fundamental form
    Form residual;  // its holomorphic differential, zero exactly when hkt
};

// symbolic test: the metric is HKT when del(omega) vanishes identically
HktCheck is_hkt(const MetricField& g);

// Inverse problem: a real polynomial f with del del_J of its chart rewrite
// equal to omega, solved degree by homogeneous degree as an exact linear
// system and verified by substitution. Throws NotClosed when del(omega) is
// nonzero and DegreeBoundTooSmall when a homogeneous slice needs a potential
// degree beyond the bound. The returned solution is the deterministic
// elimination representative of the smallest admissible degree.
RPoly solve_potential(const Form& omega, std::size_t n, int degree_bound);

}  // namespace qpt
