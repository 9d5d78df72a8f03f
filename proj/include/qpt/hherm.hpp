#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "qpt/inertia.hpp"
#include "qpt/quat_matrix.hpp"

namespace qpt {

struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct AmbiguityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// n x n quaternionic matrix with a_ij = conj(a_ji) and real diagonal,
// validated on construction.
class HyperhermitianMatrix {
  public:
    explicit HyperhermitianMatrix(QuaternionMatrix entries);

    // builds C^* A C style products and sums without revalidating by hand
    static HyperhermitianMatrix diagonal(const std::vector<Rational>& d);
    static HyperhermitianMatrix zero(std::size_t n);

    std::size_t size() const { return m_.rows(); }
    const Quaternion& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
    const QuaternionMatrix& entries() const { return m_; }

    friend HyperhermitianMatrix operator+(const HyperhermitianMatrix& a,
                                          const HyperhermitianMatrix& b);
    friend HyperhermitianMatrix operator*(const Rational& s, const HyperhermitianMatrix& a);

    // congruence C^* A C, hyperhermitian for any quaternionic C
    HyperhermitianMatrix congruence(const QuaternionMatrix& c) const;

  private:
    QuaternionMatrix m_;
};

bool is_hyperhermitian(const QuaternionMatrix& m);

// Moore determinant via the cycle-ordered permutation expansion: each cycle is
// written with its smallest element first, cycles multiplied in order of
// decreasing leading element. The full quaternion sum is real for
// hyperhermitian input; the generic version returns it uncollapsed so the
// same expansion serves polynomial-entry matrices.
template <class Q>
Q moore_cycle_sum(const Matrix<Q>& a);

// Exact Moore determinant; throws CapacityError for n > 8 and
// std::logic_error if the cycle sum fails to be real.
Rational moore_det(const HyperhermitianMatrix& a);

// Independent route: |det| = det(realize(A))^{1/4}, sign recovered from the
// exact inertia of the symmetric realization (negative eigenvalue count is a
// multiple of 4; sign = (-1)^(neg/4)).
Rational moore_det_via_realization(const HyperhermitianMatrix& a);

// Float route: eigenvalues of the realization grouped into n quadruples;
// throws AmbiguityError when the grouping is not clean at tolerance tol.
double moore_det_float(const HyperhermitianMatrix& a, double tol = 1e-9);

// Mixed Moore determinant by inclusion-exclusion polarization:
// (1/n!) * sum_{S nonempty} (-1)^(n-|S|) P(sum_{i in S} A_i).
Rational mixed_det(const std::vector<HyperhermitianMatrix>& as);

enum class Definiteness { PositiveDefinite, PositiveSemidefinite, Indefinite };

struct PositivityCertificate {
    Definiteness verdict;
    std::size_t positive = 0, negative = 0, zero = 0;  // quaternionic counts
    // for Indefinite: xi with xi^* A xi < 0, and the attained value
    std::optional<std::vector<Quaternion>> witness;
    std::optional<Rational> witness_value;
};

// Exact verdict determined by the inertia of realize(A); all real eigenvalue
// multiplicities are multiples of 4 and are reported divided by 4.
PositivityCertificate positivity(const HyperhermitianMatrix& a);

// A = sum_i d_i w_i w_i^* with d_i > 0 rational and rational quaternion
// vectors w_i; empty optional when A is not positive semidefinite.
struct RankOneTerm {
    Rational weight;
    std::vector<Quaternion> vec;
};
std::optional<std::vector<RankOneTerm>> psd_decompose(const HyperhermitianMatrix& a);

// xi^* A xi as an exact real number (the hyperhermitian quadratic form).
Rational quadratic_form(const HyperhermitianMatrix& a, const std::vector<Quaternion>& xi);

template <class Q>
Q moore_cycle_sum(const Matrix<Q>& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("moore_cycle_sum: square matrix required");
    const std::size_t n = a.rows();
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;

    Q total{};
    std::vector<bool> visited(n);
    std::vector<std::vector<std::size_t>> cycles;
    do {
        visited.assign(n, false);
        cycles.clear();
        for (std::size_t s = 0; s < n; ++s) {
            if (visited[s]) continue;
            // s is the smallest element of its cycle because we scan upward
            std::vector<std::size_t> cyc;
            std::size_t c = s;
            do {
                visited[c] = true;
                cyc.push_back(c);
                c = perm[c];
            } while (c != s);
            cycles.push_back(std::move(cyc));
        }
        // cycles currently ordered by increasing leading element; the Moore
        // ordering multiplies them by decreasing leading element
        Q term{};
        bool first = true;
        for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
            const auto& cyc = *it;
            for (std::size_t p = 0; p < cyc.size(); ++p) {
                const Q& factor = a(cyc[p], cyc[(p + 1) % cyc.size()]);
                term = first ? factor : term * factor;
                first = false;
            }
        }
        if ((n - cycles.size()) % 2 == 1)
            total -= term;
        else
            total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

}  // namespace qpt
