#include "qpt/hherm.hpp"

#include <Eigen/Dense>
#include <algorithm>

namespace qpt {

bool is_hyperhermitian(const QuaternionMatrix& m) {
    if (m.rows() != m.cols()) return false;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (!m(i, i).is_real()) return false;
        for (std::size_t j = i + 1; j < m.cols(); ++j)
            if (m(i, j) != m(j, i).conj()) return false;
    }
    return true;
}

HyperhermitianMatrix::HyperhermitianMatrix(QuaternionMatrix entries) : m_(std::move(entries)) {
    if (!is_hyperhermitian(m_))
        throw std::invalid_argument("matrix is not hyperhermitian (a_ij = conj(a_ji), real diagonal)");
}

HyperhermitianMatrix HyperhermitianMatrix::diagonal(const std::vector<Rational>& d) {
    QuaternionMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = Quaternion(d[i]);
    return HyperhermitianMatrix(std::move(m));
}

HyperhermitianMatrix HyperhermitianMatrix::zero(std::size_t n) {
    return HyperhermitianMatrix(QuaternionMatrix(n, n));
}

HyperhermitianMatrix operator+(const HyperhermitianMatrix& a, const HyperhermitianMatrix& b) {
    return HyperhermitianMatrix(a.m_ + b.m_);
}

HyperhermitianMatrix operator*(const Rational& s, const HyperhermitianMatrix& a) {
    QuaternionMatrix m = a.m_;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = s * m(i, j);
    return HyperhermitianMatrix(std::move(m));
}

HyperhermitianMatrix HyperhermitianMatrix::congruence(const QuaternionMatrix& c) const {
    return HyperhermitianMatrix(conj_transpose(c) * m_ * c);
}

static constexpr std::size_t kMooreCapacity = 8;

Rational moore_det(const HyperhermitianMatrix& a) {
    if (a.size() > kMooreCapacity)
        throw CapacityError("moore_det: factorial expansion capped at n = 8");
    Quaternion s = moore_cycle_sum(a.entries());
    if (!s.is_real())
        throw std::logic_error("moore_det: cycle sum of a hyperhermitian matrix must be real");
    return s.t;
}

Rational moore_det_via_realization(const HyperhermitianMatrix& a) {
    RationalMatrix r = realize(a.entries());
    Rational d = determinant(r);
    if (d == 0) return Rational(0);
    auto root = exact_root(d, 4);
    if (!root)
        throw std::logic_error("moore_det_via_realization: det of the realization is not a 4th power");
    Inertia in = symmetric_inertia(r);
    if (in.neg % 4 != 0)
        throw std::logic_error("moore_det_via_realization: negative eigenvalue count not a multiple of 4");
    return (in.neg / 4) % 2 == 1 ? -*root : *root;
}

double moore_det_float(const HyperhermitianMatrix& a, double tol) {
    RationalMatrix r = realize(a.entries());
    std::size_t m = r.rows();
    Eigen::MatrixXd em(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) em(i, j) = to_double(r(i, j));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(em, Eigen::EigenvaluesOnly);
    Eigen::VectorXd ev = es.eigenvalues();  // ascending
    double scale = std::max(1.0, std::max(std::abs(ev(0)), std::abs(ev(m - 1))));
    double det = 1.0;
    for (std::size_t g = 0; g < a.size(); ++g) {
        double lo = ev(4 * g), hi = ev(4 * g + 3);
        if (hi - lo > tol * scale)
            throw AmbiguityError("moore_det_float: eigenvalue quadruple grouping is ambiguous");
        det *= (ev(4 * g) + ev(4 * g + 1) + ev(4 * g + 2) + ev(4 * g + 3)) / 4.0;
    }
    return det;
}

Rational mixed_det(const std::vector<HyperhermitianMatrix>& as) {
    std::size_t n = as.size();
    if (n == 0) throw std::invalid_argument("mixed_det: needs at least one matrix");
    for (const auto& a : as)
        if (a.size() != n)
            throw std::invalid_argument("mixed_det: needs n matrices of size n x n");
    if (n > kMooreCapacity) throw CapacityError("mixed_det: capped at n = 8");
    Rational acc = 0;
    for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
        HyperhermitianMatrix s = HyperhermitianMatrix::zero(n);
        std::size_t count = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t(1) << i)) {
                s = s + as[i];
                ++count;
            }
        Rational p = moore_det(s);
        if ((n - count) % 2 == 1) p = -p;
        acc += p;
    }
    Rational fact = 1;
    for (std::size_t i = 2; i <= n; ++i) fact *= Rational(i);
    return acc / fact;
}

PositivityCertificate positivity(const HyperhermitianMatrix& a) {
    Inertia in = symmetric_inertia(realize(a.entries()));
    if (in.pos % 4 || in.neg % 4 || in.zero % 4)
        throw std::logic_error("positivity: realization inertia not in quadruples");
    PositivityCertificate cert;
    cert.positive = in.pos / 4;
    cert.negative = in.neg / 4;
    cert.zero = in.zero / 4;
    if (in.neg > 0) {
        cert.verdict = Definiteness::Indefinite;
        for (std::size_t k = 0; k < in.diag.size(); ++k)
            if (in.diag[k] < 0) {
                std::vector<Rational> v(in.basis.rows());
                for (std::size_t r = 0; r < v.size(); ++r) v[r] = in.basis(r, k);
                cert.witness = from_real_vector(v);
                cert.witness_value = in.diag[k];
                break;
            }
    } else {
        cert.verdict =
            in.zero > 0 ? Definiteness::PositiveSemidefinite : Definiteness::PositiveDefinite;
    }
    return cert;
}

std::optional<std::vector<RankOneTerm>> psd_decompose(const HyperhermitianMatrix& a) {
    std::size_t n = a.size();
    QuaternionMatrix m = a.entries();
    std::vector<RankOneTerm> terms;
    for (std::size_t i = 0; i < n; ++i) {
        Rational d = m(i, i).t;
        if (d < 0) return std::nullopt;
        if (d == 0) {
            for (std::size_t j = 0; j < n; ++j)
                if (!m(i, j).is_zero()) return std::nullopt;
            continue;
        }
        RankOneTerm term;
        term.weight = d;
        term.vec.resize(n);
        Quaternion inv_d(Rational(1) / d);
        for (std::size_t j = 0; j < n; ++j) term.vec[j] = m(j, i) * inv_d;
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                m(r, c) -= d * (term.vec[r] * term.vec[c].conj());
        terms.push_back(std::move(term));
    }
    return terms;
}

Rational quadratic_form(const HyperhermitianMatrix& a, const std::vector<Quaternion>& xi) {
    if (xi.size() != a.size()) throw std::invalid_argument("quadratic_form: dimension mismatch");
    Quaternion acc;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) acc += xi[i].conj() * a(i, j) * xi[j];
    if (!acc.is_real()) throw std::logic_error("quadratic_form: value must be real");
    return acc.t;
}

}  // namespace qpt
