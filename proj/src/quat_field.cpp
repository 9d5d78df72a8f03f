#include "qpt/quat_field.hpp"

#include <cmath>

namespace qpt {

namespace {

// right multiplication by the unit quaternions on polynomial components,
// written out so no polynomial ring constants are needed
QRPoly mul_unit_right(const QRPoly& g, int unit) {
    switch (unit) {
        case 1:  // g * i
            return {-g.x, g.t, g.z, -g.y};
        case 2:  // g * j
            return {-g.y, -g.z, g.t, g.x};
        default:  // g * k
            return {-g.z, g.y, -g.x, g.t};
    }
}

QRPoly component_derivatives(const RPoly& f, std::size_t a) {
    return {f.derivative(4 * a), f.derivative(4 * a + 1), f.derivative(4 * a + 2),
            f.derivative(4 * a + 3)};
}

}  // namespace

QRPoly dirac_qbar_poly(const RPoly& f, std::size_t a) { return component_derivatives(f, a); }

QRPoly dirac_q_poly(const QRPoly& g, std::size_t a) {
    auto d = [&](std::size_t comp) {
        return QRPoly{g.t.derivative(4 * a + comp), g.x.derivative(4 * a + comp),
                      g.y.derivative(4 * a + comp), g.z.derivative(4 * a + comp)};
    };
    QRPoly out = d(0);
    out -= mul_unit_right(d(1), 1);
    out -= mul_unit_right(d(2), 2);
    out -= mul_unit_right(d(3), 3);
    return out;
}

Matrix<QRPoly> quat_hessian_poly(const RPoly& f) {
    if (f.nvars() % 4 != 0)
        throw std::invalid_argument("quat_hessian_poly: variable count must be 4n");
    std::size_t n = f.nvars() / 4;
    Matrix<QRPoly> h(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        QRPoly db = dirac_qbar_poly(f, i);
        for (std::size_t j = 0; j < n; ++j) h(i, j) = dirac_q_poly(db, j);
    }
    return h;
}

bool is_hyperhermitian_poly(const Matrix<QRPoly>& g) {
    if (g.rows() != g.cols()) return false;
    for (std::size_t i = 0; i < g.rows(); ++i) {
        if (!g(i, i).x.is_zero() || !g(i, i).y.is_zero() || !g(i, i).z.is_zero()) return false;
        for (std::size_t j = i + 1; j < g.cols(); ++j)
            if (g(i, j).conj() != g(j, i)) return false;
    }
    return true;
}

PolyQuatMatrix complexify(const Matrix<QRPoly>& g) {
    PolyQuatMatrix out(g.rows(), g.cols());
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j) {
            out(i, j).t = cpoly_from_rpoly(g(i, j).t);
            out(i, j).x = cpoly_from_rpoly(g(i, j).x);
            out(i, j).y = cpoly_from_rpoly(g(i, j).y);
            out(i, j).z = cpoly_from_rpoly(g(i, j).z);
        }
    return out;
}

Form ddj_potential(const RPoly& f) { return del(del_J(Form::function(cpoly_from_rpoly(f)))); }

HessianEvaluator::HessianEvaluator(const Field& f, std::size_t n) : n_(n) {
    if (f.max_variable() > 4 * n)
        throw std::invalid_argument("field uses more coordinates than the stated dimension");
    std::vector<Field> first;
    first.reserve(4 * n);
    for (std::size_t v = 0; v < 4 * n; ++v) first.push_back(f.derivative(v));
    second_.reserve(4 * n * (4 * n + 1) / 2);
    for (std::size_t u = 0; u < 4 * n; ++u)
        for (std::size_t v = u; v < 4 * n; ++v) second_.push_back(first[u].derivative(v));
}

Matrix<DQuaternion> HessianEvaluator::at(const std::vector<double>& x) const {
    std::size_t d = 4 * n_;
    if (x.size() != d) throw std::invalid_argument("point dimension mismatch");
    Matrix<double> h(d, d);
    std::size_t idx = 0;
    for (std::size_t u = 0; u < d; ++u)
        for (std::size_t v = u; v < d; ++v) {
            double val = second_[idx++].eval(x);
            h(u, v) = val;
            h(v, u) = val;
        }
    return contract_hessian(h, n_);
}

Matrix<DQuaternion> contract_hessian(const Matrix<double>& h, std::size_t n) {
    if (h.rows() != 4 * n || h.cols() != 4 * n)
        throw std::invalid_argument("contract_hessian: matrix must be 4n x 4n");

    // D2(a, b) = sum_{u,v} unit_u H[4a+u, 4b+v] conj-side unit_v, the left
    // units coming from the conjugate derivative on the row index
    static const Quaternion lu[4] = {Quaternion(Rational(1)), Quaternion::unit_i(),
                                     Quaternion::unit_j(), Quaternion::unit_k()};
    static const Quaternion ru[4] = {Quaternion(Rational(1)), -Quaternion::unit_i(),
                                     -Quaternion::unit_j(), -Quaternion::unit_k()};
    Matrix<DQuaternion> out(n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            DQuaternion acc;
            for (int u = 0; u < 4; ++u)
                for (int v = 0; v < 4; ++v) {
                    Quaternion c = lu[u] * ru[v];
                    double val = h(4 * a + u, 4 * b + v);
                    acc.t += to_double(c.t) * val;
                    acc.x += to_double(c.x) * val;
                    acc.y += to_double(c.y) * val;
                    acc.z += to_double(c.z) * val;
                }
            out(a, b) = acc;
        }
    return out;
}

Matrix<double> realize_double(const Matrix<DQuaternion>& a) { return realize_components(a); }

double moore_det_numeric(const Matrix<DQuaternion>& a, double tol) {
    if (a.rows() != a.cols() || a.rows() > 8)
        throw std::invalid_argument("moore_det_numeric: needs a square matrix of size at most 8");
    DQuaternion s = moore_cycle_sum(a);
    double scale = std::max(1.0, std::abs(s.t));
    if (std::abs(s.x) > tol * scale || std::abs(s.y) > tol * scale || std::abs(s.z) > tol * scale)
        throw std::logic_error("moore_det_numeric: cycle sum has a large imaginary part");
    return s.t;
}

double mixed_det_numeric(const std::vector<Matrix<DQuaternion>>& as, double tol) {
    std::size_t n = as.size();
    if (n == 0 || n > 8) throw std::invalid_argument("mixed_det_numeric: need 1..8 matrices");
    for (const auto& a : as)
        if (a.rows() != n || a.cols() != n)
            throw std::invalid_argument("mixed_det_numeric: each matrix must be n x n");
    double acc = 0.0;
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        Matrix<DQuaternion> sum(n, n);
        int picked = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t{1} << i)) {
                sum = sum + as[i];
                ++picked;
            }
        double term = moore_det_numeric(sum, tol);
        acc += ((n - picked) % 2 == 0 ? term : -term);
    }
    double fact = 1.0;
    for (std::size_t k = 2; k <= n; ++k) fact *= k;
    return acc / fact;
}

RPoly moore_det_poly(const Matrix<QRPoly>& a) {
    if (a.rows() != a.cols() || a.rows() > 8)
        throw std::invalid_argument("moore_det_poly: needs a square matrix of size at most 8");
    QRPoly s = moore_cycle_sum(a);
    if (!s.x.is_zero() || !s.y.is_zero() || !s.z.is_zero())
        throw std::logic_error("moore_det_poly: cycle sum has imaginary components");
    return s.t;
}

}  // namespace qpt
