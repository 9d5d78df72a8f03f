#include "qpt/quat_matrix.hpp"

namespace qpt {

RationalMatrix left_mult_matrix(const Quaternion& q) {
    RationalMatrix m(4, 4);
    // columns are q*1, q*i, q*j, q*k
    const Rational &t = q.t, &x = q.x, &y = q.y, &z = q.z;
    m(0, 0) = t;  m(0, 1) = -x; m(0, 2) = -y; m(0, 3) = -z;
    m(1, 0) = x;  m(1, 1) = t;  m(1, 2) = -z; m(1, 3) = y;
    m(2, 0) = y;  m(2, 1) = z;  m(2, 2) = t;  m(2, 3) = -x;
    m(3, 0) = z;  m(3, 1) = -y; m(3, 2) = x;  m(3, 3) = t;
    return m;
}

RationalMatrix right_mult_matrix(const Quaternion& q) {
    RationalMatrix m(4, 4);
    // columns are 1*q, i*q, j*q, k*q
    const Rational &t = q.t, &x = q.x, &y = q.y, &z = q.z;
    m(0, 0) = t;  m(0, 1) = -x; m(0, 2) = -y; m(0, 3) = -z;
    m(1, 0) = x;  m(1, 1) = t;  m(1, 2) = z;  m(1, 3) = -y;
    m(2, 0) = y;  m(2, 1) = -z; m(2, 2) = t;  m(2, 3) = x;
    m(3, 0) = z;  m(3, 1) = y;  m(3, 2) = -x; m(3, 3) = t;
    return m;
}

RationalMatrix realize(const QuaternionMatrix& a) { return realize_components(a); }

RationalMatrix right_action_matrix(const Quaternion& q, std::size_t n) {
    RationalMatrix m(4 * n, 4 * n);
    RationalMatrix blk = right_mult_matrix(q);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t c = 0; c < 4; ++c) m(4 * i + r, 4 * i + c) = blk(r, c);
    return m;
}

std::vector<Rational> to_real_vector(const std::vector<Quaternion>& v) {
    std::vector<Rational> out;
    out.reserve(4 * v.size());
    for (const auto& q : v) {
        out.push_back(q.t);
        out.push_back(q.x);
        out.push_back(q.y);
        out.push_back(q.z);
    }
    return out;
}

std::vector<Quaternion> from_real_vector(const std::vector<Rational>& v) {
    if (v.size() % 4 != 0) throw std::invalid_argument("component vector length not divisible by 4");
    std::vector<Quaternion> out(v.size() / 4);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = Quaternion(v[4 * i], v[4 * i + 1], v[4 * i + 2], v[4 * i + 3]);
    return out;
}

QuaternionMatrix conj_transpose(const QuaternionMatrix& a) {
    QuaternionMatrix r(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = a(i, j).conj();
    return r;
}

std::string format_quaternion(const Quaternion& q) {
    auto term = [](const Rational& v, const char* unit, bool& first) -> std::string {
        if (v == 0) return "";
        std::string s;
        if (!first && v > 0) s += "+";
        first = false;
        if (*unit && v == 1) return s + unit;
        if (*unit && v == -1) return s + "-" + unit;
        return s + format_rational(v) + unit;
    };
    bool first = true;
    std::string s = term(q.t, "", first) + term(q.x, "i", first) + term(q.y, "j", first) +
                    term(q.z, "k", first);
    return s.empty() ? "0" : s;
}

}  // namespace qpt
