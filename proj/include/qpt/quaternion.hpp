#pragma once

#include <string>

#include "qpt/rational.hpp"

namespace qpt {

// Quaternion over a commutative ring R, components q = t + x*i + y*j + z*k.
// Multiplication follows i^2 = j^2 = k^2 = -1, ij = -ji = k, jk = -kj = i, ki = -ik = j.
template <class R>
struct BasicQuaternion {
    using scalar_type = R;

    R t{}, x{}, y{}, z{};

    BasicQuaternion() = default;
    BasicQuaternion(R tt) : t(std::move(tt)) {}
    BasicQuaternion(R tt, R xx, R yy, R zz)
        : t(std::move(tt)), x(std::move(xx)), y(std::move(yy)), z(std::move(zz)) {}

    static BasicQuaternion unit_i() { return {R(0), R(1), R(0), R(0)}; }
    static BasicQuaternion unit_j() { return {R(0), R(0), R(1), R(0)}; }
    static BasicQuaternion unit_k() { return {R(0), R(0), R(0), R(1)}; }

    BasicQuaternion conj() const { return {t, -x, -y, -z}; }
    R norm_sq() const { return t * t + x * x + y * y + z * z; }
    bool is_zero() const { return t == R(0) && x == R(0) && y == R(0) && z == R(0); }
    bool is_real() const { return x == R(0) && y == R(0) && z == R(0); }

    BasicQuaternion operator-() const { return {-t, -x, -y, -z}; }

    friend BasicQuaternion operator+(const BasicQuaternion& a, const BasicQuaternion& b) {
        return {a.t + b.t, a.x + b.x, a.y + b.y, a.z + b.z};
    }
    friend BasicQuaternion operator-(const BasicQuaternion& a, const BasicQuaternion& b) {
        return {a.t - b.t, a.x - b.x, a.y - b.y, a.z - b.z};
    }
    friend BasicQuaternion operator*(const BasicQuaternion& a, const BasicQuaternion& b) {
        return {a.t * b.t - a.x * b.x - a.y * b.y - a.z * b.z,
                a.t * b.x + a.x * b.t + a.y * b.z - a.z * b.y,
                a.t * b.y - a.x * b.z + a.y * b.t + a.z * b.x,
                a.t * b.z + a.x * b.y - a.y * b.x + a.z * b.t};
    }
    friend BasicQuaternion operator*(const R& s, const BasicQuaternion& q) {
        return {s * q.t, s * q.x, s * q.y, s * q.z};
    }
    friend BasicQuaternion operator*(const BasicQuaternion& q, const R& s) {
        return {q.t * s, q.x * s, q.y * s, q.z * s};
    }
    friend bool operator==(const BasicQuaternion& a, const BasicQuaternion& b) {
        return a.t == b.t && a.x == b.x && a.y == b.y && a.z == b.z;
    }
    friend bool operator!=(const BasicQuaternion& a, const BasicQuaternion& b) { return !(a == b); }

    BasicQuaternion& operator+=(const BasicQuaternion& o) { return *this = *this + o; }
    BasicQuaternion& operator-=(const BasicQuaternion& o) { return *this = *this - o; }
};

using Quaternion = BasicQuaternion<Rational>;

// q^{-1} = conj(q) / |q|^2 ; only for division-friendly R.
inline Quaternion inverse(const Quaternion& q) {
    Rational n = q.norm_sq();
    if (n == 0) throw std::domain_error("inverse of zero quaternion");
    Quaternion c = q.conj();
    return {c.t / n, c.x / n, c.y / n, c.z / n};
}

std::string format_quaternion(const Quaternion& q);

}  // namespace qpt
