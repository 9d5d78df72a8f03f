#pragma once

#include <cassert>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace qpt {

// Small dense row-major matrix over an arbitrary ring.
template <class T>
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, T init = T())
        : rows_(rows), cols_(cols), data_(rows * cols, init) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t r, std::size_t c) {
        assert(r < rows_ && c < cols_);
        return data_[r * cols_ + c];
    }
    const T& operator()(std::size_t r, std::size_t c) const {
        assert(r < rows_ && c < cols_);
        return data_[r * cols_ + c];
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
        Matrix r = a;
        for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] = r.data_[i] + b.data_[i];
        return r;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
        Matrix r = a;
        for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] = r.data_[i] - b.data_[i];
        return r;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == T()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) = r(i, j) + aik * b(k, j);
            }
        return r;
    }
    friend Matrix operator*(const T& s, const Matrix& m) {
        Matrix r = m;
        for (auto& v : r.data_) v = s * v;
        return r;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    Matrix transposed() const {
        Matrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    std::vector<T> operator*(const std::vector<T>& v) const {
        assert(v.size() == cols_);
        std::vector<T> out(rows_, T());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out[i] = out[i] + (*this)(i, j) * v[j];
        return out;
    }

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

// Exact determinant by fraction-friendly Gaussian elimination with partial
// pivoting on the first nonzero entry. Requires a field.
template <class T>
T determinant(Matrix<T> m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant needs a square matrix");
    std::size_t n = m.rows();
    T det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m(piv, c) == T(0)) ++piv;
        if (piv == n) return T(0);
        if (piv != c) {
            for (std::size_t j = c; j < n; ++j) std::swap(m(piv, j), m(c, j));
            det = T(0) - det;
        }
        det = det * m(c, c);
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m(r, c) == T(0)) continue;
            T f = m(r, c) / m(c, c);
            for (std::size_t j = c; j < n; ++j) m(r, j) = m(r, j) - f * m(c, j);
        }
    }
    return det;
}

}  // namespace qpt
