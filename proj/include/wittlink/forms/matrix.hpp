#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "wittlink/algebra/errors.hpp"

namespace wittlink {

/// Dense row-major matrix. Linear algebra that needs a field lives in linalg.hpp
/// and takes the field context explicitly.
template <class E>
class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const E& fill) : r_(rows), c_(cols), a_(rows * cols, fill) {}

    static Matrix identity(std::size_t n, const E& zero, const E& one) {
        Matrix m(n, n, zero);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    E& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const E& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.c_ != y.r_) throw DomainError("matrix product shape mismatch");
        Matrix z(x.r_, y.c_, x.zero_like(y));
        for (std::size_t i = 0; i < x.r_; ++i) {
            for (std::size_t k = 0; k < x.c_; ++k) {
                const E& a = x(i, k);
                if (scalar_is_zero(a)) continue;
                for (std::size_t j = 0; j < y.c_; ++j) {
                    if (!scalar_is_zero(y(k, j))) z(i, j) += a * y(k, j);
                }
            }
        }
        return z;
    }
    friend Matrix operator+(Matrix x, const Matrix& y) {
        x.check_same(y);
        for (std::size_t i = 0; i < x.a_.size(); ++i) x.a_[i] += y.a_[i];
        return x;
    }
    friend Matrix operator-(Matrix x, const Matrix& y) {
        x.check_same(y);
        for (std::size_t i = 0; i < x.a_.size(); ++i) x.a_[i] -= y.a_[i];
        return x;
    }
    Matrix operator-() const {
        Matrix m = *this;
        for (auto& v : m.a_) v = -v;
        return m;
    }
    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.r_ == y.r_ && x.c_ == y.c_ && x.a_ == y.a_;
    }

    Matrix transpose() const {
        Matrix t;
        t.r_ = c_;
        t.c_ = r_;
        t.a_.reserve(a_.size());
        for (std::size_t j = 0; j < c_; ++j) {
            for (std::size_t i = 0; i < r_; ++i) t.a_.push_back((*this)(i, j));
        }
        return t;
    }

    Matrix block(std::size_t i0, std::size_t j0, std::size_t rows, std::size_t cols) const {
        Matrix m;
        m.r_ = rows;
        m.c_ = cols;
        for (std::size_t i = 0; i < rows; ++i) {
            for (std::size_t j = 0; j < cols; ++j) m.a_.push_back((*this)(i0 + i, j0 + j));
        }
        return m;
    }
    void set_block(std::size_t i0, std::size_t j0, const Matrix& b) {
        for (std::size_t i = 0; i < b.r_; ++i) {
            for (std::size_t j = 0; j < b.c_; ++j) (*this)(i0 + i, j0 + j) = b(i, j);
        }
    }
    Matrix column(std::size_t j) const { return block(0, j, r_, 1); }

    /// [x | y]
    static Matrix hstack(const Matrix& x, const Matrix& y) {
        if (x.r_ != y.r_) throw DomainError("hstack row mismatch");
        Matrix m(x.r_, x.c_ + y.c_, x.zero_like(y));
        m.set_block(0, 0, x);
        m.set_block(0, x.c_, y);
        return m;
    }
    /// [x ; y]
    static Matrix vstack(const Matrix& x, const Matrix& y) {
        if (x.c_ != y.c_) throw DomainError("vstack column mismatch");
        Matrix m(x.r_ + y.r_, x.c_, x.zero_like(y));
        m.set_block(0, 0, x);
        m.set_block(x.r_, 0, y);
        return m;
    }

    template <class F>
    auto map(F f) const -> Matrix<decltype(f(std::declval<E>()))> {
        using R = decltype(f(std::declval<E>()));
        if (a_.empty()) return Matrix<R>();
        Matrix<R> m(r_, c_, f(a_.front()));
        for (std::size_t i = 0; i < r_; ++i) {
            for (std::size_t j = 0; j < c_; ++j) m(i, j) = f((*this)(i, j));
        }
        return m;
    }

    const std::vector<E>& data() const { return a_; }

   private:
    void check_same(const Matrix& y) const {
        if (r_ != y.r_ || c_ != y.c_) throw DomainError("matrix shape mismatch");
    }
    E zero_like(const Matrix& y) const {
        if (!a_.empty()) return a_.front() - a_.front();
        if (!y.a_.empty()) return y.a_.front() - y.a_.front();
        return E();
    }
    std::size_t r_ = 0, c_ = 0;
    std::vector<E> a_;
};

}  // namespace wittlink
