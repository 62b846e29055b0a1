#pragma once

/**
 * @file matrix.hpp
 * @brief Small dense matrices over an arbitrary commutative ring type.
 */

#include <functional>
#include <stdexcept>
#include <vector>

namespace alia {

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols, const T& fill) : r_(rows), c_(cols), a_(static_cast<std::size_t>(rows) * cols, fill) {}
    Matrix(int rows, int cols, std::vector<T> entries) : r_(rows), c_(cols), a_(std::move(entries))
    {
        if (a_.size() != static_cast<std::size_t>(rows) * cols) throw std::invalid_argument("Matrix: entry count");
    }

    static Matrix identity(int n, const T& zero, const T& one)
    {
        Matrix m(n, n, zero);
        for (int i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    int rows() const { return r_; }
    int cols() const { return c_; }
    T& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * c_ + j]; }
    const T& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * c_ + j]; }
    const std::vector<T>& entries() const { return a_; }

    template <class F>
    auto map(F f) const -> Matrix<decltype(f(std::declval<const T&>()))>
    {
        using U = decltype(f(std::declval<const T&>()));
        std::vector<U> out;
        out.reserve(a_.size());
        for (const auto& x : a_) out.push_back(f(x));
        return Matrix<U>(r_, c_, std::move(out));
    }

    Matrix transpose() const
    {
        std::vector<T> out;
        out.reserve(a_.size());
        for (int j = 0; j < c_; ++j)
            for (int i = 0; i < r_; ++i) out.push_back((*this)(i, j));
        return Matrix(c_, r_, std::move(out));
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b)
    {
        check_same(a, b);
        std::vector<T> out;
        out.reserve(a.a_.size());
        for (std::size_t i = 0; i < a.a_.size(); ++i) out.push_back(a.a_[i] + b.a_[i]);
        return Matrix(a.r_, a.c_, std::move(out));
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b)
    {
        check_same(a, b);
        std::vector<T> out;
        out.reserve(a.a_.size());
        for (std::size_t i = 0; i < a.a_.size(); ++i) out.push_back(a.a_[i] - b.a_[i]);
        return Matrix(a.r_, a.c_, std::move(out));
    }
    friend Matrix operator-(const Matrix& a)
    {
        return a.map([](const T& x) -> T { return -x; });
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.c_ != b.r_) throw std::invalid_argument("Matrix: shape mismatch in product");
        std::vector<T> out;
        out.reserve(static_cast<std::size_t>(a.r_) * b.c_);
        for (int i = 0; i < a.r_; ++i)
            for (int j = 0; j < b.c_; ++j) {
                T acc = a(i, 0) * b(0, j);
                for (int k = 1; k < a.c_; ++k) {
                    if (is_zero(a(i, k)) || is_zero(b(k, j))) continue;
                    acc = acc + a(i, k) * b(k, j);
                }
                out.push_back(std::move(acc));
            }
        return Matrix(a.r_, b.c_, std::move(out));
    }
    friend Matrix operator*(const T& s, const Matrix& a)
    {
        return a.map([&](const T& x) -> T { return s * x; });
    }
    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        if (a.r_ != b.r_ || a.c_ != b.c_) return false;
        for (std::size_t i = 0; i < a.a_.size(); ++i)
            if (!(a.a_[i] == b.a_[i])) return false;
        return true;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    static void check_same(const Matrix& a, const Matrix& b)
    {
        if (a.r_ != b.r_ || a.c_ != b.c_) throw std::invalid_argument("Matrix: shape mismatch");
    }
    int r_ = 0, c_ = 0;
    std::vector<T> a_;
};

/// Determinant by cofactor expansion along the first row; intended for n <= 5.
template <class T>
T det(const Matrix<T>& m)
{
    if (m.rows() != m.cols() || m.rows() == 0) throw std::invalid_argument("det: square matrix required");
    const int n = m.rows();
    if (n == 1) return m(0, 0);
    if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    T acc = m(0, 0) - m(0, 0);
    for (int j = 0; j < n; ++j) {
        if (is_zero(m(0, j))) continue;
        std::vector<T> sub;
        for (int i = 1; i < n; ++i)
            for (int k = 0; k < n; ++k)
                if (k != j) sub.push_back(m(i, k));
        T term = m(0, j) * det(Matrix<T>(n - 1, n - 1, std::move(sub)));
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

/// Matrix power for square matrices, e >= 1.
template <class T>
Matrix<T> mat_pow(const Matrix<T>& m, int e)
{
    if (e < 1) throw std::invalid_argument("mat_pow: exponent must be positive");
    Matrix<T> acc = m;
    for (int i = 1; i < e; ++i) acc = acc * m;
    return acc;
}

}  // namespace alia
