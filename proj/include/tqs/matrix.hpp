#ifndef TQS_MATRIX_HPP
#define TQS_MATRIX_HPP

#include "tqs/cyclotomic.hpp"
#include "tqs/errors.hpp"
#include "tqs/polynomial.hpp"

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

namespace tqs {

// Dense row-major matrix over a commutative ring T.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols, T(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const noexcept { return r_; }
    std::size_t cols() const noexcept { return c_; }
    bool is_square() const noexcept { return r_ == c_; }
    T& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
    const std::vector<T>& data() const noexcept { return a_; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.c_ != b.r_) throw Error("matrix dimension mismatch");
        Matrix m(a.r_, b.c_);
        for (std::size_t i = 0; i < a.r_; ++i)
            for (std::size_t k = 0; k < a.c_; ++k) {
                const T& x = a(i, k);
                if (x == T(0)) continue;
                for (std::size_t j = 0; j < b.c_; ++j) m(i, j) += x * b(k, j);
            }
        return m;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        if (a.r_ != b.r_ || a.c_ != b.c_) throw Error("matrix dimension mismatch");
        Matrix m = a;
        for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] -= b.a_[i];
        return m;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    T trace() const {
        T t(0);
        for (std::size_t i = 0; i < std::min(r_, c_); ++i) t += (*this)(i, i);
        return t;
    }

    bool is_scalar() const {
        if (!is_square()) return false;
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) {
                if (i != j && !((*this)(i, j) == T(0))) return false;
                if (i == j && !((*this)(i, i) == (*this)(0, 0))) return false;
            }
        return true;
    }

    template <class F>
    auto map(F f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
        Matrix<decltype(f(std::declval<const T&>()))> m(r_, c_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) m(i, j) = f((*this)(i, j));
        return m;
    }

private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<T> a_;
};

using CycMatrix = Matrix<CyclotomicNumber>;
using CycPolynomial = Polynomial<CyclotomicNumber>;

/// Determinant by Bareiss fraction-free elimination; every division is exact in T.
template <class T>
T det_bareiss(Matrix<T> m) {
    if (!m.is_square()) throw Error("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return T(1);
    T prev(1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == T(0)) {
            std::size_t piv = k + 1;
            while (piv < n && m(piv, k) == T(0)) ++piv;
            if (piv == n) return T(0);
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
            m(i, k) = T(0);
        }
        prev = m(k, k);
    }
    T d = m(n - 1, n - 1);
    return negate ? -d : d;
}

/// det(t I - M) as a polynomial in t.
CycPolynomial char_poly(const CycMatrix& m);

/// det(I - t M) truncated at degree `order`.
PowerSeries<CyclotomicNumber> det_one_minus_t(const CycMatrix& m, std::size_t order);

CyclotomicNumber determinant(const CycMatrix& m);
std::size_t rank(const CycMatrix& m);
/// Canonical cyclotomic entries (minimal conductor), for hashing and display.
CycMatrix reduce_entries(const CycMatrix& m);
/// All entries rewritten at conductor n (a common multiple of their conductors).
CycMatrix at_conductor(const CycMatrix& m, unsigned long n);
unsigned long common_conductor(const CycMatrix& m);

} // namespace tqs

#endif
