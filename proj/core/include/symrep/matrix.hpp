#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "symrep/errors.hpp"
#include "symrep/numeric.hpp"

namespace symrep {

/// Dense square matrix.  Dimensions stay small (tableau counts at desk
/// scale), so no sparsity or blocking.
template <class T>
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(std::size_t n) : n_(n), data_(n * n, T(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t dim() const { return n_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

    Matrix operator*(const Matrix& rhs) const {
        if (n_ != rhs.n_) throw domain_error("matrix size mismatch");
        Matrix out(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t k = 0; k < n_; ++k) {
                const T& a = (*this)(i, k);
                if (a == T(0)) continue;
                for (std::size_t j = 0; j < n_; ++j)
                    out(i, j) += a * rhs(k, j);
            }
        return out;
    }

    Matrix operator+(const Matrix& rhs) const {
        if (n_ != rhs.n_) throw domain_error("matrix size mismatch");
        Matrix out(n_);
        for (std::size_t i = 0; i < data_.size(); ++i)
            out.data_[i] = data_[i] + rhs.data_[i];
        return out;
    }

    Matrix operator-(const Matrix& rhs) const {
        if (n_ != rhs.n_) throw domain_error("matrix size mismatch");
        Matrix out(n_);
        for (std::size_t i = 0; i < data_.size(); ++i)
            out.data_[i] = data_[i] - rhs.data_[i];
        return out;
    }

    Matrix transpose() const {
        Matrix out(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) out(j, i) = (*this)(i, j);
        return out;
    }

    T trace() const {
        T t(0);
        for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
        return t;
    }

    bool operator==(const Matrix& rhs) const = default;

private:
    std::size_t n_ = 0;
    std::vector<T> data_;
};

using ExactMatrix = Matrix<Rational>;
using FloatMatrix = Matrix<double>;

/// Largest absolute entry difference.
inline double max_abs_diff(const FloatMatrix& a, const FloatMatrix& b) {
    if (a.dim() != b.dim()) throw domain_error("matrix size mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            m = std::max(m, std::fabs(a(i, j) - b(i, j)));
    return m;
}

} // namespace symrep
