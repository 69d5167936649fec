#include "balcone/linalg.hpp"

#include "balcone/errors.hpp"

#include <utility>

namespace balcone {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    data_.reserve(rows_ * cols_);
    for (const auto &row : rows) {
        if (row.size() != cols_)
            throw ValidationError("ragged matrix literal");
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

Rational Matrix::determinant() const {
    if (!is_square())
        throw ValidationError("determinant of a non-square matrix");
    Matrix a = *this;
    const std::size_t n = rows_;
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && a(pivot, c) == 0)
            ++pivot;
        if (pivot == n)
            return 0;
        if (pivot != c) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a(pivot, j), a(c, j));
            det = -det;
        }
        det *= a(c, c);
        for (std::size_t r = c + 1; r < n; ++r) {
            if (a(r, c) == 0)
                continue;
            Rational f = a(r, c) / a(c, c);
            for (std::size_t j = c; j < n; ++j)
                a(r, j) -= f * a(c, j);
        }
    }
    return det;
}

std::vector<Rational> Matrix::solve(const std::vector<Rational> &b) const {
    if (!is_square() || b.size() != rows_)
        throw ValidationError("solve: shape mismatch");
    const std::size_t n = rows_;
    Matrix a = *this;
    std::vector<Rational> x = b;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && a(pivot, c) == 0)
            ++pivot;
        if (pivot == n)
            throw ComputationError("singular matrix");
        if (pivot != c) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a(pivot, j), a(c, j));
            std::swap(x[pivot], x[c]);
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a(r, c) == 0)
                continue;
            Rational f = a(r, c) / a(c, c);
            for (std::size_t j = c; j < n; ++j)
                a(r, j) -= f * a(c, j);
            x[r] -= f * x[c];
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        x[i] /= a(i, i);
    return x;
}

} // namespace balcone
