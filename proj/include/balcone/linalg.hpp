#pragma once

#include "balcone/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace balcone {

// Dense row-major matrix of exact rationals, sized for pairing matrices.
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rational &operator()(std::size_t i, std::size_t j) {
        return data_[i * cols_ + j];
    }
    const Rational &operator()(std::size_t i, std::size_t j) const {
        return data_[i * cols_ + j];
    }

    Matrix transpose() const;

    // Gaussian elimination over Q. Requires a square matrix.
    Rational determinant() const;

    // Solves A x = b for square non-singular A; throws ComputationError
    // when A is singular.
    std::vector<Rational> solve(const std::vector<Rational> &b) const;

    friend bool operator==(const Matrix &, const Matrix &) = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

} // namespace balcone
