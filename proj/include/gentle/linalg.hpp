#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gentle/rational.hpp"

namespace gentle {

using Vector = std::vector<Rational>;

// Dense row-major matrix over the rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);
    static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const Rational& s) const;
    Vector apply(const Vector& v) const;
    Matrix transpose() const;
    bool is_zero() const;
    Vector column(std::size_t j) const;
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

struct Echelon {
    Matrix reduced;
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

Echelon rref(Matrix m);
std::size_t rank(const Matrix& m);
std::size_t rank_of_vectors(const std::vector<Vector>& vs, std::size_t dim);
// Basis of {x : m x = 0}.
std::vector<Vector> nullspace(const Matrix& m);
std::optional<Vector> solve(const Matrix& a, const Vector& b);
Rational determinant(Matrix m);
// Square matrix with full rank modulo a large prime; true implies invertible over the rationals.
bool invertible_mod_prime(const Matrix& m);

// Repeated solves of a fixed system m x = b.
class LinearSolver {
public:
    explicit LinearSolver(const Matrix& m);
    // Some solution, or nothing when b is outside the column space.
    std::optional<Vector> solve(const Vector& b) const;
    std::size_t rank() const { return pivots_.size(); }
    std::size_t unknowns() const { return cols_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    Matrix transform_;  // transform_ * m is in reduced echelon form
    std::vector<std::size_t> pivots_;
};

bool is_zero_vector(const Vector& v);

}  // namespace gentle
