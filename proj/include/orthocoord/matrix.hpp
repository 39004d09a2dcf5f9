#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "orthocoord/field.hpp"

namespace orthocoord {

/// Dense matrix over an exact field, acting on column vectors.
class Matrix {
public:
    Matrix(Field field, std::size_t rows, std::size_t cols);
    static Matrix identity(Field field, std::size_t n);
    static Matrix unit(Field field, std::size_t n, std::size_t i, std::size_t j);
    static Matrix from_rows(Field field, const std::vector<std::vector<Scalar>>& rows);
    /// Integer convenience constructor; entries are reduced into the field.
    static Matrix from_ints(Field field, const std::vector<std::vector<long>>& rows);
    static Matrix column_vector(Field field, const std::vector<Scalar>& entries);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    /// Raw write access; callers must store canonical field elements.
    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

    Matrix operator+(const Matrix& other) const;
    Matrix operator-(const Matrix& other) const;
    Matrix operator-() const;
    Matrix operator*(const Matrix& other) const;
    Matrix scaled(const Scalar& s) const;
    Matrix transpose() const;
    /// Entrywise involution followed by transposition.
    Matrix conj_transpose(Involution sigma) const;

    bool operator==(const Matrix& other) const;
    bool operator!=(const Matrix& other) const { return !(*this == other); }
    bool is_zero() const;

    /// Reduced row echelon form; pivots receives the pivot column of each nonzero row.
    Matrix rref(std::vector<std::size_t>* pivots = nullptr) const;
    std::size_t rank() const;
    Scalar determinant() const;
    std::optional<Matrix> inverse() const;
    /// Basis of {x : A x = 0} as the columns of the result (cols() == nullity).
    Matrix nullspace() const;
    /// One solution X of A X = B, or nullopt when inconsistent.
    std::optional<Matrix> solve(const Matrix& rhs) const;

    Matrix column(std::size_t j) const;
    Matrix row(std::size_t i) const;
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    Matrix hconcat(const Matrix& right) const;
    Matrix vconcat(const Matrix& below) const;
    /// Column-major flattening into a column vector.
    Matrix vectorized() const;

    std::string to_string() const;

private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Scalar> data_;
};

/// Kronecker product A (x) B.
Matrix kronecker(const Matrix& a, const Matrix& b);

/// Uniform random matrix; over Q the entries are small integers in [-range, range].
Matrix random_matrix(const Field& field, std::size_t rows, std::size_t cols, std::mt19937_64& rng, long range = 3);
/// Random invertible matrix (rejection sampling).
Matrix random_invertible(const Field& field, std::size_t n, std::mt19937_64& rng, long range = 3);

}  // namespace orthocoord
