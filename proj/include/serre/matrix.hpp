#pragma once

#include "serre/scalar.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace serre {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over a single Field.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, Field field);

    static Matrix identity(std::size_t n, Field field);
    /// Integer literals specialized into `field`.
    static Matrix from_rows(Field field, std::initializer_list<std::initializer_list<long>> rows);
    static Matrix from_rows(Field field, const std::vector<std::vector<long>>& rows);
    static Matrix column(const Vector& entries, Field field);
    static Matrix row(const Vector& entries, Field field);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Field field() const noexcept { return field_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const Scalar> data() const noexcept { return data_; }
    std::span<const Scalar> row_span(std::size_t r) const {
        return std::span<const Scalar>(data_).subspan(r * cols_, cols_);
    }

    Matrix transpose() const;
    /// Row-major flattening into a (rows*cols) x 1 column.
    Matrix flatten() const;
    /// Inverse of flatten for a vector of length rows*cols.
    static Matrix reshape(std::span<const Scalar> entries, std::size_t rows, std::size_t cols, Field field);

    bool is_zero() const;
    bool is_identity() const;
    Scalar trace() const;

    Matrix& operator+=(const Matrix& other);
    Matrix& operator-=(const Matrix& other);
    Matrix& operator*=(const Scalar& s);
    /// this += s * other.
    void add_scaled(const Scalar& s, const Matrix& other);

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
    friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b);

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    Field field_;
    std::vector<Scalar> data_;
};

/// Kronecker product; index (i*b.rows + k, j*b.cols + l), second factor fastest.
Matrix kron(const Matrix& a, const Matrix& b);

/// Block-diagonal sum diag(a, b).
Matrix direct_sum(const Matrix& a, const Matrix& b);

/// Dense 3-index tensor with the last index fastest.
class Tensor3 {
public:
    Tensor3() = default;
    Tensor3(std::size_t d0, std::size_t d1, std::size_t d2, Field field);

    std::size_t dim0() const noexcept { return d0_; }
    std::size_t dim1() const noexcept { return d1_; }
    std::size_t dim2() const noexcept { return d2_; }
    Field field() const noexcept { return field_; }

    Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * d1_ + j) * d2_ + k]; }
    const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const {
        return data_[(i * d1_ + j) * d2_ + k];
    }

    std::span<const Scalar> data() const noexcept { return data_; }
    std::span<Scalar> data() noexcept { return data_; }

    friend bool operator==(const Tensor3& a, const Tensor3& b);

private:
    std::size_t d0_ = 0, d1_ = 0, d2_ = 0;
    Field field_;
    std::vector<Scalar> data_;
};

/// Reduced row echelon form together with its pivot columns.
struct Echelon {
    Matrix reduced;
    std::vector<std::size_t> pivots;

    std::size_t rank() const noexcept { return pivots.size(); }
};

/// Gauss-Jordan elimination; pivot = first nonzero entry scanning columns left to right.
Echelon rref(Matrix a);

std::size_t rank(const Matrix& a);

/// Basis of {v : a v = 0} as columns. The basis is canonical: stacked as rows
/// the vectors form a reduced echelon matrix (leading ones).
std::vector<Matrix> kernel_basis(const Matrix& a);

/// One solution x of a x = b (free variables set to zero), or nullopt when
/// the system is inconsistent. b may carry several right-hand-side columns.
std::optional<Matrix> solve_linear(const Matrix& a, const Matrix& b);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& a);

/// Nonzero rows of the reduced echelon form of the given row vectors.
Matrix row_space_basis(const Matrix& rows);

/// Canonical basis of {g (target_dim x source_dim) : g S_i = T_i g for all i},
/// solved as one vectorized linear system (g flattened row-major).
std::vector<Matrix> intertwiners(std::span<const Matrix> source_ops, std::span<const Matrix> target_ops,
                                 std::size_t source_dim, std::size_t target_dim, Field field);

/// Stacks equally shaped matrices as flattened rows of one matrix.
Matrix stack_flattened(std::span<const Matrix> items, Field field, std::size_t entries);

} // namespace serre
