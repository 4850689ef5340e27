#include "serre/matrix.hpp"

#include "serre/error.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace serre {

namespace {

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument(std::string(op) + ": shape mismatch " + std::to_string(a.rows()) + "x" +
                                    std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                                    std::to_string(b.cols()));
    }
    if (a.field() != b.field()) {
        throw FieldMismatch(std::string(op) + ": field mismatch");
    }
}

} // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, Field field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::identity(std::size_t n, Field field) {
    Matrix m(n, n, field);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
    return m;
}

Matrix Matrix::from_rows(Field field, std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<std::vector<long>> copy;
    for (const auto& r : rows) copy.emplace_back(r);
    return from_rows(field, copy);
}

Matrix Matrix::from_rows(Field field, const std::vector<std::vector<long>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), cols, field);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("from_rows: ragged rows");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = Scalar(field, rows[r][c]);
    }
    return m;
}

Matrix Matrix::column(const Vector& entries, Field field) {
    return reshape(entries, entries.size(), 1, field);
}

Matrix Matrix::row(const Vector& entries, Field field) {
    return reshape(entries, 1, entries.size(), field);
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_, field_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Matrix Matrix::flatten() const {
    Matrix v = *this;
    v.rows_ = rows_ * cols_;
    v.cols_ = 1;
    return v;
}

Matrix Matrix::reshape(std::span<const Scalar> entries, std::size_t rows, std::size_t cols, Field field) {
    if (entries.size() != rows * cols) throw std::invalid_argument("reshape: wrong number of entries");
    Matrix m;
    m.rows_ = rows;
    m.cols_ = cols;
    m.field_ = field;
    m.data_.assign(entries.begin(), entries.end());
    for (const auto& s : m.data_) {
        if (s.field() != field) throw FieldMismatch("reshape: entry from a different field");
    }
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& s : data_)
        if (!s.is_zero()) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) {
            const Scalar& s = (*this)(r, c);
            if (r == c ? !s.is_one() : !s.is_zero()) return false;
        }
    return true;
}

Scalar Matrix::trace() const {
    if (rows_ != cols_) throw std::invalid_argument("trace of a non-square matrix");
    Scalar t = Scalar::zero(field_);
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

Matrix& Matrix::operator+=(const Matrix& other) {
    require_same_shape(*this, other, "matrix +");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
    require_same_shape(*this, other, "matrix -");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
    return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
    for (auto& x : data_) x *= s;
    return *this;
}

void Matrix::add_scaled(const Scalar& s, const Matrix& other) {
    require_same_shape(*this, other, "add_scaled");
    if (s.is_zero()) return;
    for (std::size_t i = 0; i < data_.size(); ++i) {
        if (!other.data_[i].is_zero()) data_[i].add_mul(s, other.data_[i]);
    }
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) {
        throw std::invalid_argument("matrix *: inner dimensions " + std::to_string(a.cols_) + " and " +
                                    std::to_string(b.rows_) + " differ");
    }
    if (a.field_ != b.field_) throw FieldMismatch("matrix *: field mismatch");
    Matrix c(a.rows_, b.cols_, a.field_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Scalar& bkj = b(k, j);
                if (!bkj.is_zero()) c(i, j).add_mul(aik, bkj);
            }
        }
    }
    return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.data_ == b.data_;
}

std::string Matrix::to_string() const {
    std::ostringstream out;
    out << "[";
    for (std::size_t r = 0; r < rows_; ++r) {
        out << (r ? "; " : "");
        for (std::size_t c = 0; c < cols_; ++c) out << (c ? " " : "") << (*this)(r, c).to_string();
    }
    out << "]";
    return out.str();
}

Matrix kron(const Matrix& a, const Matrix& b) {
    if (a.field() != b.field()) throw FieldMismatch("kron: field mismatch");
    Matrix k(a.rows() * b.rows(), a.cols() * b.cols(), a.field());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Scalar& aij = a(i, j);
            if (aij.is_zero()) continue;
            for (std::size_t r = 0; r < b.rows(); ++r)
                for (std::size_t c = 0; c < b.cols(); ++c) {
                    if (!b(r, c).is_zero()) k(i * b.rows() + r, j * b.cols() + c) = aij * b(r, c);
                }
        }
    return k;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
    if (a.field() != b.field()) throw FieldMismatch("direct_sum: field mismatch");
    Matrix d(a.rows() + b.rows(), a.cols() + b.cols(), a.field());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) d(r, c) = a(r, c);
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) d(a.rows() + r, a.cols() + c) = b(r, c);
    return d;
}

Tensor3::Tensor3(std::size_t d0, std::size_t d1, std::size_t d2, Field field)
    : d0_(d0), d1_(d1), d2_(d2), field_(field), data_(d0 * d1 * d2, Scalar::zero(field)) {}

bool operator==(const Tensor3& a, const Tensor3& b) {
    return a.d0_ == b.d0_ && a.d1_ == b.d1_ && a.d2_ == b.d2_ && a.field_ == b.field_ && a.data_ == b.data_;
}

Echelon rref(Matrix a) {
    Echelon result;
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
        std::size_t found = pivot_row;
        while (found < rows && a(found, c).is_zero()) ++found;
        if (found == rows) continue;
        if (found != pivot_row) {
            for (std::size_t k = c; k < cols; ++k) std::swap(a(found, k), a(pivot_row, k));
        }
        const Scalar inv = a(pivot_row, c).inverse();
        for (std::size_t k = c; k < cols; ++k) a(pivot_row, k) *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == pivot_row || a(r, c).is_zero()) continue;
            const Scalar factor = a(r, c);
            for (std::size_t k = c; k < cols; ++k) {
                if (!a(pivot_row, k).is_zero()) a(r, k).sub_mul(factor, a(pivot_row, k));
            }
        }
        result.pivots.push_back(c);
        ++pivot_row;
    }
    result.reduced = std::move(a);
    return result;
}

std::size_t rank(const Matrix& a) { return rref(a).rank(); }

std::vector<Matrix> kernel_basis(const Matrix& a) {
    const Echelon e = rref(a);
    const std::size_t n = a.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : e.pivots) is_pivot[p] = true;

    // Free-variable basis, then re-normalized so the stacked rows are in
    // reduced echelon form.
    Matrix stacked(n - e.rank(), n, a.field());
    std::size_t k = 0;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        stacked(k, f) = Scalar::one(a.field());
        for (std::size_t r = 0; r < e.rank(); ++r) stacked(k, e.pivots[r]) = -e.reduced(r, f);
        ++k;
    }
    const Matrix canonical = row_space_basis(stacked);
    std::vector<Matrix> basis;
    basis.reserve(canonical.rows());
    for (std::size_t r = 0; r < canonical.rows(); ++r) {
        basis.push_back(Matrix::reshape(canonical.row_span(r), n, 1, a.field()));
    }
    return basis;
}

std::optional<Matrix> solve_linear(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("solve_linear: row count mismatch");
    if (a.field() != b.field()) throw FieldMismatch("solve_linear: field mismatch");
    const std::size_t n = a.cols();
    const std::size_t m = b.cols();
    Matrix aug(a.rows(), n + m, a.field());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
        for (std::size_t c = 0; c < m; ++c) aug(r, n + c) = b(r, c);
    }
    const Echelon e = rref(std::move(aug));
    Matrix x(n, m, a.field());
    for (std::size_t r = 0; r < e.rank(); ++r) {
        const std::size_t p = e.pivots[r];
        if (p >= n) return std::nullopt;
        for (std::size_t c = 0; c < m; ++c) x(p, c) = e.reduced(r, n + c);
    }
    return x;
}

std::optional<Matrix> inverse(const Matrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("inverse of a non-square matrix");
    if (rank(a) != a.rows()) return std::nullopt;
    return solve_linear(a, Matrix::identity(a.rows(), a.field()));
}

Matrix row_space_basis(const Matrix& rows) {
    const Echelon e = rref(rows);
    Matrix basis(e.rank(), rows.cols(), rows.field());
    for (std::size_t r = 0; r < e.rank(); ++r)
        for (std::size_t c = 0; c < rows.cols(); ++c) basis(r, c) = e.reduced(r, c);
    return basis;
}

std::vector<Matrix> intertwiners(std::span<const Matrix> source_ops, std::span<const Matrix> target_ops,
                                 std::size_t source_dim, std::size_t target_dim, Field field) {
    if (source_ops.size() != target_ops.size()) throw std::invalid_argument("intertwiners: operator count mismatch");
    const std::size_t p = source_dim;
    const std::size_t q = target_dim;
    Matrix system(source_ops.size() * q * p, q * p, field);
    for (std::size_t i = 0; i < source_ops.size(); ++i) {
        const Matrix& a = source_ops[i];
        const Matrix& b = target_ops[i];
        for (std::size_t r = 0; r < q; ++r)
            for (std::size_t c = 0; c < p; ++c) {
                const std::size_t row = (i * q + r) * p + c;
                for (std::size_t x = 0; x < p; ++x) system(row, r * p + x) += a(x, c);
                for (std::size_t x = 0; x < q; ++x) system(row, x * p + c) -= b(r, x);
            }
    }
    std::vector<Matrix> basis;
    for (const auto& v : kernel_basis(system)) basis.push_back(Matrix::reshape(v.data(), q, p, field));
    return basis;
}

Matrix stack_flattened(std::span<const Matrix> items, Field field, std::size_t entries) {
    Matrix stacked(items.size(), entries, field);
    for (std::size_t i = 0; i < items.size(); ++i) {
        const auto src = items[i].data();
        if (src.size() != entries) throw std::invalid_argument("stack_flattened: inconsistent sizes");
        for (std::size_t c = 0; c < entries; ++c) stacked(i, c) = src[c];
    }
    return stacked;
}

} // namespace serre
